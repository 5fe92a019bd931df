#include <iostream>
int main() { std::cout << "hopf cli placeholder\n"; }
