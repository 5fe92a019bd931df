#include <catch2/catch_amalgamated.hpp>

#include "hopf/gaussian_integer.hpp"
#include "hopf/lattice.hpp"
#include "hopf/polynomial.hpp"
#include "hopf/rational.hpp"
#include "helpers.hpp"

using namespace hopf;

TEST_CASE("rational parsing is canonical") {
  CHECK(rational_str(parse_rational("2/4")) == "1/2");
  CHECK(rational_str(parse_rational("-6/4")) == "-3/2");
  CHECK(rational_str(parse_rational("5")) == "5");
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
}

TEST_CASE("gaussian rational field operations") {
  GaussianRational half(Rational(1, 2), Rational(0));
  GaussianRational i = GaussianRational::i();
  CHECK((half * i).str() == "0+1/2*i");
  CHECK(pow(half, -3) == GaussianRational(8));
  CHECK((i * i) == GaussianRational(-1));
  GaussianRational x(Rational(1, 2), Rational(1, 2));
  CHECK(x * x.inverse() == GaussianRational::one());
  CHECK(x.norm() == Rational(1, 2));
  CHECK_THROWS_AS(GaussianRational::zero().inverse(), std::domain_error);
}

TEST_CASE("gaussian factorization of 1 is empty") {
  auto f = gaussian_factor(GaussianRational::one());
  CHECK(f.unit_exp == 0);
  CHECK(f.factors.empty());
}

TEST_CASE("gaussian factorization of 1/2") {
  GaussianRational half(Rational(1, 2), Rational(0));
  auto f = gaussian_factor(half);
  REQUIRE(f.factors.size() == 1);
  CHECK(f.factors[0].first == GaussianInt(1, 1));
  CHECK(f.factors[0].second == -2);
  CHECK(recompose(f) == half);
}

TEST_CASE("gaussian factorization of (1+i)/2") {
  GaussianRational x(Rational(1, 2), Rational(1, 2));
  auto f = gaussian_factor(x);
  REQUIRE(f.factors.size() == 1);
  CHECK(f.factors[0].first == GaussianInt(1, 1));
  CHECK(f.factors[0].second == -1);
  CHECK(recompose(f) == x);
}

TEST_CASE("gaussian factorization rejects zero") {
  CHECK_THROWS_AS(gaussian_factor(GaussianRational::zero()), std::domain_error);
}

TEST_CASE("gaussian factorization output is normalized") {
  // Split prime 5 = (2+i)(2-i): both first-quadrant representatives appear.
  GaussianRational five(5);
  auto f = gaussian_factor(five);
  REQUIRE(f.factors.size() == 2);
  for (const auto& [p, e] : f.factors) {
    CHECK(p.re > 0);
    CHECK(p.im >= 0);
    CHECK(e == 1);
  }
  CHECK(!(f.factors[0].first == f.factors[1].first));
  CHECK(recompose(f) == five);
}

TEST_CASE("recompose(gaussian_factor(x)) = x on random inputs") {
  std::mt19937_64 rng(20240811);
  for (int t = 0; t < 1000; ++t) {
    GaussianRational x = testing::random_gaussian_rational(rng, /*allow_zero=*/false);
    auto f = gaussian_factor(x);
    CHECK(recompose(f) == x);
    for (const auto& [p, e] : f.factors) {
      CHECK(e != 0);
      CHECK(p.re > 0);
      CHECK(p.im >= 0);
    }
    // Primes pairwise distinct, hence non-associate in first-quadrant form.
    for (size_t a = 0; a + 1 < f.factors.size(); ++a)
      CHECK(f.factors[a].first < f.factors[a + 1].first);
  }
}

TEST_CASE("lattice kernel of [1 1]") {
  IntegerLattice L = lattice_kernel({{1, 1}}, 2);
  REQUIRE(L.rank() == 1);
  CHECK(L.basis[0] == IntVector{1, -1});
}

TEST_CASE("lattice kernel of the identity is trivial") {
  IntegerLattice L = lattice_kernel({{1, 0}, {0, 1}}, 2);
  CHECK(L.rank() == 0);
}

TEST_CASE("lattice kernel of a rank-1 wide matrix") {
  IntMatrix M = {{2, 2, 1}, {0, 0, 0}};
  IntegerLattice L = lattice_kernel(M, 3);
  REQUIRE(L.rank() == 2);
  for (const auto& v : L.basis) {
    IntVector Mv = matrix_apply(M, v);
    for (const auto& x : Mv) CHECK(x == 0);
  }
}

TEST_CASE("empty matrix has full kernel") {
  IntegerLattice L = lattice_kernel({}, 3);
  CHECK(L.rank() == 3);
}

TEST_CASE("kernel rank + matrix rank = n on random matrices") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> dim(1, 5);
  std::uniform_int_distribution<long> entry(-4, 4);
  for (int t = 0; t < 200; ++t) {
    int r = dim(rng), n = dim(rng);
    IntMatrix M(r, IntVector(n));
    for (auto& row : M)
      for (auto& x : row) x = entry(rng);
    IntegerLattice L = lattice_kernel(M, n);
    CHECK(L.rank() + integer_rank(M) == n);
    for (const auto& v : L.basis) {
      for (const auto& x : matrix_apply(M, v)) CHECK(x == 0);
      mpz_class content = 0;
      for (const auto& x : v) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), x.get_mpz_t());
      CHECK(content == 1);
    }
  }
}

TEST_CASE("diagonal maps compose by multiplying multipliers") {
  PolyMap d = PolyMap::diagonal({GaussianRational(Rational(1, 2), Rational(0))});
  PolyMap dd = poly_compose(d, d, 4);
  PolyMap expect = PolyMap::diagonal({GaussianRational(Rational(1, 4), Rational(0))});
  CHECK(dd == expect);
}

TEST_CASE("composition expands substituted monomials") {
  // f = (z1 + z2^2, z2), g = (z1, 2 z2) -> f o g = (z1 + 4 z2^2, 2 z2)
  PolyMap f(2), g(2), expect(2);
  f.comp[0].add_term({1, 0}, GaussianRational::one());
  f.comp[0].add_term({0, 2}, GaussianRational::one());
  f.comp[1].add_term({0, 1}, GaussianRational::one());
  g.comp[0].add_term({1, 0}, GaussianRational::one());
  g.comp[1].add_term({0, 1}, GaussianRational(2));
  expect.comp[0].add_term({1, 0}, GaussianRational::one());
  expect.comp[0].add_term({0, 2}, GaussianRational(4));
  expect.comp[1].add_term({0, 1}, GaussianRational(2));
  CHECK(poly_compose(f, g, 8) == expect);
}

TEST_CASE("composition with the identity is neutral") {
  std::mt19937_64 rng(99);
  for (int t = 0; t < 20; ++t) {
    PolyMap f = testing::random_poly_map(rng, 3, 3, 4);
    PolyMap id = PolyMap::identity(3);
    CHECK(poly_compose(f, id, kNoDegreeCap) == f);
    CHECK(poly_compose(id, f, kNoDegreeCap) == f);
  }
}

TEST_CASE("truncated composition is associative on origin-fixing maps") {
  std::mt19937_64 rng(123);
  for (int t = 0; t < 30; ++t) {
    PolyMap f = testing::random_poly_map(rng, 2, 3, 3);
    PolyMap g = testing::random_poly_map(rng, 2, 3, 3);
    PolyMap h = testing::random_poly_map(rng, 2, 3, 3);
    const int cap = 6;
    PolyMap a = poly_compose(poly_compose(f, g, cap), h, cap);
    PolyMap b = poly_compose(f, poly_compose(g, h, cap), cap);
    CHECK(a == b);
  }
}

TEST_CASE("composition rejects dimension mismatch") {
  CHECK_THROWS_AS(poly_compose(PolyMap::identity(2), PolyMap::identity(3), 3),
                  std::invalid_argument);
}
