#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "wpvol/factorial.hpp"
#include "wpvol/series.hpp"

using namespace wpvol;

namespace {

Series S(std::initializer_list<Rational> c) { return Series(std::vector<Rational>(c)); }
Rational Q(long p, long q = 1) {
  Rational r(p, q);
  r.canonicalize();
  return r;
}

}  // namespace

TEST_CASE("rational parsing and printing") {
  CHECK(to_string(Q(3, 6)) == "1/2");
  CHECK(to_string(Q(-4, 2)) == "-2");
  CHECK(parse_rational("1/24") == Q(1, 24));
  CHECK(parse_rational("-10/4") == Q(-5, 2));
  CHECK(parse_rational("7") == 7);
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1 /2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("0x10"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1/2/3"), std::invalid_argument);
}

TEST_CASE("factorial tables") {
  CHECK(factorial(0) == 1);
  CHECK(factorial(10) == 3628800);
  CHECK(odd_double_factorial(0) == 1);  // (-1)!!
  CHECK(odd_double_factorial(1) == 1);
  CHECK(odd_double_factorial(3) == 15);
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(5, 6) == 0);
  CHECK_THROWS(factorial(-1));
}

TEST_CASE("add") {
  CHECK(S({1, 1}) + S({2, -1}) == S({3, 0}));
  const Series a = S({Q(1, 3), 2, Q(-7, 5)});
  CHECK(a + Series::zero(2) == a);
  CHECK(S({0, 1, Q(1, 2)}) + S({0, 0, Q(1, 2)}) == S({0, 1, 1}));
  // order is the minimum of the operands
  CHECK((S({1, 1, 1}) + S({1, 1})).order() == 1);
}

TEST_CASE("mul") {
  CHECK(S({1, 1, 0}) * S({1, -1, 0}) == S({1, 0, -1}));
  const Series a = S({Q(1, 3), 2, Q(-7, 5)});
  CHECK(a * Series::constant(1, 2) == a);
  CHECK(S({0, 1}) * S({0, 1}) == S({0, 0}));
}

TEST_CASE("derivative") {
  CHECK(derivative(S({0, 1, Q(1, 2), Q(5, 12)})) == S({1, 1, Q(5, 4)}));
  CHECK(derivative(Series::constant(7, 3)) == Series::zero(2));
  for (int k = 1; k <= 6; ++k) {
    std::vector<Rational> c(8);
    c[static_cast<std::size_t>(k)] = Rational(1) / Rational(factorial(k));
    const Series d = derivative(Series(c));
    CHECK(d[k - 1] == Rational(1) / Rational(factorial(k - 1)));
  }
  CHECK_THROWS_AS(derivative(Series::constant(1, 0)), std::invalid_argument);
}

TEST_CASE("antiderivative") {
  CHECK(antiderivative(Series::constant(1, 0), 0) == S({0, 1}));
  CHECK(antiderivative(S({0, 1}), 1) == S({1, 0, Q(1, 2)}));
  const Series y = S({0, 1, Q(1, 2), Q(5, 12)});
  const Series phi0 = antiderivative(antiderivative(y, 0), 0);
  CHECK(phi0[0] == 0);
  CHECK(phi0[1] == 0);
  CHECK(phi0[2] == 0);
  CHECK(phi0.order() == 5);
}

TEST_CASE("reciprocal") {
  CHECK(reciprocal(S({1, -1, 0, 0})) == S({1, 1, 1, 1}));
  CHECK(reciprocal(Series::constant(1, 0)) == Series::constant(1, 0));
  const Series a = S({1, 1, Q(5, 4)});
  const Series b = reciprocal(a);
  CHECK(b == S({1, -1, Q(-1, 4)}));
  CHECK(a * b == Series::constant(1, 2));
  CHECK_THROWS_AS(reciprocal(S({0, 1})), std::domain_error);
}

TEST_CASE("compose") {
  CHECK(compose(S({1, 1, 1}), Series::identity(2)) == S({1, 1, 1}));
  CHECK(compose(S({0, 0, 1, 0}), S({0, 1, 1, 0})) == S({0, 0, 1, 2}));
  CHECK_THROWS_AS(compose(S({1, 1}), S({1, 1})), std::domain_error);
  // order is min(outer, inner)
  CHECK(compose(S({1, 2}), S({0, 1, 1, 1})).order() == 1);
}

TEST_CASE("revert") {
  CHECK(revert(Series::identity(5)) == Series::identity(5));
  CHECK(revert(S({0, 2, 0, 0})) == S({0, Q(1, 2), 0, 0}));

  const Series x_of_y = bessel_x_of_y(3);
  const Series y = revert(x_of_y);
  CHECK(y == S({0, 1, Q(1, 2), Q(5, 12)}));
  CHECK(compose(x_of_y, y) == Series::identity(3));
  CHECK(y == oracle::revert_lagrange(x_of_y));

  CHECK_THROWS_AS(revert(S({1, 1})), std::domain_error);
  CHECK_THROWS_AS(revert(S({0, 0, 1})), std::domain_error);
}

TEST_CASE("bessel_x_of_y") {
  const Series x = bessel_x_of_y(4);
  CHECK(x == S({0, 1, Q(-1, 2), Q(1, 12), Q(-1, 144)}));
  CHECK_THROWS(bessel_x_of_y(0));
}

TEST_CASE("Newton reversion agrees with Lagrange inversion on the Bessel series at order 40") {
  const Series x = bessel_x_of_y(40);
  const Series newton = revert(x);
  CHECK(newton == oracle::revert_lagrange(x));
  CHECK(compose(x, newton) == Series::identity(40));
  CHECK(compose(newton, x) == Series::identity(40));
}

TEST_CASE("ring and composition properties on random series") {
  std::mt19937 rng(20240611);
  std::uniform_int_distribution<int> order_dist(1, 9);
  for (int trial = 0; trial < 60; ++trial) {
    CAPTURE(trial);
    const int n = order_dist(rng);
    const Series a = oracle::random_series(rng, n, false, false);
    const Series b = oracle::random_series(rng, n, false, false);
    CHECK(a * b == b * a);
    CHECK(a * reciprocal(a) == Series::constant(1, n));

    const Series zc = oracle::random_series(rng, n, true, false);
    CHECK(derivative(antiderivative(zc, 0)) == zc);

    const Series f = oracle::random_series(rng, n, false, false);
    const Series g = oracle::random_series(rng, n, true, false);
    // chain rule: (f o g)' = (f' o g) g'
    CHECK(derivative(compose(f, g)) == compose(derivative(f), g.truncated(n - 1)) * derivative(g));

    const Series r = oracle::random_series(rng, n, true, true);
    const Series inv = revert(r);
    CHECK(compose(r, inv) == Series::identity(n));
    CHECK(compose(inv, r) == Series::identity(n));
    CHECK(inv == oracle::revert_lagrange(r));
  }
}

TEST_CASE("pow matches repeated multiplication") {
  std::mt19937 rng(7);
  const Series a = oracle::random_series(rng, 6, false, false);
  Series acc = Series::constant(1, 6);
  for (unsigned e = 0; e <= 7; ++e) {
    CHECK(pow(a, e) == acc);
    acc = acc * a;
  }
}

TEST_CASE("truncation contract") {
  const Series a = S({1, 2, 3});
  CHECK(a.truncated(1) == S({1, 2}));
  CHECK_THROWS(a.truncated(3));
  CHECK(a.padded(4) == S({1, 2, 3, 0, 0}));
  CHECK_THROWS(Series(std::vector<Rational>{}));
}
