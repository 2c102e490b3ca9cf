#include <doctest.h>

#include "minseq/errors.hpp"
#include "minseq/series.hpp"
#include "oracles.hpp"

using namespace minseq;

TEST_CASE("basic series arithmetic") {
  const int order = 8;
  const auto x = BivariateSeries::x(order);
  const auto y = BivariateSeries::y(order);
  CHECK(exp(BivariateSeries(order)) == BivariateSeries::constant(order, 1));
  CHECK(integrate_x(BivariateSeries::constant(order, 1)) == x);
  CHECK(derivative_x(x * x).coeff(1, 0) == 2);
  const auto e = exp(x * y);
  for (int i = 0; 2 * i <= order; ++i) CHECK(e.coeff(i, i) == Rational(1) / Rational(factorial(i)));
  CHECK(e.coeff(1, 0) == 0);
  const auto g = x + y * Rational(3) + x * y * Rational(-1, 2);
  CHECK(log(exp(g)) == g);
  CHECK(BivariateSeries(order).coeff(order + 1, 0) == 0);
  CHECK((x * x).truncated(1).is_zero_through(1));
}

TEST_CASE("coloured tree series") {
  const auto b = solve_B(12);
  for (int j = 0; j <= 12; ++j) CHECK(b.coeff(0, j) == 0);
  CHECK(residual_B(b).is_zero_through(11));
  for (int n = 0; n <= 5; ++n)
    for (int m = 0; m <= n; ++m) CHECK(count_A_series(b, n, m) == oracle::count_A(n, m));
  CHECK(count_A_series(b, 3, 3) == 6);
  CHECK(count_A_series(b, 6, 3) == 34);
}

TEST_CASE("fixed point iteration gains one degree per pass") {
  auto b = BivariateSeries(10);
  const auto target = solve_B(10);
  for (int pass = 1; pass <= 10; ++pass) {
    b = iterate_B(b);
    CHECK((b - target).is_zero_through(pass));
  }
  CHECK(b == target);
}

TEST_CASE("leaf-labelled series") {
  const int order = 14;
  const auto t = solve_T(order);
  CHECK(t == closed_T(order));
  CHECK(residual_T(t).is_zero_through(order - 1));
  for (int i = 0; i <= order; ++i)
    for (int j = 0; i + j <= order; ++j) CHECK(t.coeff(i, j) == t.coeff(j, i));
  for (int n = 1; n <= 4; ++n)
    for (int k = 1; k <= 4; ++k) CHECK(count_T_series(t, n, k) == oracle::count_T(n, k));
  const long long ip[] = {1, 2, 5, 16, 63, 294, 1585};
  for (int n = 1; n <= 7; ++n) CHECK(count_IP_series(t, n) == ip[n - 1]);
}

TEST_CASE("count tables") {
  const CountMatrix a = count_table(CountKind::A, 3, 8);
  CHECK(a[3][2] == 5);
  CHECK(a.size() == 4);
  const CountMatrix t = count_table(CountKind::T, 3, 6);
  CHECK(t[1][2] == 7);
  const CountMatrix ip = count_table(CountKind::IP, 5, 6);
  REQUIRE(ip.size() == 1);
  CHECK(ip[0] == std::vector<BigInt>{1, 2, 5, 16, 63});
  CHECK_THROWS_AS(count_table(CountKind::A, 7, 15), GuardExceeded);
  CHECK_THROWS_AS(count_table(CountKind::T, 7, 13), GuardExceeded);
}

TEST_CASE("integrality tripwire") {
  CHECK(to_count(Rational(12)) == 12);
  CHECK_THROWS_AS(to_count(Rational(1, 2)), PreconditionError);
  CHECK(factorial(0) == 1);
  CHECK(factorial(20) == BigInt("2432902008176640000"));
}
