#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <vector>

namespace minseq {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Truncated power series in x and y with exact rational coefficients. Terms
// x^i y^j are kept for total degree i + j <= order(); everything above is
// discarded by every operation. Binary operations on series of different
// orders work at the smaller order.
class BivariateSeries {
 public:
  explicit BivariateSeries(int order = 16);

  static BivariateSeries constant(int order, const Rational& c);
  static BivariateSeries x(int order);
  static BivariateSeries y(int order);

  int order() const noexcept { return order_; }

  // Zero for i + j > order().
  const Rational& coeff(int i, int j) const;
  void set_coeff(int i, int j, Rational c);

  // Copy cut down to a smaller order.
  BivariateSeries truncated(int order) const;

  // True if every coefficient of total degree <= degree is zero.
  bool is_zero_through(int degree) const;

  BivariateSeries& operator+=(const BivariateSeries& other);
  BivariateSeries& operator-=(const BivariateSeries& other);
  BivariateSeries& operator*=(const Rational& c);

  friend BivariateSeries operator+(BivariateSeries a, const BivariateSeries& b) { return a += b; }
  friend BivariateSeries operator-(BivariateSeries a, const BivariateSeries& b) { return a -= b; }
  friend BivariateSeries operator*(BivariateSeries a, const Rational& c) { return a *= c; }
  friend BivariateSeries operator-(BivariateSeries a) { return a *= Rational(-1); }
  friend BivariateSeries operator*(const BivariateSeries& a, const BivariateSeries& b);

  bool operator==(const BivariateSeries& other) const;

 private:
  friend BivariateSeries exp(const BivariateSeries& g);
  friend BivariateSeries log(const BivariateSeries& f);

  static std::size_t index(int i, int j) {
    const std::size_t d = static_cast<std::size_t>(i + j);
    return d * (d + 1) / 2 + static_cast<std::size_t>(i);
  }

  // out[degree da+db] += scale * (a[da] * b[db]) on homogeneous components.
  static void add_homogeneous_product(const BivariateSeries& a, int da, const BivariateSeries& b,
                                      int db, const Rational& scale, BivariateSeries& out);

  int order_;
  std::vector<Rational> coeffs_;
};

// exp(g) for g with zero constant term; log(f) for f with constant term 1.
// Both use the total-degree recurrence from the Euler operator x∂x + y∂y.
BivariateSeries exp(const BivariateSeries& g);
BivariateSeries log(const BivariateSeries& f);

// Antiderivative in x vanishing at x = 0, truncated at the same order.
BivariateSeries integrate_x(const BivariateSeries& f);

// Partial derivative in x. The result has order f.order() - 1.
BivariateSeries derivative_x(const BivariateSeries& f);

// One pass of B <- ∫_0^x ((y+1) e^B - B - 1) dt.
BivariateSeries iterate_B(const BivariateSeries& b);
// Fixed point of iterate_B, reached after `order` passes from 0.
BivariateSeries solve_B(int order = 16);
// dB/dx - ((y+1) e^B - B - 1), at order b.order() - 1.
BivariateSeries residual_B(const BivariateSeries& b);

// One pass of T <- ∫_0^x (e^{T+y} - 1) dt.
BivariateSeries iterate_T(const BivariateSeries& t);
BivariateSeries solve_T(int order = 16);
// log(1 / (e^x + e^y - e^{x+y})).
BivariateSeries closed_T(int order = 16);
// dT/dx - (e^{T+y} - 1), at order t.order() - 1.
BivariateSeries residual_T(const BivariateSeries& t);

BigInt factorial(int n);

// Throws PreconditionError(non_integer_count) unless r is an integer.
BigInt to_count(const Rational& r);

// |A_{n,m}| = (n+1)! [x^{n+1} y^{m+1}] B.
BigInt count_A_series(const BivariateSeries& b, int n, int m);
// |T_{n,k}| = n! k! [x^n y^k] T.
BigInt count_T_series(const BivariateSeries& t, int n, int k);
// |I_n ∩ P_n| as the antidiagonal sum of |T_{k+1, n-k}|.
BigInt count_IP_series(const BivariateSeries& t, int n);

enum class CountKind { A, T, IP };
using CountMatrix = std::vector<std::vector<BigInt>>;

// A: rows n = 0..limit, columns m = 0..limit.
// T: rows n = 1..limit, columns k = 1..limit.
// IP: a single row, n = 1..limit.
// Throws GuardExceeded("series-order") if `order` is too small for `limit`.
CountMatrix count_table(CountKind kind, int limit, int order = 16);

}  // namespace minseq
