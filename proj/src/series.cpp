#include "minseq/series.hpp"

#include <algorithm>

#include "minseq/errors.hpp"

namespace minseq {

namespace {

const Rational& zero_rational() {
  static const Rational z(0);
  return z;
}

}  // namespace

BivariateSeries::BivariateSeries(int order) : order_(order) {
  if (order < 0) throw PreconditionError(Errc::series_domain, "series order must be >= 0");
  coeffs_.assign(index(0, order + 1), Rational(0));
}

BivariateSeries BivariateSeries::constant(int order, const Rational& c) {
  BivariateSeries s(order);
  s.set_coeff(0, 0, c);
  return s;
}

BivariateSeries BivariateSeries::x(int order) {
  BivariateSeries s(order);
  if (order >= 1) s.set_coeff(1, 0, Rational(1));
  return s;
}

BivariateSeries BivariateSeries::y(int order) {
  BivariateSeries s(order);
  if (order >= 1) s.set_coeff(0, 1, Rational(1));
  return s;
}

const Rational& BivariateSeries::coeff(int i, int j) const {
  if (i < 0 || j < 0 || i + j > order_) return zero_rational();
  return coeffs_[index(i, j)];
}

void BivariateSeries::set_coeff(int i, int j, Rational c) {
  if (i < 0 || j < 0 || i + j > order_)
    throw PreconditionError(Errc::series_domain, "coefficient index outside the truncation");
  coeffs_[index(i, j)] = std::move(c);
}

BivariateSeries BivariateSeries::truncated(int order) const {
  BivariateSeries out(std::min(order, order_));
  std::copy_n(coeffs_.begin(), out.coeffs_.size(), out.coeffs_.begin());
  return out;
}

bool BivariateSeries::is_zero_through(int degree) const {
  const std::size_t end = index(0, std::min(degree, order_) + 1);
  return std::all_of(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(end),
                     [](const Rational& c) { return c == 0; });
}

BivariateSeries& BivariateSeries::operator+=(const BivariateSeries& other) {
  if (other.order_ < order_) *this = truncated(other.order_);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  return *this;
}

BivariateSeries& BivariateSeries::operator-=(const BivariateSeries& other) {
  if (other.order_ < order_) *this = truncated(other.order_);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  return *this;
}

BivariateSeries& BivariateSeries::operator*=(const Rational& c) {
  for (Rational& v : coeffs_) v *= c;
  return *this;
}

BivariateSeries operator*(const BivariateSeries& a, const BivariateSeries& b) {
  BivariateSeries out(std::min(a.order_, b.order_));
  for (int da = 0; da <= out.order_; ++da)
    for (int db = 0; da + db <= out.order_; ++db)
      BivariateSeries::add_homogeneous_product(a, da, b, db, Rational(1), out);
  return out;
}

bool BivariateSeries::operator==(const BivariateSeries& other) const {
  return order_ == other.order_ && coeffs_ == other.coeffs_;
}

void BivariateSeries::add_homogeneous_product(const BivariateSeries& a, int da,
                                              const BivariateSeries& b, int db,
                                              const Rational& scale, BivariateSeries& out) {
  for (int ia = 0; ia <= da; ++ia) {
    const Rational& ca = a.coeffs_[index(ia, da - ia)];
    if (ca == 0) continue;
    const Rational sa = ca * scale;
    for (int ib = 0; ib <= db; ++ib) {
      const Rational& cb = b.coeffs_[index(ib, db - ib)];
      if (cb == 0) continue;
      out.coeffs_[index(ia + ib, da - ia + db - ib)] += sa * cb;
    }
  }
}

BivariateSeries exp(const BivariateSeries& g) {
  if (g.coeff(0, 0) != 0)
    throw PreconditionError(Errc::series_domain, "exp needs a zero constant term");
  BivariateSeries e(g.order_);
  e.coeffs_[0] = 1;
  // d E_d = sum_{t=1}^{d} t g_t E_{d-t}
  for (int d = 1; d <= g.order_; ++d)
    for (int t = 1; t <= d; ++t)
      BivariateSeries::add_homogeneous_product(g, t, e, d - t, Rational(t, d), e);
  return e;
}

BivariateSeries log(const BivariateSeries& f) {
  if (f.coeff(0, 0) != 1)
    throw PreconditionError(Errc::series_domain, "log needs constant term 1");
  BivariateSeries l(f.order_);
  // L_d = f_d - (1/d) sum_{t=1}^{d-1} t L_t f_{d-t}
  for (int d = 1; d <= f.order_; ++d) {
    for (int i = 0; i <= d; ++i)
      l.coeffs_[BivariateSeries::index(i, d - i)] = f.coeffs_[BivariateSeries::index(i, d - i)];
    for (int t = 1; t < d; ++t)
      BivariateSeries::add_homogeneous_product(l, t, f, d - t, Rational(-t, d), l);
  }
  return l;
}

BivariateSeries integrate_x(const BivariateSeries& f) {
  BivariateSeries out(f.order());
  for (int i = 0; i < f.order(); ++i)
    for (int j = 0; i + 1 + j <= f.order(); ++j)
      if (f.coeff(i, j) != 0) out.set_coeff(i + 1, j, f.coeff(i, j) / (i + 1));
  return out;
}

BivariateSeries derivative_x(const BivariateSeries& f) {
  if (f.order() == 0) throw PreconditionError(Errc::series_domain, "derivative of an order-0 series");
  BivariateSeries out(f.order() - 1);
  for (int i = 1; i <= f.order(); ++i)
    for (int j = 0; i + j <= f.order(); ++j)
      if (f.coeff(i, j) != 0) out.set_coeff(i - 1, j, f.coeff(i, j) * i);
  return out;
}

namespace {

// (y+1) e^B - B - 1
BivariateSeries b_rhs(const BivariateSeries& b) {
  const int n = b.order();
  const BivariateSeries one = BivariateSeries::constant(n, Rational(1));
  return (BivariateSeries::y(n) + one) * exp(b) - b - one;
}

// e^{T+y} - 1
BivariateSeries t_rhs(const BivariateSeries& t) {
  const int n = t.order();
  return exp(t + BivariateSeries::y(n)) - BivariateSeries::constant(n, Rational(1));
}

}  // namespace

BivariateSeries iterate_B(const BivariateSeries& b) { return integrate_x(b_rhs(b)); }

BivariateSeries solve_B(int order) {
  BivariateSeries b(order);
  for (int pass = 0; pass < order; ++pass) b = iterate_B(b);
  return b;
}

BivariateSeries residual_B(const BivariateSeries& b) {
  return derivative_x(b) - b_rhs(b).truncated(b.order() - 1);
}

BivariateSeries iterate_T(const BivariateSeries& t) { return integrate_x(t_rhs(t)); }

BivariateSeries solve_T(int order) {
  BivariateSeries t(order);
  for (int pass = 0; pass < order; ++pass) t = iterate_T(t);
  return t;
}

BivariateSeries closed_T(int order) {
  const BivariateSeries x = BivariateSeries::x(order);
  const BivariateSeries y = BivariateSeries::y(order);
  return -log(exp(x) + exp(y) - exp(x + y));
}

BivariateSeries residual_T(const BivariateSeries& t) {
  return derivative_x(t) - t_rhs(t).truncated(t.order() - 1);
}

BigInt factorial(int n) {
  BigInt out = 1;
  for (int i = 2; i <= n; ++i) out *= i;
  return out;
}

BigInt to_count(const Rational& r) {
  if (boost::multiprecision::denominator(r) != 1)
    throw PreconditionError(Errc::non_integer_count,
                            "unscaled coefficient " + r.str() + " is not an integer");
  return boost::multiprecision::numerator(r);
}

BigInt count_A_series(const BivariateSeries& b, int n, int m) {
  check_guard("series-order", b.order(), n + m + 2);
  return to_count(b.coeff(n + 1, m + 1) * Rational(factorial(n + 1)));
}

BigInt count_T_series(const BivariateSeries& t, int n, int k) {
  check_guard("series-order", t.order(), n + k);
  return to_count(t.coeff(n, k) * Rational(factorial(n) * factorial(k)));
}

BigInt count_IP_series(const BivariateSeries& t, int n) {
  if (n == 0) return 1;
  BigInt total = 0;
  for (int k = 0; k < n; ++k) total += count_T_series(t, k + 1, n - k);
  return total;
}

CountMatrix count_table(CountKind kind, int limit, int order) {
  if (limit < 0) throw PreconditionError(Errc::invalid_argument, "limit must be >= 0");
  CountMatrix out;
  switch (kind) {
    case CountKind::A: {
      check_guard("series-order", order, 2 * limit + 2);
      const BivariateSeries b = solve_B(order);
      for (int n = 0; n <= limit; ++n) {
        out.emplace_back();
        for (int m = 0; m <= limit; ++m) out.back().push_back(count_A_series(b, n, m));
      }
      break;
    }
    case CountKind::T: {
      check_guard("series-order", order, 2 * limit);
      const BivariateSeries t = closed_T(order);
      for (int n = 1; n <= limit; ++n) {
        out.emplace_back();
        for (int k = 1; k <= limit; ++k) out.back().push_back(count_T_series(t, n, k));
      }
      break;
    }
    case CountKind::IP: {
      check_guard("series-order", order, limit + 1);
      const BivariateSeries t = closed_T(order);
      out.emplace_back();
      for (int n = 1; n <= limit; ++n) out.back().push_back(count_IP_series(t, n));
      break;
    }
  }
  return out;
}

}  // namespace minseq
