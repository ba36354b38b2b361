#include "fpt/power_series.hpp"

#include <algorithm>
#include <utility>

namespace fpt {

PowerSeries::PowerSeries(int order) {
  if (order < 0) throw std::invalid_argument("PowerSeries: order must be nonnegative");
  coeffs_.assign(static_cast<std::size_t>(order) + 1, BigInt(0));
}

PowerSeries::PowerSeries(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw std::invalid_argument("PowerSeries: needs at least the constant term");
}

PowerSeries PowerSeries::one(int order) {
  PowerSeries r(order);
  r.coeffs_[0] = 1;
  return r;
}

PowerSeries PowerSeries::monomial(int k, int order) {
  if (k < 0) throw std::invalid_argument("PowerSeries::monomial: k must be nonnegative");
  PowerSeries r(order);
  if (k <= order) r.coeffs_[static_cast<std::size_t>(k)] = 1;
  return r;
}

const BigInt& PowerSeries::operator[](int n) const {
  if (n < 0 || n > order()) throw std::out_of_range("PowerSeries: coefficient index past truncation order");
  return coeffs_[static_cast<std::size_t>(n)];
}

void PowerSeries::set(int n, BigInt v) {
  if (n < 0 || n > order()) throw std::out_of_range("PowerSeries::set: index past truncation order");
  coeffs_[static_cast<std::size_t>(n)] = std::move(v);
}

PowerSeries PowerSeries::truncated(int ord) const {
  if (ord < 0 || ord > order()) throw std::out_of_range("PowerSeries::truncated: bad order");
  PowerSeries r(ord);
  std::copy_n(coeffs_.begin(), static_cast<std::size_t>(ord) + 1, r.coeffs_.begin());
  return r;
}

PowerSeries PowerSeries::shifted(int k) const {
  if (k < 0) throw std::invalid_argument("PowerSeries::shifted: k must be nonnegative");
  PowerSeries r(order());
  for (int j = k; j <= order(); ++j) r.coeffs_[static_cast<std::size_t>(j)] = coeffs_[static_cast<std::size_t>(j - k)];
  return r;
}

PowerSeries operator+(const PowerSeries& a, const PowerSeries& b) {
  const int ord = std::min(a.order(), b.order());
  PowerSeries r(ord);
  for (int i = 0; i <= ord; ++i)
    r.coeffs_[static_cast<std::size_t>(i)] = a.coeffs_[static_cast<std::size_t>(i)] + b.coeffs_[static_cast<std::size_t>(i)];
  return r;
}

PowerSeries operator-(const PowerSeries& a, const PowerSeries& b) {
  const int ord = std::min(a.order(), b.order());
  PowerSeries r(ord);
  for (int i = 0; i <= ord; ++i)
    r.coeffs_[static_cast<std::size_t>(i)] = a.coeffs_[static_cast<std::size_t>(i)] - b.coeffs_[static_cast<std::size_t>(i)];
  return r;
}

PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
  const int ord = std::min(a.order(), b.order());
  PowerSeries r(ord);
  for (int i = 0; i <= ord; ++i) {
    const BigInt& ai = a.coeffs_[static_cast<std::size_t>(i)];
    if (ai == 0) continue;
    for (int j = 0; i + j <= ord; ++j) {
      const BigInt& bj = b.coeffs_[static_cast<std::size_t>(j)];
      if (bj == 0) continue;
      r.coeffs_[static_cast<std::size_t>(i + j)] += ai * bj;
    }
  }
  return r;
}

PowerSeries PowerSeries::recip() const {
  const BigInt& c0 = coeffs_[0];
  if (c0 != 1 && c0 != -1)
    throw std::domain_error("PowerSeries::recip: constant term must be a unit (1 or -1)");
  const int ord = order();
  PowerSeries b(ord);
  b.coeffs_[0] = c0;  // 1/c0 == c0 for a unit
  for (int n = 1; n <= ord; ++n) {
    BigInt acc = 0;
    for (int k = 1; k <= n; ++k)
      acc += coeffs_[static_cast<std::size_t>(k)] * b.coeffs_[static_cast<std::size_t>(n - k)];
    b.coeffs_[static_cast<std::size_t>(n)] = -acc * c0;
  }
  return b;
}

PowerSeries poch(int k, int order) {
  if (k < 0) throw std::invalid_argument("poch: k must be nonnegative");
  PowerSeries r = PowerSeries::one(order);
  // In-place multiplication by (1 - q^i); descending j keeps old values live.
  for (int i = 1; i <= k; ++i)
    for (int j = order; j >= i; --j) r.set(j, r[j] - r[j - i]);
  return r;
}

PowerSeries column_gf(int d, int order) {
  if (d < 1) throw std::invalid_argument("column_gf: d must be positive");
  const PowerSeries den = poch(d - 1, order) * poch(d, order);
  PowerSeries r = den.recip();
  const long long shift = 1LL * d * d;
  if (shift > order) return PowerSeries(order);  // whole column is beyond the truncation
  return r.shifted(static_cast<int>(shift));
}

PowerSeries a_gf(int order) {
  PowerSeries r(order);
  for (int d = 1; 1LL * d * d + d <= order; ++d) r = r + column_gf(d, order).shifted(d);
  return r;
}

std::vector<long long> recurrence_from_denominator(int d) {
  if (d < 1) throw std::invalid_argument("recurrence_from_denominator: d must be positive");
  const int degree = d * d;  // deg (q;q)_{d-1} + deg (q;q)_d = binom(d,2) + binom(d+1,2)
  const PowerSeries den = poch(d - 1, degree) * poch(d, degree);
  std::vector<long long> c(static_cast<std::size_t>(degree) + 1);
  for (int k = 0; k <= degree; ++k) c[static_cast<std::size_t>(k)] = den[k].convert_to<long long>();
  return c;
}

}  // namespace fpt
