#pragma once

#include <stdexcept>
#include <vector>

#include "fpt/bigint.hpp"

namespace fpt {

/// Truncated power series in q with exact integer coefficients.
///
/// Every value carries an explicit truncation order (inclusive); binary
/// operations truncate the result to the minimum of the operand orders and
/// never extend silently.
class PowerSeries {
 public:
  /// Zero series of the given order.
  explicit PowerSeries(int order);

  /// Series with the given coefficients; order = coeffs.size() - 1.
  explicit PowerSeries(std::vector<BigInt> coeffs);

  static PowerSeries one(int order);
  static PowerSeries monomial(int k, int order);  // q^k, zero when k > order

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }

  /// Coefficient of q^n; throws std::out_of_range beyond the truncation order.
  const BigInt& operator[](int n) const;

  void set(int n, BigInt v);

  /// Copy truncated to a lower order.
  PowerSeries truncated(int order) const;

  /// Multiplication by q^k at the same order (high coefficients drop off).
  PowerSeries shifted(int k) const;

  /// Multiplicative inverse up to the truncation order. The constant term
  /// must be 1 or -1; otherwise std::domain_error.
  PowerSeries recip() const;

  friend PowerSeries operator+(const PowerSeries& a, const PowerSeries& b);
  friend PowerSeries operator-(const PowerSeries& a, const PowerSeries& b);
  friend PowerSeries operator*(const PowerSeries& a, const PowerSeries& b);
  friend bool operator==(const PowerSeries&, const PowerSeries&) = default;

 private:
  std::vector<BigInt> coeffs_;  // exactly order + 1 entries
};

/// (q;q)_k = (1-q)(1-q^2)...(1-q^k), truncated to the given order.
/// Exact polynomial of degree k(k+1)/2 once the order covers it; k = 0 is 1.
PowerSeries poch(int k, int order);

/// Column generating function q^(d^2) / ((q;q)_{d-1} (q;q)_d): the
/// coefficient of q^n is f(n,d).
PowerSeries column_gf(int d, int order);

/// Sum over d >= 1 of q^(d^2+d) / ((q;q)_{d-1} (q;q)_d): the coefficient of
/// q^n counts partitions of n whose Durfee size is not a part.
PowerSeries a_gf(int order);

/// Coefficients c_0..c_{d^2} of (q;q)_{d-1} (q;q)_d. The implied linear
/// recurrence sum_k c_k f(n-k,d) vanishes for n > d^2 and is 1 at n = d^2.
std::vector<long long> recurrence_from_denominator(int d);

}  // namespace fpt
