#pragma once

#include <string>
#include <vector>

#include "fpt/bigint.hpp"
#include "fpt/partition.hpp"

namespace fpt {

/// Exact floor of sqrt(n) for n >= 0.
int isqrt_floor(int n);

enum class TriangleMethod { BruteForce, GeneratingFunction, Recurrence };

std::string method_name(TriangleMethod m);

/// Table of f(n,d) = number of partitions of n with fixed point d, for
/// 1 <= n <= n_max and 1 <= d <= floor(sqrt(n_max)), tagged with the method
/// that produced it. Immutable once built.
class FixedPointTriangle {
 public:
  static FixedPointTriangle build(int n_max, TriangleMethod method);

  int n_max() const { return n_max_; }
  int d_max() const { return d_max_; }
  TriangleMethod method() const { return method_; }

  /// Stored cell, 1 <= n <= n_max, 1 <= d <= d_max.
  const BigInt& at(int n, int d) const;

  /// Like at(), but structural zeros (n < d^2) are served for any d >= 1
  /// without requiring storage.
  BigInt value_or_zero(int n, int d) const;

  /// Sum over d of f(n,d).
  BigInt row_sum(int n) const;

  /// Sum over d of f(n-d+1,d); equals the count of partitions of n+1 whose
  /// Durfee size is not a part.
  BigInt diag_sum(int n) const;

  /// Sum over d of f(n+d-1,d); finite, equals p(n-1). Requires rows up to
  /// n + d - 1 for every contributing d; throws std::out_of_range when the
  /// triangle is too small (build to n + isqrt_floor(n) + 1).
  BigInt antidiag_sum(int n) const;

  int nonzero_in_row(int n) const;

 private:
  FixedPointTriangle(int n_max, TriangleMethod method);
  BigInt& cell(int n, int d);

  int n_max_;
  int d_max_;
  TriangleMethod method_;
  std::vector<BigInt> cells_;  // row-major, (n-1) * d_max_ + (d-1)
};

/// f(n,d) by full enumeration of P(n).
BigInt f_bruteforce(int n, int d);

/// f(n,d) by the four-term recurrence
/// f(n,d) = f(n-d+1,d) + f(n-d,d) - f(n-2d+1,d) + f(n-2d+1,d-1)
/// over base cases f(n,1) = 1 and f(n,d) = 0 for n < d^2.
BigInt f_recurrence(int n, int d);

/// Counting methods for a(n), the partitions of n whose Durfee size is not
/// a part. BFamily counts the conjugate family (part d at both index d and
/// d+1, d the Durfee size); GF reads the a_gf coefficient.
enum class ACountMethod { DurfeeNotPart, BFamily, GF };

BigInt a_count(int n, ACountMethod method);

/// Convolution sum p(0)p(k) + p(1)p(k-1) + ... + p(k)p(0).
BigInt pp_convolution(int k);

/// Column d starts with d^2 - 1 zeros and then follows the p*p convolution
/// for its first d values: f(d^2+k, d) = pp_convolution(k), 0 <= k <= d-1.
/// Verified against a brute-force triangle.
bool stabilization_check(int d);

/// One step past stabilization: f(d^2+d, d) = pp_convolution(d) - 1 for
/// d >= 2 (a single excluded pair).
bool stabilization_boundary_check(int d);

/// Named integer sequence with provenance, for export and reporting.
struct SequenceReport {
  std::string name;
  int start_index = 1;
  std::vector<BigInt> values;  // values[i] belongs to index start_index + i
  std::string method;
};

struct IdentityMismatch {
  std::string identity;
  int n = 0;
  std::string lhs_name;
  BigInt lhs;
  std::string rhs_name;
  BigInt rhs;
};

/// All sum-identity data for 1 <= n <= n_max plus any observed mismatches.
/// Mismatches are reported, not thrown.
struct IdentityReport {
  std::vector<SequenceReport> sequences;
  std::vector<IdentityMismatch> mismatches;
  bool ok() const { return mismatches.empty(); }
};

/// Compares, for each n: the row sum against the positive-crank count, the
/// sum of M(m,n) over m >= 1, and the even-mex count; the diagonal sum
/// against a(n+1); the antidiagonal sum against p(n-1).
IdentityReport identity_report(int n_max);

/// Same, reusing a prebuilt triangle. Needs rows up to
/// n_max + isqrt_floor(n_max) + 1 for the antidiagonal sums.
IdentityReport identity_report(const FixedPointTriangle& triangle, int n_max);

}  // namespace fpt
