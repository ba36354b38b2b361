#pragma once

#include <string>
#include <vector>

#include "fpt/partition.hpp"

namespace fpt {

/// One application of a bijection: input element, the set it came from, the
/// branch taken, and the verified image with its set.
struct BijectionTrace {
  Partition input;
  std::string source_set;  // e.g. "F(7,2)"
  std::string case_label;  // map branch taken
  Partition output;
  std::string target_set;

  friend bool operator==(const BijectionTrace&, const BijectionTrace&) = default;
};

/// Four-term recurrence bijection between
///   F(n-2d+1,d-1) u F(n-d,d) u F(n-d+1,d)   (sources)
/// and
///   F(n,d) u F(n-2d+1,d)                    (targets)
/// for d >= 2 and n >= d^2. The forward direction maps sources to targets;
/// membership of the output is re-verified. Inputs outside every source
/// (resp. target) set are rejected with std::invalid_argument.
BijectionTrace thm13_forward(const Partition& lam, int n, int d);
BijectionTrace thm13_reverse(const Partition& mu, int n, int d);

/// Diagonal-sum bijection step: lam with fixed point d gains one more part d
/// right after it, landing in the family with part d at indices d and d+1.
Partition thm15_insert(const Partition& lam, int d);

/// Inverse of thm15_insert: drop the extra part d at index d+1.
Partition thm15_remove(const Partition& mu);

/// Antidiagonal-sum bijection: delete the fixed part, and restore it by
/// re-inserting d = max{ d >= 1 : mu_{d-1} >= d } (with mu_0 = infinity).
Partition thm16_remove(const Partition& lam);
Partition thm16_restore(const Partition& mu);

/// Conjugation between partitions whose Durfee size is absent from the parts
/// and partitions with part d at indices d and d+1 (d the Durfee size).
Partition prop31_conjugate(const Partition& lam);
Partition prop31_conjugate_back(const Partition& mu);

/// Full trace tables over exhaustively enumerated domains, in enumeration
/// order (ascending d, reverse-lexicographic within each set).
std::vector<BijectionTrace> thm13_traces(int n, int d);
std::vector<BijectionTrace> thm15_traces(int n);  // diagonal through row n, into B(n+1)
std::vector<BijectionTrace> thm16_traces(int n);  // antidiagonal from row n, onto P(n-1)
std::vector<BijectionTrace> prop31_traces(int n);

}  // namespace fpt
