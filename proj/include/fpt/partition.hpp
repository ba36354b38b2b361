#pragma once

#include <cassert>
#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "fpt/bigint.hpp"

namespace fpt {

/// An integer partition: positive parts in nonincreasing order.
/// The empty partition (weight 0) is a valid value.
class Partition {
 public:
  Partition() = default;

  /// Throws std::invalid_argument unless every part is positive and the
  /// sequence is nonincreasing.
  explicit Partition(std::vector<int> parts);

  /// Fast path for callers that guarantee sorted positive parts
  /// (enumeration, verified map outputs). Checked by assert only.
  static Partition trusted(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int weight() const { return weight_; }
  int size() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }

  /// 1-based part access; indices past the last part read as 0.
  int part_or_zero(int i) const {
    return (i >= 1 && i <= size()) ? parts_[static_cast<std::size_t>(i) - 1] : 0;
  }

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
  int weight_ = 0;
};

/// True when v occurs among the parts.
bool contains_part(const Partition& p, int v);

/// Per-partition statistics.
///
/// fixed_point: the unique index i with part i equal to i, when it exists.
/// durfee:      largest i with part i >= i (side of the Durfee square).
/// crank:       largest part if there are no 1s, otherwise mu - omega.
///              Defined as 0 for the empty partition.
/// mex:         smallest positive integer that is not a part.
/// omega:       number of parts equal to 1.
/// mu:          number of parts greater than omega.
struct PartitionStats {
  std::optional<int> fixed_point;
  int durfee = 0;
  int crank = 0;
  int mex = 1;
  int omega = 0;
  int mu = 0;
};

PartitionStats stats(const Partition& p);

/// Ferrers-diagram transpose. Involution; preserves weight and Durfee size.
Partition conjugate(const Partition& p);

/// Calls fn(const Partition&) once for every partition of n, largest-first
/// (reverse-lexicographic on the part lists). n = 0 yields exactly the
/// empty partition.
template <typename Fn>
void enumerate_partitions(int n, Fn&& fn) {
  if (n < 0) throw std::invalid_argument("enumerate_partitions: n must be nonnegative");
  if (n == 0) {
    fn(Partition());
    return;
  }
  std::vector<int> parts{n};
  for (;;) {
    fn(Partition::trusted(parts));
    // Successor in reverse-lex order: shrink the last part above 1 and
    // redistribute the freed weight greedily.
    int k = static_cast<int>(parts.size()) - 1;
    while (k >= 0 && parts[static_cast<std::size_t>(k)] == 1) --k;
    if (k < 0) break;  // all ones: final partition
    const int ones = static_cast<int>(parts.size()) - 1 - k;
    const int cap = parts[static_cast<std::size_t>(k)] - 1;
    parts.resize(static_cast<std::size_t>(k) + 1);
    parts[static_cast<std::size_t>(k)] = cap;
    int rest = ones + 1;
    while (rest >= cap) {
      parts.push_back(cap);
      rest -= cap;
    }
    if (rest > 0) parts.push_back(rest);
  }
}

/// Materialized enumeration stream.
std::vector<Partition> partitions_of(int n);

/// F(n,d): partitions of n with fixed point d, in enumeration order.
std::vector<Partition> fixed_point_set(int n, int d);

/// p(0..n_max) via Euler's pentagonal-number recurrence.
std::vector<BigInt> partition_count_table(int n_max);

/// p(n).
BigInt partition_count(int n);

/// M(m,n): number of partitions of n with crank m, counted by enumeration.
BigInt crank_count(int n, int m);

/// The whole crank distribution of P(n) in one sweep: crank value -> count.
std::map<int, BigInt> crank_distribution(int n);

}  // namespace fpt
