#include "fpt/partition.hpp"

#include <algorithm>
#include <functional>
#include <limits>

namespace fpt {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  long long w = 0;
  int prev = std::numeric_limits<int>::max();
  for (int x : parts_) {
    if (x < 1) throw std::invalid_argument("Partition: parts must be positive");
    if (x > prev) throw std::invalid_argument("Partition: parts must be nonincreasing");
    prev = x;
    w += x;
  }
  if (w > std::numeric_limits<int>::max())
    throw std::invalid_argument("Partition: weight overflows int");
  weight_ = static_cast<int>(w);
}

Partition Partition::trusted(std::vector<int> parts) {
  Partition p;
  long long w = 0;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    assert(parts[i] >= 1);
    assert(i == 0 || parts[i] <= parts[i - 1]);
    w += parts[i];
  }
  p.parts_ = std::move(parts);
  p.weight_ = static_cast<int>(w);
  return p;
}

bool contains_part(const Partition& p, int v) {
  const auto& a = p.parts();
  return std::binary_search(a.begin(), a.end(), v, std::greater<int>());
}

PartitionStats stats(const Partition& p) {
  PartitionStats s;
  const auto& a = p.parts();
  const int j = p.size();

  for (int i = 1; i <= j; ++i) {
    const int part = a[static_cast<std::size_t>(i) - 1];
    if (part >= i) s.durfee = i;
    if (part == i) s.fixed_point = i;
  }

  int omega = 0;
  for (int i = j; i >= 1 && a[static_cast<std::size_t>(i) - 1] == 1; --i) ++omega;
  s.omega = omega;

  int mu = 0;
  while (mu < j && a[static_cast<std::size_t>(mu)] > omega) ++mu;
  s.mu = mu;

  s.crank = (omega == 0) ? (j > 0 ? a[0] : 0) : (mu - omega);

  int mex = 1;
  for (int i = j; i >= 1; --i) {  // ascending part values
    const int part = a[static_cast<std::size_t>(i) - 1];
    if (part == mex)
      ++mex;
    else if (part > mex)
      break;
  }
  s.mex = mex;
  return s;
}

Partition conjugate(const Partition& p) {
  const auto& a = p.parts();
  if (a.empty()) return {};
  std::vector<int> out(static_cast<std::size_t>(a[0]), 0);
  for (int x : a)
    for (int i = 0; i < x; ++i) ++out[static_cast<std::size_t>(i)];
  return Partition::trusted(std::move(out));
}

std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  enumerate_partitions(n, [&](const Partition& p) { out.push_back(p); });
  return out;
}

std::vector<Partition> fixed_point_set(int n, int d) {
  if (n < 0) throw std::invalid_argument("fixed_point_set: n must be nonnegative");
  if (d < 1) throw std::invalid_argument("fixed_point_set: d must be positive");
  std::vector<Partition> out;
  enumerate_partitions(n, [&](const Partition& p) {
    if (p.part_or_zero(d) == d) out.push_back(p);
  });
  return out;
}

std::vector<BigInt> partition_count_table(int n_max) {
  if (n_max < 0) throw std::invalid_argument("partition_count_table: n_max must be nonnegative");
  std::vector<BigInt> p(static_cast<std::size_t>(n_max) + 1);
  p[0] = 1;
  for (int n = 1; n <= n_max; ++n) {
    BigInt acc = 0;
    for (int k = 1;; ++k) {
      const long long g1 = 1LL * k * (3 * k - 1) / 2;
      const long long g2 = 1LL * k * (3 * k + 1) / 2;
      if (g1 > n) break;
      BigInt term = p[static_cast<std::size_t>(n - g1)];
      if (g2 <= n) term += p[static_cast<std::size_t>(n - g2)];
      if (k % 2 == 1)
        acc += term;
      else
        acc -= term;
    }
    p[static_cast<std::size_t>(n)] = std::move(acc);
  }
  return p;
}

BigInt partition_count(int n) {
  if (n < 0) throw std::invalid_argument("partition_count: n must be nonnegative");
  return partition_count_table(n).back();
}

BigInt crank_count(int n, int m) {
  if (n < 1) throw std::invalid_argument("crank_count: n must be positive");
  BigInt count = 0;
  enumerate_partitions(n, [&](const Partition& p) {
    if (stats(p).crank == m) ++count;
  });
  return count;
}

std::map<int, BigInt> crank_distribution(int n) {
  if (n < 1) throw std::invalid_argument("crank_distribution: n must be positive");
  std::map<int, BigInt> dist;
  enumerate_partitions(n, [&](const Partition& p) { ++dist[stats(p).crank]; });
  return dist;
}

}  // namespace fpt
