#include "fpt/bijections.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace fpt {

namespace {

std::string f_label(int n, int d) {
  return "F(" + std::to_string(n) + "," + std::to_string(d) + ")";
}
std::string p_label(int n) { return "P(" + std::to_string(n) + ")"; }
std::string b_label(int n) { return "B(" + std::to_string(n) + ")"; }

// Structural edits must never need the sort; a reorder here means the case
// analysis picked a wrong branch.
Partition checked(std::vector<int> parts) {
  std::vector<int> sorted = parts;
  std::sort(sorted.begin(), sorted.end(), std::greater<int>());
  if (sorted != parts) throw std::logic_error("bijection produced out-of-order parts");
  return Partition(std::move(parts));
}

void verify_fixed_point(const Partition& p, int n, int d, const char* who) {
  if (p.weight() != n || stats(p).fixed_point != d)
    throw std::logic_error(std::string(who) + ": output not in " + f_label(n, d));
}

std::vector<int> raised_prefix(const Partition& p, int count) {
  std::vector<int> v = p.parts();
  for (int i = 0; i < count; ++i) ++v[static_cast<std::size_t>(i)];
  return v;
}

std::vector<int> lowered_prefix(const Partition& p, int count) {
  std::vector<int> v = p.parts();
  for (int i = 0; i < count; ++i) --v[static_cast<std::size_t>(i)];
  return v;
}

}  // namespace

BijectionTrace thm13_forward(const Partition& lam, int n, int d) {
  if (d < 2) throw std::invalid_argument("thm13_forward: d must be >= 2");
  if (n < d * d) throw std::invalid_argument("thm13_forward: n must be >= d^2");
  const int w = lam.weight();
  const PartitionStats s = stats(lam);

  BijectionTrace t;
  t.input = lam;

  if (w == n - 2 * d + 1 && s.fixed_point == d - 1) {
    // Raise the first d-2 parts and replace the fixed part d-1 by two parts d.
    std::vector<int> v;
    v.reserve(static_cast<std::size_t>(lam.size()) + 1);
    for (int i = 1; i <= d - 2; ++i) v.push_back(lam.part_or_zero(i) + 1);
    v.push_back(d);
    v.push_back(d);
    for (int i = d; i <= lam.size(); ++i) v.push_back(lam.parts()[static_cast<std::size_t>(i) - 1]);
    t.source_set = f_label(n - 2 * d + 1, d - 1);
    t.case_label = "raise-prefix-insert";
    t.output = checked(std::move(v));
    t.target_set = f_label(n, d);
    verify_fixed_point(t.output, n, d, "thm13_forward");
    return t;
  }

  if (w == n - d && s.fixed_point == d) {
    t.source_set = f_label(n - d, d);
    if (lam.part_or_zero(d - 1) == d) {
      std::vector<int> v = lam.parts();
      v.insert(v.begin() + d, d);
      t.case_label = "append-d";
      t.output = checked(std::move(v));
      t.target_set = f_label(n, d);
      verify_fixed_point(t.output, n, d, "thm13_forward");
    } else {
      t.case_label = "lower-prefix";
      t.output = checked(lowered_prefix(lam, d - 1));
      t.target_set = f_label(n - 2 * d + 1, d);
      verify_fixed_point(t.output, n - 2 * d + 1, d, "thm13_forward");
    }
    return t;
  }

  if (w == n - d + 1 && s.fixed_point == d) {
    t.source_set = f_label(n - d + 1, d);
    t.case_label = "raise-prefix";
    t.output = checked(raised_prefix(lam, d - 1));
    t.target_set = f_label(n, d);
    verify_fixed_point(t.output, n, d, "thm13_forward");
    return t;
  }

  throw std::invalid_argument("thm13_forward: partition lies in no source set for (n,d)");
}

BijectionTrace thm13_reverse(const Partition& mu, int n, int d) {
  if (d < 2) throw std::invalid_argument("thm13_reverse: d must be >= 2");
  if (n < d * d) throw std::invalid_argument("thm13_reverse: n must be >= d^2");
  const int w = mu.weight();
  const PartitionStats s = stats(mu);

  BijectionTrace t;
  t.input = mu;

  if (w == n - 2 * d + 1 && s.fixed_point == d) {
    t.source_set = f_label(n - 2 * d + 1, d);
    t.case_label = "raise-prefix";
    t.output = checked(raised_prefix(mu, d - 1));
    t.target_set = f_label(n - d, d);
    verify_fixed_point(t.output, n - d, d, "thm13_reverse");
    return t;
  }

  if (w == n && s.fixed_point == d) {
    t.source_set = f_label(n, d);
    const int before = mu.part_or_zero(d - 1);
    const int after = mu.part_or_zero(d + 1);
    if (before > d) {
      t.case_label = "lower-prefix";
      t.output = checked(lowered_prefix(mu, d - 1));
      t.target_set = f_label(n - d + 1, d);
      verify_fixed_point(t.output, n - d + 1, d, "thm13_reverse");
    } else if (after == d) {
      // before == d here since mu_{d-1} >= mu_d = d
      std::vector<int> v = mu.parts();
      v.erase(v.begin() + d);
      t.case_label = "remove-d";
      t.output = checked(std::move(v));
      t.target_set = f_label(n - d, d);
      verify_fixed_point(t.output, n - d, d, "thm13_reverse");
    } else {
      // mu_{d-1} = d and mu_{d+1} < d: undo the prefix raise and drop one d.
      std::vector<int> v;
      v.reserve(static_cast<std::size_t>(mu.size()) - 1);
      for (int i = 1; i <= d - 2; ++i) v.push_back(mu.parts()[static_cast<std::size_t>(i) - 1] - 1);
      v.push_back(d - 1);
      for (int i = d + 1; i <= mu.size(); ++i) v.push_back(mu.parts()[static_cast<std::size_t>(i) - 1]);
      t.case_label = "lower-prefix-remove";
      t.output = checked(std::move(v));
      t.target_set = f_label(n - 2 * d + 1, d - 1);
      verify_fixed_point(t.output, n - 2 * d + 1, d - 1, "thm13_reverse");
    }
    return t;
  }

  throw std::invalid_argument("thm13_reverse: partition lies in no target set for (n,d)");
}

Partition thm15_insert(const Partition& lam, int d) {
  if (d < 1) throw std::invalid_argument("thm15_insert: d must be positive");
  if (stats(lam).fixed_point != d)
    throw std::invalid_argument("thm15_insert: partition has no fixed point d");
  std::vector<int> v = lam.parts();
  v.insert(v.begin() + d, d);
  Partition mu = checked(std::move(v));
  if (mu.part_or_zero(d) != d || mu.part_or_zero(d + 1) != d)
    throw std::logic_error("thm15_insert: output lost the doubled part");
  return mu;
}

Partition thm15_remove(const Partition& mu) {
  const PartitionStats s = stats(mu);
  if (!s.fixed_point) throw std::invalid_argument("thm15_remove: partition has no fixed point");
  const int d = *s.fixed_point;
  if (mu.part_or_zero(d + 1) != d)
    throw std::invalid_argument("thm15_remove: part d is not doubled at index d+1");
  std::vector<int> v = mu.parts();
  v.erase(v.begin() + d);
  Partition lam = checked(std::move(v));
  verify_fixed_point(lam, mu.weight() - d, d, "thm15_remove");
  return lam;
}

Partition thm16_remove(const Partition& lam) {
  const PartitionStats s = stats(lam);
  if (!s.fixed_point) throw std::invalid_argument("thm16_remove: partition has no fixed point");
  const int d = *s.fixed_point;
  std::vector<int> v = lam.parts();
  v.erase(v.begin() + (d - 1));
  return checked(std::move(v));
}

Partition thm16_restore(const Partition& mu) {
  // Greatest d with mu_{d-1} >= d, where mu_0 reads as infinity; this is the
  // width parameter of the 1-Durfee rectangle and can be 1 for any mu.
  int d = 1;
  while (mu.part_or_zero(d) >= d + 1) ++d;
  std::vector<int> v = mu.parts();
  v.insert(v.begin() + (d - 1), d);
  Partition lam = checked(std::move(v));
  verify_fixed_point(lam, mu.weight() + d, d, "thm16_restore");
  return lam;
}

Partition prop31_conjugate(const Partition& lam) {
  if (lam.empty()) throw std::invalid_argument("prop31_conjugate: empty partition");
  const int d = stats(lam).durfee;
  if (contains_part(lam, d))
    throw std::invalid_argument("prop31_conjugate: Durfee size occurs as a part");
  Partition mu = conjugate(lam);
  if (mu.part_or_zero(d) != d || mu.part_or_zero(d + 1) != d)
    throw std::logic_error("prop31_conjugate: conjugate misses the doubled Durfee part");
  return mu;
}

Partition prop31_conjugate_back(const Partition& mu) {
  if (mu.empty()) throw std::invalid_argument("prop31_conjugate_back: empty partition");
  const int d = stats(mu).durfee;
  if (d < 1 || mu.part_or_zero(d) != d || mu.part_or_zero(d + 1) != d)
    throw std::invalid_argument("prop31_conjugate_back: no doubled part at the Durfee index");
  Partition lam = conjugate(mu);
  if (stats(lam).durfee != d || contains_part(lam, d))
    throw std::logic_error("prop31_conjugate_back: conjugate keeps the Durfee size as a part");
  return lam;
}

std::vector<BijectionTrace> thm13_traces(int n, int d) {
  if (d < 2) throw std::invalid_argument("thm13_traces: d must be >= 2");
  if (n < d * d) throw std::invalid_argument("thm13_traces: n must be >= d^2");
  std::vector<BijectionTrace> out;
  for (const Partition& mu : fixed_point_set(n, d)) out.push_back(thm13_reverse(mu, n, d));
  for (const Partition& mu : fixed_point_set(n - 2 * d + 1, d)) out.push_back(thm13_reverse(mu, n, d));
  return out;
}

std::vector<BijectionTrace> thm15_traces(int n) {
  if (n < 1) throw std::invalid_argument("thm15_traces: n must be positive");
  std::vector<BijectionTrace> out;
  for (int d = 1; d * d + d - 1 <= n; ++d) {
    for (const Partition& lam : fixed_point_set(n - d + 1, d)) {
      BijectionTrace t;
      t.input = lam;
      t.source_set = f_label(n - d + 1, d);
      t.case_label = "insert-d";
      t.output = thm15_insert(lam, d);
      t.target_set = b_label(n + 1);
      out.push_back(std::move(t));
    }
  }
  return out;
}

std::vector<BijectionTrace> thm16_traces(int n) {
  if (n < 1) throw std::invalid_argument("thm16_traces: n must be positive");
  std::vector<BijectionTrace> out;
  for (int d = 1; d * d - d + 1 <= n; ++d) {
    for (const Partition& lam : fixed_point_set(n + d - 1, d)) {
      BijectionTrace t;
      t.input = lam;
      t.source_set = f_label(n + d - 1, d);
      t.case_label = "remove-fixed-part";
      t.output = thm16_remove(lam);
      t.target_set = p_label(n - 1);
      out.push_back(std::move(t));
    }
  }
  return out;
}

std::vector<BijectionTrace> prop31_traces(int n) {
  if (n < 1) throw std::invalid_argument("prop31_traces: n must be positive");
  std::vector<BijectionTrace> out;
  enumerate_partitions(n, [&](const Partition& lam) {
    if (contains_part(lam, stats(lam).durfee)) return;
    BijectionTrace t;
    t.input = lam;
    t.source_set = "A(" + std::to_string(n) + ")";
    t.case_label = "conjugate";
    t.output = prop31_conjugate(lam);
    t.target_set = b_label(n);
    out.push_back(std::move(t));
  });
  return out;
}

}  // namespace fpt
