#include "fpt/triangle.hpp"

#include <cmath>
#include <stdexcept>

#include "fpt/power_series.hpp"

namespace fpt {

int isqrt_floor(int n) {
  if (n < 0) throw std::invalid_argument("isqrt_floor: n must be nonnegative");
  int r = static_cast<int>(std::sqrt(static_cast<double>(n)));
  while (r > 0 && 1LL * r * r > n) --r;
  while (1LL * (r + 1) * (r + 1) <= n) ++r;
  return r;
}

std::string method_name(TriangleMethod m) {
  switch (m) {
    case TriangleMethod::BruteForce: return "brute-force";
    case TriangleMethod::GeneratingFunction: return "generating-function";
    case TriangleMethod::Recurrence: return "recurrence";
  }
  throw std::logic_error("method_name: unknown method");
}

FixedPointTriangle::FixedPointTriangle(int n_max, TriangleMethod method)
    : n_max_(n_max),
      d_max_(isqrt_floor(n_max)),
      method_(method),
      cells_(static_cast<std::size_t>(n_max) * static_cast<std::size_t>(d_max_)) {}

BigInt& FixedPointTriangle::cell(int n, int d) {
  return cells_[static_cast<std::size_t>(n - 1) * static_cast<std::size_t>(d_max_) +
                static_cast<std::size_t>(d - 1)];
}

const BigInt& FixedPointTriangle::at(int n, int d) const {
  if (n < 1 || n > n_max_ || d < 1 || d > d_max_)
    throw std::out_of_range("FixedPointTriangle::at: cell outside the built table");
  return cells_[static_cast<std::size_t>(n - 1) * static_cast<std::size_t>(d_max_) +
                static_cast<std::size_t>(d - 1)];
}

BigInt FixedPointTriangle::value_or_zero(int n, int d) const {
  if (n < 1 || d < 1) throw std::out_of_range("FixedPointTriangle::value_or_zero: bad cell");
  if (1LL * d * d > n) return 0;
  return at(n, d);
}

FixedPointTriangle FixedPointTriangle::build(int n_max, TriangleMethod method) {
  if (n_max < 1) throw std::invalid_argument("FixedPointTriangle::build: n_max must be positive");
  FixedPointTriangle t(n_max, method);
  switch (method) {
    case TriangleMethod::BruteForce:
      for (int n = 1; n <= n_max; ++n) {
        enumerate_partitions(n, [&](const Partition& p) {
          const PartitionStats s = stats(p);
          if (s.fixed_point && *s.fixed_point <= t.d_max_) ++t.cell(n, *s.fixed_point);
        });
      }
      break;
    case TriangleMethod::GeneratingFunction:
      for (int d = 1; d <= t.d_max_; ++d) {
        const PowerSeries col = column_gf(d, n_max);
        for (int n = 1; n <= n_max; ++n) t.cell(n, d) = col[n];
      }
      break;
    case TriangleMethod::Recurrence:
      for (int n = 1; n <= n_max; ++n) t.cell(n, 1) = 1;
      for (int d = 2; d <= t.d_max_; ++d) {
        for (int n = d * d; n <= n_max; ++n) {
          BigInt v = t.value_or_zero(n - d + 1, d);
          v += t.value_or_zero(n - d, d);
          v -= t.value_or_zero(n - 2 * d + 1, d);
          v += t.value_or_zero(n - 2 * d + 1, d - 1);
          t.cell(n, d) = std::move(v);
        }
      }
      break;
  }
  return t;
}

BigInt FixedPointTriangle::row_sum(int n) const {
  if (n < 1 || n > n_max_) throw std::out_of_range("row_sum: row outside the built table");
  BigInt s = 0;
  for (int d = 1; d * d <= n; ++d) s += at(n, d);
  return s;
}

BigInt FixedPointTriangle::diag_sum(int n) const {
  if (n < 1 || n > n_max_) throw std::out_of_range("diag_sum: diagonal outside the built table");
  BigInt s = 0;
  for (int d = 1; d * d + d - 1 <= n; ++d) s += at(n - d + 1, d);
  return s;
}

BigInt FixedPointTriangle::antidiag_sum(int n) const {
  if (n < 1) throw std::out_of_range("antidiag_sum: n must be positive");
  BigInt s = 0;
  for (int d = 1; d * d - d + 1 <= n; ++d) {
    const int row = n + d - 1;
    if (row > n_max_)
      throw std::out_of_range("antidiag_sum: triangle too small; build to n + isqrt_floor(n) + 1");
    s += at(row, d);
  }
  return s;
}

int FixedPointTriangle::nonzero_in_row(int n) const {
  if (n < 1 || n > n_max_) throw std::out_of_range("nonzero_in_row: row outside the built table");
  int count = 0;
  for (int d = 1; d <= d_max_; ++d)
    if (at(n, d) != 0) ++count;
  return count;
}

BigInt f_bruteforce(int n, int d) {
  if (n < 1 || d < 1) throw std::invalid_argument("f_bruteforce: n and d must be positive");
  BigInt count = 0;
  enumerate_partitions(n, [&](const Partition& p) {
    if (p.part_or_zero(d) == d) ++count;
  });
  return count;
}

BigInt f_recurrence(int n, int d) {
  if (n < 1 || d < 1) throw std::invalid_argument("f_recurrence: n and d must be positive");
  if (1LL * d * d > n) return 0;
  return FixedPointTriangle::build(n, TriangleMethod::Recurrence).at(n, d);
}

BigInt a_count(int n, ACountMethod method) {
  if (n < 1) throw std::invalid_argument("a_count: n must be positive");
  BigInt count = 0;
  switch (method) {
    case ACountMethod::DurfeeNotPart:
      enumerate_partitions(n, [&](const Partition& p) {
        if (!contains_part(p, stats(p).durfee)) ++count;
      });
      break;
    case ACountMethod::BFamily:
      enumerate_partitions(n, [&](const Partition& p) {
        const int d = stats(p).durfee;
        if (d >= 1 && p.part_or_zero(d) == d && p.part_or_zero(d + 1) == d) ++count;
      });
      break;
    case ACountMethod::GF:
      count = a_gf(n)[n];
      break;
  }
  return count;
}

BigInt pp_convolution(int k) {
  if (k < 0) throw std::invalid_argument("pp_convolution: k must be nonnegative");
  const std::vector<BigInt> p = partition_count_table(k);
  BigInt s = 0;
  for (int i = 0; i <= k; ++i)
    s += p[static_cast<std::size_t>(i)] * p[static_cast<std::size_t>(k - i)];
  return s;
}

bool stabilization_check(int d) {
  if (d < 1) throw std::invalid_argument("stabilization_check: d must be positive");
  const int top = d * d + d - 1;
  const auto tri = FixedPointTriangle::build(top, TriangleMethod::BruteForce);
  for (int n = 1; n < d * d; ++n)
    if (d <= tri.d_max() && tri.at(n, d) != 0) return false;
  for (int k = 0; k <= d - 1; ++k)
    if (tri.at(d * d + k, d) != pp_convolution(k)) return false;
  return true;
}

bool stabilization_boundary_check(int d) {
  if (d < 2) throw std::invalid_argument("stabilization_boundary_check: d must be >= 2");
  return f_bruteforce(d * d + d, d) == pp_convolution(d) - 1;
}

namespace {

SequenceReport make_report(std::string name, int start, std::string method) {
  SequenceReport r;
  r.name = std::move(name);
  r.start_index = start;
  r.method = std::move(method);
  return r;
}

}  // namespace

IdentityReport identity_report(int n_max) {
  if (n_max < 1) throw std::invalid_argument("identity_report: n_max must be positive");
  const int rows = n_max + isqrt_floor(n_max) + 1;
  const auto tri = FixedPointTriangle::build(rows, TriangleMethod::Recurrence);
  return identity_report(tri, n_max);
}

IdentityReport identity_report(const FixedPointTriangle& triangle, int n_max) {
  if (n_max < 1) throw std::invalid_argument("identity_report: n_max must be positive");
  IdentityReport rep;

  SequenceReport row_sums = make_report("row_sum", 1, method_name(triangle.method()) + "+sum");
  SequenceReport positive_crank = make_report("positive_crank", 1, "enumeration+stats");
  SequenceReport crank_m_sum = make_report("crank_m_sum", 1, "crank distribution, m >= 1");
  SequenceReport even_mex = make_report("even_mex", 1, "enumeration+stats");
  SequenceReport diag_sums = make_report("diag_sum", 1, method_name(triangle.method()) + "+sum");
  SequenceReport a_next = make_report("a_next", 1, "durfee-not-part enumeration at n+1");
  SequenceReport antidiag_sums = make_report("antidiag_sum", 1, method_name(triangle.method()) + "+sum");
  SequenceReport p_prev = make_report("p_prev", 1, "pentagonal recurrence at n-1");

  const std::vector<BigInt> p_table = partition_count_table(n_max);

  for (int n = 1; n <= n_max; ++n) {
    row_sums.values.push_back(triangle.row_sum(n));

    BigInt pos = 0;
    BigInt mex_even = 0;
    enumerate_partitions(n, [&](const Partition& p) {
      const PartitionStats s = stats(p);
      if (s.crank > 0) ++pos;
      if (s.mex % 2 == 0) ++mex_even;
    });
    positive_crank.values.push_back(pos);
    even_mex.values.push_back(mex_even);

    BigInt m_sum = 0;
    for (const auto& [m, count] : crank_distribution(n))
      if (m >= 1) m_sum += count;
    crank_m_sum.values.push_back(m_sum);

    diag_sums.values.push_back(triangle.diag_sum(n));
    a_next.values.push_back(a_count(n + 1, ACountMethod::DurfeeNotPart));

    antidiag_sums.values.push_back(triangle.antidiag_sum(n));
    p_prev.values.push_back(p_table[static_cast<std::size_t>(n - 1)]);
  }

  const auto compare = [&rep](const std::string& identity, const SequenceReport& lhs,
                              const SequenceReport& rhs) {
    for (std::size_t i = 0; i < lhs.values.size(); ++i) {
      if (lhs.values[i] != rhs.values[i]) {
        rep.mismatches.push_back(IdentityMismatch{identity, lhs.start_index + static_cast<int>(i),
                                                  lhs.name, lhs.values[i], rhs.name,
                                                  rhs.values[i]});
      }
    }
  };

  compare("row-sum=positive-crank", row_sums, positive_crank);
  compare("row-sum=sum-M(m,n)", row_sums, crank_m_sum);
  compare("row-sum=even-mex", row_sums, even_mex);
  compare("diagonal=a(n+1)", diag_sums, a_next);
  compare("antidiagonal=p(n-1)", antidiag_sums, p_prev);

  rep.sequences = {std::move(row_sums), std::move(positive_crank), std::move(crank_m_sum),
                   std::move(even_mex), std::move(diag_sums),      std::move(a_next),
                   std::move(antidiag_sums), std::move(p_prev)};
  return rep;
}

}  // namespace fpt
