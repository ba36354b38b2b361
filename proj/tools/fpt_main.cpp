#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "fpt/bijections.hpp"
#include "fpt/format.hpp"
#include "fpt/partition.hpp"
#include "fpt/power_series.hpp"
#include "fpt/triangle.hpp"

namespace {

// Exit codes: 0 all checks pass, 1 identity/cross-check mismatch, 2 usage error.
constexpr int kOk = 0;
constexpr int kMismatch = 1;
constexpr int kUsage = 2;

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open output file: " + out_path);
  out << text;
}

int run_triangle(int n_max, int d_max, const std::string& method, const std::string& format,
                 const std::string& out_path) {
  if (d_max != 0 && d_max > fpt::isqrt_floor(n_max)) {
    std::cerr << "error: --d-max must be at most floor(sqrt(n_max)) = "
              << fpt::isqrt_floor(n_max) << "\n";
    return kUsage;
  }

  fpt::TriangleMethod primary = fpt::TriangleMethod::Recurrence;
  if (method == "brute") primary = fpt::TriangleMethod::BruteForce;
  if (method == "gf") primary = fpt::TriangleMethod::GeneratingFunction;

  const auto tri = fpt::FixedPointTriangle::build(n_max, primary);

  std::string cross_summary;
  if (method == "all") {
    const auto brute = fpt::FixedPointTriangle::build(n_max, fpt::TriangleMethod::BruteForce);
    const auto gf = fpt::FixedPointTriangle::build(n_max, fpt::TriangleMethod::GeneratingFunction);
    std::size_t bad = 0;
    for (int n = 1; n <= n_max; ++n) {
      for (int d = 1; d <= tri.d_max(); ++d) {
        if (tri.at(n, d) != brute.at(n, d) || tri.at(n, d) != gf.at(n, d)) {
          ++bad;
          std::cerr << "cell mismatch at n=" << n << " d=" << d << ": recurrence=" << tri.at(n, d)
                    << " brute=" << brute.at(n, d) << " gf=" << gf.at(n, d) << "\n";
        }
      }
    }
    if (bad != 0) return kMismatch;
    cross_summary = "all methods agree on " + std::to_string(n_max) + "x" +
                    std::to_string(tri.d_max()) + " cells (brute-force, generating-function, recurrence)\n";
  }

  std::string text;
  if (format == "csv")
    text = fpt::render_triangle_csv(tri, d_max);
  else if (format == "json")
    text = fpt::render_triangle_json(tri, d_max);
  else
    text = fpt::render_triangle_table(tri, d_max) + cross_summary;
  emit(text, out_path);
  return kOk;
}

int run_verify(int n_max) {
  const int rows = n_max + fpt::isqrt_floor(n_max) + 1;
  const auto tri = fpt::FixedPointTriangle::build(rows, fpt::TriangleMethod::Recurrence);
  const auto rep = fpt::identity_report(tri, n_max);

  bool all_ok = true;
  const std::vector<std::string> identities = {"row-sum=positive-crank", "row-sum=sum-M(m,n)",
                                               "row-sum=even-mex", "diagonal=a(n+1)",
                                               "antidiagonal=p(n-1)"};
  for (const auto& identity : identities) {
    const fpt::IdentityMismatch* first = nullptr;
    std::size_t count = 0;
    for (const auto& m : rep.mismatches) {
      if (m.identity == identity) {
        if (!first) first = &m;
        ++count;
      }
    }
    std::cout << "identity " << identity << "  n=1.." << n_max << ": ";
    if (!first) {
      std::cout << "PASS\n";
    } else {
      all_ok = false;
      std::cout << "FAIL at n=" << first->n << " (" << first->lhs_name << "=" << first->lhs << ", "
                << first->rhs_name << "=" << first->rhs << "; " << count << " mismatching n)\n";
    }
  }

  bool stab_ok = true;
  const int stab_dmax = fpt::isqrt_floor(n_max);
  for (int d = 1; d <= stab_dmax; ++d) {
    if (!fpt::stabilization_check(d)) {
      stab_ok = false;
      std::cout << "stabilization column d=" << d << ": FAIL\n";
    }
    if (d >= 2 && !fpt::stabilization_boundary_check(d)) {
      stab_ok = false;
      std::cout << "stabilization boundary d=" << d << ": FAIL\n";
    }
  }
  std::cout << "stabilization columns d=1.." << stab_dmax << ": " << (stab_ok ? "PASS" : "FAIL")
            << "\n";

  bool support_ok = true;
  for (int n = 1; n <= n_max; ++n) {
    if (tri.nonzero_in_row(n) != fpt::isqrt_floor(n)) {
      support_ok = false;
      std::cout << "row-support at n=" << n << ": " << tri.nonzero_in_row(n)
                << " nonzero entries, expected " << fpt::isqrt_floor(n) << "\n";
      break;
    }
  }
  std::cout << "row-support floor(sqrt(n)) nonzero entries n=1.." << n_max << ": "
            << (support_ok ? "PASS" : "FAIL") << "\n";

  if (all_ok && stab_ok && support_ok) {
    std::cout << "verify: PASS\n";
    return kOk;
  }
  std::cout << "verify: FAIL\n";
  return kMismatch;
}

int run_bijection(const std::string& name, int n, int d, const std::string& format,
                  const std::string& out_path) {
  std::vector<fpt::BijectionTrace> traces;
  try {
    if (name == "thm13") {
      if (d < 2) {
        std::cerr << "error: thm13 needs --d >= 2\n";
        return kUsage;
      }
      traces = fpt::thm13_traces(n, d);
    } else if (name == "thm15") {
      traces = fpt::thm15_traces(n);
    } else if (name == "thm16") {
      traces = fpt::thm16_traces(n);
    } else {
      traces = fpt::prop31_traces(n);
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }

  std::string text;
  if (format == "csv")
    text = fpt::render_traces_csv(traces);
  else if (format == "json")
    text = fpt::render_traces_json(traces);
  else
    text = fpt::render_traces_table(traces);
  emit(text, out_path);
  return kOk;
}

int run_sequence(const std::string& name, int n_max, int d, const std::string& format,
                 const std::string& out_path) {
  fpt::SequenceReport rep;
  if (name == "column") {
    if (d < 1) {
      std::cerr << "error: sequence column needs --d >= 1\n";
      return kUsage;
    }
    rep.name = "f(n," + std::to_string(d) + ")";
    rep.method = "generating-function";
    const auto col = fpt::column_gf(d, n_max);
    for (int n = 1; n <= n_max; ++n) rep.values.push_back(col[n]);
  } else if (name == "a") {
    rep.name = "a(n)";
    rep.method = "generating-function";
    const auto gf = fpt::a_gf(n_max);
    for (int n = 1; n <= n_max; ++n) rep.values.push_back(gf[n]);
  } else if (name == "convolution") {
    rep.name = "sum p(i)p(k-i)";
    rep.method = "pentagonal-convolution";
    rep.start_index = 0;
    for (int k = 0; k < n_max; ++k) rep.values.push_back(fpt::pp_convolution(k));
  } else {
    const int rows = n_max + fpt::isqrt_floor(n_max) + 1;
    const auto tri = fpt::FixedPointTriangle::build(rows, fpt::TriangleMethod::Recurrence);
    rep.method = "recurrence-triangle";
    if (name == "rowsum") {
      rep.name = "row_sum(n)";
      for (int n = 1; n <= n_max; ++n) rep.values.push_back(tri.row_sum(n));
    } else if (name == "diagsum") {
      rep.name = "diag_sum(n)";
      for (int n = 1; n <= n_max; ++n) rep.values.push_back(tri.diag_sum(n));
    } else {
      rep.name = "antidiag_sum(n)";
      for (int n = 1; n <= n_max; ++n) rep.values.push_back(tri.antidiag_sum(n));
    }
  }

  std::string text;
  if (format == "csv")
    text = fpt::render_sequence_csv(rep);
  else if (format == "json")
    text = fpt::render_sequence_json(rep);
  else
    text = fpt::render_sequence_lines(rep);
  emit(text, out_path);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"fixed-point partition triangle: tables, sum identities, bijections, sequences"};
  app.require_subcommand(1);

  int n_max = 0, n = 0, d = 0, d_max = 0;
  std::string method = "recur", format = "table", out_path, bijection_name, sequence_name;

  auto* tri = app.add_subcommand("triangle", "print the f(n,d) triangle");
  tri->add_option("--n-max", n_max, "largest n")->required()->check(CLI::PositiveNumber);
  tri->add_option("--d-max", d_max, "restrict columns")->check(CLI::PositiveNumber);
  tri->add_option("--method", method, "brute|gf|recur|all")
      ->check(CLI::IsMember({"brute", "gf", "recur", "all"}));
  tri->add_option("--format", format, "table|csv|json")
      ->check(CLI::IsMember({"table", "csv", "json"}));
  tri->add_option("--out", out_path, "write to file instead of stdout");

  auto* verify = app.add_subcommand("verify", "check the sum identities and structural facts");
  verify->add_option("--n-max", n_max, "largest n")->required()->check(CLI::PositiveNumber);

  auto* bij = app.add_subcommand("bijection", "trace one bijection over its whole domain");
  bij->add_option("name", bijection_name, "thm13|thm15|thm16|prop31")
      ->required()
      ->check(CLI::IsMember({"thm13", "thm15", "thm16", "prop31"}));
  bij->add_option("--n", n, "weight parameter")->required()->check(CLI::PositiveNumber);
  bij->add_option("--d", d, "fixed-point index (thm13 only)")->check(CLI::PositiveNumber);
  bij->add_option("--format", format, "table|csv|json")
      ->check(CLI::IsMember({"table", "csv", "json"}));
  bij->add_option("--out", out_path, "write to file instead of stdout");

  auto* seq = app.add_subcommand("sequence", "print a named sequence, diffable against b-files");
  seq->add_option("name", sequence_name, "column|a|rowsum|diagsum|antidiagsum|convolution")
      ->required()
      ->check(CLI::IsMember({"column", "a", "rowsum", "diagsum", "antidiagsum", "convolution"}));
  seq->add_option("--n-max", n_max, "number of values")->required()->check(CLI::PositiveNumber);
  seq->add_option("--d", d, "column index (column only)")->check(CLI::PositiveNumber);
  seq->add_option("--format", format, "table|csv|json")
      ->check(CLI::IsMember({"table", "csv", "json"}));
  seq->add_option("--out", out_path, "write to file instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (tri->parsed()) return run_triangle(n_max, d_max, method, format, out_path);
    if (verify->parsed()) return run_verify(n_max);
    if (bij->parsed()) return run_bijection(bijection_name, n, d, format, out_path);
    if (seq->parsed()) return run_sequence(sequence_name, n_max, d, format, out_path);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kMismatch;
  }
  return kUsage;
}
