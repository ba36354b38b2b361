#include "fpt/format.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace fpt {

namespace {

constexpr int kExponentRunLength = 4;  // shortest run rendered as v^m

// Big values that still fit a JSON number stay numeric; anything larger is
// emitted as a decimal string so nothing rounds.
nlohmann::json big_to_json(const BigInt& v) {
  static const BigInt lo = std::numeric_limits<long long>::min();
  static const BigInt hi = std::numeric_limits<long long>::max();
  if (v >= lo && v <= hi) return nlohmann::json(v.convert_to<long long>());
  return nlohmann::json(v.str());
}

int column_limit(const FixedPointTriangle& t, int d_limit) {
  if (d_limit == 0) return t.d_max();
  if (d_limit < 1 || d_limit > t.d_max())
    throw std::invalid_argument("column limit must lie in 1..d_max");
  return d_limit;
}

}  // namespace

std::string compact_form(const Partition& p) {
  if (p.empty()) return "()";
  std::string out;
  const auto& a = p.parts();
  std::size_t i = 0;
  while (i < a.size()) {
    std::size_t j = i;
    while (j < a.size() && a[j] == a[i]) ++j;
    const std::size_t run = j - i;
    if (!out.empty()) out += ',';
    if (run >= kExponentRunLength) {
      out += std::to_string(a[i]) + '^' + std::to_string(run);
    } else {
      for (std::size_t k = 0; k < run; ++k) {
        if (k > 0) out += ',';
        out += std::to_string(a[i]);
      }
    }
    i = j;
  }
  return out;
}

std::string canonical_form(const Partition& p) {
  if (p.empty()) return "()";
  std::string out;
  for (std::size_t i = 0; i < p.parts().size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(p.parts()[i]);
  }
  return out;
}

std::string render_triangle_table(const FixedPointTriangle& t, int d_limit) {
  const int dmax = column_limit(t, d_limit);
  std::vector<std::size_t> width(static_cast<std::size_t>(dmax) + 1);
  width[0] = std::max<std::size_t>(3, std::to_string(t.n_max()).size());  // "n\d" column
  for (int d = 1; d <= dmax; ++d) {
    std::size_t w = std::to_string(d).size();
    for (int n = d * d; n <= t.n_max(); ++n) w = std::max(w, t.at(n, d).str().size());
    width[static_cast<std::size_t>(d)] = w;
  }

  std::ostringstream os;
  const auto pad = [&os](const std::string& s, std::size_t w) {
    for (std::size_t k = s.size(); k < w; ++k) os << ' ';
    os << s;
  };

  pad("n\\d", width[0]);
  for (int d = 1; d <= dmax; ++d) {
    os << "  ";
    pad(std::to_string(d), width[static_cast<std::size_t>(d)]);
  }
  os << '\n';
  for (int n = 1; n <= t.n_max(); ++n) {
    pad(std::to_string(n), width[0]);
    for (int d = 1; d <= dmax; ++d) {
      os << "  ";
      pad(n < d * d ? std::string() : t.at(n, d).str(), width[static_cast<std::size_t>(d)]);
    }
    os << '\n';
  }
  return os.str();
}

std::string render_triangle_csv(const FixedPointTriangle& t, int d_limit) {
  const int dmax = column_limit(t, d_limit);
  std::string out = "n,d,f\n";
  for (int n = 1; n <= t.n_max(); ++n)
    for (int d = 1; d <= dmax; ++d)
      out += std::to_string(n) + ',' + std::to_string(d) + ',' + t.at(n, d).str() + '\n';
  return out;
}

std::string render_triangle_json(const FixedPointTriangle& t, int d_limit) {
  const int dmax = column_limit(t, d_limit);
  nlohmann::json arr = nlohmann::json::array();
  for (int n = 1; n <= t.n_max(); ++n)
    for (int d = 1; d <= dmax; ++d)
      arr.push_back({{"n", n}, {"d", d}, {"f", big_to_json(t.at(n, d))}});
  return arr.dump(2) + "\n";
}

std::map<std::pair<int, int>, BigInt> parse_triangle_csv(const std::string& text) {
  std::istringstream is(text);
  std::string line;
  if (!std::getline(is, line) || line != "n,d,f")
    throw std::invalid_argument("parse_triangle_csv: missing n,d,f header");
  std::map<std::pair<int, int>, BigInt> cells;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    const auto c1 = line.find(',');
    const auto c2 = line.find(',', c1 + 1);
    if (c1 == std::string::npos || c2 == std::string::npos)
      throw std::invalid_argument("parse_triangle_csv: malformed row: " + line);
    const int n = std::stoi(line.substr(0, c1));
    const int d = std::stoi(line.substr(c1 + 1, c2 - c1 - 1));
    cells[{n, d}] = BigInt(line.substr(c2 + 1));
  }
  return cells;
}

std::string render_sequence_lines(const SequenceReport& r) {
  std::string out;
  for (std::size_t i = 0; i < r.values.size(); ++i)
    out += std::to_string(r.start_index + static_cast<int>(i)) + ' ' + r.values[i].str() + '\n';
  return out;
}

std::string render_sequence_csv(const SequenceReport& r) {
  std::string out = "index,value\n";
  for (std::size_t i = 0; i < r.values.size(); ++i)
    out += std::to_string(r.start_index + static_cast<int>(i)) + ',' + r.values[i].str() + '\n';
  return out;
}

std::string render_sequence_json(const SequenceReport& r) {
  nlohmann::json arr = nlohmann::json::array();
  for (std::size_t i = 0; i < r.values.size(); ++i)
    arr.push_back({{"index", r.start_index + static_cast<int>(i)}, {"value", big_to_json(r.values[i])}});
  return arr.dump(2) + "\n";
}

std::string render_traces_table(const std::vector<BijectionTrace>& traces) {
  if (traces.empty()) return "(empty domain)\n";

  const auto joined_sets = [&traces](bool source) {
    std::vector<std::string> seen;
    for (const auto& t : traces) {
      const std::string& s = source ? t.source_set : t.target_set;
      if (std::find(seen.begin(), seen.end(), s) == seen.end()) seen.push_back(s);
    }
    std::string out;
    for (const auto& s : seen) {
      if (!out.empty()) out += " U ";
      out += s;
    }
    return out;
  };

  std::vector<std::string> ins, outs;
  std::vector<std::size_t> width;
  for (const auto& t : traces) {
    ins.push_back(compact_form(t.input));
    outs.push_back(compact_form(t.output));
    width.push_back(std::max(ins.back().size(), outs.back().size()));
  }

  const std::string header_in = joined_sets(true);
  const std::string header_out = joined_sets(false);
  const std::size_t head = std::max(header_in.size(), header_out.size());

  std::ostringstream os;
  const auto row = [&](const std::string& header, const std::vector<std::string>& cells) {
    os << header;
    os << std::string(head - header.size(), ' ') << " |";
    for (std::size_t i = 0; i < cells.size(); ++i) {
      os << ' ' << cells[i] << std::string(width[i] - cells[i].size(), ' ');
    }
    os << '\n';
  };
  row(header_in, ins);
  row(header_out, outs);
  return os.str();
}

std::string render_traces_csv(const std::vector<BijectionTrace>& traces) {
  std::string out = "input,source_set,case,output,target_set\n";
  for (const auto& t : traces) {
    out += '"' + canonical_form(t.input) + "\",\"" + t.source_set + "\"," + t.case_label +
           ",\"" + canonical_form(t.output) + "\",\"" + t.target_set + "\"\n";
  }
  return out;
}

std::string render_traces_json(const std::vector<BijectionTrace>& traces) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& t : traces) {
    nlohmann::json in_parts = nlohmann::json::array();
    for (int x : t.input.parts()) in_parts.push_back(x);
    nlohmann::json out_parts = nlohmann::json::array();
    for (int x : t.output.parts()) out_parts.push_back(x);
    arr.push_back({{"input", in_parts},
                   {"source_set", t.source_set},
                   {"case", t.case_label},
                   {"output", out_parts},
                   {"target_set", t.target_set}});
  }
  return arr.dump(2) + "\n";
}

}  // namespace fpt
