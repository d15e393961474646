#pragma once

// Text, CSV and JSON rendering of coefficient tables and comparison reports,
// parsing of the CSV/JSON class tables, and the verification suites.

#include "maroni/chain_geometry.hpp"
#include "maroni/class_formulas.hpp"
#include "maroni/combinatorics.hpp"
#include "maroni/errors.hpp"
#include "maroni/lattice_optimizer.hpp"
#include "maroni/rational.hpp"

#include "json.hpp"  // nlohmann::json, vendored

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

namespace maroni {

enum class ReportFormat { table, csv, json };

inline ReportFormat parse_format(std::string_view s) {
  if (s == "table") return ReportFormat::table;
  if (s == "csv") return ReportFormat::csv;
  if (s == "json") return ReportFormat::json;
  throw DomainError("unknown format '" + std::string(s) + "' (expected table, csv or json)");
}

/// Rows of cells; a cell is a JSON integer or string. Rationals go in as strings.
struct TextTable {
  std::vector<std::string> header;
  std::vector<std::vector<nlohmann::json>> rows;
};

namespace detail {

inline std::string cell_text(const nlohmann::json& cell) {
  return cell.is_string() ? cell.get<std::string>() : cell.dump();
}

inline std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

}  // namespace detail

inline std::string render(const TextTable& t, ReportFormat format) {
  std::ostringstream out;
  switch (format) {
    case ReportFormat::csv: {
      for (std::size_t i = 0; i < t.header.size(); ++i) out << (i ? "," : "") << detail::csv_escape(t.header[i]);
      out << '\n';
      for (const auto& row : t.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << detail::csv_escape(detail::cell_text(row[i]));
        out << '\n';
      }
      break;
    }
    case ReportFormat::json: {
      nlohmann::ordered_json ordered = nlohmann::ordered_json::array();
      for (const auto& row : t.rows) {
        nlohmann::ordered_json obj;
        for (std::size_t i = 0; i < row.size(); ++i) obj[t.header[i]] = nlohmann::ordered_json::parse(row[i].dump());
        ordered.push_back(std::move(obj));
      }
      out << ordered.dump(2) << '\n';
      break;
    }
    case ReportFormat::table: {
      std::vector<std::size_t> width(t.header.size());
      for (std::size_t i = 0; i < t.header.size(); ++i) width[i] = t.header[i].size();
      for (const auto& row : t.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], detail::cell_text(row[i]).size());
      }
      auto line = [&](const std::vector<std::string>& cells) {
        std::string s;
        for (std::size_t i = 0; i < cells.size(); ++i) {
          if (i) s += "  ";
          s += cells[i];
          if (i + 1 < cells.size()) s.append(width[i] - cells[i].size(), ' ');
        }
        out << s << '\n';
      };
      line(t.header);
      std::vector<std::string> rule;
      for (auto w : width) rule.emplace_back(w, '-');
      line(rule);
      for (const auto& row : t.rows) {
        std::vector<std::string> cells;
        for (const auto& c : row) cells.push_back(detail::cell_text(c));
        line(cells);
      }
      break;
    }
  }
  return out.str();
}

inline const std::vector<std::string>& class_table_header() {
  static const std::vector<std::string> h{"j", "mu", "n", "m", "r", "c", "coefficient", "variant", "provenance"};
  return h;
}

inline TextTable class_table(const DivisorClassTable& table) {
  TextTable t{class_table_header(), {}};
  for (const auto& row : table.rows) {
    t.rows.push_back({row.bt.j, row.bt.mu.str(), row.bt.n(), row.bt.m(), row.bt.r, row.bt.c,
                      to_string(row.coefficient), to_string(row.variant), row.provenance});
  }
  return t;
}

/// A class-table row as read back from CSV or JSON.
struct ClassRecord {
  int j = 0;
  std::string mu;
  int n = 0;
  int m = 0;
  int r = 0;
  int c = 0;
  Rational coefficient;
  std::string variant;
  std::string provenance;

  friend bool operator==(const ClassRecord&, const ClassRecord&) = default;
};

inline ClassRecord to_record(const ClassRow& row) {
  return {row.bt.j, row.bt.mu.str(), row.bt.n(), row.bt.m(), row.bt.r, row.bt.c,
          row.coefficient, to_string(row.variant), row.provenance};
}

inline std::vector<ClassRecord> parse_class_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line)) throw DomainError("parse_class_csv: empty input");
  std::string expected;
  for (const auto& h : class_table_header()) expected += (expected.empty() ? "" : ",") + h;
  if (line != expected) throw DomainError("parse_class_csv: unexpected header '" + line + "'");
  std::vector<ClassRecord> out;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<std::string> f;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) f.push_back(cell);
    if (f.size() != class_table_header().size()) throw DomainError("parse_class_csv: wrong field count in '" + line + "'");
    out.push_back({std::stoi(f[0]), f[1], std::stoi(f[2]), std::stoi(f[3]), std::stoi(f[4]), std::stoi(f[5]),
                   parse_rational(f[6]), f[7], f[8]});
  }
  return out;
}

inline std::vector<ClassRecord> parse_class_json(const std::string& text) {
  const auto doc = nlohmann::json::parse(text);
  if (!doc.is_array()) throw DomainError("parse_class_json: expected an array");
  std::vector<ClassRecord> out;
  for (const auto& o : doc) {
    out.push_back({o.at("j").get<int>(), o.at("mu").get<std::string>(), o.at("n").get<int>(), o.at("m").get<int>(),
                   o.at("r").get<int>(), o.at("c").get<int>(), parse_rational(o.at("coefficient").get<std::string>()),
                   o.at("variant").get<std::string>(), o.at("provenance").get<std::string>()});
  }
  return out;
}

// ---------------------------------------------------------------------------
// Table 1: positive first corrections by (mu, j mod 2(d-1)) for d = 3, 4, 5.

struct Table1Entry {
  int d;
  std::vector<int> mu;
  int residue;
  int sigma;
};

inline const std::vector<Table1Entry>& table1_reference() {
  static const std::vector<Table1Entry> rows{
      {3, {3}, 0, 1},    {4, {4}, 1, 1},    {4, {4}, 5, 1},       {4, {3, 1}, 0, 1},    {4, {2, 2}, 0, 1},
      {5, {5}, 0, 2},    {5, {5}, 2, 1},    {5, {5}, 6, 1},       {5, {4, 1}, 1, 1},    {5, {4, 1}, 7, 1},
      {5, {3, 2}, 1, 1}, {5, {3, 2}, 7, 1}, {5, {3, 1, 1}, 0, 1}, {5, {2, 2, 1}, 0, 1},
  };
  return rows;
}

struct Table1Row {
  int d = 0;
  std::string mu;
  int residue = 0;
  Rational computed;
  Rational expected;
  bool listed = true;  // false: a positive value for a pair missing from the reference
  bool consistent = true;  // same value for every j in the class and every k tried
  bool pass = true;
};

struct Table1Report {
  std::vector<Table1Row> rows;
  bool all_pass() const {
    return std::all_of(rows.begin(), rows.end(), [](const Table1Row& r) { return r.pass; });
  }
};

/// For d = 3, 4, 5 every (mu, residue) class is evaluated for k = 1..max_k.
inline Table1Report table1_report(int max_k = 3) {
  Table1Report report;
  for (int d = 3; d <= 5; ++d) {
    const int period = 2 * (d - 1);
    // value per (mu, residue); flags a class whose value varies.
    std::map<std::pair<Partition, int>, std::pair<Rational, bool>> seen;
    for (int k = 1; k <= max_k; ++k) {
      const auto params = HurwitzParams::from_k(d, k);
      for (const auto& mu : enumerate_partitions(d)) {
        for (int j = 2; j <= params.b - 2; ++j) {
          if ((j + d - mu.n()) % 2 != 0) continue;
          const Rational delta = correction_n(make_boundary_type(params, j, mu)).delta;
          auto [it, inserted] = seen.try_emplace({mu, j % period}, delta, true);
          if (!inserted && it->second.first != delta) it->second.second = false;
        }
      }
    }
    for (const auto& ref : table1_reference()) {
      if (ref.d != d) continue;
      const auto it = seen.find({Partition(ref.mu), ref.residue});
      Table1Row row{d, Partition(ref.mu).str(), ref.residue, 0, ref.sigma, true, false, false};
      if (it != seen.end()) {
        row.computed = it->second.first;
        row.consistent = it->second.second;
        row.pass = row.consistent && row.computed == row.expected;
      }
      report.rows.push_back(row);
    }
    for (const auto& [key, value] : seen) {
      const bool listed = std::any_of(table1_reference().begin(), table1_reference().end(), [&](const Table1Entry& e) {
        return e.d == d && Partition(e.mu) == key.first && e.residue == key.second;
      });
      if (listed) continue;
      if (value.first > 0 || !value.second) {
        report.rows.push_back({d, key.first.str(), key.second, value.first, 0, false, value.second, false});
      }
    }
  }
  return report;
}

inline TextTable table1_table(const Table1Report& report) {
  TextTable t{{"d", "mu", "j_mod", "sigma", "expected", "status"}, {}};
  for (const auto& r : report.rows) {
    std::string status = r.pass ? "PASS" : "FAIL";
    if (!r.listed) status += " (not in reference)";
    else if (!r.consistent) status += " (varies within class)";
    t.rows.push_back({r.d, r.mu, r.residue, to_string(r.computed), to_string(r.expected), status});
  }
  return t;
}

inline TextTable table2_table(const TrigonalReport& report) {
  TextTable t{{"family", "parameter", "j", "mu", "method", "difference", "expected", "status"}, {}};
  for (const auto& r : report.rows) {
    if (!r.checked) {
      t.rows.push_back({r.family, r.parameter, "-", "-", r.method, "-", "-", "SKIP"});
      continue;
    }
    t.rows.push_back({r.family, r.parameter, r.j, r.mu, r.method, to_string(r.computed), to_string(r.expected),
                      r.pass ? "PASS" : "FAIL"});
  }
  return t;
}

struct PatelRow {
  std::string divisor;
  std::string mu;
  Rational display;
  Rational sigma;
  bool pass = true;
};

inline std::vector<PatelRow> patel_rows(const HurwitzParams& params) {
  const auto display = patel_partial(params);
  const auto sigma = patel_from_sigma(params);
  const int d = params.d;
  auto with_ones = [d](std::vector<int> head) {
    int used = 0;
    for (int p : head) used += p;
    head.insert(head.end(), d - used, 1);
    return Partition(std::move(head)).str();
  };
  std::vector<PatelRow> rows;
  rows.push_back({"Delta", with_ones({}), display.delta, sigma.delta, display.delta == sigma.delta});
  if (sigma.e2) rows.push_back({"E2", with_ones({2, 2}), display.e2, *sigma.e2, display.e2 == *sigma.e2});
  rows.push_back({"E3", with_ones({3}), display.e3, sigma.e3, display.e3 == sigma.e3});
  return rows;
}

inline TextTable patel_table(const HurwitzParams& params) {
  TextTable t{{"divisor", "mu", "display", "sigma_st", "status"}, {}};
  for (const auto& r : patel_rows(params)) {
    t.rows.push_back({r.divisor, r.mu, to_string(r.display), to_string(r.sigma), r.pass ? "PASS" : "FAIL"});
  }
  return t;
}

// ---------------------------------------------------------------------------
// Verification suites.

struct CheckTally {
  std::string name;
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::string first_failure;
};

struct VerifyReport {
  std::vector<CheckTally> checks;

  bool ok() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckTally& c) { return c.failed == 0; });
  }

  CheckTally& tally(const std::string& name) {
    for (auto& c : checks) {
      if (c.name == name) return c;
    }
    checks.push_back({name, 0, 0, {}});
    return checks.back();
  }

  /// Runs `check`; a false result or a library exception counts as a failure.
  void record(const std::string& name, const std::string& where, const std::function<bool()>& check) {
    auto& t = tally(name);
    std::string why;
    bool ok = false;
    try {
      ok = check();
    } catch (const std::exception& e) {
      why = std::string(": ") + e.what();
    }
    if (ok) {
      ++t.passed;
    } else {
      if (t.failed == 0) t.first_failure = where + why;
      ++t.failed;
    }
  }
};

struct VerifyOptions {
  int radius = 3;
  int max_d = 5;
  int max_g = 16;
  int max_m = 6;  // lattice scans skip longer chains
  bool tie_exhaustive = false;
};

namespace detail {

inline std::string where(const BoundaryType& bt) {
  return "d=" + std::to_string(bt.d()) + " g=" + std::to_string(bt.params.g) + " j=" + std::to_string(bt.j) +
         " mu=" + bt.mu.str();
}

// Every canonical type with 3 <= d <= max_d and g <= max_g.
inline void for_each_type(const VerifyOptions& o, const std::function<void(const BoundaryType&)>& fn) {
  for (int d = 3; d <= o.max_d; ++d) {
    for (int k = 1; (d - 1) * k <= o.max_g; ++k) {
      for (const auto& bt : enumerate_boundary_types(HurwitzParams::from_k(d, k))) fn(bt);
    }
  }
}

}  // namespace detail

inline void verify_lattice(const VerifyOptions& o, VerifyReport& report) {
  detail::for_each_type(o, [&](const BoundaryType& bt) {
    if (bt.m() > o.max_m) return;
    const auto at = detail::where(bt);
    report.record("integer max of f(N) at the rounded point", at,
                  [&] { return scan_integer_max(bt, o.radius, o.tie_exhaustive).ok; });
    report.record("A + (d-1)N effective with last coefficient 0", at, [&] {
      correction_n(bt, o.tie_exhaustive);
      return true;
    });
    if (o.tie_exhaustive) {
      report.record("tie branches agree on sum_sq (N)", at, [&] { return round_chain(critical_n(bt), true).ties_agree; });
    }
    if (!bt.mu.has_unit_part()) return;
    report.record("integer max of f(Z,N) at the rounded point", at,
                  [&] { return scan_joint_max(bt, o.radius, o.tie_exhaustive).ok; });
    report.record("A + G effective with last coefficient 0", at, [&] {
      correction_ln(bt, o.tie_exhaustive);
      return true;
    });
  });
}

inline void verify_identities(const VerifyOptions& o, VerifyReport& report) {
  detail::for_each_type(o, [&](const BoundaryType& bt) {
    const auto at = detail::where(bt);
    const int m = bt.m();
    report.record("sigma_corr1 = sigma_st - delta(N)", at, [&] {
      const auto r = correction_n(bt, o.tie_exhaustive);
      return sigma_corr1(bt, o.tie_exhaustive) == sigma_st(bt) - r.delta && r.delta >= 0 &&
             rational(m, 4) - r.sum_sq >= 0;
    });
    if (bt.mu.has_unit_part()) {
      report.record("sigma_corr2 = sigma_st - delta(Z,N)", at, [&] {
        const auto r = correction_ln(bt, o.tie_exhaustive);
        return *sigma_corr2(bt, o.tie_exhaustive) == sigma_st(bt) - r.delta && r.delta >= 0;
      });
    }
    report.record("sigma_st and sigma_corr1 symmetric under j <-> b-j", at, [&] {
      if (bt.j == bt.params.b - bt.j) return true;
      const auto mirror = make_boundary_type(bt.params, bt.params.b - bt.j, bt.mu);
      return sigma_st(mirror) == sigma_st(bt) && sigma_corr1(mirror) == sigma_corr1(bt);
    });
    report.record("f_max(N) closed form = f(N_crit)", at, [&] { return fmax_n(bt) == fmax_n_closed_form(bt); });
    report.record("standard A integral with degrees d-n-r, ..., r", at, [&] {
      a_standard(bt);
      return true;
    });
    report.record("theta.A = mc/2", at, [&] {
      const ChainModel chain(m);
      return theta_dot(chain, a_standard(bt).divisor()) == rational(m * bt.c, 2);
    });
  });
  for (int d = 3; d <= std::max(o.max_d, 3); ++d) {
    for (const auto& mu : enumerate_partitions(d)) {
      report.record("W_E^2 closed form = matrix pairing", "d=" + std::to_string(d) + " mu=" + mu.str(), [&] {
        const auto p = gcd_profile(mu);
        auto we = FibralDivisor::zero(mu.m());
        for (int i = 0; i <= mu.m(); ++i) we[i] = p.delta[i];
        return intersect(ChainModel(mu.m()), we, we) == we_square_closed_form(p.delta);
      });
    }
  }
}

inline void verify_tables(const VerifyOptions& o, VerifyReport& report) {
  for (const auto& row : table1_report().rows) {
    report.record("Table 1 entries", "d=" + std::to_string(row.d) + " mu=" + row.mu + " j=" + std::to_string(row.residue),
                  [&] { return row.pass; });
  }
  for (int g = 4; g <= std::max(o.max_g, 4); g += 2) {
    for (const auto& row : dp_trigonal_check(g).rows) {
      if (!row.checked) continue;
      report.record("Table 2 rows (" + row.family + ")", "g=" + std::to_string(g) + " " + row.parameter,
                    [&] { return row.pass; });
    }
  }
  for (int d = 3; d <= std::max(o.max_d, 3); ++d) {
    for (int k = 1; k <= 10; ++k) {
      for (const auto& row : patel_rows(HurwitzParams::from_k(d, k))) {
        report.record("j=2 display (" + row.divisor + ")", "d=" + std::to_string(d) + " k=" + std::to_string(k),
                      [&] { return row.pass; });
      }
    }
  }
}

inline VerifyReport run_verify(const std::string& suite, const VerifyOptions& o) {
  if (suite != "lattice" && suite != "identities" && suite != "tables" && suite != "all") {
    throw DomainError("unknown suite '" + suite + "' (expected lattice, identities, tables or all)");
  }
  if (o.radius < 0 || o.max_d < 3 || o.max_g < 1) throw DomainError("verify: need radius >= 0, max-d >= 3, max-g >= 1");
  VerifyReport report;
  if (suite == "lattice" || suite == "all") verify_lattice(o, report);
  if (suite == "identities" || suite == "all") verify_identities(o, report);
  if (suite == "tables" || suite == "all") verify_tables(o, report);
  return report;
}

inline std::string render(const VerifyReport& report) {
  std::ostringstream out;
  for (const auto& c : report.checks) {
    out << (c.failed == 0 ? "PASS" : "FAIL") << "  " << c.name << "  (" << c.passed << " passed, " << c.failed
        << " failed)";
    if (c.failed) out << "  first failure: " << c.first_failure;
    out << '\n';
  }
  out << (report.ok() ? "all checks passed" : "verification FAILED") << '\n';
  return out.str();
}

}  // namespace maroni
