#include "fox13/verifier.hpp"

#include <algorithm>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>

namespace fox13 {

DupletTable compute_duplets(const Palette& s, int p) {
  std::set<int> colors(s.begin(), s.end());
  DupletTable out;
  out.palette.assign(colors.begin(), colors.end());
  for (int b : colors) {
    std::vector<std::pair<int, int>> pairs;
    for (int a : colors)
      for (int c : colors)
        if (a < c && mod_p(2LL * b - a - c, p) == 0) pairs.emplace_back(a, c);
    out.rows.emplace_back(b, std::move(pairs));
  }
  return out;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Confirmed: return "confirmed";
    case Verdict::Violated: return "violated";
    case Verdict::UnverifiableFigureOnly: return "unverifiable-figure-only";
  }
  return "?";
}

std::string to_string(ArithmeticClaim::Status s) {
  switch (s) {
    case ArithmeticClaim::Status::Confirmed: return "confirmed";
    case ArithmeticClaim::Status::Flagged: return "flagged";
    case ArithmeticClaim::Status::Presumed: return "presumed";
    case ArithmeticClaim::Status::Mismatch: return "mismatch";
  }
  return "?";
}

namespace {

std::vector<int> forbidden_of(const EliminationTable& t) { return forbidden_colors(t.c, t.eliminated); }

bool member(const std::vector<int>& s, int v) { return std::find(s.begin(), s.end(), v) != s.end(); }

}  // namespace

bool x_condition(const EliminationTable& t, int a, int b, int p) {
  return is_impossible(t.kind, a, b, t.c, forbidden_of(t), p);
}

TableReport verify_x_cells(const EliminationTable& t) {
  const int p = 13;
  const auto forbidden = forbidden_of(t);
  TableReport report;
  report.table = t.id;
  for (const auto& cell : t.cells) {
    CellReport r;
    r.table = t.id;
    r.a = cell.a;
    r.b = cell.b;
    r.entry = cell.entry;
    const bool x = x_condition(t, cell.a, cell.b, p);
    if (cell.entry.type == TableEntry::Type::Impossible) {
      r.verdict = x ? Verdict::Confirmed : Verdict::Violated;
      r.detail = x ? "forced neighbour color is gone" : "X cell whose neighbours are all available";
    } else if (x) {
      r.verdict = Verdict::Violated;
      r.detail = "configuration forces a removed color but the cell names a transformation";
    } else {
      const bool endgame = cell.entry.type == TableEntry::Type::Endgame;
      const TransformationSpec* spec = find_spec(t.kind, cell.entry.index, endgame);
      if (!spec) {
        r.verdict = Verdict::Violated;
        r.detail = "no catalog entry for " + to_string(cell.entry);
      } else if (spec->coverage == FormCoverage::FigureOnly) {
        r.verdict = Verdict::UnverifiableFigureOnly;
        r.detail = spec->name + " is specified by a figure only";
      } else {
        int a = cell.a, b = cell.b;
        if (cell.entry.swapped) {
          if (t.kind == InstanceKind::Gamma)
            std::swap(a, b);
          else
            a = mod_p(2LL * t.c - a, p);
        }
        r.verdict = Verdict::Confirmed;
        r.detail = spec->name + " produces";
        for (const auto& f : spec->produced) {
          const int v = f.eval(a, b, t.c, p);
          r.detail += " " + f.to_string() + "=" + std::to_string(v);
          if (member(forbidden, v)) r.verdict = Verdict::Violated;
        }
      }
    }
    if (r.verdict == Verdict::Violated) ++report.violations;
    if (r.verdict == Verdict::UnverifiableFigureOnly) ++report.figure_only;
    report.cells.push_back(std::move(r));
  }
  return report;
}

namespace {

constexpr int kP = 13;

std::string set_string(const std::vector<int>& v) {
  std::string s = "{";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + "}";
}

// Solutions a of k*a + m = r over Z_13.
std::vector<int> solve_linear(int k, int m, int r) {
  std::vector<int> out;
  for (int a = 0; a < kP; ++a)
    if (mod_p(static_cast<long long>(k) * a + m - r, kP) == 0) out.push_back(a);
  return out;
}

struct ClaimList {
  std::vector<ArithmeticClaim> claims;

  void add(std::string where, std::string statement, std::string expected, std::string computed,
           ArithmeticClaim::Status on_mismatch = ArithmeticClaim::Status::Mismatch, std::string note = {}) {
    ArithmeticClaim c{std::move(where), std::move(statement), expected, computed,
                      expected == computed ? ArithmeticClaim::Status::Confirmed : on_mismatch, std::move(note)};
    claims.push_back(std::move(c));
  }

  // The text solves k*a + m = r; `expected` lists the solutions it states.
  void solve(const std::string& where, const std::string& statement, int k, int m, int r,
             std::vector<int> expected) {
    std::vector<int> norm;
    for (int v : expected) norm.push_back(mod_p(v, kP));
    std::sort(norm.begin(), norm.end());
    add(where, statement, set_string(norm), set_string(solve_linear(k, m, r)));
  }

  // The text evaluates an expression to `expected`.
  void value(const std::string& where, const std::string& statement, int expected, long long computed) {
    add(where, statement, std::to_string(mod_p(expected, kP)), std::to_string(mod_p(computed, kP)));
  }

  // Two expressions the text equates, checked for every value of the free variable.
  void identity(const std::string& where, const std::string& statement, const std::function<long long(int)>& lhs,
                const std::function<long long(int)>& rhs) {
    int bad = -1;
    for (int a = 0; a < kP && bad < 0; ++a)
      if (mod_p(lhs(a) - rhs(a), kP) != 0) bad = a;
    add(where, statement, "holds for all a", bad < 0 ? "holds for all a" : "fails at a=" + std::to_string(bad));
  }
};

}  // namespace

std::vector<ArithmeticClaim> verify_text_arithmetic() {
  using S = ArithmeticClaim::Status;
  ClaimList l;

  // Colors 12 and 11, monochromatic crossings.
  l.solve("alpha, c=12", "2a + 1 = 12 only for a = 12", 2, 1, 12, {12});
  l.solve("alpha, c=11", "2a - 11 = 11 gives a = 11", 2, -11, 11, {11});
  l.solve("alpha, c=11", "2a - 11 = 12 gives 2a = 23 = 10, a = 5", 2, -11, 12, {5});
  l.value("alpha, c=11", "2a = 23 reduces to 10", 10, 23);
  l.add("alpha2, c=11, a=5", "3c - 2a = 36 - 10 = 0", "0", std::to_string(mod_p(3 * 11 - 2 * 5, kP)), S::Flagged,
        "3*11 - 2*5 = 23 = 10 (mod 13); the text's 36 - 10 = 26 = 0 uses 3c = 36, i.e. c = 12. "
        "The cell is unaffected since 10 is still available.");

  // Over-arcs of polychromatic crossings.
  l.solve("beta, c=12", "2a + 1 = 12 only for a = 12", 2, 1, 12, {12});
  l.solve("beta, c=12", "3a + 2 = 12 only for a = 12", 3, 2, 12, {12});
  l.solve("beta, c=11", "2a - 11 = 11 gives a = 11", 2, -11, 11, {11});
  l.solve("beta, c=11", "3a - 22 = 11 gives a = 11", 3, -22, 11, {11});
  l.solve("beta, c=11", "2a - 11 = 12 gives a = 5", 2, -11, 12, {5});
  l.solve("beta, c=11", "3a - 22 = 12 gives a = 7", 3, -22, 12, {7});
  l.value("beta2, c=11, a=5", "2c - a = 4", 4, 2 * 11 - 5);
  l.value("beta2, c=11, a=7", "2c - a = 2", 2, 2 * 11 - 7);

  // Under-arcs between distinct over-colors, c = 12.
  l.identity("gamma, c=12", "2a - 2b + c = 2a - 2b - 1", [](int) { return 12; }, [](int) { return -1; });
  l.solve("gamma, c=12", "2(a - b) = 0 forces a = b (d = a - b)", 2, 0, 0, {0});
  l.identity("gamma2, c=12, b=2a+1", "2b - a = 3a + 2", [](int a) { return 2 * (2 * a + 1) - a; },
             [](int a) { return 3 * a + 2; });
  l.solve("gamma2, c=12", "3a + 2 = 12 gives a = -1", 3, 2, 12, {-1});
  l.identity("gamma2, c=12, b=2a+1", "2b - 2a - 1 = 2a + 1", [](int a) { return 2 * (2 * a + 1) - 2 * a - 1; },
             [](int a) { return 2 * a + 1; });
  l.solve("gamma2, c=12", "2a + 1 = 12 gives a = 12", 2, 1, 12, {12});

  // c = 11, branch 2a - b = -1.
  l.identity("gamma2, c=11, b=2a+1", "2b - a = 3a + 2", [](int a) { return 2 * (2 * a + 1) - a; },
             [](int a) { return 3 * a + 2; });
  l.solve("gamma2, c=11", "3a + 2 = -1 gives a = -1", 3, 2, -1, {-1});
  l.solve("gamma2, c=11", "3a + 2 = -2 gives a = 3", 3, 2, -2, {3});
  l.value("gamma3, c=11, a=3", "b = 2a + 1 = 7", 7, 2 * 3 + 1);
  l.identity("gamma2, c=11, b=2a+1", "2b - 2a - 2 = 2a", [](int a) { return 2 * (2 * a + 1) - 2 * a - 2; },
             [](int a) { return 2 * a; });
  l.solve("gamma2, c=11", "2a = -2 gives a = -1", 2, 0, -2, {-1});
  l.solve("gamma2, c=11", "2a = 12 gives a = 6", 2, 0, 12, {6});
  l.value("gamma3, c=11, a=6", "b = 2a + 1 = 0", 0, 2 * 6 + 1);

  // c = 11, branch 2a - b = -2.
  l.identity("gamma2, c=11, b=2a+2", "2b - a = 3a + 4", [](int a) { return 2 * (2 * a + 2) - a; },
             [](int a) { return 3 * a + 4; });
  l.solve("gamma2, c=11", "3a + 4 = -2 gives a = -2", 3, 4, -2, {-2});
  l.solve("gamma2, c=11", "3a + 4 = -1 gives a = 7", 3, 4, -1, {7});
  l.value("gamma4, c=11, a=7", "b = 2a + 2 = 3", 3, 2 * 7 + 2);
  l.identity("gamma2, c=11, b=2a+2", "2b - 2a - 2 = 2a + 2", [](int a) { return 2 * (2 * a + 2) - 2 * a - 2; },
             [](int a) { return 2 * a + 2; });

  // c = 11, branch 2a - 2b + c.
  l.identity("gamma1, c=11", "2a - 2b + c = 2a - 2b - 2", [](int) { return 11; }, [](int) { return -2; });
  l.solve("gamma1, c=11", "2a - 2b - 2 = -2 forces a = b (d = a - b)", 2, -2, -2, {0});
  l.solve("gamma1, c=11", "2a - 2b - 2 = -1 gives a = b + 7 (d = a - b)", 2, -2, -1, {7});
  l.identity("gamma2, c=11, a=b+7", "2b - a = b - 7", [](int b) { return 2 * b - (b + 7); },
             [](int b) { return b - 7; });
  l.solve("gamma2, c=11", "b - 7 = -2 gives b = 5", 1, -7, -2, {5});
  l.value("gamma2, c=11, b=5", "2b + 2 = 12", 12, 2 * 5 + 2);
  l.solve("gamma2, c=11", "b - 7 = -1 gives b = 6", 1, -7, -1, {6});
  l.add("gamma4, c=11, b=6", "a = b + 7 = 13, case (a, b) = (13, 6)", "13", std::to_string(mod_p(6 + 7, kP)),
        S::Presumed, "13 is read as 0 (mod 13), so the case is (0, 6)");
  l.identity("gamma2, c=11, a=b+7", "2b - 2a - 2 = -14 - 2 = -16", [](int b) { return 2 * b - 2 * (b + 7) - 2; },
             [](int) { return -16; });

  // Under-arcs between equal over-colors.
  l.identity("delta1, c=12", "3a - 2c = 3a + 2", [](int a) { return 3 * a - 24; }, [](int a) { return 3 * a + 2; });
  l.solve("delta1, c=12", "3a + 2 = -1 gives a = -1", 3, 2, -1, {-1});
  l.identity("delta1, c=12", "4a - 3c = 4a + 3", [](int a) { return 4 * a - 36; }, [](int a) { return 4 * a + 3; });
  l.solve("delta1, c=12", "4a + 3 = -1 gives a = -1", 4, 3, -1, {-1});
  l.identity("delta1, c=11", "3a - 2c = 3a + 4", [](int a) { return 3 * a - 22; }, [](int a) { return 3 * a + 4; });
  l.solve("delta1, c=11", "3a + 4 = -2 gives a = -2", 3, 4, -2, {-2});
  l.solve("delta3, c=11", "3a + 4 = -1 gives a = 7", 3, 4, -1, {7});
  l.identity("delta1, c=11", "4a - 3c = 4a + 6", [](int a) { return 4 * a - 33; }, [](int a) { return 4 * a + 6; });
  l.solve("delta1, c=11", "4a + 6 = -2 gives a = -2", 4, 6, -2, {-2});
  l.solve("delta2, c=11", "4a + 6 = -1 gives a = 8", 4, 6, -1, {8});

  // Colors 6, 3, 4, 8.
  l.value("beta, c=6, a=0", "the other under-arc is 2*6 - 0 = 12", 12, 2 * 6 - 0);
  l.value("beta3, c=8", "change of variables a = 9 gives 2c - a = 7", 7, 2 * 8 - 9);

  // Colors 9 and 2.
  l.value("D2, over-arc 2, under 7", "the other under-arc is 10", 10, 2 * 2 - 7);
  l.value("D2, over-arc 10, under 7", "the other under-arc is 0", 0, 2 * 10 - 7);
  l.value("D3, over-arc 7, under 1", "the other under-arc is 0", 0, 2 * 7 - 1);
  l.value("D4, 1 over 5", "produces 10", 10, 2 * 1 - 5);
  l.value("D4, 1 over 10", "produces 5", 5, 2 * 1 - 10);
  l.value("D4, 1 over 0", "produces 2", 2, 2 * 1 - 0);
  l.value("D4, 1 over 7", "produces 8", 8, 2 * 1 - 7);
  l.value("delta8, a=1, c=8", "2c - a = 2", 2, 2 * 8 - 1);
  l.value("delta8, a=1, c=8", "12a - 11c = 2", 2, 12 * 1 - 11 * 8);
  l.value("delta8, a=1, c=8", "3c - 2a = 9", 9, 3 * 8 - 2 * 1);
  {
    const auto* d8 = find_spec("delta8");
    std::vector<int> got;
    if (d8)
      for (const auto& f : d8->produced) got.push_back(f.eval(1, -1, 8));
    l.add("delta8, a=1, c=8", "the catalog forms give 2, 2, 9", "{2,2,9}", set_string(got));
  }
  return l.claims;
}

DupletReport verify_duplets(const DupletTable& stored, int p) {
  DupletReport r;
  r.table = stored.id;
  DupletTable computed = compute_duplets(stored.palette, p);
  computed.id = stored.id;
  auto show = [](const std::vector<std::pair<int, int>>& v) {
    std::string s;
    for (const auto& [lo, hi] : v) s += "{" + std::to_string(lo) + "," + std::to_string(hi) + "}";
    return s.empty() ? std::string("none") : s;
  };
  if (computed.rows.size() != stored.rows.size())
    r.differences.push_back("row count " + std::to_string(stored.rows.size()) + " vs computed " +
                            std::to_string(computed.rows.size()));
  for (std::size_t i = 0; i < std::min(computed.rows.size(), stored.rows.size()); ++i) {
    const auto& [b, pairs] = stored.rows[i];
    if (computed.rows[i].first != b || computed.rows[i].second != pairs)
      r.differences.push_back("b=" + std::to_string(b) + ": stored " + show(pairs) + ", computed " +
                              show(computed.rows[i].second));
  }
  r.match = r.differences.empty();
  return r;
}

int VerificationReport::cell_violations() const {
  int n = 0;
  for (const auto& t : tables) n += t.violations;
  return n;
}

int VerificationReport::arithmetic_mismatches() const {
  return static_cast<int>(std::count_if(arithmetic.begin(), arithmetic.end(), [](const ArithmeticClaim& c) {
    return c.status == ArithmeticClaim::Status::Mismatch;
  }));
}

bool VerificationReport::ok() const {
  return cell_violations() == 0 && arithmetic_mismatches() == 0 && text_round_trip && json_round_trip &&
         std::all_of(duplets.begin(), duplets.end(), [](const DupletReport& d) { return d.match; });
}

VerificationReport verify_tables(const TableSet& tables) {
  VerificationReport r;
  for (const auto& t : tables.tables) r.tables.push_back(verify_x_cells(t));
  for (const auto& d : tables.duplets) r.duplets.push_back(verify_duplets(d));
  r.arithmetic = verify_text_arithmetic();
  r.text_round_trip = parse_tables(export_text(tables)) == tables;
  r.json_round_trip = tables_from_json(export_json(tables)) == tables;
  r.checksum = checksum(tables);
  return r;
}

nlohmann::json to_json(const VerificationReport& r) {
  nlohmann::json tables = nlohmann::json::array();
  for (const auto& t : r.tables) {
    nlohmann::json cells = nlohmann::json::array();
    for (const auto& c : t.cells) {
      nlohmann::json jc = {{"a", c.a}, {"entry", to_string(c.entry)}, {"verdict", to_string(c.verdict)},
                           {"detail", c.detail}};
      if (c.b >= 0) jc["b"] = c.b;
      cells.push_back(std::move(jc));
    }
    tables.push_back({{"table", t.table},
                      {"violations", t.violations},
                      {"figure_only", t.figure_only},
                      {"cells", std::move(cells)}});
  }
  nlohmann::json duplets = nlohmann::json::array();
  for (const auto& d : r.duplets) duplets.push_back({{"table", d.table}, {"match", d.match}, {"differences", d.differences}});
  nlohmann::json arithmetic = nlohmann::json::array();
  for (const auto& c : r.arithmetic)
    arithmetic.push_back({{"where", c.where},
                          {"statement", c.statement},
                          {"expected", c.expected},
                          {"computed", c.computed},
                          {"status", to_string(c.status)},
                          {"note", c.note}});
  char sum[17];
  std::snprintf(sum, sizeof sum, "%016llx", static_cast<unsigned long long>(r.checksum));
  return {{"ok", r.ok()},
          {"cell_violations", r.cell_violations()},
          {"arithmetic_mismatches", r.arithmetic_mismatches()},
          {"text_round_trip", r.text_round_trip},
          {"json_round_trip", r.json_round_trip},
          {"checksum", sum},
          {"tables", std::move(tables)},
          {"duplets", std::move(duplets)},
          {"arithmetic", std::move(arithmetic)}};
}

std::string to_text(const VerificationReport& r) {
  std::ostringstream os;
  for (const auto& t : r.tables) {
    int confirmed = 0;
    for (const auto& c : t.cells) confirmed += c.verdict == Verdict::Confirmed;
    os << "table " << t.table << ": " << t.cells.size() << " cells, " << confirmed << " confirmed, "
       << t.figure_only << " figure-only, " << t.violations << " violated\n";
    for (const auto& c : t.cells)
      if (c.verdict == Verdict::Violated)
        os << "  VIOLATED a=" << c.a << (c.b >= 0 ? " b=" + std::to_string(c.b) : "") << " "
           << to_string(c.entry) << ": " << c.detail << "\n";
  }
  for (const auto& d : r.duplets) {
    os << "duplets " << d.table << ": " << (d.match ? "exact match" : "MISMATCH") << "\n";
    for (const auto& s : d.differences) os << "  " << s << "\n";
  }
  int counts[4] = {0, 0, 0, 0};
  for (const auto& c : r.arithmetic) ++counts[static_cast<int>(c.status)];
  os << "arithmetic: " << r.arithmetic.size() << " claims, " << counts[0] << " confirmed, " << counts[1]
     << " flagged, " << counts[2] << " presumed, " << counts[3] << " mismatched\n";
  for (const auto& c : r.arithmetic)
    if (c.status != ArithmeticClaim::Status::Confirmed)
      os << "  " << to_string(c.status) << " [" << c.where << "] " << c.statement << ": text " << c.expected
         << ", computed " << c.computed << (c.note.empty() ? "" : " (" + c.note + ")") << "\n";
  char sum[17];
  std::snprintf(sum, sizeof sum, "%016llx", static_cast<unsigned long long>(r.checksum));
  os << "round trip: text " << (r.text_round_trip ? "ok" : "FAILED") << ", json "
     << (r.json_round_trip ? "ok" : "FAILED") << "; checksum " << sum << "\n";
  os << (r.ok() ? "OK" : "FAILED") << "\n";
  return os.str();
}

}  // namespace fox13
