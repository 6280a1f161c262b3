// One PASS/FAIL line per acceptance criterion; exit status 0 iff all pass.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "fox13/elimination.hpp"
#include "fox13/palettes.hpp"
#include "fox13/parallel.hpp"
#include "fox13/verifier.hpp"
#include "oracles.hpp"

namespace {

using namespace fox13;
using Clock = std::chrono::steady_clock;

constexpr const char* kTrefoil = "X(1,5,2,4) X(3,1,4,6) X(5,3,6,2)";
constexpr const char* kFigureEight = "X(4,2,5,1) X(8,6,1,5) X(6,3,7,4) X(2,7,3,8)";
constexpr const char* k73 = "X(14,9,1,10) X(8,1,9,2) X(2,7,3,8) X(10,3,11,4) X(4,11,5,12) X(12,5,13,6) X(6,13,7,14)";

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Outcome {
  bool pass = false;
  std::string detail;
};

// Non-unit Smith entries; unchanged by moves, which only add unit entries.
std::vector<BigInt> torsion(const Diagram& d) {
  std::vector<BigInt> out;
  for (const auto& v : smith_normal_form(build_matrix(d).matrix).diag)
    if (v != 1) out.push_back(v);
  return out;
}

std::string palette_text(const Palette& s) {
  std::string t = "{";
  for (std::size_t i = 0; i < s.size(); ++i) t += (i ? "," : "") + std::to_string(s[i]);
  return t + "}";
}

Outcome duplets() {
  auto t0 = Clock::now();
  const TableSet& tables = embedded_tables();
  std::ostringstream os;
  bool ok = true;
  for (auto [id, pal] : {std::pair{"4.5", Palette{0, 1, 2, 5, 7, 10}}, std::pair{"4.10", Palette{0, 1, 5, 7, 10}}}) {
    const DupletTable* stored = tables.find_duplets(id);
    DupletTable computed = compute_duplets(pal);
    const bool match = stored && stored->palette == pal && computed.rows == stored->rows;
    ok = ok && match;
    os << "table " << id << (match ? " exact" : " differs") << "; ";
  }
  const double t = seconds_since(t0);
  os << t << " s";
  return {ok && t < 1.0, os.str()};
}

Outcome x_cells() {
  auto t0 = Clock::now();
  int cells = 0, violations = 0, tables = 0;
  for (const auto& t : embedded_tables().tables) {
    TableReport r = verify_x_cells(t);
    cells += static_cast<int>(r.cells.size());
    violations += r.violations;
    ++tables;
  }
  const double t = seconds_since(t0);
  std::ostringstream os;
  os << tables << " tables, " << cells << " cells, " << violations << " violations; " << t << " s";
  return {violations == 0 && tables == 24 && t < 1.0, os.str()};
}

Outcome arithmetic() {
  auto claims = verify_text_arithmetic();
  int confirmed = 0, mismatches = 0;
  std::vector<std::string> flagged;
  bool solved_a5 = false, solved_a7 = false, delta8 = false;
  for (const auto& c : claims) {
    switch (c.status) {
      case ArithmeticClaim::Status::Confirmed: ++confirmed; break;
      case ArithmeticClaim::Status::Flagged: flagged.push_back(c.where); break;
      case ArithmeticClaim::Status::Mismatch: ++mismatches; break;
      case ArithmeticClaim::Status::Presumed: break;
    }
    if (c.status != ArithmeticClaim::Status::Confirmed) continue;
    if (c.statement.find("2a - 11 = 12") != std::string::npos && c.computed == "{5}") solved_a5 = true;
    if (c.statement.find("3a + 4 = -1") != std::string::npos && c.computed == "{7}") solved_a7 = true;
    if (c.where.find("delta8") != std::string::npos && c.computed == "{2,2,9}") delta8 = true;
  }
  const bool one_flag = flagged.size() == 1 && flagged[0].find("alpha2") != std::string::npos;
  std::ostringstream os;
  os << claims.size() << " claims, " << confirmed << " confirmed, " << mismatches << " mismatched, flagged: "
     << (flagged.empty() ? "none" : flagged[0]) << (flagged.size() > 1 ? " and more" : "")
     << "; a=5 " << solved_a5 << ", a=7 " << solved_a7 << ", delta8 " << delta8;
  return {mismatches == 0 && one_flag && solved_a5 && solved_a7 && delta8, os.str()};
}

Outcome determinants() {
  std::ostringstream os;
  bool ok = true;
  double worst = 0;
  for (auto [name, pd, expect] : {std::tuple{"trefoil", kTrefoil, 3}, std::tuple{"figure-eight", kFigureEight, 5},
                                  std::tuple{"7_3", k73, 13}}) {
    auto t0 = Clock::now();
    Diagram d = parse_pd(pd);
    ColoringMatrix m = build_matrix(d);
    SmithForm snf = smith_normal_form(m.matrix);
    BigInt det = determinant(snf, m.matrix.cols());
    bool agree = det == expect && verify_smith(m.matrix, snf);
    // Kernel dimension over Z_p is 1 plus the Smith entries divisible by p.
    oracle::FoxSystem sys = oracle::fox_system(pd);
    for (int p : {2, 3, 5, 7, 11, 13}) {
      int divisible = 0;
      for (const auto& v : snf.diag)
        if (v != 0 && v % p == 0) ++divisible;
      const int oracle_dim = oracle::nullity(sys, p);
      agree = agree && oracle_dim == 1 + divisible && oracle_dim == solve_colorings(d, p).dimension() &&
              (oracle_dim > 1) == (expect % p == 0);
    }
    const double t = seconds_since(t0);
    worst = std::max(worst, t);
    ok = ok && agree && t < 1.0;
    os << name << " " << det << (agree ? "" : " (oracle disagrees)") << "; ";
  }
  os << "slowest " << worst << " s";
  return {ok, os.str()};
}

Outcome count_73() {
  auto t0 = Clock::now();
  oracle::FoxSystem sys = oracle::fox_system(k73);
  const std::uint64_t brute = oracle::brute_force_count(sys, 13);
  const int dim = solve_colorings(parse_pd(k73), 13).dimension();
  const double t = seconds_since(t0);
  std::ostringstream os;
  os << sys.arcs << " arcs, " << brute << " colorings by exhaustion, kernel dimension " << dim << "; " << t << " s";
  return {sys.arcs == 7 && brute == 169 && dim == 2 && t < 60.0, os.str()};
}

Outcome random_moves() {
  auto t0 = Clock::now();
  std::mt19937 rng(20261018);
  Diagram d0 = parse_pd(k73);
  ColoredDiagram cur{d0, *first_nontrivial(solve_colorings(d0, 13))};
  const auto snf0 = torsion(d0);
  const int dim0 = solve_colorings(d0, 13).dimension();
  const int cap = d0.num_crossings() + 8;
  int applied = 0, failures = 0;
  std::array<int, 5> by_kind{};
  while (applied < 10000) {
    std::vector<MoveKind> kinds{MoveKind::R2Pull, MoveKind::R1Remove, MoveKind::R3};
    if (cur.diagram.num_crossings() < cap) {
      kinds.push_back(MoveKind::R1Add);
      kinds.push_back(MoveKind::R2Push);
      kinds.push_back(MoveKind::R2Push);
    }
    const MoveKind kind = kinds[std::uniform_int_distribution<std::size_t>(0, kinds.size() - 1)(rng)];
    auto sites = legal_sites(cur.diagram, kind);
    if (sites.empty()) continue;
    const MoveSite& site = sites[std::uniform_int_distribution<std::size_t>(0, sites.size() - 1)(rng)];
    MoveResult r = apply_move(cur, site);
    const bool ok = is_valid_coloring(r.after.diagram, r.after.coloring) &&
                    transport_coloring(cur.diagram, cur.coloring, r.step) == r.after.coloring &&
                    solve_colorings(r.after.diagram, 13).dimension() == dim0 && torsion(r.after.diagram) == snf0;
    failures += !ok;
    ++by_kind[static_cast<int>(kind)];
    ++applied;
    cur = std::move(r.after);
  }
  const double t = seconds_since(t0);
  std::ostringstream os;
  os << applied << " moves (r1add " << by_kind[0] << ", r1remove " << by_kind[1] << ", r2push " << by_kind[2]
     << ", r2pull " << by_kind[3] << ", r3 " << by_kind[4] << "), " << failures << " failures; " << t << " s";
  return {failures == 0 && t < 60.0, os.str()};
}

// Filled by criterion 7, read by criterion 9.
std::vector<Palette> final_palettes;

Outcome end_to_end(const Corpus& corpus) {
  std::vector<std::pair<std::string, Diagram>> runs;
  if (!corpus.find("7_3")) runs.emplace_back("7_3", parse_pd(k73));
  for (const auto& m : corpus.members()) runs.emplace_back(m.name, m.diagram);
  std::ostringstream os;
  bool ok = true;
  for (const auto& [name, d] : runs) {
    auto t0 = Clock::now();
    bool run_ok = false;
    try {
      SearchOptions opts;
      opts.time_limit = 600.0;
      SequenceResult r = run_sequence({d, *first_nontrivial(solve_colorings(d, 13))}, opts);
      bool replays = true;
      for (const auto& t : r.traces) replays = replays && replay(t).coloring == t.final.coloring;
      const bool valid = is_valid_coloring(r.final.diagram, r.final.coloring);
      run_ok = replays && valid && r.normalized.size() == 5 &&
               affine_equivalent(r.normalized, Palette(kFinalPalette.begin(), kFinalPalette.end()), 13);
      final_palettes.push_back(r.raw);
      os << name << " " << palette_text(r.raw);
    } catch (const std::exception& e) {
      os << name << " error: " << e.what();
    }
    const double t = seconds_since(t0);
    run_ok = run_ok && t < 600.0;
    ok = ok && run_ok;
    os << " " << t << " s; ";
  }
  os << runs.size() << " runs";
  return {ok, os.str()};
}

Outcome lower_bound(const Corpus& corpus) {
  LowerBoundReport r = lower_bound_check(corpus, 5);
  std::ostringstream os;
  for (const auto& e : r.entries) os << e.name << " min " << e.min_palette << "; ";
  os << r.violations() << " colorings below 5 colors";
  return {r.ok() && !r.entries.empty(), os.str()};
}

Outcome affine_unique() {
  auto classes = affine_classes(final_palettes, 13);
  const Palette target(kFinalPalette.begin(), kFinalPalette.end());
  std::ostringstream os;
  os << final_palettes.size() << " palettes, " << classes.size() << " class(es)";
  for (const auto& c : classes) os << " " << palette_text(c);
  const bool ok = !final_palettes.empty() && classes.size() == 1 && affine_equivalent(classes[0], target, 13);
  return {ok, os.str()};
}

}  // namespace

int main() {
  const Corpus corpus = load_corpus(FOX13_CORPUS_FILE, 8, 13).corpus;
  std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"duplet tables", duplets},
      {"X-cell semantics", x_cells},
      {"text arithmetic", arithmetic},
      {"determinants", determinants},
      {"7_3 coloring count", count_73},
      {"move soundness", random_moves},
      {"end-to-end elimination", [&] { return end_to_end(corpus); }},
      {"corpus lower bound", [&] { return lower_bound(corpus); }},
      {"affine uniqueness", affine_unique},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failed += !o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << " " << i + 1 << " " << criteria[i].first << ": " << o.detail
              << std::endl;
  }
  return failed == 0 ? 0 : 1;
}
