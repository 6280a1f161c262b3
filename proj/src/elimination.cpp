#include "fox13/elimination.hpp"

#include <algorithm>
#include <chrono>
#include <optional>
#include <queue>
#include <set>
#include <string>
#include <tuple>
#include <unordered_set>

#include "fox13/parallel.hpp"

namespace fox13 {

int target_occurrences(const ColoredDiagram& cd, int c) {
  int count = 0;
  for (const auto& x : cd.diagram.crossings())
    for (ArcId a : x.ends) count += cd.coloring.colors[a] == c;
  for (ArcId a = cd.diagram.num_arcs() - cd.diagram.num_free_loops(); a < cd.diagram.num_arcs(); ++a)
    count += cd.coloring.colors[a] == c;
  return count;
}

namespace {

// Canonical code packed one byte per entry; larger entries escape to three.
std::string packed_code(const ColoredDiagram& cd) {
  const auto code = canonical_code(cd.diagram, cd.coloring.colors);
  std::string out;
  out.reserve(code.size());
  for (int v : code) {
    if (v >= 0 && v < 255) {
      out.push_back(static_cast<char>(v));
    } else {
      out.push_back(static_cast<char>(255));
      out.push_back(static_cast<char>(v >> 8));
      out.push_back(static_cast<char>(v & 255));
    }
  }
  return out;
}

// An expanded state, kept for the trace.
struct Node {
  ColoredDiagram cd;
  int parent = -1;
  RewriteStep step;
  int depth = 0;
};

// A generated state waiting in the frontier: only the move that makes it
// from its expanded parent, its score, and its code (owned by `seen`).
struct Pending {
  int parent = -1;
  MoveSite site;
  int count = 0;
  int crossings = 0;
  int depth = 0;
  const std::string* code = nullptr;
};

// Score order: fewer target slots, then fewer crossings, then shorter
// traces, then the smaller canonical code.
bool better(const Pending& x, const Pending& y) {
  auto kx = std::tuple(x.count, x.crossings, x.depth);
  auto ky = std::tuple(y.count, y.crossings, y.depth);
  if (kx != ky) return kx < ky;
  return *x.code < *y.code;
}

struct Child {
  int count = 0;
  int crossings = 0;
  std::string code;
};

// Sites worth trying: every simplifying move anywhere, and finger moves
// inside faces that touch a crossing carrying color c whose new arc color
// is allowed.
std::vector<MoveSite> candidate_sites(const ColoredDiagram& cd, int c, const std::vector<char>& allowed_new) {
  const int p = cd.coloring.p;
  const auto& col = cd.coloring.colors;
  const auto& d = cd.diagram;
  std::vector<MoveSite> sites;
  for (auto kind : {MoveKind::R2Pull, MoveKind::R1Remove, MoveKind::R3}) {
    auto v = legal_sites(d, kind);
    sites.insert(sites.end(), v.begin(), v.end());
  }
  std::vector<char> hot(static_cast<std::size_t>(d.num_crossings()), 0);
  for (int x = 0; x < d.num_crossings(); ++x)
    for (ArcId a : d.crossings()[x].ends)
      if (cd.coloring.colors[a] == c) hot[x] = 1;
  MoveSite s;
  s.kind = MoveKind::R2Push;
  for (const auto& f : d.faces()) {
    if (std::none_of(f.darts.begin(), f.darts.end(), [&](Slot x) { return hot[x.crossing]; })) continue;
    for (const auto& m : f.darts)
      for (const auto& t : f.darts) {
        if (d.arc_at(m) == d.arc_at(t)) continue;
        for (int over = 0; over < 2; ++over) {
          const int fresh = over ? r2_push_color(col[d.arc_at(m)], col[d.arc_at(t)], p)
                                 : r2_push_color(col[d.arc_at(t)], col[d.arc_at(m)], p);
          if (!allowed_new[fresh]) continue;
          s.mover = m;
          s.target = t;
          s.mover_over = over;
          sites.push_back(s);
        }
      }
  }
  return sites;
}

std::optional<Child> try_move(const ColoredDiagram& cd, const MoveSite& site, int c,
                              const std::vector<char>& allowed_new, int crossing_cap) {
  MoveResult r;
  try {
    r = apply_move(cd, site);
  } catch (const RewriteError&) {
    return std::nullopt;
  }
  if (r.after.diagram.num_crossings() > crossing_cap) return std::nullopt;
  for (const auto& [arc, v] : r.step.new_colors)
    if (!allowed_new[v]) return std::nullopt;
  return Child{target_occurrences(r.after, c), r.after.diagram.num_crossings(), packed_code(r.after)};
}

EliminationTrace build_trace(const std::vector<Node>& nodes, int last, int c, std::span<const int> eliminated) {
  EliminationTrace t;
  t.target = c;
  t.eliminated.assign(eliminated.begin(), eliminated.end());
  std::vector<int> path;
  for (int i = last; i > 0; i = nodes[i].parent) path.push_back(i);
  std::reverse(path.begin(), path.end());
  t.start = nodes[0].cd;
  for (int i : path) {
    t.steps.push_back(nodes[i].step);
    t.palettes.push_back(palette(nodes[i].cd.coloring));
  }
  t.final = nodes[last].cd;
  return t;
}

// Greedily removes bigons and kinks; neither can introduce a color.
void simplify(EliminationTrace& t) {
  bool progress = true;
  while (progress) {
    progress = false;
    for (auto kind : {MoveKind::R1Remove, MoveKind::R2Pull}) {
      for (const auto& site : legal_sites(t.final.diagram, kind)) {
        try {
          auto r = apply_move(t.final, site);
          t.final = std::move(r.after);
          t.steps.push_back(std::move(r.step));
          t.palettes.push_back(palette(t.final.coloring));
          progress = true;
          break;
        } catch (const RewriteError&) {
        }
      }
      if (progress) break;
    }
  }
}

}  // namespace

EliminationTrace eliminate_color(const ColoredDiagram& cd, int c, std::span<const int> eliminated,
                                 const SearchOptions& opts) {
  const int p = cd.coloring.p;
  if (std::find(cd.coloring.colors.begin(), cd.coloring.colors.end(), c) == cd.coloring.colors.end()) {
    EliminationTrace t;
    t.target = c;
    t.eliminated.assign(eliminated.begin(), eliminated.end());
    t.start = t.final = cd;
    t.success = true;
    return t;
  }
  // Fresh arcs may only take available colors: neither c nor an eliminated one.
  std::vector<char> allowed_new(static_cast<std::size_t>(p), 1);
  if (opts.conservative) {
    std::fill(allowed_new.begin(), allowed_new.end(), 0);
    for (int v : kFinalPalette) allowed_new[v] = 1;
    for (int v : cd.coloring.colors) allowed_new[v] = 1;
  }
  allowed_new[c] = 0;
  for (int v : eliminated) allowed_new[v] = 0;
  const int crossing_cap = cd.diagram.num_crossings() + opts.crossing_slack;

  std::unordered_set<std::string> seen;
  std::vector<Node> nodes;
  auto worse = [](const Pending& x, const Pending& y) { return better(y, x); };
  std::priority_queue<Pending, std::vector<Pending>, decltype(worse)> frontier(worse);
  Pending root;
  root.count = target_occurrences(cd, c);
  root.crossings = cd.diagram.num_crossings();
  root.code = &*seen.insert(packed_code(cd)).first;
  frontier.push(root);
  Pending best = root;
  long expansions = 0;
  const int threads = opts.parallel ? worker_threads() : 1;

  // Materializes a pending state as an expanded node.
  auto realize = [&](const Pending& e) {
    if (e.parent < 0) {
      if (nodes.empty()) nodes.push_back({cd, -1, {}, 0});
      return 0;
    } else {
      MoveResult r = apply_move(nodes[static_cast<std::size_t>(e.parent)].cd, e.site);
      nodes.push_back({std::move(r.after), e.parent, std::move(r.step), e.depth});
    }
    return static_cast<int>(nodes.size()) - 1;
  };

  while (!frontier.empty()) {
    const Pending top = frontier.top();
    if (top.count == 0) {
      EliminationTrace t = build_trace(nodes, realize(top), c, eliminated);
      if (opts.simplify) simplify(t);
      t.success = true;
      t.expansions = expansions;
      return t;
    }
    if (expansions >= opts.budget) break;
    frontier.pop();
    ++expansions;
    const int cur = realize(top);
    const ColoredDiagram& parent_cd = nodes[static_cast<std::size_t>(cur)].cd;
    const auto sites = candidate_sites(parent_cd, c, allowed_new);
    std::vector<std::optional<Child>> children(sites.size());
#pragma omp parallel for schedule(dynamic, 4) num_threads(threads) if (threads > 1)
    for (std::size_t i = 0; i < sites.size(); ++i)
      children[i] = try_move(parent_cd, sites[i], c, allowed_new, crossing_cap);
    for (std::size_t i = 0; i < sites.size(); ++i) {
      auto& ch = children[i];
      if (!ch) continue;
      auto [it, fresh] = seen.insert(std::move(ch->code));
      if (!fresh) continue;
      Pending e{cur, sites[i], ch->count, ch->crossings, top.depth + 1, &*it};
      if (better(e, best)) best = e;
      frontier.push(e);
    }
  }
  EliminationTrace t = build_trace(nodes, realize(best), c, eliminated);
  t.expansions = expansions;
  throw BudgetExhausted("color " + std::to_string(c) + " not eliminated after " + std::to_string(expansions) +
                            " expansions",
                        std::move(t));
}

std::vector<std::pair<int, int>> normalization_order(const Palette& pal) {
  const int p = 13;
  auto in_final = [](int v) {
    return std::find(kFinalPalette.begin(), kFinalPalette.end(), v) != kFinalPalette.end();
  };
  std::vector<std::pair<std::tuple<int, int, int>, std::pair<int, int>>> keyed;
  for (int lambda = 1; lambda < p; ++lambda)
    for (int mu = 0; mu < p; ++mu) {
      auto img = affine_image(pal, lambda, mu, p);
      int last = -1, extras = 0;
      for (int v : img) {
        if (in_final(v)) continue;
        ++extras;
        last = std::max(last, static_cast<int>(std::find(kEliminationOrder.begin(), kEliminationOrder.end(), v) -
                                               kEliminationOrder.begin()));
      }
      int missing = 0;
      for (int v : kFinalPalette) missing += !std::binary_search(img.begin(), img.end(), v);
      keyed.push_back({{extras, last, missing}, {lambda, mu}});
    }
  std::stable_sort(keyed.begin(), keyed.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  std::vector<std::pair<int, int>> out;
  for (const auto& [key, lm] : keyed) out.push_back(lm);
  return out;
}

std::pair<int, int> choose_normalization(const Palette& palette) { return normalization_order(palette).front(); }

namespace {

// All stages under one normalization. Returns nullopt, with the failure in
// `failure`, as soon as a stage runs out of budget.
std::optional<SequenceResult> attempt(const ColoredDiagram& cd, int lambda, int mu, const SearchOptions& opts,
                                      std::optional<BudgetExhausted>& failure) {
  SequenceResult r;
  r.lambda = lambda;
  r.mu = mu;
  ColoredDiagram cur{cd.diagram, affine_map(cd.coloring, lambda, mu)};
  std::vector<int> eliminated;
  SearchOptions narrow = opts;
  narrow.conservative = true;
  for (int c : kEliminationOrder) {
    // Colors that would need removing later are kept out first.
    try {
      r.traces.push_back(eliminate_color(cur, c, eliminated, narrow));
    } catch (const BudgetExhausted&) {
      try {
        r.traces.push_back(eliminate_color(cur, c, eliminated, opts));
      } catch (const BudgetExhausted& e) {
        failure.emplace(e);
        return std::nullopt;
      }
    }
    cur = r.traces.back().final;
    eliminated.push_back(c);
  }
  r.final = std::move(cur);
  return r;
}

}  // namespace

SequenceResult run_sequence(const ColoredDiagram& cd, const SearchOptions& opts) {
  if (cd.coloring.p != 13) throw std::invalid_argument("the elimination order is specific to p = 13");
  if (determinant(cd.diagram) == 0) throw ZeroDeterminant();
  if (!is_valid_coloring(cd.diagram, cd.coloring)) throw std::invalid_argument("coloring is not valid");
  if (!is_nontrivial(cd.coloring)) throw std::invalid_argument("coloring is trivial");
  const auto order = normalization_order(palette(cd.coloring));
  const auto started = std::chrono::steady_clock::now();
  auto out_of_time = [&] {
    return opts.time_limit > 0 &&
           std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count() > opts.time_limit;
  };
  int attempts = 0;
  long budget = std::min(opts.initial_budget, opts.budget);
  std::optional<BudgetExhausted> first_failure;
  for (bool last = false; !last;) {
    last = budget >= opts.budget;
    SearchOptions pass = opts;
    pass.budget = budget;
    for (std::size_t k = 0; k < order.size(); ++k) {
      if (out_of_time()) break;
      auto [lambda, mu] = order[k];
      ++attempts;
      std::optional<BudgetExhausted> failure;
      if (auto r = attempt(cd, lambda, mu, pass, failure)) {
        r->attempts = attempts;
        r->budget = budget;
        r->normalized = palette(r->final.coloring);
        const int inv = inverse_mod(lambda, 13);
        r->raw = affine_image(r->normalized, inv, mod_p(-static_cast<long long>(inv) * mu, 13), 13);
        return std::move(*r);
      }
      if (k == 0) first_failure = std::move(failure);
    }
    if (out_of_time()) break;
    budget = std::min(budget * 2, opts.budget);
  }
  // The top-ranked normalization's failure at the largest budget tried.
  throw *first_failure;
}

ColoredDiagram replay(const EliminationTrace& trace) {
  ColoredDiagram cur = trace.start;
  const BigInt det = determinant(cur.diagram);
  for (std::size_t i = 0; i < trace.steps.size(); ++i) {
    const auto& step = trace.steps[i];
    MoveResult r = apply_move(cur, step.site);
    if (r.step.origin != step.origin || r.step.new_colors != step.new_colors)
      throw std::runtime_error("step " + std::to_string(i) + " does not reproduce its recorded arcs");
    if (!is_valid_coloring(r.after.diagram, r.after.coloring))
      throw std::runtime_error("step " + std::to_string(i) + " yields an invalid coloring");
    if (transport_coloring(cur.diagram, cur.coloring, r.step) != r.after.coloring)
      throw std::runtime_error("step " + std::to_string(i) + " disagrees with the linear transport");
    if (determinant(r.after.diagram) != det)
      throw std::runtime_error("step " + std::to_string(i) + " changes the determinant");
    if (i < trace.palettes.size() && palette(r.after.coloring) != trace.palettes[i])
      throw std::runtime_error("step " + std::to_string(i) + " palette differs from the record");
    cur = std::move(r.after);
  }
  return cur;
}

nlohmann::json to_json(const ColoredDiagram& cd) {
  return {{"diagram", to_json(cd.diagram)}, {"p", cd.coloring.p}, {"colors", cd.coloring.colors}};
}

ColoredDiagram colored_diagram_from_json(const nlohmann::json& j) {
  ColoredDiagram cd;
  cd.diagram = diagram_from_json(j.at("diagram"));
  cd.coloring.p = j.at("p").get<int>();
  cd.coloring.colors = j.at("colors").get<std::vector<int>>();
  if (static_cast<int>(cd.coloring.colors.size()) != cd.diagram.num_arcs())
    throw std::invalid_argument("color list does not match the arc count");
  return cd;
}

nlohmann::json to_json(const EliminationTrace& t) {
  nlohmann::json steps = nlohmann::json::array();
  for (std::size_t i = 0; i < t.steps.size(); ++i) {
    auto js = to_json(t.steps[i]);
    js["spec"] = site_spec(t.steps[i].site);
    if (i < t.palettes.size()) js["palette"] = t.palettes[i];
    steps.push_back(std::move(js));
  }
  return {{"target", t.target},     {"eliminated", t.eliminated}, {"success", t.success},
          {"expansions", t.expansions}, {"start", to_json(t.start)},  {"steps", std::move(steps)},
          {"final", to_json(t.final)}};
}

EliminationTrace trace_from_json(const nlohmann::json& j) {
  EliminationTrace t;
  t.target = j.at("target").get<int>();
  t.eliminated = j.at("eliminated").get<std::vector<int>>();
  t.success = j.at("success").get<bool>();
  t.expansions = j.at("expansions").get<long>();
  t.start = colored_diagram_from_json(j.at("start"));
  t.final = colored_diagram_from_json(j.at("final"));
  for (const auto& js : j.at("steps")) {
    RewriteStep s;
    s.site = move_site_from_json(js.at("site"));
    s.origin = js.at("origin").get<std::vector<int>>();
    for (const auto& nc : js.at("new_colors")) s.new_colors.emplace_back(nc.at(0).get<int>(), nc.at(1).get<int>());
    t.steps.push_back(std::move(s));
    if (js.contains("palette")) t.palettes.push_back(js.at("palette").get<Palette>());
  }
  return t;
}

}  // namespace fox13
