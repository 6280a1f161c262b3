#include "fox13/catalog.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace fox13 {

namespace {

bool monochromatic(const ColoredDiagram& cd, int x) {
  const auto& e = cd.diagram.crossings()[x].ends;
  const auto& col = cd.coloring.colors;
  return col[e[0]] == col[e[1]] && col[e[1]] == col[e[2]] && col[e[2]] == col[e[3]];
}

int over_color(const ColoredDiagram& cd, int x) { return cd.coloring.colors[cd.diagram.crossings()[x].over_a()]; }

// Breadth-first walk over c-colored arcs starting at a monochromatic crossing;
// returns the over-color at the first crossing where such an arc is an
// under-arc below a different color.
int alpha_neighbour(const ColoredDiagram& cd, int start, int c) {
  const auto& d = cd.diagram;
  std::vector<char> seen(static_cast<std::size_t>(d.num_crossings()), 0);
  std::deque<int> queue{start};
  seen[start] = 1;
  while (!queue.empty()) {
    int x = queue.front();
    queue.pop_front();
    for (int i = 0; i < 4; ++i) {
      Slot s{x, i};
      if (cd.coloring.colors[d.arc_at(s)] != c) continue;
      Slot far = d.partner(s);
      if (is_under_pos(far.pos) && over_color(cd, far.crossing) != c) return over_color(cd, far.crossing);
      if (!seen[far.crossing]) {
        seen[far.crossing] = 1;
        queue.push_back(far.crossing);
      }
    }
  }
  return -1;
}

bool contains(std::span<const int> s, int v) { return std::find(s.begin(), s.end(), v) != s.end(); }

bool same_set(std::span<const int> a, std::span<const int> b) {
  std::set<int> x(a.begin(), a.end()), y(b.begin(), b.end());
  return x == y;
}

std::vector<TransformationSpec> build_catalog() {
  using K = InstanceKind;
  std::vector<TransformationSpec> out;
  auto add = [&](K kind, int index, std::vector<LinearForm> forms, FormCoverage cov) {
    const char* prefix = kind == K::Alpha ? "alpha" : kind == K::Beta ? "beta" : kind == K::Gamma ? "gamma" : "delta";
    out.push_back({prefix + std::to_string(index), kind, index, false, std::move(forms), cov});
  };
  // Forms are (ka, kb, kc).
  add(K::Alpha, 1, {{2, 0, -1}}, FormCoverage::Exact);
  add(K::Alpha, 2, {{-2, 0, 3}}, FormCoverage::Exact);
  add(K::Alpha, 3, {{2, 0, -1}}, FormCoverage::Exact);
  add(K::Beta, 1, {{2, 0, -1}, {3, 0, -2}}, FormCoverage::Exact);
  add(K::Beta, 2, {{-1, 0, 2}}, FormCoverage::Exact);
  add(K::Beta, 3, {}, FormCoverage::FigureOnly);
  add(K::Gamma, 1, {{2, -1, 0}, {2, -2, 1}}, FormCoverage::Exact);
  add(K::Gamma, 2, {{-1, 2, 0}, {-2, 2, 1}}, FormCoverage::Exact);
  for (int i = 3; i <= 14; ++i) add(K::Gamma, i, {}, FormCoverage::FigureOnly);
  add(K::Delta, 1, {{3, 0, -2}, {4, 0, -3}}, FormCoverage::Exact);
  for (int i = 2; i <= 11; ++i) {
    if (i == 8)
      add(K::Delta, 8, {{-1, 0, 2}, {12, 0, -11}, {-2, 0, 3}}, FormCoverage::Partial);
    else
      add(K::Delta, i, {}, FormCoverage::FigureOnly);
  }
  for (int k = 1; k <= 4; ++k)
    out.push_back({"D" + std::to_string(k), K::Delta, k, true, {}, FormCoverage::FigureOnly});
  return out;
}

}  // namespace

std::vector<Instance> classify(const ColoredDiagram& cd, int c) {
  const auto& d = cd.diagram;
  const auto& col = cd.coloring.colors;
  if (std::find(col.begin(), col.end(), c) == col.end()) throw ColorAbsent(c);
  std::vector<Instance> out;
  for (int x = 0; x < d.num_crossings(); ++x) {
    const auto& k = d.crossings()[x];
    if (col[k.over_a()] != c) continue;
    Instance inst;
    inst.crossing = x;
    inst.c = c;
    if (monochromatic(cd, x)) {
      inst.kind = InstanceKind::Alpha;
      inst.a = alpha_neighbour(cd, x, c);
    } else {
      inst.kind = InstanceKind::Beta;
      inst.a = col[k.under_a()];
    }
    out.push_back(inst);
  }
  const int slot_arcs = d.num_arcs() - d.num_free_loops();
  for (ArcId e = 0; e < slot_arcs; ++e) {
    if (col[e] != c) continue;
    const auto& ends = d.ends_of(e);
    if (!is_under_pos(ends[0].pos) || !is_under_pos(ends[1].pos)) continue;
    if (monochromatic(cd, ends[0].crossing) || monochromatic(cd, ends[1].crossing)) continue;
    Instance inst;
    inst.arc = e;
    inst.c = c;
    inst.a = over_color(cd, ends[0].crossing);
    inst.b = over_color(cd, ends[1].crossing);
    inst.kind = inst.a == inst.b ? InstanceKind::Delta : InstanceKind::Gamma;
    if (inst.kind == InstanceKind::Delta) inst.b = -1;
    out.push_back(inst);
  }
  return out;
}

int LinearForm::eval(int a, int b, int c, int p) const noexcept {
  return mod_p(static_cast<long long>(ka) * a + static_cast<long long>(kb) * (b < 0 ? 0 : b) +
                   static_cast<long long>(kc) * c,
               p);
}

std::string LinearForm::to_string() const {
  std::string s;
  auto term = [&](int k, char v) {
    if (k == 0) return;
    if (s.empty()) {
      s += k < 0 ? "-" : "";
    } else {
      s += k < 0 ? " - " : " + ";
    }
    int m = k < 0 ? -k : k;
    if (m != 1) s += std::to_string(m);
    s += v;
  };
  term(ka, 'a');
  term(kb, 'b');
  term(kc, 'c');
  return s.empty() ? "0" : s;
}

const std::vector<TransformationSpec>& catalog() {
  static const std::vector<TransformationSpec> specs = build_catalog();
  return specs;
}

const TransformationSpec* find_spec(InstanceKind kind, int index, bool endgame) {
  for (const auto& s : catalog())
    if (s.kind == kind && s.index == index && s.endgame == endgame) return &s;
  return nullptr;
}

const TransformationSpec* find_spec(const std::string& name) {
  for (const auto& s : catalog())
    if (s.name == name) return &s;
  return nullptr;
}

bool guard_check(const TransformationSpec& spec, int a, int b, int c, std::span<const int> forbidden, int p) {
  for (const auto& f : spec.produced)
    if (contains(forbidden, f.eval(a, b, c, p))) return false;
  return true;
}

std::vector<int> forbidden_colors(int c, std::span<const int> eliminated) {
  std::vector<int> out(eliminated.begin(), eliminated.end());
  out.push_back(c);
  return out;
}

bool is_impossible(InstanceKind kind, int a, int b, int c, std::span<const int> forbidden, int p) {
  switch (kind) {
    case InstanceKind::Alpha:
    case InstanceKind::Beta: return contains(forbidden, mod_p(2LL * c - a, p));
    case InstanceKind::Delta: return contains(forbidden, mod_p(2LL * a - c, p));
    case InstanceKind::Gamma:
      return contains(forbidden, mod_p(2LL * a - c, p)) || contains(forbidden, mod_p(2LL * b - c, p));
  }
  return false;
}

namespace {

Lookup first_passing(const std::vector<const TransformationSpec*>& candidates, const Instance& inst,
                     std::span<const int> forbidden) {
  for (const auto* spec : candidates)
    if (spec && guard_check(*spec, inst.a, inst.b, inst.c, forbidden))
      return {Lookup::Verdict::Covered, spec, false, "guards"};
  return {};
}

Lookup guard_cascade(const Instance& inst, std::span<const int> forbidden) {
  using K = InstanceKind;
  const int c = inst.c;
  auto covered = [](const TransformationSpec* s) { return Lookup{Lookup::Verdict::Covered, s, false, "guards"}; };
  switch (inst.kind) {
    case K::Alpha: return first_passing({find_spec(K::Alpha, 1), find_spec(K::Alpha, 2)}, inst, forbidden);
    case K::Beta: return first_passing({find_spec(K::Beta, 1), find_spec(K::Beta, 2)}, inst, forbidden);
    case K::Gamma: {
      Lookup r = first_passing({find_spec(K::Gamma, 1), find_spec(K::Gamma, 2)}, inst, forbidden);
      if (r.verdict == Lookup::Verdict::Covered || c != 11) return r;
      std::pair<int, int> ab{inst.a, inst.b};
      if (ab == std::pair{3, 7} || ab == std::pair{6, 0}) return covered(find_spec(K::Gamma, 3));
      if (ab == std::pair{7, 3} || ab == std::pair{0, 6}) return covered(find_spec(K::Gamma, 4));
      return r;
    }
    case K::Delta: {
      Lookup r = first_passing({find_spec(K::Delta, 1)}, inst, forbidden);
      if (r.verdict == Lookup::Verdict::Covered || c != 11) return r;
      if (inst.a == 7) return covered(find_spec(K::Delta, 3));
      if (inst.a == 8) return covered(find_spec(K::Delta, 2));
      return r;
    }
  }
  return {};
}

}  // namespace

Lookup catalog_lookup(const Instance& inst, std::span<const int> eliminated, const TableSet& tables) {
  if (inst.a < 0 || (inst.kind == InstanceKind::Gamma && inst.b < 0)) return {};
  const bool first_stage = (inst.c == 12 && eliminated.empty()) ||
                           (inst.c == 11 && same_set(eliminated, std::vector<int>{12}));
  if (first_stage) {
    auto forbidden = forbidden_colors(inst.c, eliminated);
    if (is_impossible(inst.kind, inst.a, inst.b, inst.c, forbidden))
      return {Lookup::Verdict::Impossible, nullptr, false, "guards"};
    return guard_cascade(inst, forbidden);
  }
  const EliminationTable* table = tables.find(inst.kind, inst.c);
  if (!table || !same_set(table->eliminated, eliminated)) return {};
  const TableEntry* entry = table->find(inst.a, inst.kind == InstanceKind::Gamma ? inst.b : -1);
  if (!entry) return {};
  switch (entry->type) {
    case TableEntry::Type::Impossible: return {Lookup::Verdict::Impossible, nullptr, false, table->id};
    case TableEntry::Type::Transformation:
      return {Lookup::Verdict::Covered, find_spec(inst.kind, entry->index), entry->swapped, table->id};
    case TableEntry::Type::Endgame:
      return {Lookup::Verdict::Covered, find_spec(inst.kind, entry->index, true), false, table->id};
  }
  return {};
}

}  // namespace fox13
