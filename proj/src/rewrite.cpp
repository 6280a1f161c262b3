#include "fox13/rewrite.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace fox13 {

std::string to_string(MoveKind k) {
  switch (k) {
    case MoveKind::R1Add: return "r1add";
    case MoveKind::R1Remove: return "r1remove";
    case MoveKind::R2Push: return "r2push";
    case MoveKind::R2Pull: return "r2pull";
    case MoveKind::R3: return "r3";
  }
  return "?";
}

MoveKind move_kind_from_string(const std::string& s) {
  for (auto k : {MoveKind::R1Add, MoveKind::R1Remove, MoveKind::R2Push, MoveKind::R2Pull, MoveKind::R3})
    if (to_string(k) == s) return k;
  throw RewriteError(RewriteErrorKind::BadSite, "unknown move kind '" + s + "'");
}

namespace {

[[noreturn]] void bad_site(const std::string& msg) { throw RewriteError(RewriteErrorKind::BadSite, msg); }
[[noreturn]] void mismatch(const std::string& msg) {
  throw RewriteError(RewriteErrorKind::PatternMismatch, msg);
}

constexpr int kUnknown = -1;

// Mutable copy of a diagram with provisional labels. Old arcs keep their ids;
// new arcs get fresh labels. Colors are tracked per label when available.
struct Workspace {
  int p = 13;
  bool colored = false;
  std::vector<std::array<int, 4>> ends;
  std::vector<int> loops;   // provisional labels of crossingless loops
  std::vector<int> color;   // per provisional label
  std::vector<int> origin;  // per provisional label

  static Workspace from(const Diagram& d, const Coloring* c) {
    Workspace w;
    for (const auto& x : d.crossings()) w.ends.push_back(x.ends);
    for (ArcId a = d.num_arcs() - d.num_free_loops(); a < d.num_arcs(); ++a) w.loops.push_back(a);
    w.origin.resize(static_cast<std::size_t>(d.num_arcs()));
    for (ArcId a = 0; a < d.num_arcs(); ++a) w.origin[a] = a;
    if (c) {
      w.colored = true;
      w.p = c->p;
      w.color = c->colors;
    } else {
      w.color.assign(w.origin.size(), kUnknown);
    }
    return w;
  }

  int fresh(int from_origin, int col) {
    origin.push_back(from_origin);
    color.push_back(col);
    return static_cast<int>(origin.size()) - 1;
  }

  int& at(Slot s) { return ends[s.crossing][s.pos]; }

  // Removes crossings, joining strands straight through them. Arcs in
  // `discarded` disappear; every joined chain keeps the label of its first
  // surviving arc.
  void remove_crossings(const std::set<int>& removed, const std::set<int>& discarded) {
    std::map<int, std::vector<Slot>> occurrences;
    for (int x = 0; x < static_cast<int>(ends.size()); ++x)
      for (int i = 0; i < 4; ++i) occurrences[ends[x][i]].push_back(Slot{x, i});
    auto other_end = [&](Slot s) {
      const auto& occ = occurrences[ends[s.crossing][s.pos]];
      return occ[0] == s ? occ[1] : occ[0];
    };
    std::set<Slot> visited;
    auto pick_label = [&](const std::vector<int>& chain) {
      int label = -1;
      for (int l : chain) {
        if (discarded.count(l)) continue;
        if (label < 0) {
          label = l;
        } else if (colored && color[l] != color[label]) {
          throw RewriteError(RewriteErrorKind::NoValidColoring, "joined arcs disagree in color");
        }
      }
      return label < 0 ? chain.front() : label;
    };
    std::vector<std::pair<Slot, int>> relabel;
    for (int x = 0; x < static_cast<int>(ends.size()); ++x) {
      if (removed.count(x)) continue;
      for (int i = 0; i < 4; ++i) {
        Slot start{x, i};
        if (visited.count(start)) continue;
        Slot far = other_end(start);
        if (!removed.count(far.crossing)) continue;
        std::vector<int> chain{at(start)};
        visited.insert(start);
        while (removed.count(far.crossing)) {
          visited.insert(far);
          Slot through{far.crossing, (far.pos + 2) % 4};
          visited.insert(through);
          chain.push_back(at(through));
          far = other_end(through);
        }
        visited.insert(far);
        int label = pick_label(chain);
        relabel.emplace_back(start, label);
        relabel.emplace_back(far, label);
      }
    }
    for (int r : removed) {
      for (int i = 0; i < 4; ++i) {
        Slot s{r, i};
        if (visited.count(s)) continue;
        std::vector<int> chain;
        Slot cur = s;
        while (!visited.count(cur)) {
          visited.insert(cur);
          Slot through{cur.crossing, (cur.pos + 2) % 4};
          visited.insert(through);
          chain.push_back(at(through));
          cur = other_end(through);
        }
        loops.push_back(pick_label(chain));
      }
    }
    for (auto [s, label] : relabel) at(s) = label;
    std::vector<std::array<int, 4>> kept;
    for (int x = 0; x < static_cast<int>(ends.size()); ++x)
      if (!removed.count(x)) kept.push_back(ends[x]);
    ends = std::move(kept);
  }

  // Fills unknown colors on the given crossings from the crossing relations.
  void propagate(const std::vector<int>& crossings) {
    const int half = (p + 1) / 2;
    bool changed = true;
    while (changed) {
      changed = false;
      for (int x : crossings) {
        auto& e = ends[x];
        int& o1 = color[e[1]];
        int& o3 = color[e[3]];
        if (o1 == kUnknown && o3 != kUnknown) { o1 = o3; changed = true; }
        if (o3 == kUnknown && o1 != kUnknown) { o3 = o1; changed = true; }
        int& u0 = color[e[0]];
        int& u2 = color[e[2]];
        if (o1 != kUnknown) {
          if (u0 == kUnknown && u2 != kUnknown) { u0 = mod_p(2LL * o1 - u2, p); changed = true; }
          if (u2 == kUnknown && u0 != kUnknown) { u2 = mod_p(2LL * o1 - u0, p); changed = true; }
        } else if (u0 != kUnknown && u2 != kUnknown) {
          o1 = o3 = mod_p(static_cast<long long>(u0 + u2) * half, p);
          changed = true;
        }
      }
    }
  }

  struct Finished {
    Diagram diagram;
    std::vector<int> origin;
    std::vector<int> colors;
  };

  Finished finish() const {
    Finished f;
    f.diagram = Diagram::from_crossings(ends, static_cast<int>(loops.size()));
    const auto& provisional = f.diagram.labels();
    const int slot_arcs = f.diagram.num_arcs() - f.diagram.num_free_loops();
    for (ArcId a = 0; a < f.diagram.num_arcs(); ++a) {
      int label = a < slot_arcs ? provisional[a] : loops[a - slot_arcs];
      f.origin.push_back(origin[label]);
      f.colors.push_back(color[label]);
    }
    f.diagram = f.diagram.with_default_labels();
    return f;
  }
};

bool has_slot(const Diagram& d, Slot s) {
  return s.crossing >= 0 && s.crossing < d.num_crossings() && s.pos >= 0 && s.pos < 4;
}

void do_r1_add(Workspace& w, const Diagram& d, const MoveSite& site) {
  if (site.arc < 0 || site.arc >= d.num_arcs()) bad_site("r1add: no such arc");
  const ArcId arc = site.arc;
  const int q = site.over_first ? 1 : 0;
  const int r = (q + (site.side ? 3 : 1)) % 4;
  const int col = w.color[arc];
  int loop = w.fresh(-1, col);
  int tail;
  if (d.is_free_loop(arc)) {
    tail = arc;
    w.loops.erase(std::find(w.loops.begin(), w.loops.end(), arc));
  } else {
    tail = w.fresh(arc, col);
    w.at(d.ends_of(arc)[1]) = tail;
  }
  std::array<int, 4> x{};
  x[q] = arc;
  x[(q + 2) % 4] = loop;
  x[r] = loop;
  x[(r + 2) % 4] = tail;
  w.ends.push_back(x);
}

void do_r1_remove(Workspace& w, const Diagram& d, const MoveSite& site) {
  if (site.crossing < 0 || site.crossing >= d.num_crossings()) bad_site("r1remove: no such crossing");
  const auto& e = d.crossings()[site.crossing].ends;
  for (int i = 0; i < 4; ++i) {
    if (e[i] == e[(i + 1) % 4]) {
      w.remove_crossings({site.crossing}, {e[i]});
      return;
    }
  }
  mismatch("r1remove: crossing is not a kink");
}

void do_r2_push(Workspace& w, const Diagram& d, const MoveSite& site) {
  if (!has_slot(d, site.mover) || !has_slot(d, site.target)) bad_site("r2push: no such dart");
  const auto darts = d.face_containing(site.mover).darts;
  if (std::find(darts.begin(), darts.end(), site.target) == darts.end())
    throw RewriteError(RewriteErrorKind::NotCofacial, "r2push: mover and target do not share a face");
  const ArcId e = d.arc_at(site.mover);
  const ArcId t = d.arc_at(site.target);
  if (e == t) bad_site("r2push: mover and target are the same arc");
  const Slot e_far = d.partner(site.mover);
  const Slot t_far = d.partner(site.target);
  const int ce = w.color[e];
  const int ct = w.color[t];
  const bool known = w.colored;
  int e_mid, f_mid;
  if (site.mover_over) {
    e_mid = w.fresh(e, ce);
    f_mid = w.fresh(-1, known ? mod_p(2LL * ce - ct, w.p) : kUnknown);
  } else {
    e_mid = w.fresh(-1, known ? mod_p(2LL * ct - ce, w.p) : kUnknown);
    f_mid = w.fresh(t, ct);
  }
  int e2 = w.fresh(e, ce);
  int f2 = w.fresh(t, ct);
  w.at(e_far) = e2;
  w.at(t_far) = f2;
  // Along the mover the finger meets X first; along the target it meets Y first.
  if (site.mover_over) {
    w.ends.push_back({f_mid, e, f2, e_mid});  // X
    w.ends.push_back({t, e2, f_mid, e_mid});  // Y
  } else {
    w.ends.push_back({e, f2, e_mid, f_mid});
    w.ends.push_back({e2, f_mid, e_mid, t});
  }
}

void do_r2_pull(Workspace& w, const Diagram& d, const MoveSite& site) {
  if (!has_slot(d, site.face)) bad_site("r2pull: no such dart");
  const auto darts = d.face_containing(site.face).darts;
  if (darts.size() != 2) mismatch("r2pull: face is not a bigon");
  Slot a = darts[0], b = darts[1];
  if (a.crossing == b.crossing) mismatch("r2pull: bigon closes on one crossing");
  Slot a_far = d.partner(a);  // on b's crossing
  if (is_under_pos(a.pos) != is_under_pos(a_far.pos))
    mismatch("r2pull: bigon strands alternate over and under");
  w.remove_crossings({a.crossing, b.crossing}, {d.arc_at(a), d.arc_at(b)});
}

struct Triangle {
  std::array<Slot, 3> darts;
};

Triangle triangle_at(const Diagram& d, Slot dart) {
  if (!has_slot(d, dart)) bad_site("r3: no such dart");
  const auto darts = d.face_containing(dart).darts;
  if (darts.size() != 3) mismatch("r3: face is not a triangle");
  Triangle t{{darts[0], darts[1], darts[2]}};
  if (t.darts[0].crossing == t.darts[1].crossing || t.darts[1].crossing == t.darts[2].crossing ||
      t.darts[0].crossing == t.darts[2].crossing)
    mismatch("r3: triangle repeats a crossing");
  // Strand k runs along the side leaving darts[k]; it is over at its start
  // crossing when that slot is odd, and at its end crossing when the slot
  // just before darts[k+1] is odd.
  std::array<int, 3> overs{};
  for (int k = 0; k < 3; ++k) {
    const Slot s = t.darts[k];
    const Slot n = t.darts[(k + 1) % 3];
    overs[k] = (s.pos % 2) + ((n.pos + 3) % 4) % 2;
  }
  std::sort(overs.begin(), overs.end());
  if (overs != std::array<int, 3>{0, 1, 2}) mismatch("r3: cyclic over/under pattern");
  return t;
}

void do_r3(Workspace& w, const Diagram& d, const MoveSite& site) {
  Triangle t = triangle_at(d, site.face);
  const auto snapshot = w.ends;
  auto old_at = [&](Slot s) { return snapshot[s.crossing][s.pos]; };
  std::vector<int> touched;
  for (int k = 0; k < 3; ++k) {
    const Slot s = t.darts[k];
    const Slot n = t.darts[(k + 1) % 3];
    const Slot p_t = s, p_a{s.crossing, (s.pos + 2) % 4};
    const Slot q_t{n.crossing, (n.pos + 3) % 4}, q_b{n.crossing, (n.pos + 1) % 4};
    int side = w.fresh(-1, kUnknown);
    w.at(q_t) = old_at(p_a);
    w.at(p_t) = old_at(q_b);
    w.at(p_a) = side;
    w.at(q_b) = side;
    touched.push_back(s.crossing);
  }
  if (w.colored) {
    w.propagate(touched);
    for (int x : touched)
      for (int lbl : w.ends[x])
        if (w.color[lbl] == kUnknown)
          throw RewriteError(RewriteErrorKind::NoValidColoring, "r3: interior color not determined");
  }
}

Workspace run_move(const Diagram& d, const Coloring* c, const MoveSite& site) {
  Workspace w = Workspace::from(d, c);
  switch (site.kind) {
    case MoveKind::R1Add: do_r1_add(w, d, site); break;
    case MoveKind::R1Remove: do_r1_remove(w, d, site); break;
    case MoveKind::R2Push: do_r2_push(w, d, site); break;
    case MoveKind::R2Pull: do_r2_pull(w, d, site); break;
    case MoveKind::R3: do_r3(w, d, site); break;
  }
  return w;
}

}  // namespace

MoveResult apply_move(const ColoredDiagram& cd, const MoveSite& site) {
  Workspace w = run_move(cd.diagram, &cd.coloring, site);
  auto fin = w.finish();
  MoveResult r;
  r.after.diagram = std::move(fin.diagram);
  r.after.coloring = Coloring{cd.coloring.p, std::move(fin.colors)};
  r.step.site = site;
  r.step.origin = std::move(fin.origin);
  for (ArcId a = 0; a < static_cast<int>(r.step.origin.size()); ++a)
    if (r.step.origin[a] < 0) r.step.new_colors.emplace_back(a, r.after.coloring.colors[a]);
  return r;
}

std::pair<Diagram, std::vector<int>> rewrite_diagram(const Diagram& d, const MoveSite& site) {
  Workspace w = run_move(d, nullptr, site);
  auto fin = w.finish();
  return {std::move(fin.diagram), std::move(fin.origin)};
}

ColoredDiagram r1_add(const ColoredDiagram& cd, ArcId arc, int side, bool over_first) {
  MoveSite s;
  s.kind = MoveKind::R1Add;
  s.arc = arc;
  s.side = side;
  s.over_first = over_first;
  return apply_move(cd, s).after;
}

ColoredDiagram r1_remove(const ColoredDiagram& cd, int crossing) {
  MoveSite s;
  s.kind = MoveKind::R1Remove;
  s.crossing = crossing;
  return apply_move(cd, s).after;
}

ColoredDiagram r2_push(const ColoredDiagram& cd, ArcId mover, ArcId target, int face_index,
                       bool mover_over) {
  auto faces = cd.diagram.faces();
  if (face_index < 0 || face_index >= static_cast<int>(faces.size())) bad_site("r2push: no such face");
  MoveSite s;
  s.kind = MoveKind::R2Push;
  s.mover_over = mover_over;
  bool have_mover = false, have_target = false;
  for (const auto& dart : faces[static_cast<std::size_t>(face_index)].darts) {
    if (!have_mover && cd.diagram.arc_at(dart) == mover) {
      s.mover = dart;
      have_mover = true;
    } else if (!have_target && cd.diagram.arc_at(dart) == target) {
      s.target = dart;
      have_target = true;
    }
  }
  if (!have_mover || !have_target)
    throw RewriteError(RewriteErrorKind::NotCofacial, "r2push: arcs do not both bound the face");
  return apply_move(cd, s).after;
}

ColoredDiagram r2_pull(const ColoredDiagram& cd, const MoveSite& site) {
  MoveSite s = site;
  s.kind = MoveKind::R2Pull;
  return apply_move(cd, s).after;
}

ColoredDiagram r3_slide(const ColoredDiagram& cd, const MoveSite& site) {
  MoveSite s = site;
  s.kind = MoveKind::R3;
  return apply_move(cd, s).after;
}

Coloring transport_coloring(const Diagram& d_before, const Coloring& c_before,
                            const RewriteStep& step) {
  auto [after, origin] = rewrite_diagram(d_before, step.site);
  const int p = c_before.p;
  std::vector<int> unknown_index(origin.size(), -1);
  int unknowns = 0;
  for (std::size_t a = 0; a < origin.size(); ++a)
    if (origin[a] < 0) unknown_index[a] = unknowns++;
  Coloring out{p, std::vector<int>(origin.size(), 0)};
  for (std::size_t a = 0; a < origin.size(); ++a)
    if (origin[a] >= 0) out.colors[a] = c_before.colors[origin[a]];
  // Each crossing gives two relations: the over-arcs agree, and
  // 2*over - under - under = 0. Move the known part to the right-hand side.
  ModMatrix rows;
  auto add_relation = [&](const std::vector<std::pair<ArcId, int>>& terms) {
    std::vector<int> row(static_cast<std::size_t>(unknowns + 1), 0);
    long long rhs = 0;
    for (auto [a, coeff] : terms) {
      if (unknown_index[a] >= 0)
        row[unknown_index[a]] = mod_p(row[unknown_index[a]] + coeff, p);
      else
        rhs -= static_cast<long long>(coeff) * out.colors[a];
    }
    row[unknowns] = mod_p(rhs, p);
    rows.push_back(std::move(row));
  };
  for (const auto& x : after.crossings()) {
    add_relation({{x.over_a(), 1}, {x.over_b(), -1}});
    add_relation({{x.over_a(), 2}, {x.under_a(), -1}, {x.under_b(), -1}});
  }
  auto pivots = rref_mod(rows, unknowns + 1, p);
  if (!pivots.empty() && pivots.back() == unknowns)
    throw RewriteError(RewriteErrorKind::NoValidColoring, "transport: relations are inconsistent");
  if (static_cast<int>(pivots.size()) != unknowns)
    throw RewriteError(RewriteErrorKind::NoValidColoring, "transport: colors are not determined");
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    for (std::size_t a = 0; a < origin.size(); ++a)
      if (unknown_index[a] == pivots[r]) out.colors[a] = rows[r][unknowns];
  }
  return out;
}

std::vector<MoveSite> legal_sites(const Diagram& d, MoveKind kind) {
  std::vector<MoveSite> out;
  MoveSite s;
  s.kind = kind;
  switch (kind) {
    case MoveKind::R1Add:
      for (ArcId a = 0; a < d.num_arcs(); ++a)
        for (int side = 0; side < 2; ++side)
          for (int over = 0; over < 2; ++over) {
            s.arc = a;
            s.side = side;
            s.over_first = over;
            out.push_back(s);
          }
      break;
    case MoveKind::R1Remove:
      for (int x = 0; x < d.num_crossings(); ++x) {
        const auto& e = d.crossings()[x].ends;
        for (int i = 0; i < 4; ++i)
          if (e[i] == e[(i + 1) % 4]) {
            s.crossing = x;
            out.push_back(s);
            break;
          }
      }
      break;
    case MoveKind::R2Push:
      for (const auto& f : d.faces())
        for (const auto& m : f.darts)
          for (const auto& t : f.darts) {
            if (d.arc_at(m) == d.arc_at(t)) continue;
            for (int over = 0; over < 2; ++over) {
              s.mover = m;
              s.target = t;
              s.mover_over = over;
              out.push_back(s);
            }
          }
      break;
    case MoveKind::R2Pull:
      for (const auto& f : d.faces()) {
        if (f.darts.size() != 2) continue;
        Slot a = f.darts[0], b = f.darts[1];
        if (a.crossing == b.crossing) continue;
        if (is_under_pos(a.pos) != is_under_pos(d.partner(a).pos)) continue;
        s.face = std::min(a, b);
        out.push_back(s);
      }
      break;
    case MoveKind::R3:
      for (const auto& f : d.faces()) {
        if (f.darts.size() != 3) continue;
        s.face = *std::min_element(f.darts.begin(), f.darts.end());
        try {
          triangle_at(d, s.face);
        } catch (const RewriteError&) {
          continue;
        }
        out.push_back(s);
      }
      break;
  }
  return out;
}

nlohmann::json to_json(const MoveSite& s) {
  nlohmann::json j{{"kind", to_string(s.kind)}};
  auto slot = [](Slot x) { return nlohmann::json::array({x.crossing, x.pos}); };
  switch (s.kind) {
    case MoveKind::R1Add:
      j["arc"] = s.arc;
      j["side"] = s.side;
      j["over_first"] = s.over_first;
      break;
    case MoveKind::R1Remove: j["crossing"] = s.crossing; break;
    case MoveKind::R2Push:
      j["mover"] = slot(s.mover);
      j["target"] = slot(s.target);
      j["mover_over"] = s.mover_over;
      break;
    case MoveKind::R2Pull:
    case MoveKind::R3: j["face"] = slot(s.face); break;
  }
  return j;
}

MoveSite move_site_from_json(const nlohmann::json& j) {
  MoveSite s;
  s.kind = move_kind_from_string(j.at("kind").get<std::string>());
  auto slot = [](const nlohmann::json& x) { return Slot{x.at(0).get<int>(), x.at(1).get<int>()}; };
  switch (s.kind) {
    case MoveKind::R1Add:
      s.arc = j.at("arc").get<int>();
      s.side = j.at("side").get<int>();
      s.over_first = j.at("over_first").get<bool>();
      break;
    case MoveKind::R1Remove: s.crossing = j.at("crossing").get<int>(); break;
    case MoveKind::R2Push:
      s.mover = slot(j.at("mover"));
      s.target = slot(j.at("target"));
      s.mover_over = j.at("mover_over").get<bool>();
      break;
    case MoveKind::R2Pull:
    case MoveKind::R3: s.face = slot(j.at("face")); break;
  }
  return s;
}

nlohmann::json to_json(const RewriteStep& s) {
  nlohmann::json fresh = nlohmann::json::array();
  for (auto [a, c] : s.new_colors) fresh.push_back({a, c});
  return {{"site", to_json(s.site)}, {"origin", s.origin}, {"new_colors", fresh}};
}

namespace {

Slot parse_slot(const std::string& tok) {
  auto dot = tok.find('.');
  if (dot == std::string::npos) bad_site("slot must look like CROSSING.POS: " + tok);
  try {
    return Slot{std::stoi(tok.substr(0, dot)), std::stoi(tok.substr(dot + 1))};
  } catch (const std::exception&) {
    bad_site("bad slot " + tok);
  }
}

int parse_number(const std::string& tok) {
  try {
    return std::stoi(tok);
  } catch (const std::exception&) {
    bad_site("bad number " + tok);
  }
}

}  // namespace

MoveSite parse_site_spec(const std::string& spec) {
  std::vector<std::string> parts;
  std::stringstream ss(spec);
  for (std::string tok; std::getline(ss, tok, ':');) parts.push_back(tok);
  if (parts.empty()) bad_site("empty site spec");
  MoveSite s;
  s.kind = move_kind_from_string(parts[0]);
  auto need = [&](std::size_t n) {
    if (parts.size() != n) bad_site("site spec '" + spec + "' has the wrong number of fields");
  };
  switch (s.kind) {
    case MoveKind::R1Add:
      need(4);
      s.arc = parse_number(parts[1]);
      s.side = parse_number(parts[2]);
      if (parts[3] != "over" && parts[3] != "under") bad_site("r1add needs over|under");
      s.over_first = parts[3] == "over";
      break;
    case MoveKind::R1Remove:
      need(2);
      s.crossing = parse_number(parts[1]);
      break;
    case MoveKind::R2Push:
      need(4);
      s.mover = parse_slot(parts[1]);
      s.target = parse_slot(parts[2]);
      if (parts[3] != "over" && parts[3] != "under") bad_site("r2push needs over|under");
      s.mover_over = parts[3] == "over";
      break;
    case MoveKind::R2Pull:
    case MoveKind::R3:
      need(2);
      s.face = parse_slot(parts[1]);
      break;
  }
  return s;
}

std::string site_spec(const MoveSite& s) {
  auto slot = [](Slot x) { return std::to_string(x.crossing) + "." + std::to_string(x.pos); };
  switch (s.kind) {
    case MoveKind::R1Add:
      return "r1add:" + std::to_string(s.arc) + ":" + std::to_string(s.side) + ":" +
             (s.over_first ? "over" : "under");
    case MoveKind::R1Remove: return "r1remove:" + std::to_string(s.crossing);
    case MoveKind::R2Push:
      return "r2push:" + slot(s.mover) + ":" + slot(s.target) + ":" + (s.mover_over ? "over" : "under");
    case MoveKind::R2Pull: return "r2pull:" + slot(s.face);
    case MoveKind::R3: return "r3:" + slot(s.face);
  }
  return {};
}

}  // namespace fox13
