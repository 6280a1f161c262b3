#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "fox13/coloring.hpp"
#include "fox13/diagram.hpp"
#include "json.hpp"

namespace fox13 {

struct ColoredDiagram {
  Diagram diagram;
  Coloring coloring;
};

enum class MoveKind { R1Add, R1Remove, R2Push, R2Pull, R3 };

std::string to_string(MoveKind k);
MoveKind move_kind_from_string(const std::string& s);

// Combinatorial address of a Reidemeister move. Only the fields relevant to
// `kind` are read.
struct MoveSite {
  MoveKind kind = MoveKind::R1Add;
  // R1Add: arc receiving the kink, which of its two sides the loop bulges
  // into, and whether the strand meets the new crossing on its over-strand
  // first (this fixes the handedness of the kink).
  ArcId arc = -1;
  int side = 0;
  bool over_first = false;
  // R1Remove: the kinked crossing.
  int crossing = -1;
  // R2Push: darts of the mover and target arcs in their shared face.
  Slot mover{};
  Slot target{};
  bool mover_over = false;
  // R2Pull: a dart of the bigon face. R3: a dart of the triangle face.
  Slot face{};

  friend bool operator==(const MoveSite&, const MoveSite&) = default;
};

// One applied move. origin[a] is the arc of the previous diagram that arc a of
// the new diagram continues (inheriting its color), or -1 for an arc whose
// color was forced by the crossing relations.
struct RewriteStep {
  MoveSite site;
  std::vector<int> origin;
  std::vector<std::pair<ArcId, int>> new_colors;
};

enum class RewriteErrorKind { BadSite, NotCofacial, PatternMismatch, NoValidColoring };

class RewriteError : public std::runtime_error {
 public:
  RewriteError(RewriteErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  RewriteErrorKind kind() const noexcept { return kind_; }

 private:
  RewriteErrorKind kind_;
};

struct MoveResult {
  ColoredDiagram after;
  RewriteStep step;
};

// Applies the move and transports the coloring with local formulas.
MoveResult apply_move(const ColoredDiagram& cd, const MoveSite& site);

ColoredDiagram r1_add(const ColoredDiagram& cd, ArcId arc, int side, bool over_first);
ColoredDiagram r1_remove(const ColoredDiagram& cd, int crossing);
// Pushes a finger of `mover` across `target`, both on face `face_index` of
// cd.diagram.faces(). Under: the new middle piece of the mover is 2b - a.
// Over: the new middle piece of the target is 2a - t.
// Color of the arc an R2 push creates: the under-strand piece between the
// two new crossings reflects through the over-strand.
constexpr int r2_push_color(int over, int under, int p) noexcept { return mod_p(2LL * over - under, p); }

ColoredDiagram r2_push(const ColoredDiagram& cd, ArcId mover, ArcId target, int face_index,
                       bool mover_over);
ColoredDiagram r2_pull(const ColoredDiagram& cd, const MoveSite& site);
ColoredDiagram r3_slide(const ColoredDiagram& cd, const MoveSite& site);

// The unique coloring of the rewritten diagram that agrees with c_before on
// every persistent arc, found by solving the crossing relations over Z_p.
// Throws NoValidColoring when no solution or more than one exists.
Coloring transport_coloring(const Diagram& d_before, const Coloring& c_before,
                            const RewriteStep& step);

// Diagram part of a move, without colors: the rewritten diagram plus origins.
std::pair<Diagram, std::vector<int>> rewrite_diagram(const Diagram& d, const MoveSite& site);

// Every legal site of the given kind, in a deterministic order.
std::vector<MoveSite> legal_sites(const Diagram& d, MoveKind kind);

nlohmann::json to_json(const MoveSite& s);
MoveSite move_site_from_json(const nlohmann::json& j);
nlohmann::json to_json(const RewriteStep& s);

// Compact site spec used on the command line, e.g. "r2push:0.1:3.0:under".
MoveSite parse_site_spec(const std::string& spec);
std::string site_spec(const MoveSite& s);

}  // namespace fox13
