#include "doctest.h"
#include "fox13/rewrite.hpp"
#include "knots.hpp"

using namespace fox13;

namespace {

ColoredDiagram colored(const char* pd) {
  Diagram d = parse_pd(pd);
  return {d, first_nontrivial(solve_colorings(d, 13)).value()};
}

bool same_colored(const ColoredDiagram& a, const ColoredDiagram& b) {
  return canonical_code(a.diagram, a.coloring.colors) == canonical_code(b.diagram, b.coloring.colors);
}

}  // namespace

TEST_CASE("every legal site of every kind preserves validity and determinant") {
  for (const char* pd : {knots::k63, knots::k73}) {
    ColoredDiagram cd = colored(pd);
    const BigInt det = determinant(cd.diagram);
    for (MoveKind k : {MoveKind::R1Add, MoveKind::R1Remove, MoveKind::R2Push, MoveKind::R2Pull, MoveKind::R3}) {
      for (const auto& site : legal_sites(cd.diagram, k)) {
        MoveResult r = apply_move(cd, site);
        INFO(site_spec(site));
        CHECK(is_valid_coloring(r.after.diagram, r.after.coloring));
        CHECK(euler_check(r.after.diagram));
        CHECK(determinant(r.after.diagram) == det);
        CHECK(transport_coloring(cd.diagram, cd.coloring, r.step) == r.after.coloring);
        CHECK(parse_site_spec(site_spec(site)) == site);
        CHECK(move_site_from_json(to_json(site)) == site);
      }
    }
  }
}

TEST_CASE("an R2 push creates exactly the reflected color") {
  ColoredDiagram cd = colored(knots::k73);
  const auto& col = cd.coloring.colors;
  for (const auto& site : legal_sites(cd.diagram, MoveKind::R2Push)) {
    MoveResult r = apply_move(cd, site);
    const int m = col[cd.diagram.arc_at(site.mover)];
    const int t = col[cd.diagram.arc_at(site.target)];
    const int fresh = site.mover_over ? r2_push_color(m, t, 13) : r2_push_color(t, m, 13);
    REQUIRE(r.step.new_colors.size() == 1);
    CHECK(r.step.new_colors[0].second == fresh);
  }
}

TEST_CASE("crossing counts change by the move's size") {
  ColoredDiagram cd = colored(knots::k73);
  const int n = cd.diagram.num_crossings();
  auto first = [&](MoveKind k) { return legal_sites(cd.diagram, k).at(0); };
  CHECK(apply_move(cd, first(MoveKind::R1Add)).after.diagram.num_crossings() == n + 1);
  CHECK(apply_move(cd, first(MoveKind::R2Push)).after.diagram.num_crossings() == n + 2);
  CHECK(legal_sites(cd.diagram, MoveKind::R1Remove).empty());
  CHECK(legal_sites(cd.diagram, MoveKind::R2Pull).empty());
}

TEST_CASE("a kink added then removed gives back the colored diagram") {
  ColoredDiagram cd = colored(knots::k63);
  for (const auto& site : legal_sites(cd.diagram, MoveKind::R1Add)) {
    ColoredDiagram k = apply_move(cd, site).after;
    bool undone = false;
    for (const auto& rm : legal_sites(k.diagram, MoveKind::R1Remove))
      undone = undone || same_colored(apply_move(k, rm).after, cd);
    CHECK(undone);
    // A kink keeps the color of its arc.
    CHECK(palette(k.coloring) == palette(cd.coloring));
  }
}

TEST_CASE("a finger push is undone by a pull of its bigon") {
  ColoredDiagram cd = colored(knots::k73);
  for (const auto& site : legal_sites(cd.diagram, MoveKind::R2Push)) {
    MoveResult pushed = apply_move(cd, site);
    bool undone = false;
    for (const auto& pull : legal_sites(pushed.after.diagram, MoveKind::R2Pull))
      undone = undone || same_colored(apply_move(pushed.after, pull).after, cd);
    CHECK(undone);
    // The new under-arc is 2 * over - under.
    CHECK(pushed.step.new_colors.size() >= 1);
  }
}

TEST_CASE("R3 applied twice on the same triangle returns the diagram") {
  ColoredDiagram cd = colored(knots::k73);
  for (const auto& site : legal_sites(cd.diagram, MoveKind::R2Push)) {
    ColoredDiagram pushed = apply_move(cd, site).after;
    for (const auto& r3 : legal_sites(pushed.diagram, MoveKind::R3)) {
      ColoredDiagram once = apply_move(pushed, r3).after;
      bool back = false;
      for (const auto& again : legal_sites(once.diagram, MoveKind::R3))
        back = back || same_colored(apply_move(once, again).after, pushed);
      CHECK(back);
    }
  }
}

TEST_CASE("bad sites are rejected") {
  ColoredDiagram cd = colored(knots::k63);
  MoveSite s;
  s.kind = MoveKind::R1Remove;
  s.crossing = 0;
  CHECK_THROWS_AS(apply_move(cd, s), RewriteError);
  CHECK_THROWS(parse_site_spec("nonsense"));
}
