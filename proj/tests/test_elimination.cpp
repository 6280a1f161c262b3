#include "doctest.h"
#include "fox13/elimination.hpp"
#include "fox13/palettes.hpp"
#include "knots.hpp"

using namespace fox13;

namespace {

ColoredDiagram colored(const char* pd) {
  Diagram d = parse_pd(pd);
  return {d, first_nontrivial(solve_colorings(d, 13)).value()};
}

const Palette kTarget(kFinalPalette.begin(), kFinalPalette.end());

}  // namespace

TEST_CASE("target occurrences count slots and loops") {
  ColoredDiagram cd = colored(knots::k73);
  int total = 0;
  for (int c = 0; c < 13; ++c) total += target_occurrences(cd, c);
  CHECK(total == 4 * cd.diagram.num_crossings());
}

TEST_CASE("normalization order ranks all 156 maps, fewest extras first") {
  auto order = normalization_order({0, 1, 2, 3, 4, 5, 6});
  CHECK(order.size() == 156);
  std::set<std::pair<int, int>> distinct(order.begin(), order.end());
  CHECK(distinct.size() == 156);
  // The final palette itself needs no elimination under the identity.
  auto id = normalization_order(kTarget);
  CHECK(affine_image(kTarget, id.front().first, id.front().second, 13) == kTarget);
  CHECK(choose_normalization(kTarget) == id.front());
}

TEST_CASE("eliminating an absent color is an empty trace") {
  ColoredDiagram cd = colored(knots::k73);
  int absent = 0;
  while (target_occurrences(cd, absent) > 0) ++absent;
  EliminationTrace t = eliminate_color(cd, absent, {});
  CHECK(t.success);
  CHECK(t.steps.empty());
}

TEST_CASE("6_3 reaches a five-color palette and the traces replay") {
  SequenceResult r = run_sequence(colored(knots::k63));
  CHECK(r.normalized == kTarget);
  CHECK(affine_equivalent(r.raw, kTarget, 13));
  CHECK(r.traces.size() == kEliminationOrder.size());
  CHECK(is_valid_coloring(r.final.diagram, r.final.coloring));
  CHECK(determinant(r.final.diagram) == 13);
  std::vector<int> eliminated;
  for (const auto& t : r.traces) {
    CHECK(t.eliminated == eliminated);
    CHECK(replay(t).coloring == t.final.coloring);
    CHECK(target_occurrences(t.final, t.target) == 0);
    for (const auto& pal : t.palettes)
      for (int gone : eliminated) CHECK_FALSE(std::binary_search(pal.begin(), pal.end(), gone));
    eliminated.push_back(t.target);
    // JSON traces replay to the same end.
    EliminationTrace back = trace_from_json(to_json(t));
    CHECK(replay(back).coloring == t.final.coloring);
  }
}

TEST_CASE("run_sequence preconditions") {
  ColoredDiagram split{parse_pd(knots::kSplitTrefoils), {}};
  split.coloring.colors.assign(split.diagram.num_arcs(), 0);
  CHECK_THROWS_AS(run_sequence(split), ZeroDeterminant);
  ColoredDiagram trivial = colored(knots::k73);
  trivial.coloring.colors.assign(trivial.diagram.num_arcs(), 3);
  CHECK_THROWS_AS(run_sequence(trivial), std::invalid_argument);
}

TEST_CASE("a tiny budget is reported as exhaustion") {
  SearchOptions o;
  o.budget = 1;
  o.initial_budget = 1;
  ColoredDiagram cd = colored(knots::k73);
  CHECK_THROWS_AS(run_sequence(cd, o), BudgetExhausted);
}

TEST_CASE("a tampered trace fails replay") {
  SequenceResult r = run_sequence(colored(knots::k63));
  for (const auto& t : r.traces) {
    if (t.steps.empty()) continue;
    EliminationTrace bad = t;
    bad.steps[0].new_colors.push_back({0, 99});
    CHECK_THROWS(replay(bad));
    break;
  }
}
