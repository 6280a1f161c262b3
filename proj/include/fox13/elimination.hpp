#pragma once

#include <array>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "fox13/catalog.hpp"
#include "fox13/rewrite.hpp"

namespace fox13 {

inline constexpr std::array<int, 8> kEliminationOrder{12, 11, 6, 3, 4, 8, 9, 2};
inline constexpr std::array<int, 5> kFinalPalette{0, 1, 5, 7, 10};

struct SearchOptions {
  long budget = 100000;       // node expansions per color
  long initial_budget = 200;  // first pass of run_sequence; doubles up to budget
  int crossing_slack = 16;  // crossings allowed above the starting diagram
  bool parallel = true;     // evaluate successors with OpenMP
  bool simplify = true;     // strip bigons and kinks once the color is gone
  // Fresh arcs only take colors of kFinalPalette or colors already present,
  // so the search does not create work for later stages.
  bool conservative = false;
  // Wall-clock seconds for run_sequence before it gives up between
  // normalizations; 0 means no limit.
  double time_limit = 0;
};

struct EliminationTrace {
  int target = 0;
  std::vector<int> eliminated;  // colors removed before this one
  ColoredDiagram start;
  std::vector<RewriteStep> steps;
  std::vector<Palette> palettes;  // palette after each step
  ColoredDiagram final;
  bool success = false;
  long expansions = 0;
};

class BudgetExhausted : public std::runtime_error {
 public:
  BudgetExhausted(const std::string& what, EliminationTrace best)
      : std::runtime_error(what), best_(std::move(best)) {}
  const EliminationTrace& best() const noexcept { return best_; }

 private:
  EliminationTrace best_;
};

class ZeroDeterminant : public std::invalid_argument {
 public:
  ZeroDeterminant() : std::invalid_argument("link has determinant 0") {}
};

// Crossing slots filled by arcs colored c, plus crossingless loops colored c.
int target_occurrences(const ColoredDiagram& cd, int c);

// Best-first search over primitive moves for a diagram without color c. New
// colors may only come from the colors outside `eliminated` and c. Throws
// BudgetExhausted with the best trace found.
EliminationTrace eliminate_color(const ColoredDiagram& cd, int c, std::span<const int> eliminated,
                                 const SearchOptions& opts = {});

struct SequenceResult {
  int lambda = 1;  // working coloring = lambda * input + mu
  int mu = 0;
  int attempts = 0;   // normalizations tried, over all passes
  long budget = 0;    // per-color budget of the successful pass
  std::vector<EliminationTrace> traces;  // one per color of kEliminationOrder
  ColoredDiagram final;                  // in working coordinates
  Palette normalized;                    // final palette, working coordinates
  Palette raw;                           // final palette, input coordinates
};

// Every (lambda, mu), ranked for the elimination: fewest colors outside
// kFinalPalette first, then the last of them earliest in kEliminationOrder,
// then the fewest colors of kFinalPalette still to be introduced.
std::vector<std::pair<int, int>> normalization_order(const Palette& palette);
std::pair<int, int> choose_normalization(const Palette& palette);

// Removes the colors of kEliminationOrder one at a time in working
// coordinates lambda * input + mu. Normalizations are tried in ranked order
// with a per-color budget of initial_budget, doubling to budget after each
// full pass; the first normalization whose every stage succeeds wins. Each
// stage runs a conservative search first and the full one if that fails.
// Throws the top-ranked normalization's BudgetExhausted when none succeeds
// within the budget or the time limit.
SequenceResult run_sequence(const ColoredDiagram& cd, const SearchOptions& opts = {});

// Replays the steps from trace.start, re-checking every transported coloring
// and the determinant. Returns the final colored diagram; throws
// std::runtime_error on the first mismatch.
ColoredDiagram replay(const EliminationTrace& trace);

nlohmann::json to_json(const ColoredDiagram& cd);
ColoredDiagram colored_diagram_from_json(const nlohmann::json& j);
nlohmann::json to_json(const EliminationTrace& t);
EliminationTrace trace_from_json(const nlohmann::json& j);

}  // namespace fox13
