#pragma once

#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "fox13/rewrite.hpp"
#include "fox13/tables.hpp"

namespace fox13 {

// One occurrence of the target color c.
//   Alpha: `crossing` is monochromatic; a is the over-color met where a
//          c-colored arc of that crossing's strand first passes under another
//          color (-1 if the c-colored part never does).
//   Beta:  `crossing` has over-color c; a is the color at under slot 0, so
//          the other under-arc is 2c - a.
//   Gamma/Delta: `arc` is colored c and is the under-arc at both of its ends;
//          a and b are the over-colors there (a != b for Gamma, a == b for Delta).
struct Instance {
  InstanceKind kind = InstanceKind::Alpha;
  int crossing = -1;
  ArcId arc = -1;
  int a = -1;
  int b = -1;
  int c = 0;

  friend bool operator==(const Instance&, const Instance&) = default;
};

class ColorAbsent : public std::invalid_argument {
 public:
  explicit ColorAbsent(int c) : std::invalid_argument("color " + std::to_string(c) + " is not in the palette") {}
};

// Alpha and Beta instances in crossing order, then Gamma/Delta in arc order.
std::vector<Instance> classify(const ColoredDiagram& cd, int c);

// ka*a + kb*b + kc*c over Z_p.
struct LinearForm {
  int ka = 0;
  int kb = 0;
  int kc = 0;

  int eval(int a, int b, int c, int p = 13) const noexcept;
  std::string to_string() const;
  friend bool operator==(const LinearForm&, const LinearForm&) = default;
};

enum class FormCoverage {
  Exact,       // every color the transformation produces is listed
  Partial,     // some produced colors are known, the list may be incomplete
  FigureOnly,  // nothing about the produced colors is recoverable
};

struct TransformationSpec {
  std::string name;  // "alpha1", "gamma14", "D3", ...
  InstanceKind kind = InstanceKind::Alpha;
  int index = 0;
  bool endgame = false;
  std::vector<LinearForm> produced;
  FormCoverage coverage = FormCoverage::FigureOnly;
};

const std::vector<TransformationSpec>& catalog();
const TransformationSpec* find_spec(InstanceKind kind, int index, bool endgame = false);
const TransformationSpec* find_spec(const std::string& name);

// True iff no produced form evaluates into `forbidden`.
bool guard_check(const TransformationSpec& spec, int a, int b, int c, std::span<const int> forbidden,
                 int p = 13);

struct Lookup {
  enum class Verdict { Covered, Impossible, NotCovered };
  Verdict verdict = Verdict::NotCovered;
  const TransformationSpec* spec = nullptr;
  bool swapped = false;
  std::string source;  // table id, or "guards" for the first two colors
};

// Colors that must not appear once `eliminated` are gone and c is the target.
std::vector<int> forbidden_colors(int c, std::span<const int> eliminated);

// The configuration is impossible when it forces a forbidden color on a
// neighbouring under-arc: 2c - a for Alpha/Beta, 2a - c for Delta, and
// 2a - c or 2b - c for Gamma.
bool is_impossible(InstanceKind kind, int a, int b, int c, std::span<const int> forbidden, int p = 13);

// Chooses the transformation for an instance. Colors 12 and 11 are settled by
// trying the text-specified transformations in order and checking their
// guards; later colors are read off the embedded tables.
Lookup catalog_lookup(const Instance& inst, std::span<const int> eliminated,
                      const TableSet& tables = embedded_tables());

}  // namespace fox13
