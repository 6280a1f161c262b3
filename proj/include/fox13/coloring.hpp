#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "fox13/diagram.hpp"
#include "fox13/smith.hpp"
#include "json.hpp"

namespace fox13 {

// Coefficient matrix of the crossing relations: one row per crossing, one
// column per over-strand class. Each row accumulates +2 on the over-arc and
// -1 on each under-arc, so a kink row can collapse to zeros.
struct ColoringMatrix {
  IntMatrix matrix;
  FoxArcs arcs;
};

ColoringMatrix build_matrix(const Diagram& d);

// Product of the Smith diagonal with one structural zero removed; 0 when the
// coloring matrix has corank above one (split links and other zero-determinant
// links).
BigInt determinant(const Diagram& d);
BigInt determinant(const SmithForm& s, int cols);

// ---------------------------------------------------------------------------
// Arithmetic over Z_p

constexpr int mod_p(long long v, int p) noexcept {
  long long r = v % p;
  return static_cast<int>(r < 0 ? r + p : r);
}
int inverse_mod(int v, int p);
bool is_prime(int p) noexcept;

using ModMatrix = std::vector<std::vector<int>>;

// Reduces rows in place to reduced row echelon form; returns pivot columns.
std::vector<int> rref_mod(ModMatrix& rows, int cols, int p);
int rank_mod(ModMatrix rows, int cols, int p);
// Basis of the right kernel, one vector per free column, in RREF order.
ModMatrix nullspace_mod(ModMatrix rows, int cols, int p);

// ---------------------------------------------------------------------------
// Colorings

// Fox coloring stored per PD arc (arcs sharing an over-strand agree).
struct Coloring {
  int p = 13;
  std::vector<int> colors;

  friend bool operator==(const Coloring&, const Coloring&) = default;
};

// Sorted set of colors in use.
using Palette = std::vector<int>;

bool is_valid_coloring(const Diagram& d, const Coloring& c);
// Index of the first crossing violating the relation, or -1.
int first_violation(const Diagram& d, const Coloring& c);

struct ColoringSpace {
  int p = 13;
  FoxArcs arcs;
  // Over over-strand classes. The constant vector comes first, followed by the
  // reduced echelon basis of kernel vectors vanishing on class 0.
  ModMatrix basis;

  int dimension() const noexcept { return static_cast<int>(basis.size()); }
};

ColoringSpace solve_colorings(const Diagram& d, int p);

// Linear combination of the basis, expanded to a per-arc coloring.
Coloring combine(const ColoringSpace& space, std::span<const int> coefficients);
Coloring coloring_from_classes(const ColoringSpace& space, std::span<const int> class_values);
// First nontrivial coloring (second basis vector), if the space has one.
std::optional<Coloring> first_nontrivial(const ColoringSpace& space);

bool is_nontrivial(const Coloring& c);
Palette palette(const Coloring& c);
Palette affine_image(const Palette& s, int lambda, int mu, int p);
Coloring affine_map(const Coloring& c, int lambda, int mu);

// {"p": 13, "colors": {"<label>": value, ...}}, keyed by the diagram's labels.
nlohmann::json coloring_to_json(const Diagram& d, const Coloring& c);
Coloring coloring_from_json(const Diagram& d, const nlohmann::json& j);

}  // namespace fox13
