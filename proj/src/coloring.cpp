#include "fox13/coloring.hpp"

#include <algorithm>
#include <optional>

namespace fox13 {

ColoringMatrix build_matrix(const Diagram& d) {
  ColoringMatrix out;
  out.arcs = d.fox_arcs();
  out.matrix = IntMatrix(d.num_crossings(), out.arcs.count);
  for (int x = 0; x < d.num_crossings(); ++x) {
    const auto& c = d.crossings()[x];
    out.matrix(x, out.arcs.of_arc[c.over_a()]) += 2;
    out.matrix(x, out.arcs.of_arc[c.under_a()]) -= 1;
    out.matrix(x, out.arcs.of_arc[c.under_b()]) -= 1;
  }
  return out;
}

BigInt determinant(const SmithForm& s, int cols) {
  if (cols - s.rank != 1) return 0;
  BigInt product = 1;
  for (int i = 0; i < s.rank; ++i) product *= s.diag[static_cast<std::size_t>(i)];
  return product;
}

BigInt determinant(const Diagram& d) {
  auto m = build_matrix(d);
  return determinant(smith_normal_form(m.matrix), m.matrix.cols());
}

int inverse_mod(int v, int p) {
  v = mod_p(v, p);
  if (v == 0) throw std::domain_error("zero has no inverse");
  // Extended Euclid on (v, p).
  long long t = 0, new_t = 1, r = p, new_r = v;
  while (new_r != 0) {
    long long q = r / new_r;
    t -= q * new_t;
    std::swap(t, new_t);
    r -= q * new_r;
    std::swap(r, new_r);
  }
  if (r != 1) throw std::domain_error("value not invertible modulo p");
  return mod_p(t, p);
}

bool is_prime(int p) noexcept {
  if (p < 2) return false;
  for (int q = 2; q * q <= p; ++q)
    if (p % q == 0) return false;
  return true;
}

std::vector<int> rref_mod(ModMatrix& rows, int cols, int p) {
  std::vector<int> pivots;
  std::size_t r = 0;
  for (int c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t found = r;
    while (found < rows.size() && rows[found][c] == 0) ++found;
    if (found == rows.size()) continue;
    std::swap(rows[r], rows[found]);
    int inv = inverse_mod(rows[r][c], p);
    for (int& v : rows[r]) v = mod_p(static_cast<long long>(v) * inv, p);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      int f = rows[i][c];
      for (int k = 0; k < cols; ++k)
        rows[i][k] = mod_p(rows[i][k] - static_cast<long long>(f) * rows[r][k], p);
    }
    pivots.push_back(c);
    ++r;
  }
  rows.resize(r);
  return pivots;
}

int rank_mod(ModMatrix rows, int cols, int p) {
  return static_cast<int>(rref_mod(rows, cols, p).size());
}

ModMatrix nullspace_mod(ModMatrix rows, int cols, int p) {
  auto pivots = rref_mod(rows, cols, p);
  std::vector<int> pivot_row(static_cast<std::size_t>(cols), -1);
  for (std::size_t i = 0; i < pivots.size(); ++i) pivot_row[pivots[i]] = static_cast<int>(i);
  ModMatrix basis;
  for (int free = 0; free < cols; ++free) {
    if (pivot_row[free] >= 0) continue;
    std::vector<int> v(static_cast<std::size_t>(cols), 0);
    v[free] = 1;
    for (int c = 0; c < cols; ++c)
      if (pivot_row[c] >= 0) v[c] = mod_p(-rows[pivot_row[c]][free], p);
    basis.push_back(std::move(v));
  }
  return basis;
}

bool is_valid_coloring(const Diagram& d, const Coloring& c) { return first_violation(d, c) < 0; }

int first_violation(const Diagram& d, const Coloring& c) {
  if (static_cast<int>(c.colors.size()) != d.num_arcs()) return 0;
  for (int x = 0; x < d.num_crossings(); ++x) {
    const auto& k = d.crossings()[x];
    int o = c.colors[k.over_a()];
    if (o != c.colors[k.over_b()]) return x;
    if (mod_p(2LL * o - c.colors[k.under_a()] - c.colors[k.under_b()], c.p) != 0) return x;
  }
  return -1;
}

ColoringSpace solve_colorings(const Diagram& d, int p) {
  if (!is_prime(p)) throw std::invalid_argument("modulus must be prime");
  auto cm = build_matrix(d);
  const int n = cm.arcs.count;
  ModMatrix rows;
  for (int r = 0; r < cm.matrix.rows(); ++r) {
    std::vector<int> row(static_cast<std::size_t>(n));
    for (int c = 0; c < n; ++c) row[c] = mod_p(static_cast<long long>(cm.matrix(r, c) % p), p);
    rows.push_back(std::move(row));
  }
  ColoringSpace s;
  s.p = p;
  s.arcs = cm.arcs;
  s.basis.push_back(std::vector<int>(static_cast<std::size_t>(n), 1));
  // Kernel vectors with class 0 pinned to zero: add the row e_0.
  if (n > 0) {
    std::vector<int> pin(static_cast<std::size_t>(n), 0);
    pin[0] = 1;
    rows.push_back(pin);
  }
  auto rest = nullspace_mod(rows, n, p);
  // Reduce the complement basis itself to RREF for a deterministic output.
  if (!rest.empty()) {
    rref_mod(rest, n, p);
    for (auto& v : rest) s.basis.push_back(std::move(v));
  }
  return s;
}

Coloring coloring_from_classes(const ColoringSpace& space, std::span<const int> class_values) {
  Coloring c;
  c.p = space.p;
  c.colors.resize(space.arcs.of_arc.size());
  for (std::size_t a = 0; a < c.colors.size(); ++a)
    c.colors[a] = mod_p(class_values[space.arcs.of_arc[a]], space.p);
  return c;
}

Coloring combine(const ColoringSpace& space, std::span<const int> coefficients) {
  std::vector<long long> acc(static_cast<std::size_t>(space.arcs.count), 0);
  for (std::size_t i = 0; i < coefficients.size() && i < space.basis.size(); ++i)
    for (int k = 0; k < space.arcs.count; ++k) acc[k] += static_cast<long long>(coefficients[i]) * space.basis[i][k];
  std::vector<int> values(acc.size());
  for (std::size_t k = 0; k < acc.size(); ++k) values[k] = mod_p(acc[k], space.p);
  return coloring_from_classes(space, values);
}

std::optional<Coloring> first_nontrivial(const ColoringSpace& space) {
  if (space.dimension() < 2) return std::nullopt;
  std::vector<int> coeff(static_cast<std::size_t>(space.dimension()), 0);
  coeff[1] = 1;
  return combine(space, coeff);
}

bool is_nontrivial(const Coloring& c) {
  return std::adjacent_find(c.colors.begin(), c.colors.end(), std::not_equal_to<>()) != c.colors.end();
}

Palette palette(const Coloring& c) {
  Palette s = c.colors;
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

Palette affine_image(const Palette& s, int lambda, int mu, int p) {
  Palette out;
  out.reserve(s.size());
  for (int v : s) out.push_back(mod_p(static_cast<long long>(lambda) * v + mu, p));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Coloring affine_map(const Coloring& c, int lambda, int mu) {
  Coloring out = c;
  for (int& v : out.colors) v = mod_p(static_cast<long long>(lambda) * v + mu, c.p);
  return out;
}

nlohmann::json coloring_to_json(const Diagram& d, const Coloring& c) {
  nlohmann::json colors = nlohmann::json::object();
  for (ArcId a = 0; a < d.num_arcs(); ++a) colors[std::to_string(d.labels()[a])] = c.colors[a];
  return {{"p", c.p}, {"colors", colors}};
}

Coloring coloring_from_json(const Diagram& d, const nlohmann::json& j) {
  Coloring c;
  c.p = j.at("p").get<int>();
  c.colors.assign(static_cast<std::size_t>(d.num_arcs()), -1);
  const auto& colors = j.at("colors");
  for (ArcId a = 0; a < d.num_arcs(); ++a) {
    auto key = std::to_string(d.labels()[a]);
    if (!colors.contains(key))
      throw std::invalid_argument("coloring JSON lacks arc " + key);
    c.colors[a] = mod_p(colors[key].get<long long>(), c.p);
  }
  return c;
}

}  // namespace fox13
