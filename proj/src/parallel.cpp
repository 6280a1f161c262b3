#include "fox13/parallel.hpp"

#include <omp.h>

#include <algorithm>
#include <bit>
#include <cstdint>
#include <cstdlib>
#include <set>

namespace fox13 {

int worker_threads() {
  if (const char* env = std::getenv("FOX13_THREADS")) {
    int n = std::atoi(env);
    if (n > 0) return n;
  }
  return std::max(1, omp_get_max_threads());
}

namespace {

struct Relation {
  int over, under_a, under_b;
};

std::vector<Relation> relations(const Diagram& d, const FoxArcs& arcs) {
  std::vector<Relation> out;
  for (const auto& x : d.crossings())
    out.push_back({arcs.of_arc[x.over_a()], arcs.of_arc[x.under_a()], arcs.of_arc[x.under_b()]});
  return out;
}

bool satisfies(const std::vector<Relation>& rel, const std::vector<int>& v, int p) {
  for (const auto& r : rel)
    if ((2 * v[r.over] - v[r.under_a] - v[r.under_b]) % p != 0) return false;
  return true;
}

// Counts assignments with the first `fixed` coordinates of v held and the rest
// enumerated by an odometer.
long long count_suffix(const std::vector<Relation>& rel, std::vector<int> v, int fixed, int p) {
  const int n = static_cast<int>(v.size());
  long long count = 0;
  for (int i = fixed; i < n; ++i) v[i] = 0;
  while (true) {
    if (satisfies(rel, v, p)) ++count;
    int i = n - 1;
    while (i >= fixed && ++v[i] == p) v[i--] = 0;
    if (i < fixed) return count;
  }
}

void check_modulus(int p) {
  if (p < 2 || p > 63) throw std::invalid_argument("modulus out of range for exhaustive enumeration");
}

}  // namespace

long long count_colorings_serial(const Diagram& d, int p) {
  check_modulus(p);
  auto arcs = d.fox_arcs();
  auto rel = relations(d, arcs);
  if (arcs.count == 0) return 1;
  return count_suffix(rel, std::vector<int>(static_cast<std::size_t>(arcs.count), 0), 0, p);
}

long long count_colorings_parallel(const Diagram& d, int p) {
  check_modulus(p);
  auto arcs = d.fox_arcs();
  auto rel = relations(d, arcs);
  const int n = arcs.count;
  if (n == 0) return 1;
  const int fixed = std::min(n, 2);
  long long prefixes = 1;
  for (int i = 0; i < fixed; ++i) prefixes *= p;
  long long total = 0;
#pragma omp parallel for schedule(dynamic) reduction(+ : total) num_threads(worker_threads())
  for (long long k = 0; k < prefixes; ++k) {
    std::vector<int> v(static_cast<std::size_t>(n), 0);
    long long rest = k;
    for (int i = fixed - 1; i >= 0; --i) {
      v[i] = static_cast<int>(rest % p);
      rest /= p;
    }
    total += fixed == n ? (satisfies(rel, v, p) ? 1 : 0) : count_suffix(rel, v, fixed, p);
  }
  return total;
}

namespace {

struct ScanPart {
  long long colorings = 0;
  long long nontrivial = 0;
  int min_palette = 0;
  std::set<std::uint64_t> min_masks;
  std::vector<long long> histogram;
};

// Scans coefficient vectors with linear indices in [begin, end).
ScanPart scan_range(const ColoringSpace& space, long long begin, long long end) {
  const int p = space.p;
  const int dim = space.dimension();
  const int n = space.arcs.count;
  ScanPart part;
  part.histogram.assign(static_cast<std::size_t>(p + 1), 0);
  std::vector<int> coeff(static_cast<std::size_t>(dim));
  std::vector<int> values(static_cast<std::size_t>(n));
  for (long long idx = begin; idx < end; ++idx) {
    long long rest = idx;
    for (int i = dim - 1; i >= 0; --i) {
      coeff[i] = static_cast<int>(rest % p);
      rest /= p;
    }
    std::fill(values.begin(), values.end(), 0);
    for (int i = 0; i < dim; ++i) {
      if (coeff[i] == 0) continue;
      for (int k = 0; k < n; ++k) values[k] = (values[k] + coeff[i] * space.basis[i][k]) % p;
    }
    std::uint64_t mask = 0;
    for (int v : values) mask |= std::uint64_t{1} << v;
    const int size = std::popcount(mask);
    ++part.colorings;
    ++part.histogram[size];
    if (size < 2) continue;
    ++part.nontrivial;
    if (part.min_palette == 0 || size < part.min_palette) {
      part.min_palette = size;
      part.min_masks.clear();
    }
    if (size == part.min_palette) part.min_masks.insert(mask);
  }
  return part;
}

KernelScan finish(std::vector<ScanPart>& parts, int p) {
  KernelScan out;
  out.size_histogram.assign(static_cast<std::size_t>(p + 1), 0);
  std::set<std::uint64_t> masks;
  for (auto& part : parts) {
    out.colorings += part.colorings;
    out.nontrivial += part.nontrivial;
    for (std::size_t i = 0; i < part.histogram.size(); ++i) out.size_histogram[i] += part.histogram[i];
    if (part.min_palette == 0) continue;
    if (out.min_palette == 0 || part.min_palette < out.min_palette) {
      out.min_palette = part.min_palette;
      masks.clear();
    }
    if (part.min_palette == out.min_palette) masks.insert(part.min_masks.begin(), part.min_masks.end());
  }
  std::vector<Palette> pals;
  for (auto m : masks) {
    Palette s;
    for (int v = 0; v < p; ++v)
      if (m >> v & 1) s.push_back(v);
    pals.push_back(std::move(s));
  }
  std::sort(pals.begin(), pals.end());
  out.min_palettes = std::move(pals);
  return out;
}

long long kernel_size(const ColoringSpace& space) {
  check_modulus(space.p);
  long long total = 1;
  for (int i = 0; i < space.dimension(); ++i) total *= space.p;
  return total;
}

}  // namespace

KernelScan scan_kernel_serial(const ColoringSpace& space) {
  std::vector<ScanPart> parts{scan_range(space, 0, kernel_size(space))};
  return finish(parts, space.p);
}

KernelScan scan_kernel_parallel(const ColoringSpace& space) {
  const long long total = kernel_size(space);
  const int threads = worker_threads();
  const long long chunks = std::max<long long>(1, std::min<long long>(total, 64LL * threads));
  std::vector<ScanPart> parts(static_cast<std::size_t>(chunks));
#pragma omp parallel for schedule(dynamic) num_threads(threads)
  for (long long k = 0; k < chunks; ++k) parts[k] = scan_range(space, total * k / chunks, total * (k + 1) / chunks);
  return finish(parts, space.p);
}

}  // namespace fox13
