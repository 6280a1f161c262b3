#pragma once

#include <vector>

#include "fox13/coloring.hpp"

namespace fox13 {

// Thread cap from FOX13_THREADS, else the OpenMP default.
int worker_threads();

// Exhaustive count of per-Fox-arc assignments in Z_p^n that satisfy every
// crossing relation. Independent of the linear algebra; p^n work.
long long count_colorings_serial(const Diagram& d, int p);
long long count_colorings_parallel(const Diagram& d, int p);

// Summary of every coloring in a kernel, enumerated as coefficient vectors.
struct KernelScan {
  long long colorings = 0;
  long long nontrivial = 0;
  int min_palette = 0;                // over nontrivial colorings; 0 if none
  std::vector<Palette> min_palettes;  // distinct, sorted
  std::vector<long long> size_histogram;  // index = palette size

  friend bool operator==(const KernelScan&, const KernelScan&) = default;
};

KernelScan scan_kernel_serial(const ColoringSpace& space);
KernelScan scan_kernel_parallel(const ColoringSpace& space);

}  // namespace fox13
