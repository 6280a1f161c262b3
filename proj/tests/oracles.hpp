#pragma once

// Reference computations that share no code with the library: PD codes are
// re-parsed here, over-strands are merged by union-find, and ranks come from
// plain Gaussian elimination or exhaustive enumeration.

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>
#include <regex>
#include <string>
#include <vector>

namespace oracle {

struct Relation {
  int over, under_in, under_out;  // Fox-arc indices
};

struct FoxSystem {
  int arcs = 0;
  std::vector<Relation> relations;
};

// X(a,b,c,d): a and c are the under-ends, b and d the two ends of the over-strand.
inline FoxSystem fox_system(const std::string& pd) {
  std::vector<std::array<int, 4>> xs;
  std::regex re(R"(X\(\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*\))");
  int max_label = 0;
  for (auto it = std::sregex_iterator(pd.begin(), pd.end(), re); it != std::sregex_iterator(); ++it) {
    std::array<int, 4> x{};
    for (int i = 0; i < 4; ++i) {
      x[i] = std::stoi((*it)[i + 1]);
      max_label = std::max(max_label, x[i]);
    }
    xs.push_back(x);
  }
  std::vector<int> parent(max_label + 1);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (const auto& x : xs) parent[find(x[1])] = find(x[3]);
  std::vector<int> index(max_label + 1, -1);
  FoxSystem s;
  for (const auto& x : xs)
    for (int l : x)
      if (index[find(l)] < 0) index[find(l)] = s.arcs++;
  for (const auto& x : xs) s.relations.push_back({index[find(x[1])], index[find(x[0])], index[find(x[2])]});
  return s;
}

inline int mod(long long v, int p) { return static_cast<int>(((v % p) + p) % p); }

inline int inverse(int v, int p) {
  for (int x = 1; x < p; ++x)
    if (v * x % p == 1) return x;
  return 0;
}

// Nullity of the relation matrix over Z_p by Gaussian elimination.
inline int nullity(const FoxSystem& s, int p) {
  std::vector<std::vector<int>> rows;
  for (const auto& r : s.relations) {
    std::vector<int> row(s.arcs, 0);
    row[r.over] = mod(row[r.over] + 2, p);
    row[r.under_in] = mod(row[r.under_in] - 1, p);
    row[r.under_out] = mod(row[r.under_out] - 1, p);
    rows.push_back(row);
  }
  int rank = 0;
  for (int col = 0; col < s.arcs && rank < static_cast<int>(rows.size()); ++col) {
    int piv = -1;
    for (int i = rank; i < static_cast<int>(rows.size()); ++i)
      if (rows[i][col]) piv = i;
    if (piv < 0) continue;
    std::swap(rows[piv], rows[rank]);
    const int inv = inverse(rows[rank][col], p);
    for (int& v : rows[rank]) v = v * inv % p;
    for (int i = 0; i < static_cast<int>(rows.size()); ++i)
      if (i != rank && rows[i][col]) {
        const int f = rows[i][col];
        for (int j = 0; j < s.arcs; ++j) rows[i][j] = mod(rows[i][j] - f * rows[rank][j], p);
      }
    ++rank;
  }
  return s.arcs - rank;
}

// Every assignment of p colors to the Fox arcs, checked relation by relation.
inline std::uint64_t brute_force_count(const FoxSystem& s, int p) {
  std::vector<int> c(s.arcs, 0);
  std::uint64_t count = 0;
  for (;;) {
    bool ok = true;
    for (const auto& r : s.relations)
      if (mod(2 * c[r.over] - c[r.under_in] - c[r.under_out], p) != 0) {
        ok = false;
        break;
      }
    count += ok;
    int i = 0;
    while (i < s.arcs && ++c[i] == p) c[i++] = 0;
    if (i == s.arcs) break;
  }
  return count;
}

inline std::uint64_t power(std::uint64_t b, int e) {
  std::uint64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

}  // namespace oracle
