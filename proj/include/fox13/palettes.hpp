#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "fox13/coloring.hpp"
#include "fox13/smith.hpp"

namespace fox13 {

class TooLarge : public std::runtime_error {
 public:
  TooLarge(int dim, int bound)
      : std::runtime_error("kernel dimension " + std::to_string(dim) + " exceeds the enumeration bound " +
                           std::to_string(bound)) {}
};

class NoNontrivial : public std::runtime_error {
 public:
  NoNontrivial() : std::runtime_error("diagram has no nontrivial colorings") {}
};

inline constexpr int kDefaultMaxDimension = 4;

struct MinimalPalettes {
  int size = 0;                   // fewest colors of a nontrivial coloring
  std::vector<Palette> palettes;  // every palette of that size, sorted
  long long colorings = 0;        // p^dim colorings enumerated
};

// Exhaustive over the kernel. Throws TooLarge when dim > max_dim and
// NoNontrivial when every coloring is constant.
MinimalPalettes minimal_palettes(const Diagram& d, int p, int max_dim = kDefaultMaxDimension,
                                 bool parallel = true);

// Lexicographically least member of the orbit of s under x -> lambda*x + mu.
Palette affine_representative(const Palette& s, int p);
bool affine_equivalent(const Palette& a, const Palette& b, int p);
// One representative per orbit met, sorted.
std::vector<Palette> affine_classes(const std::vector<Palette>& palettes, int p);

struct CorpusMember {
  std::string name;
  Diagram diagram;
  BigInt determinant;
};

class InvalidCorpusMember : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Knots whose determinant is nonzero and divisible by the modulus.
class Corpus {
 public:
  explicit Corpus(int p = 13) : p_(p) {}
  // Throws InvalidCorpusMember unless det is nonzero and divisible by p.
  void add(std::string name, Diagram d);
  int modulus() const noexcept { return p_; }
  const std::vector<CorpusMember>& members() const noexcept { return members_; }
  const CorpusMember* find(std::string_view name) const;

 private:
  int p_;
  std::vector<CorpusMember> members_;
};

struct CorpusLoad {
  Corpus corpus;
  int read = 0;                 // lines with a PD code
  int over_crossing_bound = 0;  // skipped for size
  int filtered = 0;             // skipped for the determinant
};

// "name X(...) X(...)" per line; '#' starts a comment. Members above the
// crossing bound or with determinant not divisible by p are skipped.
CorpusLoad parse_corpus(std::string_view text, int crossing_bound, int p = 13);
CorpusLoad load_corpus(const std::filesystem::path& path, int crossing_bound, int p = 13);

struct LowerBoundEntry {
  std::string name;
  int crossings = 0;
  BigInt determinant;
  int dimension = 0;
  long long colorings = 0;
  long long nontrivial = 0;
  int min_palette = 0;
  std::vector<Palette> min_palettes;
  long long violations = 0;  // nontrivial colorings with fewer than `bound` colors
};

struct LowerBoundReport {
  int bound = 5;
  std::vector<LowerBoundEntry> entries;
  long long violations() const;
  bool ok() const { return violations() == 0; }
};

LowerBoundReport lower_bound_check(const Corpus& corpus, int bound = 5, int max_dim = kDefaultMaxDimension,
                                   bool parallel = true);

nlohmann::json to_json(const LowerBoundReport& r);
std::string to_text(const LowerBoundReport& r);

}  // namespace fox13
