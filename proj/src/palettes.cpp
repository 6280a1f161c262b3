#include "fox13/palettes.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "fox13/parallel.hpp"

namespace fox13 {

MinimalPalettes minimal_palettes(const Diagram& d, int p, int max_dim, bool parallel) {
  ColoringSpace space = solve_colorings(d, p);
  if (space.dimension() > max_dim) throw TooLarge(space.dimension(), max_dim);
  KernelScan scan = parallel ? scan_kernel_parallel(space) : scan_kernel_serial(space);
  if (scan.nontrivial == 0) throw NoNontrivial();
  return {scan.min_palette, std::move(scan.min_palettes), scan.colorings};
}

Palette affine_representative(const Palette& s, int p) {
  Palette best;
  for (int lambda = 1; lambda < p; ++lambda)
    for (int mu = 0; mu < p; ++mu) {
      Palette img = affine_image(s, lambda, mu, p);
      if (best.empty() || img < best) best = std::move(img);
    }
  return best;
}

bool affine_equivalent(const Palette& a, const Palette& b, int p) {
  return a.size() == b.size() && affine_representative(a, p) == affine_representative(b, p);
}

std::vector<Palette> affine_classes(const std::vector<Palette>& palettes, int p) {
  std::set<Palette> reps;
  for (const auto& s : palettes) reps.insert(affine_representative(s, p));
  return {reps.begin(), reps.end()};
}

void Corpus::add(std::string name, Diagram d) {
  BigInt det = determinant(d);
  if (det == 0) throw InvalidCorpusMember(name + " has determinant 0");
  if (det % p_ != 0) throw InvalidCorpusMember(name + " has determinant not divisible by " + std::to_string(p_));
  members_.push_back({std::move(name), std::move(d), std::move(det)});
}

const CorpusMember* Corpus::find(std::string_view name) const {
  for (const auto& m : members_)
    if (m.name == name) return &m;
  return nullptr;
}

CorpusLoad parse_corpus(std::string_view text, int crossing_bound, int p) {
  CorpusLoad out{Corpus(p)};
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string name;
    if (!(ls >> name)) continue;
    std::string pd;
    std::getline(ls, pd);
    Diagram d = parse_pd(pd);
    ++out.read;
    if (d.num_crossings() > crossing_bound) {
      ++out.over_crossing_bound;
      continue;
    }
    BigInt det = determinant(d);
    if (det == 0 || det % p != 0) {
      ++out.filtered;
      continue;
    }
    out.corpus.add(name, std::move(d));
  }
  return out;
}

CorpusLoad load_corpus(const std::filesystem::path& path, int crossing_bound, int p) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open corpus file " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_corpus(ss.str(), crossing_bound, p);
}

long long LowerBoundReport::violations() const {
  long long n = 0;
  for (const auto& e : entries) n += e.violations;
  return n;
}

LowerBoundReport lower_bound_check(const Corpus& corpus, int bound, int max_dim, bool parallel) {
  LowerBoundReport r;
  r.bound = bound;
  for (const auto& m : corpus.members()) {
    ColoringSpace space = solve_colorings(m.diagram, corpus.modulus());
    if (space.dimension() > max_dim) throw TooLarge(space.dimension(), max_dim);
    KernelScan scan = parallel ? scan_kernel_parallel(space) : scan_kernel_serial(space);
    LowerBoundEntry e;
    e.name = m.name;
    e.crossings = m.diagram.num_crossings();
    e.determinant = m.determinant;
    e.dimension = space.dimension();
    e.colorings = scan.colorings;
    e.nontrivial = scan.nontrivial;
    e.min_palette = scan.min_palette;
    e.min_palettes = scan.min_palettes;
    for (int size = 2; size < bound && size < static_cast<int>(scan.size_histogram.size()); ++size)
      e.violations += scan.size_histogram[size];
    r.entries.push_back(std::move(e));
  }
  return r;
}

nlohmann::json to_json(const LowerBoundReport& r) {
  nlohmann::json entries = nlohmann::json::array();
  for (const auto& e : r.entries)
    entries.push_back({{"name", e.name},
                       {"crossings", e.crossings},
                       {"determinant", e.determinant.str()},
                       {"dimension", e.dimension},
                       {"colorings", e.colorings},
                       {"nontrivial", e.nontrivial},
                       {"min_palette", e.min_palette},
                       {"min_palettes", e.min_palettes},
                       {"violations", e.violations}});
  return {{"bound", r.bound}, {"violations", r.violations()}, {"ok", r.ok()}, {"entries", std::move(entries)}};
}

std::string to_text(const LowerBoundReport& r) {
  std::ostringstream os;
  for (const auto& e : r.entries) {
    os << e.name << ": " << e.crossings << " crossings, det " << e.determinant << ", dim " << e.dimension << ", "
       << e.nontrivial << " nontrivial colorings, fewest colors " << e.min_palette << ", "
       << e.violations << " below " << r.bound << "\n";
  }
  os << (r.ok() ? "OK" : "FAILED") << ": " << r.violations() << " violations over " << r.entries.size()
     << " diagrams\n";
  return os.str();
}

}  // namespace fox13
