#include <set>

#include "doctest.h"
#include "fox13/palettes.hpp"
#include "knots.hpp"

using namespace fox13;

namespace {

// Orbit of s under all 156 affine maps, each image sorted.
std::set<Palette> orbit(const Palette& s) {
  std::set<Palette> out;
  for (int l = 1; l < 13; ++l)
    for (int m = 0; m < 13; ++m) {
      Palette img;
      for (int v : s) img.push_back((l * v + m) % 13);
      std::sort(img.begin(), img.end());
      out.insert(img);
    }
  return out;
}

}  // namespace

TEST_CASE("the affine representative is the least element of the orbit") {
  for (const Palette& s : {Palette{0, 1, 5, 7, 10}, Palette{2, 3, 4, 7, 10}, Palette{0, 1, 2, 5, 7, 10}}) {
    auto o = orbit(s);
    CHECK(affine_representative(s, 13) == *o.begin());
    for (const auto& t : o) CHECK(affine_equivalent(s, t, 13));
  }
  CHECK(affine_representative({0, 1, 5, 7, 10}, 13) == Palette{0, 1, 2, 4, 7});
  CHECK_FALSE(affine_equivalent({0, 1, 2, 3, 4}, {0, 1, 5, 7, 10}, 13));
}

TEST_CASE("affine_classes collapses one orbit to one representative") {
  auto o = orbit({0, 1, 5, 7, 10});
  std::vector<Palette> all(o.begin(), o.end());
  auto classes = affine_classes(all, 13);
  REQUIRE(classes.size() == 1);
  CHECK(affine_equivalent(classes[0], {0, 1, 5, 7, 10}, 13));
  all.push_back({0, 1, 2, 3, 4});
  CHECK(affine_classes(all, 13).size() == 2);
}

TEST_CASE("7_3 on its standard diagram: every nontrivial coloring has 7 colors") {
  MinimalPalettes m = minimal_palettes(parse_pd(knots::k73), 13);
  CHECK(m.colorings == 169);
  CHECK(m.size == 7);
  for (const auto& s : m.palettes) CHECK(s.size() == 7);
  CHECK(minimal_palettes(parse_pd(knots::k73), 13, 4, false).palettes == m.palettes);
}

TEST_CASE("minimal_palettes errors") {
  CHECK_THROWS_AS(minimal_palettes(parse_pd(knots::kFigureEight), 13), NoNontrivial);
  CHECK_THROWS_AS(minimal_palettes(parse_pd(knots::k73), 13, 1), TooLarge);
  // Trefoil mod 3: the three colors are all there is.
  CHECK(minimal_palettes(parse_pd(knots::kTrefoil), 3).size == 3);
}

TEST_CASE("corpus filtering") {
  std::string text = std::string("# comment\n3_1 ") + knots::kTrefoil + "\n6_3 " + knots::k63 + "\n7_3 " +
                     knots::k73 + "\n";
  CorpusLoad all = parse_corpus(text, 8);
  CHECK(all.read == 3);
  CHECK(all.filtered == 1);
  CHECK(all.corpus.members().size() == 2);
  CHECK(all.corpus.find("6_3"));
  CHECK_FALSE(all.corpus.find("3_1"));
  CorpusLoad small = parse_corpus(text, 6);
  CHECK(small.over_crossing_bound == 1);
  CHECK(small.corpus.members().size() == 1);

  Corpus c;
  CHECK_THROWS_AS(c.add("split", parse_pd(knots::kSplitTrefoils)), InvalidCorpusMember);
  CHECK_THROWS_AS(c.add("3_1", parse_pd(knots::kTrefoil)), InvalidCorpusMember);
  c.add("7_3", parse_pd(knots::k73));
  CHECK(c.members().size() == 1);
}

TEST_CASE("the shipped corpus keeps the determinant-13 knots up to 8 crossings") {
  CorpusLoad load = load_corpus(FOX13_CORPUS_FILE, 8);
  std::vector<std::string> names;
  for (const auto& m : load.corpus.members()) {
    names.push_back(m.name);
    CHECK(m.determinant % 13 == 0);
    CHECK(m.diagram.num_crossings() <= 8);
  }
  CHECK(names == std::vector<std::string>{"6_3", "7_3", "8_1"});
}

TEST_CASE("lower bound holds on a small corpus") {
  Corpus c;
  c.add("6_3", parse_pd(knots::k63));
  c.add("7_3", parse_pd(knots::k73));
  LowerBoundReport r = lower_bound_check(c, 5);
  CHECK(r.ok());
  CHECK(r.entries.at(0).min_palette == 6);
  CHECK(r.entries.at(1).min_palette == 7);
  for (const auto& e : r.entries) CHECK(e.colorings == 169);
  // Asking for 7 colors finds the 6-color colorings of 6_3.
  LowerBoundReport seven = lower_bound_check(c, 7);
  CHECK_FALSE(seven.ok());
  CHECK(seven.entries.at(0).violations == 156);
  CHECK(seven.entries.at(1).violations == 0);
  CHECK(to_json(r)["violations"] == 0);
}
