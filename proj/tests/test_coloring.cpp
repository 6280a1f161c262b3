#include "doctest.h"
#include "fox13/coloring.hpp"
#include "fox13/parallel.hpp"
#include "knots.hpp"
#include "oracles.hpp"

using namespace fox13;

TEST_CASE("determinants match the classical values") {
  CHECK(determinant(parse_pd(knots::kTrefoil)) == 3);
  CHECK(determinant(parse_pd(knots::kFigureEight)) == 5);
  CHECK(determinant(parse_pd(knots::k51)) == 5);
  CHECK(determinant(parse_pd(knots::k63)) == 13);
  CHECK(determinant(parse_pd(knots::k73)) == 13);
  CHECK(determinant(parse_pd(knots::kHopf)) == 2);
  CHECK(determinant(parse_pd(knots::kSplitTrefoils)) == 0);
}

TEST_CASE("Smith form is certified and agrees with Bareiss on a minor") {
  for (const char* pd : {knots::kTrefoil, knots::kFigureEight, knots::k63, knots::k73}) {
    ColoringMatrix m = build_matrix(parse_pd(pd));
    SmithForm s = smith_normal_form(m.matrix);
    CHECK(verify_smith(m.matrix, s));
    // Delete the last row and column: any first minor is +-det.
    const int n = m.matrix.rows() - 1;
    IntMatrix minor(n, n);
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) minor(r, c) = m.matrix(r, c);
    BigInt b = bareiss_determinant(minor);
    CHECK(abs(b) == determinant(s, m.matrix.cols()));
  }
}

TEST_CASE("kernel dimension agrees with an independent Gaussian elimination") {
  for (const char* pd : {knots::kTrefoil, knots::kFigureEight, knots::k51, knots::k63, knots::k73, knots::kHopf}) {
    Diagram d = parse_pd(pd);
    auto sys = oracle::fox_system(pd);
    for (int p : {2, 3, 5, 7, 11, 13}) {
      INFO(pd, " p=", p);
      CHECK(solve_colorings(d, p).dimension() == oracle::nullity(sys, p));
    }
  }
}

TEST_CASE("trefoil: dimension 2 mod 3, 1 mod 5") {
  Diagram d = parse_pd(knots::kTrefoil);
  CHECK(solve_colorings(d, 3).dimension() == 2);
  CHECK(solve_colorings(d, 5).dimension() == 1);
  CHECK_FALSE(first_nontrivial(solve_colorings(d, 5)));
}

TEST_CASE("exhaustive counts equal p^dim") {
  for (const char* pd : {knots::kTrefoil, knots::kFigureEight, knots::k63}) {
    Diagram d = parse_pd(pd);
    auto sys = oracle::fox_system(pd);
    for (int p : {3, 5, 13}) {
      const auto expect = oracle::power(p, solve_colorings(d, p).dimension());
      CHECK(oracle::brute_force_count(sys, p) == expect);
      CHECK(static_cast<std::uint64_t>(count_colorings_serial(d, p)) == expect);
      CHECK(static_cast<std::uint64_t>(count_colorings_parallel(d, p)) == expect);
    }
  }
}

TEST_CASE("basis colorings are valid and the sample is nontrivial") {
  Diagram d = parse_pd(knots::k73);
  ColoringSpace s = solve_colorings(d, 13);
  REQUIRE(s.dimension() == 2);
  for (int i = 0; i < 13; ++i)
    for (int j = 0; j < 13; ++j) {
      std::vector<int> coeff{i, j};
      CHECK(is_valid_coloring(d, combine(s, coeff)));
    }
  auto c = first_nontrivial(s);
  REQUIRE(c);
  CHECK(is_nontrivial(*c));
  CHECK(first_violation(d, *c) == -1);
}

TEST_CASE("affine maps keep colorings valid") {
  Diagram d = parse_pd(knots::k73);
  Coloring c = *first_nontrivial(solve_colorings(d, 13));
  for (int l = 1; l < 13; ++l)
    for (int m = 0; m < 13; ++m) {
      Coloring a = affine_map(c, l, m);
      CHECK(is_valid_coloring(d, a));
      CHECK(palette(a) == affine_image(palette(c), l, m, 13));
    }
}

TEST_CASE("modular helpers") {
  CHECK(mod_p(-1, 13) == 12);
  for (int v = 1; v < 13; ++v) CHECK(v * inverse_mod(v, 13) % 13 == 1);
  CHECK(is_prime(13));
  CHECK_FALSE(is_prime(12));
}

TEST_CASE("coloring JSON round trip") {
  Diagram d = parse_pd(knots::k63);
  Coloring c = *first_nontrivial(solve_colorings(d, 13));
  CHECK(coloring_from_json(d, coloring_to_json(d, c)) == c);
}
