#include "doctest.h"
#include "fox13/diagram.hpp"
#include "knots.hpp"

using namespace fox13;

TEST_CASE("trefoil has 3 crossings, 6 arcs, 5 faces") {
  Diagram d = parse_pd(knots::kTrefoil);
  CHECK(d.num_crossings() == 3);
  CHECK(d.num_arcs() == 6);
  // V - E + F = 2 with V = 3, E = 6.
  CHECK(d.faces().size() == 5);
  CHECK(euler_check(d));
  CHECK(d.num_link_components() == 1);
}

TEST_CASE("every dart lies in exactly one face") {
  for (const char* pd : {knots::kTrefoil, knots::kFigureEight, knots::k73, knots::kHopf}) {
    Diagram d = parse_pd(pd);
    std::vector<int> seen(4 * d.num_crossings(), 0);
    for (const auto& f : d.faces())
      for (Slot s : f.darts) ++seen[4 * s.crossing + s.pos];
    for (int v : seen) CHECK(v == 1);
    CHECK(d.faces().size() == static_cast<std::size_t>(d.num_crossings() + 2));
  }
}

TEST_CASE("Fox arcs merge the two halves of each over-strand") {
  Diagram d = parse_pd(knots::k73);
  CHECK(d.fox_arcs().count == 7);
  Diagram hopf = parse_pd(knots::kHopf);
  CHECK(hopf.num_link_components() == 2);
  CHECK(hopf.fox_arcs().count == 2);
}

TEST_CASE("serialize round-trips up to isomorphism") {
  for (const char* pd : {knots::kTrefoil, knots::k63, knots::k73, knots::kHopf}) {
    Diagram d = parse_pd(pd);
    Diagram back = parse_pd(serialize(d));
    CHECK(isomorphic(d, back));
    CHECK(diagram_from_json(to_json(d)) == d);
  }
}

TEST_CASE("canonical code separates distinct diagrams") {
  CHECK_FALSE(isomorphic(parse_pd(knots::kTrefoil), parse_pd(knots::kFigureEight)));
  CHECK_FALSE(isomorphic(parse_pd(knots::k63), parse_pd(knots::k73)));
  // Relabelling arcs does not change the code.
  Diagram a = parse_pd("X(1,5,2,4) X(3,1,4,6) X(5,3,6,2)");
  Diagram b = parse_pd("X(11,15,12,14) X(13,11,14,16) X(15,13,16,12)");
  CHECK(canonical_code(a) == canonical_code(b));
}

TEST_CASE("malformed input is rejected with a kind") {
  auto kind_of = [](const char* text) {
    try {
      parse_pd(text);
    } catch (const DiagramError& e) {
      return static_cast<int>(e.kind());
    }
    return -1;
  };
  CHECK(kind_of("") == static_cast<int>(DiagramErrorKind::EmptyDiagram));
  CHECK(kind_of("X(1,2,3)") == static_cast<int>(DiagramErrorKind::MalformedToken));
  CHECK(kind_of("X(1,5,2,4) X(3,1,4,6) X(5,3,6,7)") == static_cast<int>(DiagramErrorKind::ArcDegree));
}

TEST_CASE("a bare O is a crossingless loop") {
  Diagram d = parse_pd("O");
  CHECK(d.num_crossings() == 0);
  CHECK(d.num_arcs() == 1);
  CHECK(d.is_free_loop(0));
  Diagram t = parse_pd(std::string(knots::kTrefoil) + " O");
  CHECK(t.num_arcs() == 7);
  CHECK(t.num_link_components() == 2);
}
