#pragma once

#include <array>
#include <compare>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace fox13 {

// Label of one PD arc: the piece of the diagram between two crossing slots.
// A crossingless loop component is also an arc, with no slots at all.
using ArcId = int;

// A position at a crossing. Positions run counterclockwise; 0 and 2 are the
// under-strand, 1 and 3 the over-strand.
struct Slot {
  int crossing = -1;
  int pos = 0;

  friend bool operator==(const Slot&, const Slot&) = default;
  friend auto operator<=>(const Slot&, const Slot&) = default;
};

constexpr bool is_under_pos(int pos) noexcept { return pos % 2 == 0; }

enum class DiagramErrorKind { EmptyDiagram, MalformedToken, ArcDegree, NonPlanar, BadReference };

class DiagramError : public std::runtime_error {
 public:
  DiagramError(DiagramErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  DiagramErrorKind kind() const noexcept { return kind_; }

 private:
  DiagramErrorKind kind_;
};

struct Crossing {
  std::array<ArcId, 4> ends{};

  ArcId under_a() const noexcept { return ends[0]; }
  ArcId over_a() const noexcept { return ends[1]; }
  ArcId under_b() const noexcept { return ends[2]; }
  ArcId over_b() const noexcept { return ends[3]; }

  friend bool operator==(const Crossing&, const Crossing&) = default;
};

// A face of the planar map, listed as darts. The dart at slot s stands for the
// side of arc_at(s) that is met when walking that arc away from s. Faces of a
// crossingless loop carry no darts and name the loop instead.
struct Face {
  std::vector<Slot> darts;
  ArcId loop = -1;

  std::size_t size() const noexcept { return loop >= 0 ? 1 : darts.size(); }
};

// Over-strand classes of arcs: PD arcs joined through the over-strand of a
// crossing carry the same Fox color. `of_arc[a]` is the class of arc a.
struct FoxArcs {
  std::vector<int> of_arc;
  int count = 0;
};

// A planar link diagram stored as a rotation system. Arc ids are dense,
// 0..num_arcs()-1, with crossingless loops numbered last. Values are immutable.
class Diagram {
 public:
  Diagram() = default;

  // Validates arc degrees and planarity, and renumbers labels densely in order
  // of first appearance. The original labels stay available via labels().
  static Diagram from_crossings(const std::vector<std::array<int, 4>>& crossings,
                                int free_loops = 0);
  static Diagram unknot() { return from_crossings({}, 1); }

  int num_crossings() const noexcept { return static_cast<int>(crossings_.size()); }
  int num_arcs() const noexcept { return static_cast<int>(ends_.size()) + free_loops_; }
  int num_free_loops() const noexcept { return free_loops_; }
  bool is_free_loop(ArcId a) const noexcept { return a >= static_cast<int>(ends_.size()); }

  const std::vector<Crossing>& crossings() const noexcept { return crossings_; }
  ArcId arc_at(Slot s) const { return crossings_[s.crossing].ends[s.pos]; }
  const std::array<Slot, 2>& ends_of(ArcId a) const { return ends_[a]; }
  // The slot at the other end of the arc leaving `s`.
  Slot partner(Slot s) const;

  // Original (input) label of each dense arc id.
  const std::vector<int>& labels() const noexcept { return labels_; }
  Diagram with_default_labels() const;

  std::vector<Face> faces() const;
  // The face containing `dart`, listed from its least slot as in faces().
  Face face_containing(Slot dart) const;
  FoxArcs fox_arcs() const;
  int num_link_components() const;
  // Connected components of the underlying 4-valent graph; each crossingless
  // loop is its own component.
  int num_graph_components() const;
  // Graph component index of every crossing.
  std::vector<int> crossing_components() const;

  friend bool operator==(const Diagram&, const Diagram&) = default;

 private:
  std::vector<Crossing> crossings_;
  std::vector<std::array<Slot, 2>> ends_;
  int free_loops_ = 0;
  std::vector<int> labels_;
};

// PD text: whitespace separated X(a,b,c,d) tokens (square brackets accepted),
// each listing four arc labels counterclockwise from the incoming under-arc.
// A bare `O` token adds a crossingless loop component.
Diagram parse_pd(std::string_view text);

// Normalized PD text: arcs renumbered 1..n along each component and every
// crossing rotated to start at its incoming under-arc.
std::string serialize(const Diagram& d);

nlohmann::json to_json(const Diagram& d);
Diagram diagram_from_json(const nlohmann::json& j);

// Orientation-preserving isomorphism invariant of the planar map (with the
// optional per-arc colors folded in). Equal codes iff isomorphic diagrams.
std::vector<int> canonical_code(const Diagram& d, std::span<const int> arc_colors = {});
bool isomorphic(const Diagram& a, const Diagram& b);

// Euler characteristic check per connected component: V - E + F == 2.
bool euler_check(const Diagram& d);

}  // namespace fox13
