#include "fox13/diagram.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <numeric>
#include <queue>
#include <sstream>

namespace fox13 {

namespace {

int find_root(std::vector<int>& parent, int x) {
  while (parent[x] != x) {
    parent[x] = parent[parent[x]];
    x = parent[x];
  }
  return x;
}

void unite(std::vector<int>& parent, int a, int b) {
  a = find_root(parent, a);
  b = find_root(parent, b);
  if (a != b) parent[std::max(a, b)] = std::min(a, b);
}

}  // namespace

Diagram Diagram::from_crossings(const std::vector<std::array<int, 4>>& crossings,
                                int free_loops) {
  if (crossings.empty() && free_loops <= 0)
    throw DiagramError(DiagramErrorKind::EmptyDiagram, "diagram has no crossings and no loops");

  Diagram d;
  d.free_loops_ = free_loops;
  int top = -1;
  for (const auto& x : crossings)
    for (int v : x) {
      if (v < 0)
        throw DiagramError(DiagramErrorKind::MalformedToken, "negative arc label " + std::to_string(v));
      top = std::max(top, v);
    }
  // Labels are usually small; a lookup table beats a map by a wide margin.
  const bool table = top < 8 * static_cast<int>(crossings.size()) + 64;
  std::vector<int> dense_table(table ? static_cast<std::size_t>(top + 1) : 0, -1);
  std::map<int, int> dense_map;
  std::vector<int> seen;
  d.crossings_.reserve(crossings.size());
  for (const auto& x : crossings) {
    Crossing c;
    for (int i = 0; i < 4; ++i) {
      int& slot = table ? dense_table[static_cast<std::size_t>(x[i])] : dense_map.try_emplace(x[i], -1).first->second;
      if (slot < 0) {
        slot = static_cast<int>(seen.size());
        d.labels_.push_back(x[i]);
        seen.push_back(0);
      }
      c.ends[i] = slot;
      ++seen[slot];
    }
    d.crossings_.push_back(c);
  }
  for (std::size_t a = 0; a < seen.size(); ++a) {
    if (seen[a] != 2)
      throw DiagramError(DiagramErrorKind::ArcDegree,
                         "arc " + std::to_string(d.labels_[a]) + " appears " +
                             std::to_string(seen[a]) + " times");
  }
  d.ends_.assign(seen.size(), {Slot{}, Slot{}});
  std::vector<int> filled(seen.size(), 0);
  for (int x = 0; x < d.num_crossings(); ++x) {
    for (int i = 0; i < 4; ++i) {
      ArcId a = d.crossings_[x].ends[i];
      d.ends_[a][filled[a]++] = Slot{x, i};
    }
  }
  int next_label = d.labels_.empty() ? 1 : *std::max_element(d.labels_.begin(), d.labels_.end()) + 1;
  for (int i = 0; i < free_loops; ++i) d.labels_.push_back(next_label++);

  if (!euler_check(d))
    throw DiagramError(DiagramErrorKind::NonPlanar, "rotation system is not planar");
  return d;
}

Diagram Diagram::with_default_labels() const {
  Diagram d = *this;
  std::iota(d.labels_.begin(), d.labels_.end(), 1);
  return d;
}

Slot Diagram::partner(Slot s) const {
  const auto& e = ends_[arc_at(s)];
  return e[0] == s ? e[1] : e[0];
}

std::vector<Face> Diagram::faces() const {
  std::vector<Face> out;
  const int n = num_crossings();
  std::vector<char> used(static_cast<std::size_t>(4 * n), 0);
  for (int x = 0; x < n; ++x) {
    for (int i = 0; i < 4; ++i) {
      if (used[4 * x + i]) continue;
      Face f;
      Slot d{x, i};
      while (!used[4 * d.crossing + d.pos]) {
        used[4 * d.crossing + d.pos] = 1;
        f.darts.push_back(d);
        Slot p = partner(d);
        d = Slot{p.crossing, (p.pos + 1) % 4};
      }
      out.push_back(std::move(f));
    }
  }
  for (int k = 0; k < free_loops_; ++k) {
    ArcId a = static_cast<int>(ends_.size()) + k;
    out.push_back(Face{{}, a});
    out.push_back(Face{{}, a});
  }
  return out;
}

Face Diagram::face_containing(Slot dart) const {
  Face f;
  Slot d = dart;
  do {
    f.darts.push_back(d);
    Slot p = partner(d);
    d = Slot{p.crossing, (p.pos + 1) % 4};
  } while (d != dart);
  std::rotate(f.darts.begin(), std::min_element(f.darts.begin(), f.darts.end()), f.darts.end());
  return f;
}

FoxArcs Diagram::fox_arcs() const {
  std::vector<int> parent(static_cast<std::size_t>(num_arcs()));
  std::iota(parent.begin(), parent.end(), 0);
  for (const auto& c : crossings_) unite(parent, c.over_a(), c.over_b());
  FoxArcs out;
  out.of_arc.assign(parent.size(), -1);
  std::vector<int> index(parent.size(), -1);
  for (std::size_t a = 0; a < parent.size(); ++a) {
    int r = find_root(parent, static_cast<int>(a));
    if (index[r] < 0) index[r] = out.count++;
    out.of_arc[a] = index[r];
  }
  return out;
}

int Diagram::num_link_components() const {
  std::vector<int> parent(static_cast<std::size_t>(num_arcs()));
  std::iota(parent.begin(), parent.end(), 0);
  for (const auto& c : crossings_) {
    unite(parent, c.ends[0], c.ends[2]);
    unite(parent, c.ends[1], c.ends[3]);
  }
  int count = 0;
  for (std::size_t a = 0; a < parent.size(); ++a)
    if (find_root(parent, static_cast<int>(a)) == static_cast<int>(a)) ++count;
  return count;
}

std::vector<int> Diagram::crossing_components() const {
  const int n = num_crossings();
  std::vector<int> parent(static_cast<std::size_t>(n));
  std::iota(parent.begin(), parent.end(), 0);
  for (const auto& e : ends_) unite(parent, e[0].crossing, e[1].crossing);
  std::vector<int> index(static_cast<std::size_t>(n), -1), out(static_cast<std::size_t>(n));
  int count = 0;
  for (int x = 0; x < n; ++x) {
    int r = find_root(parent, x);
    if (index[r] < 0) index[r] = count++;
    out[x] = index[r];
  }
  return out;
}

int Diagram::num_graph_components() const {
  auto comp = crossing_components();
  int count = comp.empty() ? 0 : *std::max_element(comp.begin(), comp.end()) + 1;
  return count + free_loops_;
}

bool euler_check(const Diagram& d) {
  auto comp = d.crossing_components();
  const int k = comp.empty() ? 0 : *std::max_element(comp.begin(), comp.end()) + 1;
  std::vector<int> vertices(static_cast<std::size_t>(k), 0), faces(static_cast<std::size_t>(k), 0);
  for (int c : comp) ++vertices[c];
  const int n = d.num_crossings();
  std::vector<char> used(static_cast<std::size_t>(4 * n), 0);
  for (int s = 0; s < 4 * n; ++s) {
    if (used[s]) continue;
    ++faces[comp[s / 4]];
    for (Slot x{s / 4, s % 4}; !used[4 * x.crossing + x.pos];) {
      used[4 * x.crossing + x.pos] = 1;
      Slot p = d.partner(x);
      x = Slot{p.crossing, (p.pos + 1) % 4};
    }
  }
  for (int i = 0; i < k; ++i) {
    // E = 2V for a 4-valent graph.
    if (vertices[i] - 2 * vertices[i] + faces[i] != 2) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// PD text

namespace {

class PdScanner {
 public:
  explicit PdScanner(std::string_view text) : text_(text) {}

  Diagram run() {
    std::vector<std::array<int, 4>> crossings;
    int loops = 0;
    skip_separators();
    if (consume_word("PD")) {
      expect_open();
      wrapped_ = true;
    }
    while (true) {
      skip_separators();
      if (at_end()) break;
      if (wrapped_ && peek_close()) {
        ++pos_;
        skip_separators();
        if (!at_end()) fail("trailing characters after PD[...]");
        break;
      }
      char ch = text_[pos_];
      if (ch == 'X') {
        ++pos_;
        expect_open();
        std::array<int, 4> labels{};
        for (int i = 0; i < 4; ++i) {
          skip_spaces();
          labels[i] = read_int();
          skip_spaces();
          if (i < 3) expect(',');
        }
        expect_close();
        crossings.push_back(labels);
      } else if (ch == 'O') {
        ++pos_;
        ++loops;
      } else {
        fail(std::string("unexpected character '") + ch + "'");
      }
    }
    return Diagram::from_crossings(crossings, loops);
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  void skip_spaces() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  void skip_separators() {
    while (!at_end() && (std::isspace(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == ','))
      ++pos_;
  }
  bool consume_word(std::string_view w) {
    if (text_.substr(pos_, w.size()) == w) {
      pos_ += w.size();
      return true;
    }
    return false;
  }
  bool peek_close() const { return !at_end() && text_[pos_] == ']'; }
  void expect(char c) {
    if (at_end() || text_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }
  void expect_open() {
    skip_spaces();
    if (at_end() || (text_[pos_] != '(' && text_[pos_] != '[')) fail("expected '(' or '['");
    ++pos_;
  }
  void expect_close() {
    skip_spaces();
    if (at_end() || (text_[pos_] != ')' && text_[pos_] != ']')) fail("expected ')' or ']'");
    ++pos_;
  }
  int read_int() {
    int value = 0;
    auto first = text_.data() + pos_;
    auto [ptr, ec] = std::from_chars(first, text_.data() + text_.size(), value);
    if (ec != std::errc() || ptr == first) fail("expected a nonnegative integer arc label");
    pos_ += static_cast<std::size_t>(ptr - first);
    return value;
  }
  [[noreturn]] void fail(const std::string& msg) const {
    throw DiagramError(DiagramErrorKind::MalformedToken,
                       "PD syntax error at offset " + std::to_string(pos_) + ": " + msg);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  bool wrapped_ = false;
};

}  // namespace

Diagram parse_pd(std::string_view text) { return PdScanner(text).run(); }

std::string serialize(const Diagram& d) {
  const int n = d.num_crossings();
  std::vector<int> number(static_cast<std::size_t>(d.num_arcs()), 0);
  std::vector<int> entry_under(static_cast<std::size_t>(n), -1);
  int next = 1;
  // Walk every strand; the under slot through which a crossing is entered
  // becomes that crossing's first position.
  for (int x = 0; x < n; ++x) {
    for (int start_pos = 0; start_pos < 4; ++start_pos) {
      Slot out{x, start_pos};
      if (number[d.arc_at(out)] != 0) continue;
      while (number[d.arc_at(out)] == 0) {
        number[d.arc_at(out)] = next++;
        Slot in = d.partner(out);
        if (is_under_pos(in.pos)) entry_under[in.crossing] = in.pos;
        out = Slot{in.crossing, (in.pos + 2) % 4};
      }
    }
  }
  std::ostringstream os;
  bool first = true;
  for (int x = 0; x < n; ++x) {
    int s = entry_under[x] < 0 ? 0 : entry_under[x];
    const auto& e = d.crossings()[x].ends;
    os << (first ? "" : " ") << "X(" << number[e[s]] << ',' << number[e[(s + 1) % 4]] << ','
       << number[e[(s + 2) % 4]] << ',' << number[e[(s + 3) % 4]] << ')';
    first = false;
  }
  for (int k = 0; k < d.num_free_loops(); ++k) {
    os << (first ? "" : " ") << 'O';
    first = false;
  }
  return os.str();
}

nlohmann::json to_json(const Diagram& d) {
  nlohmann::json j;
  j["crossings"] = nlohmann::json::array();
  for (const auto& c : d.crossings()) {
    j["crossings"].push_back({d.labels()[c.ends[0]], d.labels()[c.ends[1]],
                              d.labels()[c.ends[2]], d.labels()[c.ends[3]]});
  }
  if (d.num_free_loops() > 0) j["loops"] = d.num_free_loops();
  return j;
}

Diagram diagram_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("crossings") || !j["crossings"].is_array())
    throw DiagramError(DiagramErrorKind::MalformedToken, "JSON diagram needs a crossings array");
  std::vector<std::array<int, 4>> crossings;
  for (const auto& row : j["crossings"]) {
    if (!row.is_array() || row.size() != 4)
      throw DiagramError(DiagramErrorKind::MalformedToken, "each crossing needs four labels");
    std::array<int, 4> x{};
    for (int i = 0; i < 4; ++i) {
      if (!row[i].is_number_integer())
        throw DiagramError(DiagramErrorKind::MalformedToken, "arc labels must be integers");
      x[i] = row[i].get<int>();
    }
    crossings.push_back(x);
  }
  int loops = j.value("loops", 0);
  return Diagram::from_crossings(crossings, loops);
}

// ---------------------------------------------------------------------------
// Canonical codes

namespace {

// Flat slot tables shared by every traversal of one diagram.
struct SlotTables {
  std::vector<int> partner;  // 4 * crossing + pos of the far end
  std::vector<int> color;    // color of the arc at each slot, or 0
};

// Writes the traversal code from slot `start` into `code`. Gives up and
// returns false as soon as the code is known to exceed `bound` (when
// non-empty).
bool component_code(const SlotTables& t, int start, bool colored, const std::vector<int>& bound,
                    std::vector<int>& id, std::vector<int>& offset, std::vector<int>& order,
                    std::vector<int>& code) {
  code.clear();
  order.clear();
  id[start / 4] = 0;
  offset[start / 4] = start % 4;
  order.push_back(start / 4);
  bool below = bound.empty();
  auto push = [&](int v) {
    if (!below) {
      const int b = bound[code.size()];
      if (v > b) return false;
      if (v < b) below = true;
    }
    code.push_back(v);
    return true;
  };
  bool ok = true;
  for (std::size_t head = 0; ok && head < order.size(); ++head) {
    const int x = order[head];
    ok = push(offset[x] % 2);
    for (int k = 0; ok && k < 4; ++k) {
      const int s = 4 * x + (offset[x] + k) % 4;
      const int p = t.partner[s];
      const int px = p / 4;
      if (id[px] < 0) {
        id[px] = static_cast<int>(order.size());
        offset[px] = p % 4;
        order.push_back(px);
      }
      ok = push(id[px]) && push((p % 4 - offset[px] + 4) % 4) && (!colored || push(t.color[s]));
    }
  }
  for (int x : order) id[x] = -1;
  return ok;
}

}  // namespace

std::vector<int> canonical_code(const Diagram& d, std::span<const int> arc_colors) {
  const int n = d.num_crossings();
  const bool colored = !arc_colors.empty();
  SlotTables t;
  t.partner.resize(static_cast<std::size_t>(4 * n));
  t.color.resize(static_cast<std::size_t>(4 * n));
  for (int x = 0; x < n; ++x)
    for (int i = 0; i < 4; ++i) {
      const Slot p = d.partner(Slot{x, i});
      t.partner[4 * x + i] = 4 * p.crossing + p.pos;
      t.color[4 * x + i] = colored ? arc_colors[d.crossings()[x].ends[i]] : 0;
    }
  auto comp = d.crossing_components();
  const int k = comp.empty() ? 0 : *std::max_element(comp.begin(), comp.end()) + 1;
  const std::size_t length = static_cast<std::size_t>(n) * (colored ? 13 : 9) + 1;
  std::vector<std::vector<int>> best(static_cast<std::size_t>(k));
  std::vector<int> id(static_cast<std::size_t>(n), -1), offset(static_cast<std::size_t>(n), 0), order, code;
  order.reserve(static_cast<std::size_t>(n));
  code.reserve(length);
  // Codes open with the start slot's parity, so an odd start never wins.
  for (int x = 0; x < n; ++x) {
    for (int s = 0; s < 4; s += 2) {
      auto& b = best[comp[x]];
      if (component_code(t, 4 * x + s, colored, b, id, offset, order, code) && (b.empty() || code < b)) {
        b.swap(code);
        code.reserve(length);
      }
    }
  }
  std::sort(best.begin(), best.end());
  std::vector<int> out;
  out.reserve(length + 2 * static_cast<std::size_t>(k) + 2 + static_cast<std::size_t>(d.num_free_loops()));
  out.push_back(k);
  for (const auto& b : best) {
    out.push_back(static_cast<int>(b.size()));
    out.insert(out.end(), b.begin(), b.end());
  }
  std::vector<int> loops;
  for (ArcId a = d.num_arcs() - d.num_free_loops(); a < d.num_arcs(); ++a)
    loops.push_back(arc_colors.empty() ? 0 : arc_colors[a]);
  std::sort(loops.begin(), loops.end());
  out.push_back(static_cast<int>(loops.size()));
  out.insert(out.end(), loops.begin(), loops.end());
  return out;
}

bool isomorphic(const Diagram& a, const Diagram& b) {
  return a.num_crossings() == b.num_crossings() && a.num_arcs() == b.num_arcs() &&
         canonical_code(a) == canonical_code(b);
}

}  // namespace fox13
