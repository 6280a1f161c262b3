#include "fox13/tables.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

namespace fox13 {

std::string to_string(InstanceKind k) {
  switch (k) {
    case InstanceKind::Alpha: return "ALPHA";
    case InstanceKind::Beta: return "BETA";
    case InstanceKind::Gamma: return "GAMMA";
    case InstanceKind::Delta: return "DELTA";
  }
  return "?";
}

InstanceKind instance_kind_from_string(std::string_view s) {
  for (auto k : {InstanceKind::Alpha, InstanceKind::Beta, InstanceKind::Gamma, InstanceKind::Delta})
    if (to_string(k) == s) return k;
  throw std::invalid_argument("unknown instance kind '" + std::string(s) + "'");
}

std::string to_string(const TableEntry& e) {
  switch (e.type) {
    case TableEntry::Type::Impossible: return "X";
    case TableEntry::Type::Endgame: return "D" + std::to_string(e.index);
    case TableEntry::Type::Transformation:
      return (e.swapped ? "!" : "") + std::to_string(e.index);
  }
  return "?";
}

namespace {

std::optional<int> to_int(std::string_view s) {
  int v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size()) return std::nullopt;
  return v;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == sep) {
      out.push_back(trim(s.substr(start, i - start)));
      start = i + 1;
    }
  }
  return out;
}

std::vector<std::string_view> words(std::string_view s) {
  std::vector<std::string_view> out;
  for (auto w : split(s, ' '))
    if (!w.empty()) out.push_back(w);
  return out;
}

std::vector<int> int_list(std::string_view s) {
  std::vector<int> out;
  if (s.empty()) return out;
  for (auto tok : split(s, ',')) {
    auto v = to_int(tok);
    if (!v) throw std::invalid_argument("bad integer '" + std::string(tok) + "'");
    out.push_back(*v);
  }
  return out;
}

std::string join(const std::vector<int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

// "key=value" -> value, or throws.
std::string_view field(std::string_view word, std::string_view key) {
  if (word.substr(0, key.size()) != key || word.size() <= key.size() || word[key.size()] != '=')
    throw std::invalid_argument("expected " + std::string(key) + "=...");
  return word.substr(key.size() + 1);
}

}  // namespace

TableEntry table_entry_from_string(std::string_view s) {
  TableEntry e;
  if (s == "X") return e;
  if (!s.empty() && s[0] == 'D') {
    auto k = to_int(s.substr(1));
    if (!k) throw std::invalid_argument("bad endgame entry '" + std::string(s) + "'");
    return {TableEntry::Type::Endgame, *k, false};
  }
  bool swapped = !s.empty() && s[0] == '!';
  auto k = to_int(swapped ? s.substr(1) : s);
  if (!k || *k <= 0) throw std::invalid_argument("bad table entry '" + std::string(s) + "'");
  return {TableEntry::Type::Transformation, *k, swapped};
}

const TableEntry* EliminationTable::find(int a, int b) const {
  for (const auto& cell : cells)
    if (cell.a == a && cell.b == b) return &cell.entry;
  return nullptr;
}

const EliminationTable* TableSet::find(InstanceKind kind, int c) const {
  for (const auto& t : tables)
    if (t.kind == kind && t.c == c) return &t;
  return nullptr;
}

const EliminationTable* TableSet::find(std::string_view id) const {
  for (const auto& t : tables)
    if (t.id == id) return &t;
  return nullptr;
}

const DupletTable* TableSet::find_duplets(std::string_view id) const {
  for (const auto& t : duplets)
    if (t.id == id) return &t;
  return nullptr;
}

TableSet parse_tables(std::string_view text) {
  TableSet out;
  EliminationTable* table = nullptr;
  DupletTable* duplets = nullptr;
  int lineno = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = trim(text.substr(pos, nl - pos));
    pos = nl + 1;
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    try {
      auto w = words(line);
      if (w[0] == "version") {
        if (w.size() != 2 || !to_int(w[1])) throw std::invalid_argument("bad version line");
        out.version = *to_int(w[1]);
      } else if (w[0] == "TABLE") {
        if (w.size() != 5) throw std::invalid_argument("TABLE needs id, kind, c= and eliminated=");
        EliminationTable t;
        t.id = std::string(w[1]);
        t.kind = instance_kind_from_string(w[2]);
        auto c = to_int(field(w[3], "c"));
        if (!c) throw std::invalid_argument("bad target color");
        t.c = *c;
        t.eliminated = int_list(field(w[4], "eliminated"));
        out.tables.push_back(std::move(t));
        table = &out.tables.back();
        duplets = nullptr;
      } else if (w[0] == "DUPLETS") {
        if (w.size() != 3) throw std::invalid_argument("DUPLETS needs id and palette=");
        DupletTable t;
        t.id = std::string(w[1]);
        t.palette = int_list(field(w[2], "palette"));
        out.duplets.push_back(std::move(t));
        duplets = &out.duplets.back();
        table = nullptr;
      } else if (duplets) {
        auto colon = line.find(':');
        if (colon == std::string_view::npos) throw std::invalid_argument("duplet row needs ':'");
        auto b = to_int(field(trim(line.substr(0, colon)), "b"));
        if (!b) throw std::invalid_argument("bad duplet row key");
        std::vector<std::pair<int, int>> pairs;
        for (auto tok : words(line.substr(colon + 1))) {
          if (tok.size() < 5 || tok.front() != '{' || tok.back() != '}')
            throw std::invalid_argument("duplet must look like {a,c}");
          auto v = int_list(tok.substr(1, tok.size() - 2));
          if (v.size() != 2) throw std::invalid_argument("duplet must have two colors");
          pairs.emplace_back(std::min(v[0], v[1]), std::max(v[0], v[1]));
        }
        duplets->rows.emplace_back(*b, std::move(pairs));
      } else if (table) {
        if (table->kind == InstanceKind::Gamma) {
          auto colon = line.find(':');
          if (colon == std::string_view::npos) throw std::invalid_argument("gamma row needs 'a=..:'");
          auto a = to_int(field(trim(line.substr(0, colon)), "a"));
          if (!a) throw std::invalid_argument("bad row key");
          for (auto cell : split(line.substr(colon + 1), ',')) {
            auto arrow = cell.find("->");
            if (arrow == std::string_view::npos) throw std::invalid_argument("cell needs '->'");
            auto b = to_int(field(trim(cell.substr(0, arrow)), "b"));
            if (!b) throw std::invalid_argument("bad cell key");
            table->cells.push_back({*a, *b, table_entry_from_string(trim(cell.substr(arrow + 2)))});
          }
        } else {
          auto arrow = line.find("->");
          if (arrow == std::string_view::npos) throw std::invalid_argument("cell needs '->'");
          auto a = to_int(field(trim(line.substr(0, arrow)), "a"));
          if (!a) throw std::invalid_argument("bad cell key");
          table->cells.push_back({*a, -1, table_entry_from_string(trim(line.substr(arrow + 2)))});
        }
      } else {
        throw std::invalid_argument("row outside of a TABLE or DUPLETS block");
      }
    } catch (const std::invalid_argument& e) {
      throw TableFormatError(lineno, e.what());
    }
  }
  return out;
}

TableSet load_tables(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open table file " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_tables(ss.str());
}

const TableSet& embedded_tables() {
  static const TableSet tables = parse_tables(embedded_tables_text());
  return tables;
}

std::string export_text(const TableSet& t) {
  std::ostringstream os;
  os << "version " << t.version << "\n";
  for (const auto& table : t.tables) {
    os << "\nTABLE " << table.id << ' ' << to_string(table.kind) << " c=" << table.c
       << " eliminated=" << join(table.eliminated) << "\n";
    if (table.kind == InstanceKind::Gamma) {
      int row = -1;
      for (const auto& cell : table.cells) {
        if (cell.a != row) {
          if (row >= 0) os << "\n";
          os << "a=" << cell.a << ": ";
          row = cell.a;
        } else {
          os << ", ";
        }
        os << "b=" << cell.b << " -> " << to_string(cell.entry);
      }
      if (row >= 0) os << "\n";
    } else {
      for (const auto& cell : table.cells) os << "a=" << cell.a << " -> " << to_string(cell.entry) << "\n";
    }
  }
  for (const auto& d : t.duplets) {
    os << "\nDUPLETS " << d.id << " palette=" << join(d.palette) << "\n";
    for (const auto& [b, pairs] : d.rows) {
      os << "b=" << b << ":";
      for (auto [x, y] : pairs) os << " {" << x << ',' << y << '}';
      os << "\n";
    }
  }
  return os.str();
}

nlohmann::json export_json(const TableSet& t) {
  nlohmann::json tables = nlohmann::json::array();
  for (const auto& table : t.tables) {
    nlohmann::json cells = nlohmann::json::array();
    for (const auto& cell : table.cells) {
      nlohmann::json jc{{"a", cell.a}, {"entry", to_string(cell.entry)}};
      if (cell.b >= 0) jc["b"] = cell.b;
      cells.push_back(std::move(jc));
    }
    tables.push_back({{"id", table.id},
                      {"kind", to_string(table.kind)},
                      {"c", table.c},
                      {"eliminated", table.eliminated},
                      {"cells", std::move(cells)}});
  }
  nlohmann::json duplets = nlohmann::json::array();
  for (const auto& d : t.duplets) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& [b, pairs] : d.rows) {
      nlohmann::json jp = nlohmann::json::array();
      for (auto [x, y] : pairs) jp.push_back({x, y});
      rows.push_back({{"b", b}, {"pairs", std::move(jp)}});
    }
    duplets.push_back({{"id", d.id}, {"palette", d.palette}, {"rows", std::move(rows)}});
  }
  return {{"version", t.version}, {"tables", std::move(tables)}, {"duplets", std::move(duplets)}};
}

TableSet tables_from_json(const nlohmann::json& j) {
  TableSet t;
  t.version = j.at("version").get<int>();
  for (const auto& jt : j.at("tables")) {
    EliminationTable table;
    table.id = jt.at("id").get<std::string>();
    table.kind = instance_kind_from_string(jt.at("kind").get<std::string>());
    table.c = jt.at("c").get<int>();
    table.eliminated = jt.at("eliminated").get<std::vector<int>>();
    for (const auto& jc : jt.at("cells"))
      table.cells.push_back({jc.at("a").get<int>(), jc.value("b", -1),
                             table_entry_from_string(jc.at("entry").get<std::string>())});
    t.tables.push_back(std::move(table));
  }
  for (const auto& jd : j.at("duplets")) {
    DupletTable d;
    d.id = jd.at("id").get<std::string>();
    d.palette = jd.at("palette").get<std::vector<int>>();
    for (const auto& row : jd.at("rows")) {
      std::vector<std::pair<int, int>> pairs;
      for (const auto& p : row.at("pairs")) pairs.emplace_back(p.at(0).get<int>(), p.at(1).get<int>());
      d.rows.emplace_back(row.at("b").get<int>(), std::move(pairs));
    }
    t.duplets.push_back(std::move(d));
  }
  return t;
}

std::uint64_t checksum(const TableSet& t) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char ch : export_text(t)) {
    h ^= ch;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace fox13
