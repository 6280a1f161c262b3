#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"

namespace fox13 {

// Where a target color sits in a colored diagram: on a monochromatic crossing,
// on the over-arc of a polychromatic crossing, or on an under-arc joining two
// crossings whose over-arcs have distinct (Gamma) or equal (Delta) colors.
enum class InstanceKind { Alpha, Beta, Gamma, Delta };

std::string to_string(InstanceKind k);
InstanceKind instance_kind_from_string(std::string_view s);

struct TableEntry {
  enum class Type { Impossible, Transformation, Endgame };
  Type type = Type::Impossible;
  int index = 0;         // transformation index, or k for the endgame D_k
  bool swapped = false;  // "!" prefix: parameter roles interchanged

  friend bool operator==(const TableEntry&, const TableEntry&) = default;
};

std::string to_string(const TableEntry& e);
TableEntry table_entry_from_string(std::string_view s);

struct TableCell {
  int a = 0;
  int b = -1;  // Gamma tables only
  TableEntry entry;

  friend bool operator==(const TableCell&, const TableCell&) = default;
};

struct EliminationTable {
  std::string id;
  InstanceKind kind = InstanceKind::Alpha;
  int c = 0;
  std::vector<int> eliminated;  // colors removed before c, in removal order
  std::vector<TableCell> cells;

  const TableEntry* find(int a, int b = -1) const;
  friend bool operator==(const EliminationTable&, const EliminationTable&) = default;
};

// For each over-arc color b of a palette, the unordered pairs {a, c} of
// distinct palette colors with 2b = a + c.
struct DupletTable {
  std::string id;
  std::vector<int> palette;
  std::vector<std::pair<int, std::vector<std::pair<int, int>>>> rows;  // pairs stored lo < hi

  friend bool operator==(const DupletTable&, const DupletTable&) = default;
};

struct TableSet {
  int version = 1;
  std::vector<EliminationTable> tables;
  std::vector<DupletTable> duplets;

  const EliminationTable* find(InstanceKind kind, int c) const;
  const EliminationTable* find(std::string_view id) const;
  const DupletTable* find_duplets(std::string_view id) const;
  friend bool operator==(const TableSet&, const TableSet&) = default;
};

class TableFormatError : public std::runtime_error {
 public:
  TableFormatError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const noexcept { return line_; }

 private:
  int line_;
};

TableSet parse_tables(std::string_view text);
TableSet load_tables(const std::filesystem::path& path);
// The tables compiled into the library.
const TableSet& embedded_tables();
std::string_view embedded_tables_text();

std::string export_text(const TableSet& t);
nlohmann::json export_json(const TableSet& t);
TableSet tables_from_json(const nlohmann::json& j);
// FNV-1a 64 over export_text(t).
std::uint64_t checksum(const TableSet& t);

}  // namespace fox13
