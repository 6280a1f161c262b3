#include <set>

#include "doctest.h"
#include "fox13/tables.hpp"
#include "fox13/verifier.hpp"

using namespace fox13;

namespace {

// All unordered {a, c}, a != c, with 2b = a + c, by trying every pair.
std::vector<std::pair<int, int>> duplets_by_pairs(const std::vector<int>& s, int b) {
  std::vector<std::pair<int, int>> out;
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j)
      if ((s[i] + s[j]) % 13 == (2 * b) % 13) out.emplace_back(s[i], s[j]);
  return out;
}

}  // namespace

TEST_CASE("compute_duplets agrees with pair enumeration") {
  for (const Palette& s : {Palette{0, 1, 2, 5, 7, 10}, Palette{0, 1, 5, 7, 10}, Palette{0, 1, 2, 3, 4, 5, 6}}) {
    DupletTable t = compute_duplets(s);
    REQUIRE(t.rows.size() == s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
      CHECK(t.rows[i].first == s[i]);
      CHECK(t.rows[i].second == duplets_by_pairs(s, s[i]));
    }
  }
}

TEST_CASE("stored duplet tables match exactly") {
  const TableSet& t = embedded_tables();
  for (const char* id : {"4.5", "4.10"}) {
    const DupletTable* d = t.find_duplets(id);
    REQUIRE(d);
    DupletReport r = verify_duplets(*d);
    CHECK(r.match);
    CHECK(r.differences.empty());
  }
  // Table 4.10: b=7 has only {0,1}.
  const DupletTable* d = t.find_duplets("4.10");
  CHECK(d->rows[3].first == 7);
  CHECK(d->rows[3].second == std::vector<std::pair<int, int>>{{0, 1}});
}

TEST_CASE("a corrupted duplet row is reported") {
  DupletTable d = *embedded_tables().find_duplets("4.10");
  d.rows[1].second.push_back({0, 2});
  CHECK_FALSE(verify_duplets(d).match);
}

TEST_CASE("X cells of every embedded table are confirmed") {
  const TableSet& t = embedded_tables();
  CHECK(t.tables.size() == 24);
  for (const auto& table : t.tables) {
    TableReport r = verify_x_cells(table);
    INFO("table ", table.id);
    CHECK(r.violations == 0);
  }
}

TEST_CASE("X rule by instance kind") {
  // Alpha with c = 6 after 12, 11: a = 0 gives 2c - a = 12, gone.
  const EliminationTable* a = embedded_tables().find("3.1");
  REQUIRE(a);
  CHECK(x_condition(*a, 0, -1));
  CHECK(x_condition(*a, 1, -1));
  CHECK_FALSE(x_condition(*a, 2, -1));
}

TEST_CASE("flipping a cell is caught") {
  EliminationTable t = *embedded_tables().find("3.1");
  for (auto& cell : t.cells)
    if (cell.entry.type == TableEntry::Type::Impossible) {
      cell.entry = table_entry_from_string("1");
      break;
    }
  CHECK(verify_x_cells(t).violations == 1);
}

TEST_CASE("text arithmetic: only the alpha2 line is flagged") {
  auto claims = verify_text_arithmetic();
  int flagged = 0, mismatched = 0;
  for (const auto& c : claims) {
    if (c.status == ArithmeticClaim::Status::Flagged) {
      ++flagged;
      CHECK(c.where.find("alpha2") != std::string::npos);
      CHECK(c.expected == "0");
      CHECK(c.computed == "10");
    }
    mismatched += c.status == ArithmeticClaim::Status::Mismatch;
  }
  CHECK(flagged == 1);
  CHECK(mismatched == 0);
}

TEST_CASE("full report is ok and round-trips") {
  VerificationReport r = verify_tables(embedded_tables());
  CHECK(r.ok());
  CHECK(r.text_round_trip);
  CHECK(r.json_round_trip);
  CHECK(r.checksum == checksum(embedded_tables()));
  CHECK(to_json(r)["ok"] == true);
  CHECK(to_text(r).find("OK") != std::string::npos);
}

TEST_CASE("table text parses back identically") {
  const TableSet& t = embedded_tables();
  CHECK(parse_tables(export_text(t)) == t);
  CHECK(tables_from_json(export_json(t)) == t);
  CHECK_THROWS_AS(parse_tables("version 1\nTABLE 9.9 ALPHA c=x eliminated=\n"), TableFormatError);
}
