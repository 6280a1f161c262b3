#pragma once

#include <string>
#include <vector>

#include "fox13/catalog.hpp"
#include "fox13/coloring.hpp"
#include "fox13/tables.hpp"

namespace fox13 {

// For each b of S in increasing order, every unordered pair {a, c} of distinct
// colors of S with 2b = a + c (mod p).
DupletTable compute_duplets(const Palette& s, int p = 13);

enum class Verdict { Confirmed, Violated, UnverifiableFigureOnly };
std::string to_string(Verdict v);

// One verdict per table cell. A cell is X exactly when the configuration
// forces an eliminated or target color next to the instance; a non-X cell
// whose transformation has text-stated produced forms is also checked
// against that set.
struct CellReport {
  std::string table;
  int a = 0;
  int b = -1;
  TableEntry entry;
  Verdict verdict = Verdict::Confirmed;
  std::string detail;
};

struct TableReport {
  std::string table;
  std::vector<CellReport> cells;
  int violations = 0;
  int figure_only = 0;
};

// X semantics: Alpha/Beta need 2c - a, Delta 2a - c, Gamma 2a - c or 2b - c
// to lie in eliminated + {c}.
bool x_condition(const EliminationTable& t, int a, int b, int p = 13);
TableReport verify_x_cells(const EliminationTable& t);

// An arithmetic statement from the worked cases, recomputed.
struct ArithmeticClaim {
  enum class Status {
    Confirmed,  // the text and the computation agree
    Flagged,    // known discrepancy in the text; reported, not corrected
    Presumed,   // agrees under a stated reading of the text
    Mismatch,   // disagreement nobody anticipated
  };
  std::string where;      // e.g. "colors 12/11, alpha, c=11"
  std::string statement;  // what the text asserts
  std::string expected;   // the value the text gives
  std::string computed;   // the value recomputed here
  Status status = Status::Confirmed;
  std::string note;
};

std::string to_string(ArithmeticClaim::Status s);

std::vector<ArithmeticClaim> verify_text_arithmetic();

struct DupletReport {
  std::string table;
  bool match = false;
  std::vector<std::string> differences;
};

DupletReport verify_duplets(const DupletTable& stored, int p = 13);

struct VerificationReport {
  std::vector<TableReport> tables;
  std::vector<DupletReport> duplets;
  std::vector<ArithmeticClaim> arithmetic;
  bool text_round_trip = false;
  bool json_round_trip = false;
  std::uint64_t checksum = 0;

  int cell_violations() const;
  int arithmetic_mismatches() const;  // Mismatch only; Flagged and Presumed are expected
  // True iff nothing failed outside the flagged and presumed items.
  bool ok() const;
};

VerificationReport verify_tables(const TableSet& tables);

nlohmann::json to_json(const VerificationReport& r);
std::string to_text(const VerificationReport& r);

}  // namespace fox13
