#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <vector>

namespace fox13 {

using BigInt = boost::multiprecision::cpp_int;

// Dense row-major integer matrix with arbitrary-precision entries.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows * cols)) {}

  static IntMatrix identity(int n);

  int rows() const noexcept { return rows_; }
  int cols() const noexcept { return cols_; }
  BigInt& operator()(int r, int c) { return data_[static_cast<std::size_t>(r * cols_ + c)]; }
  const BigInt& operator()(int r, int c) const { return data_[static_cast<std::size_t>(r * cols_ + c)]; }

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

  std::string to_string() const;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<BigInt> data_;
};

// left * m * right == diag-embedded matrix, with left and right unimodular.
// diag has min(rows, cols) entries, nonnegative, each dividing the next, so
// zeros come last.
struct SmithForm {
  std::vector<BigInt> diag;
  IntMatrix left;
  IntMatrix right;
  int rank = 0;
};

SmithForm smith_normal_form(const IntMatrix& m);

// Determinant by fraction-free (Bareiss) elimination. Square input only.
BigInt bareiss_determinant(IntMatrix m);

// Checks the multiplication identity, the divisibility chain, and that both
// multipliers have determinant +-1.
bool verify_smith(const IntMatrix& m, const SmithForm& s);

}  // namespace fox13
