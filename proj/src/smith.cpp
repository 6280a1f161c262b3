#include "fox13/smith.hpp"

#include <sstream>
#include <utility>

namespace fox13 {

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix out(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (int j = 0; j < b.cols(); ++j) out(i, j) += a(i, k) * b(k, j);
    }
  return out;
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  for (int r = 0; r < rows_; ++r) {
    os << '[';
    for (int c = 0; c < cols_; ++c) os << (c ? " " : "") << (*this)(r, c);
    os << "]\n";
  }
  return os.str();
}

namespace {

// Row/column operations applied simultaneously to the working matrix and to
// the multiplier that records them.
struct Reducer {
  IntMatrix a;
  IntMatrix left;
  IntMatrix right;

  void swap_rows(int i, int j) {
    if (i == j) return;
    for (int c = 0; c < a.cols(); ++c) std::swap(a(i, c), a(j, c));
    for (int c = 0; c < left.cols(); ++c) std::swap(left(i, c), left(j, c));
  }
  void swap_cols(int i, int j) {
    if (i == j) return;
    for (int r = 0; r < a.rows(); ++r) std::swap(a(r, i), a(r, j));
    for (int r = 0; r < right.rows(); ++r) std::swap(right(r, i), right(r, j));
  }
  // row j -= q * row i
  void sub_row(int j, int i, const BigInt& q) {
    for (int c = 0; c < a.cols(); ++c) a(j, c) -= q * a(i, c);
    for (int c = 0; c < left.cols(); ++c) left(j, c) -= q * left(i, c);
  }
  // col j -= q * col i
  void sub_col(int j, int i, const BigInt& q) {
    for (int r = 0; r < a.rows(); ++r) a(r, j) -= q * a(r, i);
    for (int r = 0; r < right.rows(); ++r) right(r, j) -= q * right(r, i);
  }
  void negate_row(int i) {
    for (int c = 0; c < a.cols(); ++c) a(i, c) = -a(i, c);
    for (int c = 0; c < left.cols(); ++c) left(i, c) = -left(i, c);
  }
  void add_row(int j, int i) { sub_row(j, i, BigInt(-1)); }
};

// Moves the entry of least nonzero absolute value in the trailing block to (t, t).
bool place_pivot(Reducer& r, int t) {
  int best_r = -1, best_c = -1;
  BigInt best;
  for (int i = t; i < r.a.rows(); ++i)
    for (int j = t; j < r.a.cols(); ++j) {
      const BigInt& v = r.a(i, j);
      if (v == 0) continue;
      BigInt av = abs(v);
      if (best_r < 0 || av < best) {
        best = av;
        best_r = i;
        best_c = j;
      }
    }
  if (best_r < 0) return false;
  r.swap_rows(t, best_r);
  r.swap_cols(t, best_c);
  return true;
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& m) {
  Reducer r{m, IntMatrix::identity(m.rows()), IntMatrix::identity(m.cols())};
  const int n = std::min(m.rows(), m.cols());
  int rank = 0;
  for (int t = 0; t < n; ++t) {
    if (!place_pivot(r, t)) break;
    while (true) {
      bool dirty = false;
      for (int i = t + 1; i < r.a.rows(); ++i) {
        if (r.a(i, t) == 0) continue;
        BigInt q = r.a(i, t) / r.a(t, t);
        r.sub_row(i, t, q);
        if (r.a(i, t) != 0) dirty = true;
      }
      for (int j = t + 1; j < r.a.cols(); ++j) {
        if (r.a(t, j) == 0) continue;
        BigInt q = r.a(t, j) / r.a(t, t);
        r.sub_col(j, t, q);
        if (r.a(t, j) != 0) dirty = true;
      }
      if (dirty) {
        place_pivot(r, t);
        continue;
      }
      // Row and column are clear; enforce divisibility of the trailing block.
      int bad_row = -1;
      for (int i = t + 1; i < r.a.rows() && bad_row < 0; ++i)
        for (int j = t + 1; j < r.a.cols(); ++j)
          if (r.a(i, j) % r.a(t, t) != 0) {
            bad_row = i;
            break;
          }
      if (bad_row < 0) break;
      r.add_row(t, bad_row);
    }
    if (r.a(t, t) < 0) r.negate_row(t);
    ++rank;
  }
  SmithForm s;
  s.rank = rank;
  for (int t = 0; t < n; ++t) s.diag.push_back(r.a(t, t));
  s.left = std::move(r.left);
  s.right = std::move(r.right);
  return s;
}

BigInt bareiss_determinant(IntMatrix m) {
  const int n = m.rows();
  if (n != m.cols()) throw std::invalid_argument("bareiss_determinant needs a square matrix");
  if (n == 0) return 1;
  int sign = 1;
  BigInt prev = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (m(k, k) == 0) {
      int swap_with = -1;
      for (int i = k + 1; i < n; ++i)
        if (m(i, k) != 0) {
          swap_with = i;
          break;
        }
      if (swap_with < 0) return 0;
      for (int c = 0; c < n; ++c) std::swap(m(k, c), m(swap_with, c));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

bool verify_smith(const IntMatrix& m, const SmithForm& s) {
  IntMatrix d(m.rows(), m.cols());
  for (std::size_t i = 0; i < s.diag.size(); ++i) d(static_cast<int>(i), static_cast<int>(i)) = s.diag[i];
  if (s.left * m * s.right != d) return false;
  for (std::size_t i = 0; i < s.diag.size(); ++i) {
    if (s.diag[i] < 0) return false;
    if (i + 1 < s.diag.size()) {
      if (s.diag[i] == 0 && s.diag[i + 1] != 0) return false;
      if (s.diag[i] != 0 && s.diag[i + 1] % s.diag[i] != 0) return false;
    }
  }
  auto unimodular = [](const IntMatrix& u) { return abs(bareiss_determinant(u)) == 1; };
  return unimodular(s.left) && unimodular(s.right);
}

}  // namespace fox13
