#pragma once

#include <optional>
#include <ostream>
#include <vector>

#include "rtp/rat.hpp"

namespace rtp {

// Dense exact matrix, row-major.
class Mat {
 public:
  Mat(int n_rows, int n_cols);  // zero-filled
  static Mat identity(int n);
  static Mat from_rows(const std::vector<std::vector<Rat>>& rows);

  int n_rows() const { return rows_; }
  int n_cols() const { return cols_; }
  const Rat& at(int i, int j) const { return e_[idx(i, j)]; }
  Rat& at(int i, int j) { return e_[idx(i, j)]; }

  bool operator==(const Mat&) const = default;

 private:
  std::size_t idx(int i, int j) const {
    return static_cast<std::size_t>(i) * cols_ + j;
  }
  int rows_, cols_;
  std::vector<Rat> e_;
};

std::ostream& operator<<(std::ostream& os, const Mat& m);

// entry(i, j) = seq[i - j] when in range, else 0.
Mat toeplitz(const std::vector<Rat>& seq, int n_rows, int n_cols);

Mat mat_mul(const Mat& a, const Mat& b);
Mat transpose(const Mat& m);
bool is_lower_triangular(const Mat& m);

// Exact determinant, fraction-free Bareiss elimination on
// denominator-cleared rows. Throws NotSquare.
Rat det(const Mat& m);

// Determinant of the submatrix selected by strictly increasing,
// equal-sized index sets. Throws BadIndexSet.
Rat minor_det(const Mat& m, const std::vector<int>& rows,
              const std::vector<int>& cols);

enum class TPVerdict { TP_UP_TO, NOT_TP };

struct TPWitness {
  std::vector<int> rows, cols;
  Rat value;  // strictly negative
  bool operator==(const TPWitness&) const = default;
};

// Result of a truncation-scale total positivity check. A verdict is
// always relative to the truncation dimensions and the minor-order cap
// actually enumerated; nothing here ever claims the infinite object.
struct TPReport {
  TPVerdict verdict = TPVerdict::TP_UP_TO;
  int n_rows = 0, n_cols = 0;
  int max_minor_order = 0;  // cap actually checked
  std::optional<TPWitness> witness;  // first negative minor, lex order

  bool tp() const { return verdict == TPVerdict::TP_UP_TO; }
};

// Enumerates every minor of size 1..min(max_order, n_rows, n_cols) in
// lexicographic (size, row set, col set) order; stops at the first
// negative one. max_order must be >= 1.
TPReport is_tp(const Mat& m, int max_order);

// Full cap: minors up to min(n_rows, n_cols).
TPReport is_tp_full(const Mat& m);

}  // namespace rtp
