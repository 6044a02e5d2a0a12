#include "rtp/matrix.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>
#include <utility>

namespace rtp {

Mat::Mat(int n_rows, int n_cols)
    : rows_(n_rows),
      cols_(n_cols),
      e_(static_cast<std::size_t>(n_rows) * n_cols, Rat(0)) {
  assert(n_rows >= 0 && n_cols >= 0);
}

Mat Mat::identity(int n) {
  Mat m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Mat Mat::from_rows(const std::vector<std::vector<Rat>>& rows) {
  const int r = static_cast<int>(rows.size());
  const int c = r ? static_cast<int>(rows[0].size()) : 0;
  Mat m(r, c);
  for (int i = 0; i < r; ++i) {
    assert(static_cast<int>(rows[i].size()) == c && "ragged row list");
    for (int j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

std::ostream& operator<<(std::ostream& os, const Mat& m) {
  for (int i = 0; i < m.n_rows(); ++i) {
    os << (i ? "\n[" : "[");
    for (int j = 0; j < m.n_cols(); ++j)
      os << (j ? " " : "") << rat_to_string(m.at(i, j));
    os << "]";
  }
  return os;
}

Mat toeplitz(const std::vector<Rat>& seq, int n_rows, int n_cols) {
  Mat m(n_rows, n_cols);
  for (int i = 0; i < n_rows; ++i)
    for (int j = 0; j < n_cols; ++j) {
      const int k = i - j;
      if (k >= 0 && k < static_cast<int>(seq.size())) m.at(i, j) = seq[k];
    }
  return m;
}

Mat mat_mul(const Mat& a, const Mat& b) {
  assert(a.n_cols() == b.n_rows());
  Mat c(a.n_rows(), b.n_cols());
  for (int i = 0; i < a.n_rows(); ++i)
    for (int k = 0; k < a.n_cols(); ++k) {
      if (a.at(i, k) == 0) continue;
      for (int j = 0; j < b.n_cols(); ++j) c.at(i, j) += a.at(i, k) * b.at(k, j);
    }
  return c;
}

Mat transpose(const Mat& m) {
  Mat t(m.n_cols(), m.n_rows());
  for (int i = 0; i < m.n_rows(); ++i)
    for (int j = 0; j < m.n_cols(); ++j) t.at(j, i) = m.at(i, j);
  return t;
}

bool is_lower_triangular(const Mat& m) {
  for (int i = 0; i < m.n_rows(); ++i)
    for (int j = i + 1; j < m.n_cols(); ++j)
      if (m.at(i, j) != 0) return false;
  return true;
}

namespace {

// Bareiss on an integer matrix: every intermediate entry is itself a
// minor of the input, and each division is exact.
Int bareiss_det(std::vector<Int> a, const int n) {
  if (n == 0) return 1;
  int sign = 1;
  Int prev = 1;
  auto e = [&](int i, int j) -> Int& { return a[static_cast<std::size_t>(i) * n + j]; };
  for (int k = 0; k + 1 < n; ++k) {
    if (e(k, k) == 0) {
      int pivot = -1;
      for (int i = k + 1; i < n; ++i)
        if (e(i, k) != 0) {
          pivot = i;
          break;
        }
      if (pivot < 0) return 0;
      for (int j = k; j < n; ++j) std::swap(e(k, j), e(pivot, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j)
        e(i, j) = (e(i, j) * e(k, k) - e(i, k) * e(k, j)) / prev;
      e(i, k) = 0;
    }
    prev = e(k, k);
  }
  return sign > 0 ? e(n - 1, n - 1) : -e(n - 1, n - 1);
}

// Row-cleared view of a rational matrix: row i of `ints` equals
// scale[i] * (row i of m) with scale[i] a positive integer, so any
// minor of m is the integer minor divided by the product of the
// selected rows' scales. Signs carry over unchanged.
struct ScaledInts {
  std::vector<Int> ints;  // row-major
  std::vector<Int> scale;
  int cols = 0;

  explicit ScaledInts(const Mat& m) : cols(m.n_cols()) {
    ints.resize(static_cast<std::size_t>(m.n_rows()) * m.n_cols());
    scale.resize(m.n_rows());
    for (int i = 0; i < m.n_rows(); ++i) {
      Int l = 1;
      for (int j = 0; j < m.n_cols(); ++j) l = lcm(l, rat_den(m.at(i, j)));
      scale[i] = l;
      for (int j = 0; j < m.n_cols(); ++j) {
        const Rat& v = m.at(i, j);
        ints[static_cast<std::size_t>(i) * cols + j] =
            rat_num(v) * (l / rat_den(v));
      }
    }
  }

  Int minor_int(const std::vector<int>& rows, const std::vector<int>& cols_sel) const {
    const int s = static_cast<int>(rows.size());
    std::vector<Int> sub(static_cast<std::size_t>(s) * s);
    for (int i = 0; i < s; ++i)
      for (int j = 0; j < s; ++j)
        sub[static_cast<std::size_t>(i) * s + j] =
            ints[static_cast<std::size_t>(rows[i]) * cols + cols_sel[j]];
    return bareiss_det(std::move(sub), s);
  }

  Rat minor_value(const std::vector<int>& rows, const std::vector<int>& cols_sel) const {
    Int d = minor_int(rows, cols_sel);
    Int denom = 1;
    for (int r : rows) denom *= scale[r];
    return Rat(d) / Rat(denom);
  }
};

bool advance_combination(std::vector<int>& idx, int n) {
  const int k = static_cast<int>(idx.size());
  int i = k - 1;
  while (i >= 0 && idx[i] == n - k + i) --i;
  if (i < 0) return false;
  ++idx[i];
  for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  return true;
}

}  // namespace

Rat det(const Mat& m) {
  if (m.n_rows() != m.n_cols())
    throw NotSquare("determinant of a non-square matrix");
  const int n = m.n_rows();
  if (n == 0) return 1;
  ScaledInts s(m);
  Int d = bareiss_det(s.ints, n);
  Int denom = 1;
  for (const Int& f : s.scale) denom *= f;
  return Rat(d) / Rat(denom);
}

Rat minor_det(const Mat& m, const std::vector<int>& rows,
              const std::vector<int>& cols) {
  if (rows.size() != cols.size())
    throw BadIndexSet("row and column index sets differ in size");
  auto check = [](const std::vector<int>& idx, int bound) {
    for (std::size_t i = 0; i < idx.size(); ++i) {
      if (idx[i] < 0 || idx[i] >= bound)
        throw BadIndexSet("minor index out of range");
      if (i && idx[i] <= idx[i - 1])
        throw BadIndexSet("minor indices must be strictly increasing");
    }
  };
  check(rows, m.n_rows());
  check(cols, m.n_cols());
  const int s = static_cast<int>(rows.size());
  Mat sub(s, s);
  for (int i = 0; i < s; ++i)
    for (int j = 0; j < s; ++j) sub.at(i, j) = m.at(rows[i], cols[j]);
  return det(sub);
}

TPReport is_tp(const Mat& m, int max_order) {
  if (max_order < 1) throw std::invalid_argument("is_tp: max_order must be >= 1");
  TPReport report;
  report.n_rows = m.n_rows();
  report.n_cols = m.n_cols();
  report.max_minor_order = std::min({max_order, m.n_rows(), m.n_cols()});
  const ScaledInts scaled(m);
  for (int size = 1; size <= report.max_minor_order; ++size) {
    std::vector<int> rows(size), cols(size);
    for (int i = 0; i < size; ++i) rows[i] = i;
    do {
      for (int i = 0; i < size; ++i) cols[i] = i;
      do {
        if (scaled.minor_int(rows, cols) < 0) {
          report.verdict = TPVerdict::NOT_TP;
          report.witness = TPWitness{rows, cols, scaled.minor_value(rows, cols)};
          return report;
        }
      } while (advance_combination(cols, m.n_cols()));
    } while (advance_combination(rows, m.n_rows()));
  }
  report.verdict = TPVerdict::TP_UP_TO;
  return report;
}

TPReport is_tp_full(const Mat& m) {
  return is_tp(m, std::max(1, std::min(m.n_rows(), m.n_cols())));
}

}  // namespace rtp
