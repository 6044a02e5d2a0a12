#include "rtp/riordan.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>
#include <utility>

namespace rtp {

SeriesSource SeriesSource::rational(RationalGF gf) {
  SeriesSource s;
  s.kind_ = Kind::Rational;
  s.gf_ = std::make_shared<const RationalGF>(std::move(gf));
  return s;
}

SeriesSource SeriesSource::coefficients(std::vector<Rat> prefix) {
  SeriesSource s;
  s.kind_ = Kind::Coefficients;
  s.coeffs_ = std::move(prefix);
  if (s.coeffs_.empty()) s.coeffs_.emplace_back(0);
  return s;
}

SeriesSource SeriesSource::generated(std::string name, Generator coeffs_up_to) {
  SeriesSource s;
  s.kind_ = Kind::Generated;
  s.name_ = std::move(name);
  s.gen_ = std::move(coeffs_up_to);
  return s;
}

Series SeriesSource::expand(int order) const {
  assert(order >= 0);
  switch (kind_) {
    case Kind::Rational:
      return rtp::expand(*gf_, order);
    case Kind::Coefficients: {
      std::vector<Rat> c(static_cast<std::size_t>(order) + 1, Rat(0));
      for (std::size_t i = 0; i < coeffs_.size() && i <= static_cast<std::size_t>(order); ++i)
        c[i] = coeffs_[i];
      return Series(std::move(c));
    }
    case Kind::Generated: {
      std::vector<Rat> c = gen_(order);
      assert(static_cast<int>(c.size()) == order + 1 &&
             "generator must produce exactly order+1 coefficients");
      return Series(std::move(c));
    }
  }
  throw std::logic_error("unreachable");
}

SeriesSource SeriesSource::shifted_down() const {
  switch (kind_) {
    case Kind::Rational: {
      const RationalGF& gf = *gf_;
      if (!gf.num.empty() && gf.num[0] != 0)
        throw ImproperArray("cannot divide by t: constant term is nonzero");
      std::vector<Rat> num(gf.num.empty() ? std::vector<Rat>{}
                                          : std::vector<Rat>(gf.num.begin() + 1,
                                                             gf.num.end()));
      return rational(RationalGF(std::move(num), gf.den));
    }
    case Kind::Coefficients: {
      if (coeffs_[0] != 0)
        throw ImproperArray("cannot divide by t: constant term is nonzero");
      std::vector<Rat> c(coeffs_.begin() + 1, coeffs_.end());
      return coefficients(std::move(c));
    }
    case Kind::Generated: {
      if (gen_(0)[0] != 0)
        throw ImproperArray("cannot divide by t: constant term is nonzero");
      Generator inner = gen_;
      return generated(name_ + "/t", [inner](int order) {
        std::vector<Rat> c = inner(order + 1);
        c.erase(c.begin());
        return c;
      });
    }
  }
  throw std::logic_error("unreachable");
}

bool SeriesSource::operator==(const SeriesSource& other) const {
  if (kind_ != other.kind_) return false;
  switch (kind_) {
    case Kind::Rational:
      return *gf_ == *other.gf_;
    case Kind::Coefficients:
      return coeffs_ == other.coeffs_;
    case Kind::Generated:
      return name_ == other.name_;
  }
  return false;
}

Mat build(const RiordanSpec& spec, int n_rows, int n_cols) {
  assert(n_rows >= 1 && n_cols >= 1);
  const int order = n_rows - 1;
  const Series h = spec.h.expand(order);
  Series col_gf = spec.d.expand(order);
  Mat m(n_rows, n_cols);
  for (int k = 0; k < n_cols; ++k) {
    for (int i = 0; i < n_rows; ++i) m.at(i, k) = col_gf.coeff(i);
    if (k + 1 < n_cols) col_gf = mul(col_gf, h);
  }
  return m;
}

bool is_proper(const RiordanSpec& spec) {
  const Series d = spec.d.expand(0);
  const Series h = spec.h.expand(1);
  return d.coeff(0) != 0 && h.coeff(0) == 0 && h.coeff(1) != 0;
}

Mat hessenberg(const RiordanSpec& spec, int n_rows) {
  assert(n_rows >= 1);
  const Series d = spec.d.expand(n_rows - 1);
  const Series h = spec.h.expand(n_rows - 1);
  Mat m(n_rows, n_rows + 1);
  for (int i = 0; i < n_rows; ++i) {
    m.at(i, 0) = d.coeff(i);
    for (int j = 1; j <= n_rows; ++j) {
      const int k = i - j + 1;
      if (k >= 0 && k <= h.order()) m.at(i, j) = h.coeff(k);
    }
  }
  return m;
}

Mat product_matrix(const AZ& az, int n_rows) {
  assert(n_rows >= 1);
  Mat m(n_rows, n_rows + 1);
  for (int i = 0; i < n_rows; ++i) {
    if (i < static_cast<int>(az.z.size())) m.at(i, 0) = az.z[i];
    for (int j = 1; j <= n_rows; ++j) {
      const int k = i - j + 1;
      if (k >= 0 && k < static_cast<int>(az.a.size())) m.at(i, j) = az.a[k];
    }
  }
  return m;
}

AZ extract_az(const Mat& m, int len) {
  if (len < 1) throw std::invalid_argument("extract_az: len must be >= 1");
  if (m.n_rows() < 2 * len || m.n_cols() < len + 1)
    throw InsufficientTruncation(
        "extract_az needs at least 2*len rows and len+1 columns");

  // Properness shows in the truncation as lower triangular with a
  // nonzero diagonal.
  const int diag = std::min(m.n_rows(), m.n_cols());
  for (int i = 0; i < m.n_rows(); ++i)
    for (int j = i + 1; j < m.n_cols(); ++j)
      if (m.at(i, j) != 0)
        throw ImproperArray("array truncation is not lower triangular");
  for (int k = 0; k < diag; ++k)
    if (m.at(k, k) == 0)
      throw ImproperArray("array truncation has a zero diagonal entry");

  AZ az;
  az.a.assign(len, Rat(0));
  az.z.assign(len, Rat(0));

  // A-sequence from rows (len-1, len): the equation at column offset
  // len-1-q is triangular in a_0..a_q with pivot r_{len-1,len-1}.
  const int n = len - 1;
  for (int q = 0; q < len; ++q) {
    const int k = n - q;  // r_{n+1,k+1} = sum_{j<=q} a_j r_{n,k+j}
    Rat acc = m.at(n + 1, k + 1);
    for (int j = 0; j < q; ++j) acc -= az.a[j] * m.at(n, k + j);
    az.a[q] = acc / m.at(n, n);
  }

  // Z-sequence row by row: z_n enters first in the equation for
  // r_{n+1,0} with pivot r_{n,n}.
  for (int q = 0; q < len; ++q) {
    Rat acc = m.at(q + 1, 0);
    for (int j = 0; j < q; ++j) acc -= az.z[j] * m.at(q, j);
    az.z[q] = acc / m.at(q, q);
  }

  // Re-check every recurrence instance the prefixes fully determine.
  // A truncation of a genuine proper Riordan array always passes; a
  // matrix that merely looks triangular need not.
  for (int row = 0; row + 1 < m.n_rows(); ++row) {
    if (row >= m.n_cols()) break;  // needs entries up to column `row`
    for (int k = 0; k + 1 < m.n_cols() && k <= row; ++k) {
      if (row - k >= len) continue;  // would involve a_j beyond the prefix
      Rat acc = 0;
      for (int j = 0; k + j <= row; ++j) acc += az.a[j] * m.at(row, k + j);
      if (acc != m.at(row + 1, k + 1))
        throw ImproperArray(
            "matrix is not the truncation of a proper Riordan array "
            "(A-recurrence fails)");
    }
    if (row < len) {
      Rat acc = 0;
      for (int j = 0; j <= row; ++j) acc += az.z[j] * m.at(row, j);
      if (acc != m.at(row + 1, 0))
        throw ImproperArray(
            "matrix is not the truncation of a proper Riordan array "
            "(Z-recurrence fails)");
    }
  }
  return az;
}

bool verify_factorization(const RiordanSpec& spec, int m, int n) {
  assert(m >= 0 && n >= 0);
  // Left side: rows 0..m of the first n+2 columns.
  const Mat lhs = build(spec, m + 1, n + 2);
  // Right side: H (rows 0..m) times diag(1, R[n] on rows 0..m).
  const Mat h = hessenberg(spec, m + 1);  // (m+1) x (m+2)
  const Mat rn = build(spec, m + 1, n + 1);
  Mat block(m + 2, n + 2);
  block.at(0, 0) = 1;
  for (int i = 0; i <= m; ++i)
    for (int j = 0; j <= n; ++j) block.at(i + 1, j + 1) = rn.at(i, j);
  return lhs == mat_mul(h, block);
}

bool verify_decomposition(const RiordanSpec& spec, int m, int n) {
  assert(m >= 1 && n >= 1);
  if (!is_proper(spec))
    throw ImproperArray("decomposition is defined for proper arrays only");
  const Mat lhs = build(spec, m, n);
  // Inner dimension m is exact: the Toeplitz factor's row i is
  // supported on columns <= i, so nothing beyond column m-1 of the
  // Lagrange factor can contribute.
  const RiordanSpec toeplitz_factor{spec.d,
                                    SeriesSource::coefficients(rats({0, 1}))};
  const RiordanSpec lagrange_factor{SeriesSource::coefficients(rats({1})),
                                    spec.h};
  const Mat left_factor = build(toeplitz_factor, m, m);
  const Mat right_factor = build(lagrange_factor, m, n);
  return lhs == mat_mul(left_factor, right_factor);
}

bool verify_lagrange_block(const SeriesSource& h, int m) {
  assert(m >= 1);
  const Series h01 = h.expand(1);
  if (h01.coeff(0) != 0 || h01.coeff(1) == 0)
    throw ImproperArray("Lagrange block identity needs h(0) = 0, h'(0) != 0");
  const RiordanSpec lagrange{SeriesSource::coefficients(rats({1})), h};
  const Mat lhs = build(lagrange, m, m);
  if (m == 1) return lhs.at(0, 0) == 1;
  const RiordanSpec bell{h.shifted_down(), h};
  const Mat inner = build(bell, m - 1, m - 1);
  Mat rhs(m, m);
  rhs.at(0, 0) = 1;
  for (int i = 0; i + 1 < m; ++i)
    for (int j = 0; j + 1 < m; ++j) rhs.at(i + 1, j + 1) = inner.at(i, j);
  return lhs == rhs;
}

}  // namespace rtp
