#pragma once

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "rtp/matrix.hpp"
#include "rtp/series.hpp"

namespace rtp {

// Where the coefficients of d(t) or h(t) come from. Every source can
// be expanded to any requested truncation order:
//   - a rational generating function (closed form, enables decisive
//     Polya-frequency verdicts),
//   - an explicit coefficient list, read as a finitely supported
//     sequence (zero beyond the list),
//   - a named generator, for sequences defined by a recurrence
//     (Catalan, Motzkin) whose closed forms are not rational.
class SeriesSource {
 public:
  enum class Kind { Rational, Coefficients, Generated };
  using Generator = std::function<std::vector<Rat>(int /*order*/)>;

  SeriesSource() : coeffs_{Rat(0)} {}  // the zero sequence

  static SeriesSource rational(RationalGF gf);
  static SeriesSource coefficients(std::vector<Rat> prefix);
  static SeriesSource generated(std::string name, Generator coeffs_up_to);

  Kind kind() const { return kind_; }
  // Non-null only for Kind::Rational.
  const RationalGF* rational_gf() const { return gf_.get(); }
  const std::vector<Rat>& coefficient_list() const { return coeffs_; }
  const std::string& generator_name() const { return name_; }

  Series expand(int order) const;

  // The source divided by t; requires a zero constant term.
  SeriesSource shifted_down() const;

  // Structural equality: same kind and same defining data (generators
  // compare by name).
  bool operator==(const SeriesSource& other) const;

 private:
  Kind kind_ = Kind::Coefficients;
  std::shared_ptr<const RationalGF> gf_;
  std::vector<Rat> coeffs_;
  std::string name_;
  Generator gen_;
};

// The pair (d(t), h(t)) defining a Riordan array: column k of the
// array has generating function d(t) h(t)^k.
struct RiordanSpec {
  SeriesSource d, h;
  bool operator==(const RiordanSpec&) const = default;
};

// Exact n_rows x n_cols truncation: entry(n, k) = [t^n] d(t) h(t)^k.
Mat build(const RiordanSpec& spec, int n_rows, int n_cols);

// d0 != 0, h0 = 0, h1 != 0 -- equivalently, lower triangular with a
// nonzero diagonal.
bool is_proper(const RiordanSpec& spec);

// The n_rows x (n_rows + 1) matrix with column 0 the d-coefficients
// and column j >= 1 the h-coefficients shifted down by j - 1:
//   entry(i, 0) = d_i,  entry(i, j) = h_{i-j+1}  (h with negative
// index reads as 0).
Mat hessenberg(const RiordanSpec& spec, int n_rows);

// A- and Z-sequences of a proper array (prefixes of equal length).
struct AZ {
  std::vector<Rat> a, z;
  bool operator==(const AZ&) const = default;
};

// Same band shape as hessenberg() but built from (z, a):
//   entry(i, 0) = z_i,  entry(i, j) = a_{i-j+1}.
Mat product_matrix(const AZ& az, int n_rows);

// Recovers length-`len` prefixes of the A- and Z-sequences from a
// truncation of a proper Riordan array by solving the triangular
// systems the row recurrences
//   r_{n+1,k+1} = sum_j a_j r_{n,k+j},   r_{n+1,0} = sum_j z_j r_{n,j}
// impose, then checks every recurrence instance the prefixes
// determine. Throws ImproperArray when the truncation is not lower
// triangular with nonzero diagonal (or fails the recurrences), and
// InsufficientTruncation when fewer than 2*len rows or len+1 columns
// are available.
AZ extract_az(const Mat& m, int len);

// Checks exactly, on rows 0..m, that the first n+2 columns of the
// array equal H * diag(1, R[n]), where R[n] is the first n+1 columns
// on the same rows and H the (m+1)-row Hessenberg matrix.
bool verify_factorization(const RiordanSpec& spec, int m, int n);

// Checks exactly on the m x n truncation that
//   R(d, h) = R(d, t) * R(1, h)
// (Toeplitz factor times Lagrange factor). Requires a proper spec.
bool verify_decomposition(const RiordanSpec& spec, int m, int n);

// Checks that the m x m truncation of R(1, h) equals the block matrix
// [[1, 0], [0, R(h/t, h)]]. Requires h proper (h0 = 0, h1 != 0).
bool verify_lagrange_block(const SeriesSource& h, int m);

}  // namespace rtp
