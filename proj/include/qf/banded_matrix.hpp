#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qf/polynomial.hpp"
#include "qf/trunc_poly.hpp"

namespace qf {

/// Polynomial in the index variable j with coefficients in R_m.
class IndexPoly {
 public:
  explicit IndexPoly(unsigned m = 0) : m_(m) {}
  IndexPoly(unsigned m, std::vector<TruncPoly> coefficients);

  static IndexPoly constant(const TruncPoly& c);
  /// a*j + b
  static IndexPoly linear(unsigned m, const Scalar& a, const TruncPoly& b);
  /// f(L(j)) for a scalar polynomial f.
  static IndexPoly compose(const Polynomial& f, const IndexPoly& inner);

  unsigned order() const noexcept { return m_; }
  const std::vector<TruncPoly>& coefficients() const noexcept { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  TruncPoly eval(const Scalar& j) const;
  /// P(j + a)
  IndexPoly shift(const Scalar& a) const;

  IndexPoly& operator+=(const IndexPoly& o);
  IndexPoly& operator-=(const IndexPoly& o);
  friend IndexPoly operator+(IndexPoly a, const IndexPoly& b) { return a += b; }
  friend IndexPoly operator-(IndexPoly a, const IndexPoly& b) { return a -= b; }
  friend IndexPoly operator*(const IndexPoly& a, const IndexPoly& b);
  friend IndexPoly operator*(const IndexPoly& a, const TruncPoly& c);
  IndexPoly operator-() const;
  friend bool operator==(const IndexPoly&, const IndexPoly&) = default;

  std::string str() const;

 private:
  void normalize();
  unsigned m_;
  std::vector<TruncPoly> coeffs_;
};

/// Element of the centrally extended gl_infinity over R_m: finitely many
/// diagonals whose entries are polynomial in the column index, a finite
/// overlay of single entries, and a central part.
/// Diagonal k holds P_k with entry (j-k, j) equal to P_k(j).
class BandedMatrix {
 public:
  using Index = std::pair<long, long>;

  explicit BandedMatrix(unsigned m = 0);

  static BandedMatrix diagonal(long k, const IndexPoly& p);
  /// f E_{i,j}
  static BandedMatrix unit(long i, long j, const TruncPoly& f);
  static BandedMatrix central_element(const TruncPoly& c);

  unsigned order() const noexcept { return m_; }
  const std::map<long, IndexPoly>& diagonals() const noexcept { return diagonals_; }
  const std::map<Index, TruncPoly>& overlay() const noexcept { return overlay_; }
  const TruncPoly& central() const noexcept { return central_; }
  BandedMatrix noncentral() const;

  TruncPoly entry(long i, long j) const;
  /// Weights j - i carrying nonzero data.
  std::vector<long> weights() const;
  bool is_zero() const { return diagonals_.empty() && overlay_.empty() && central_.is_zero(); }

  BandedMatrix& operator+=(const BandedMatrix& o);
  BandedMatrix& operator-=(const BandedMatrix& o);
  BandedMatrix& operator*=(const TruncPoly& c);
  friend BandedMatrix operator+(BandedMatrix a, const BandedMatrix& b) { return a += b; }
  friend BandedMatrix operator-(BandedMatrix a, const BandedMatrix& b) { return a -= b; }
  friend BandedMatrix operator*(BandedMatrix a, const TruncPoly& c) { return a *= c; }
  /// Matrix product of the non-central parts.
  friend BandedMatrix operator*(const BandedMatrix& a, const BandedMatrix& b);
  friend bool operator==(const BandedMatrix&, const BandedMatrix&) = default;

  std::string str() const;

 private:
  void check_order(const BandedMatrix& o) const;
  void add_diagonal(long k, const IndexPoly& p);
  void add_entry(long i, long j, const TruncPoly& v);
  unsigned m_;
  std::map<long, IndexPoly> diagonals_;
  std::map<Index, TruncPoly> overlay_;
  TruncPoly central_;
};

/// C(A, B) = tr([J, A] B) with J = sum_{j <= 0} E_{jj}.
TruncPoly cocycle_C(const BandedMatrix& a, const BandedMatrix& b);

/// AB - BA with central part C(A, B).
BandedMatrix sb_bracket_hat(const BandedMatrix& a, const BandedMatrix& b);

/// E_{i,j} -> E_{i+r,j+r}; the central part is unchanged.
BandedMatrix nu_shift(const BandedMatrix& a, long r);

}  // namespace qf
