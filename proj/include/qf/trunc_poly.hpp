#pragma once

#include <string>
#include <vector>

#include "qf/scalar.hpp"

namespace qf {

/// Element of R_m = Q(i)[u]/(u^{m+1}). Always stores exactly m+1
/// coefficients; products discard u^{m+1} and beyond.
class TruncPoly {
 public:
  TruncPoly() : TruncPoly(0) {}
  explicit TruncPoly(unsigned m);
  TruncPoly(unsigned m, std::vector<Scalar> coefficients);

  static TruncPoly constant(unsigned m, const Scalar& c);
  /// The nilpotent generator u (zero when m = 0).
  static TruncPoly u(unsigned m);
  /// c + u
  static TruncPoly shifted_u(unsigned m, const Scalar& c);

  unsigned order() const noexcept { return m_; }
  const Scalar& operator[](unsigned k) const { return coeffs_.at(k); }
  Scalar& operator[](unsigned k) { return coeffs_.at(k); }
  const std::vector<Scalar>& coefficients() const noexcept { return coeffs_; }

  bool is_zero() const;
  bool is_unit() const { return !coeffs_[0].is_zero(); }

  /// f(-u)
  TruncPoly reflect() const;
  TruncPoly pow(unsigned e) const;

  TruncPoly& operator+=(const TruncPoly& o);
  TruncPoly& operator-=(const TruncPoly& o);
  TruncPoly& operator*=(const TruncPoly& o);
  TruncPoly& operator*=(const Scalar& c);
  friend TruncPoly operator+(TruncPoly a, const TruncPoly& b) { return a += b; }
  friend TruncPoly operator-(TruncPoly a, const TruncPoly& b) { return a -= b; }
  friend TruncPoly operator*(TruncPoly a, const TruncPoly& b) { return a *= b; }
  friend TruncPoly operator*(TruncPoly a, const Scalar& c) { return a *= c; }
  friend TruncPoly operator*(const Scalar& c, TruncPoly a) { return a *= c; }
  TruncPoly operator-() const { return *this * Scalar(-1); }
  friend bool operator==(const TruncPoly&, const TruncPoly&) = default;

  std::string str() const;

 private:
  void check_same_order(const TruncPoly& o) const;
  unsigned m_;
  std::vector<Scalar> coeffs_;
};

/// Inverse in R_m; throws NonInvertibleError when the u^0 coefficient is 0.
TruncPoly rm_invert(const TruncPoly& a);

}  // namespace qf
