#pragma once

#include <string>
#include <vector>

#include "qf/polynomial.hpp"
#include "qf/scalar.hpp"

namespace qf {

/// Truncated formal power series sum_{n<=N} a_n x^n, where N is the
/// guaranteed-valid order. Every coefficient up to N is exact; asking for
/// a coefficient beyond N is an error rather than a silent zero.
class Series {
 public:
  Series() = default;
  /// Zero series valid through order N.
  explicit Series(unsigned order);
  Series(unsigned order, std::vector<Scalar> coefficients);
  /// Coefficients for powers valuation..order.
  static Series from_retained(unsigned order, unsigned valuation, std::vector<Scalar> retained);

  static Series exp(const Scalar& alpha, unsigned order);
  static Series cosh(const Scalar& beta, unsigned order);
  static Series sinh(const Scalar& beta, unsigned order);
  /// 2 sinh(x/2), the valuation-one denominator used throughout.
  static Series two_sinh_half(unsigned order);
  static Series from_polynomial(const Polynomial& p, unsigned order);

  unsigned order() const noexcept { return order_; }
  /// Index of the first nonzero coefficient; order()+1 for the zero series.
  unsigned valuation() const;
  bool is_zero() const { return valuation() > order_; }

  const Scalar& coeff(unsigned n) const;
  /// n! * a_n, i.e. the n-th derivative at 0.
  Scalar derivative_at_zero(unsigned n) const;
  const std::vector<Scalar>& coefficients() const noexcept { return coeffs_; }

  Series truncate(unsigned order) const;
  Series derivative() const;
  /// Antiderivative with zero constant term; valid one order higher.
  Series integral() const;

  Series& operator+=(const Series& o);
  Series& operator-=(const Series& o);
  Series& operator*=(const Scalar& c);
  friend Series operator+(Series a, const Series& b) { return a += b; }
  friend Series operator-(Series a, const Series& b) { return a -= b; }
  friend Series operator*(Series a, const Scalar& c) { return a *= c; }
  friend Series operator*(const Scalar& c, Series a) { return a *= c; }
  /// Valid through min(N1 + v2, N2 + v1).
  friend Series operator*(const Series& a, const Series& b);
  Series operator-() const { return *this * Scalar(-1); }
  friend bool operator==(const Series&, const Series&) = default;

  std::string str() const;

 private:
  unsigned order_ = 0;
  std::vector<Scalar> coeffs_{Scalar()};
};

/// F / G. Requires valuation(F) >= valuation(G) = w and a nonzero leading
/// coefficient of G; the result is valid through min(N_F, N_G) - w.
Series series_divide(const Series& f, const Series& g);

/// p(d/dx + a) F; valid through N - deg p.
Series apply_p_shift(const Polynomial& p, const Scalar& a, const Series& f);

}  // namespace qf
