#pragma once

#include <map>
#include <string>

#include "qf/polynomial.hpp"
#include "qf/scalar.hpp"
#include "qf/series.hpp"

namespace qf {

/// sum_alpha q_alpha(x) e^{alpha x}; zero multiplicities are never stored.
class Quasipolynomial {
 public:
  using TermMap = std::map<Scalar, Polynomial>;

  Quasipolynomial() = default;
  explicit Quasipolynomial(TermMap terms);

  static Quasipolynomial term(const Scalar& alpha, const Polynomial& q);
  static Quasipolynomial exp(const Scalar& alpha) { return term(alpha, Polynomial::constant(1)); }
  static Quasipolynomial cosh(const Scalar& beta);
  static Quasipolynomial sinh(const Scalar& beta);
  static Quasipolynomial constant(const Scalar& c) { return term(0, Polynomial::constant(c)); }

  const TermMap& terms() const noexcept { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Multiplicity at alpha (zero polynomial when absent).
  Polynomial multiplicity(const Scalar& alpha) const;

  /// Q(-x)
  Quasipolynomial reflect() const;
  bool is_even() const;
  bool is_odd() const;
  Scalar value_at_zero() const;

  Quasipolynomial derivative() const;
  /// p(d/dx + a) Q, term by term via e^{ax}-shift and Taylor expansion.
  Quasipolynomial apply_p_shift(const Polynomial& p, const Scalar& a) const;
  Series to_series(unsigned order) const;

  Quasipolynomial& operator+=(const Quasipolynomial& o);
  Quasipolynomial& operator-=(const Quasipolynomial& o);
  Quasipolynomial& operator*=(const Scalar& c);
  friend Quasipolynomial operator+(Quasipolynomial a, const Quasipolynomial& b) { return a += b; }
  friend Quasipolynomial operator-(Quasipolynomial a, const Quasipolynomial& b) { return a -= b; }
  friend Quasipolynomial operator*(Quasipolynomial a, const Scalar& c) { return a *= c; }
  friend Quasipolynomial operator*(const Scalar& c, Quasipolynomial a) { return a *= c; }
  friend Quasipolynomial operator*(const Quasipolynomial& a, const Quasipolynomial& b);
  friend bool operator==(const Quasipolynomial&, const Quasipolynomial&) = default;

  std::string str() const;

 private:
  void add_term(const Scalar& alpha, const Polynomial& q);
  TermMap terms_;
};

Series quasipoly_to_series(const Quasipolynomial& q, unsigned order);

}  // namespace qf
