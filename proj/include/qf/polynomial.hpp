#pragma once

#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qf/scalar.hpp"

namespace qf {

class TruncPoly;

/// Dense univariate polynomial over Q(i); coefficient k multiplies x^k.
/// The zero polynomial has an empty coefficient vector and no degree.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Scalar> coefficients);
  Polynomial(std::initializer_list<Scalar> coefficients);

  static Polynomial constant(const Scalar& c);
  static Polynomial monomial(unsigned d, const Scalar& c = 1);
  static Polynomial x() { return monomial(1); }
  /// (x - a)^d
  static Polynomial power_of_linear(const Scalar& a, unsigned d);
  /// x(x-1)...(x-l+1)
  static Polynomial falling_factorial(unsigned l);

  bool is_zero() const { return coeffs_.empty(); }
  /// Degree, or nullopt for the zero polynomial.
  std::optional<std::size_t> degree() const;
  const Scalar& leading() const;
  /// Coefficient of x^k (zero beyond the stored range).
  Scalar coeff(std::size_t k) const;
  const std::vector<Scalar>& coefficients() const noexcept { return coeffs_; }
  std::size_t size() const noexcept { return coeffs_.size(); }

  Scalar eval(const Scalar& x) const;
  /// p(a + u) in the truncated ring of `base`.
  TruncPoly eval(const TruncPoly& base) const;

  Polynomial derivative() const;
  /// p(x + a)
  Polynomial shift(const Scalar& a) const;
  /// p(a*x + b)
  Polynomial compose_linear(const Scalar& a, const Scalar& b) const;
  /// p(-x)
  Polynomial reflect() const { return compose_linear(-1, 0); }

  bool is_even() const;
  bool is_odd() const;
  Polynomial even_part() const;
  Polynomial odd_part() const;
  Polynomial monic() const;

  /// Euclidean division; throws on a zero divisor.
  std::pair<Polynomial, Polynomial> divmod(const Polynomial& divisor) const;
  /// Exact quotient if `divisor` divides *this, else nullopt.
  std::optional<Polynomial> exact_divide(const Polynomial& divisor) const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Scalar& c);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Scalar& c) { return a *= c; }
  friend Polynomial operator*(const Scalar& c, Polynomial a) { return a *= c; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial operator-() const { return *this * Scalar(-1); }
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  std::string str(char var = 'x') const;

 private:
  void normalize();
  std::vector<Scalar> coeffs_;
};

/// Rational roots (with multiplicity) of a polynomial with rational
/// coefficients, found by the rational-root candidate test. `residual` is
/// the cofactor left after removing them (constant when fully split).
struct RationalRoots {
  std::vector<std::pair<Scalar, unsigned>> roots;
  Polynomial residual;
};
RationalRoots rational_roots(const Polynomial& p);

}  // namespace qf
