#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace qf {

/// Exact Gaussian rational re + im*i. Both parts are kept canonical
/// (lowest terms, positive denominator) so that == is structural.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long v) : re_(v) {}  // NOLINT: implicit from integers is intended
  Scalar(long num, long den);
  explicit Scalar(mpq_class re, mpq_class im = 0);

  static Scalar imag_unit() { return Scalar(mpq_class(0), mpq_class(1)); }
  static Scalar rational(long num, long den) { return Scalar(num, den); }

  /// Accepts "a", "a/b", "a/b+c/d*i", "a-c*i", "c/d*i", "i", "-i".
  static Scalar parse(std::string_view text);
  std::string str() const;

  const mpq_class& re() const noexcept { return re_; }
  const mpq_class& im() const noexcept { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }
  bool is_integer() const;
  bool is_half_integer() const;  // in Z + 1/2
  bool in_half_lattice() const { return is_integer() || is_half_integer(); }

  /// floor of the real part; requires is_real().
  mpz_class floor() const;
  /// Integer value; requires is_integer() and that it fits in a long.
  long to_long() const;

  Scalar conj() const { return Scalar(re_, -im_); }
  Scalar inverse() const;
  Scalar pow(unsigned e) const;

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  Scalar operator-() const { return Scalar(-re_, -im_); }

  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  /// Lexicographic on (re, im); only used to key ordered containers.
  friend std::strong_ordering operator<=>(const Scalar& a, const Scalar& b);

 private:
  mpq_class re_{0};
  mpq_class im_{0};
};

Scalar factorial(unsigned n);
Scalar binomial(unsigned n, unsigned k);

}  // namespace qf
