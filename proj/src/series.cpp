#include "qf/series.hpp"

#include <algorithm>

#include "qf/error.hpp"

namespace qf {

Series::Series(unsigned order) : order_(order), coeffs_(order + 1) {}

Series::Series(unsigned order, std::vector<Scalar> coefficients) : order_(order), coeffs_(std::move(coefficients)) {
  coeffs_.resize(order + 1);
}

Series Series::from_retained(unsigned order, unsigned valuation, std::vector<Scalar> retained) {
  if (valuation > order + 1) throw DomainError("series valuation beyond order + 1");
  if (retained.size() != order + 1 - valuation)
    throw DomainError("series expects " + std::to_string(order + 1 - valuation) + " retained coefficients");
  Series s(order);
  for (std::size_t k = 0; k < retained.size(); ++k) s.coeffs_[valuation + k] = std::move(retained[k]);
  return s;
}

Series Series::exp(const Scalar& alpha, unsigned order) {
  Series s(order);
  Scalar term = 1;
  for (unsigned n = 0; n <= order; ++n) {
    s.coeffs_[n] = term;
    term = term * alpha / Scalar(static_cast<long>(n + 1));
  }
  return s;
}

Series Series::cosh(const Scalar& beta, unsigned order) {
  return (exp(beta, order) + exp(-beta, order)) * Scalar(1, 2);
}

Series Series::sinh(const Scalar& beta, unsigned order) {
  return (exp(beta, order) - exp(-beta, order)) * Scalar(1, 2);
}

Series Series::two_sinh_half(unsigned order) { return sinh(Scalar(1, 2), order) * Scalar(2); }

Series Series::from_polynomial(const Polynomial& p, unsigned order) {
  Series s(order);
  for (unsigned k = 0; k <= order && k < p.size(); ++k) s.coeffs_[k] = p.coeff(k);
  return s;
}

unsigned Series::valuation() const {
  for (unsigned n = 0; n <= order_; ++n)
    if (!coeffs_[n].is_zero()) return n;
  return order_ + 1;
}

const Scalar& Series::coeff(unsigned n) const {
  if (n > order_)
    throw OrderError("coefficient x^" + std::to_string(n) + " requested from a series valid to order " +
                     std::to_string(order_));
  return coeffs_[n];
}

Scalar Series::derivative_at_zero(unsigned n) const { return coeff(n) * factorial(n); }

Series Series::truncate(unsigned order) const {
  if (order > order_) throw OrderError("cannot extend a series from order " + std::to_string(order_) + " to " + std::to_string(order));
  return Series(order, std::vector<Scalar>(coeffs_.begin(), coeffs_.begin() + order + 1));
}

Series Series::derivative() const {
  if (order_ == 0) throw OrderError("derivative of an order-0 series has no valid coefficients");
  Series d(order_ - 1);
  for (unsigned n = 0; n + 1 <= order_; ++n) d.coeffs_[n] = coeffs_[n + 1] * Scalar(static_cast<long>(n + 1));
  return d;
}

Series Series::integral() const {
  Series s(order_ + 1);
  for (unsigned n = 0; n <= order_; ++n) s.coeffs_[n + 1] = coeffs_[n] / Scalar(static_cast<long>(n + 1));
  return s;
}

Series& Series::operator+=(const Series& o) {
  unsigned n = std::min(order_, o.order_);
  coeffs_.resize(n + 1);
  order_ = n;
  for (unsigned k = 0; k <= n; ++k) coeffs_[k] += o.coeffs_[k];
  return *this;
}

Series& Series::operator-=(const Series& o) {
  unsigned n = std::min(order_, o.order_);
  coeffs_.resize(n + 1);
  order_ = n;
  for (unsigned k = 0; k <= n; ++k) coeffs_[k] -= o.coeffs_[k];
  return *this;
}

Series& Series::operator*=(const Scalar& c) {
  for (auto& x : coeffs_) x *= c;
  return *this;
}

Series operator*(const Series& a, const Series& b) {
  unsigned n = std::min(a.order_ + b.valuation(), b.order_ + a.valuation());
  Series out(n);
  for (unsigned i = 0; i <= n && i <= a.order_; ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (unsigned j = 0; i + j <= n && j <= b.order_; ++j)
      if (!b.coeffs_[j].is_zero()) out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return out;
}

std::string Series::str() const {
  std::string out;
  for (unsigned n = 0; n <= order_; ++n) {
    if (coeffs_[n].is_zero()) continue;
    if (!out.empty()) out += " + ";
    out += "(" + coeffs_[n].str() + ")x^" + std::to_string(n);
  }
  return (out.empty() ? "0" : out) + " + O(x^" + std::to_string(order_ + 1) + ")";
}

Series series_divide(const Series& f, const Series& g) {
  const unsigned w = g.valuation();
  if (w > g.order()) throw NonInvertibleError("series division by a series that vanishes to its valid order");
  if (f.valuation() < w)
    throw DomainError("series division: numerator valuation " + std::to_string(f.valuation()) +
                      " below denominator valuation " + std::to_string(w));
  const unsigned base = std::min(f.order(), g.order());
  if (base < w) throw OrderError("series division leaves no valid coefficients");
  const unsigned n = base - w;
  Series h(n);
  Scalar lead_inv = g.coeff(w).inverse();
  std::vector<Scalar> out(n + 1);
  for (unsigned k = 0; k <= n; ++k) {
    Scalar acc = f.coeff(k + w);
    for (unsigned i = 0; i < k; ++i) acc -= out[i] * g.coeff(k - i + w);
    out[k] = acc * lead_inv;
  }
  return Series(n, std::move(out));
}

Series apply_p_shift(const Polynomial& p, const Scalar& a, const Series& f) {
  if (p.is_zero()) return Series(f.order());
  Polynomial q = p.shift(a);
  const unsigned d = static_cast<unsigned>(*q.degree());
  if (d > f.order()) throw OrderError("p-shift of degree " + std::to_string(d) + " exceeds series order");
  const unsigned n = f.order() - d;
  Series out(n);
  Series deriv = f;
  for (unsigned k = 0; k <= d; ++k) {
    if (k > 0) deriv = deriv.derivative();
    if (!q.coeff(k).is_zero()) out += deriv.truncate(n) * q.coeff(k);
  }
  return out;
}

}  // namespace qf
