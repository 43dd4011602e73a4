#include "qf/trunc_poly.hpp"

#include "qf/error.hpp"

namespace qf {

TruncPoly::TruncPoly(unsigned m) : m_(m), coeffs_(m + 1) {}

TruncPoly::TruncPoly(unsigned m, std::vector<Scalar> coefficients) : m_(m), coeffs_(std::move(coefficients)) {
  for (std::size_t k = m + 1; k < coeffs_.size(); ++k)
    if (!coeffs_[k].is_zero()) {
      coeffs_.resize(m + 1);
      break;
    }
  coeffs_.resize(m + 1);
}

TruncPoly TruncPoly::constant(unsigned m, const Scalar& c) {
  TruncPoly t(m);
  t.coeffs_[0] = c;
  return t;
}

TruncPoly TruncPoly::u(unsigned m) {
  TruncPoly t(m);
  if (m >= 1) t.coeffs_[1] = 1;
  return t;
}

TruncPoly TruncPoly::shifted_u(unsigned m, const Scalar& c) {
  TruncPoly t = u(m);
  t.coeffs_[0] = c;
  return t;
}

bool TruncPoly::is_zero() const {
  for (const auto& c : coeffs_)
    if (!c.is_zero()) return false;
  return true;
}

TruncPoly TruncPoly::reflect() const {
  TruncPoly r = *this;
  for (unsigned k = 1; k <= m_; k += 2) r.coeffs_[k] = -r.coeffs_[k];
  return r;
}

TruncPoly TruncPoly::pow(unsigned e) const {
  TruncPoly result = constant(m_, 1), base = *this;
  while (e) {
    if (e & 1u) result *= base;
    base *= base;
    e >>= 1u;
  }
  return result;
}

void TruncPoly::check_same_order(const TruncPoly& o) const {
  if (o.m_ != m_)
    throw DomainError("R_m order mismatch: " + std::to_string(m_) + " vs " + std::to_string(o.m_));
}

TruncPoly& TruncPoly::operator+=(const TruncPoly& o) {
  check_same_order(o);
  for (unsigned k = 0; k <= m_; ++k) coeffs_[k] += o.coeffs_[k];
  return *this;
}

TruncPoly& TruncPoly::operator-=(const TruncPoly& o) {
  check_same_order(o);
  for (unsigned k = 0; k <= m_; ++k) coeffs_[k] -= o.coeffs_[k];
  return *this;
}

TruncPoly& TruncPoly::operator*=(const TruncPoly& o) {
  check_same_order(o);
  std::vector<Scalar> out(m_ + 1);
  for (unsigned a = 0; a <= m_; ++a) {
    if (coeffs_[a].is_zero()) continue;
    for (unsigned b = 0; a + b <= m_; ++b)
      if (!o.coeffs_[b].is_zero()) out[a + b] += coeffs_[a] * o.coeffs_[b];
  }
  coeffs_ = std::move(out);
  return *this;
}

TruncPoly& TruncPoly::operator*=(const Scalar& c) {
  for (auto& x : coeffs_) x *= c;
  return *this;
}

std::string TruncPoly::str() const {
  std::string out;
  for (unsigned k = 0; k <= m_; ++k) {
    if (coeffs_[k].is_zero()) continue;
    if (!out.empty()) out += " + ";
    out += "(" + coeffs_[k].str() + ")";
    if (k >= 1) out += "u";
    if (k >= 2) out += "^" + std::to_string(k);
  }
  return out.empty() ? "0" : out;
}

TruncPoly rm_invert(const TruncPoly& a) {
  if (!a.is_unit()) throw NonInvertibleError("R_m element " + a.str() + " has zero constant term");
  const unsigned m = a.order();
  TruncPoly inv(m);
  Scalar lead_inv = a[0].inverse();
  inv[0] = lead_inv;
  // a * inv = 1: solve coefficient-by-coefficient.
  for (unsigned n = 1; n <= m; ++n) {
    Scalar acc;
    for (unsigned k = 1; k <= n; ++k) acc += a[k] * inv[n - k];
    inv[n] = -acc * lead_inv;
  }
  return inv;
}

}  // namespace qf
