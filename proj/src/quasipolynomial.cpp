#include "qf/quasipolynomial.hpp"

namespace qf {

Quasipolynomial::Quasipolynomial(TermMap terms) {
  for (auto& [alpha, q] : terms) add_term(alpha, q);
}

void Quasipolynomial::add_term(const Scalar& alpha, const Polynomial& q) {
  if (q.is_zero()) return;
  auto it = terms_.find(alpha);
  if (it == terms_.end()) {
    terms_.emplace(alpha, q);
    return;
  }
  it->second += q;
  if (it->second.is_zero()) terms_.erase(it);
}

Quasipolynomial Quasipolynomial::term(const Scalar& alpha, const Polynomial& q) {
  Quasipolynomial out;
  out.add_term(alpha, q);
  return out;
}

Quasipolynomial Quasipolynomial::cosh(const Scalar& beta) {
  return (exp(beta) + exp(-beta)) * Scalar(1, 2);
}

Quasipolynomial Quasipolynomial::sinh(const Scalar& beta) {
  return (exp(beta) - exp(-beta)) * Scalar(1, 2);
}

Polynomial Quasipolynomial::multiplicity(const Scalar& alpha) const {
  auto it = terms_.find(alpha);
  return it == terms_.end() ? Polynomial() : it->second;
}

Quasipolynomial Quasipolynomial::reflect() const {
  Quasipolynomial out;
  for (const auto& [alpha, q] : terms_) out.add_term(-alpha, q.reflect());
  return out;
}

bool Quasipolynomial::is_even() const {
  for (const auto& [alpha, q] : terms_)
    if (multiplicity(-alpha) != q.reflect()) return false;
  return true;
}

bool Quasipolynomial::is_odd() const {
  for (const auto& [alpha, q] : terms_)
    if (multiplicity(-alpha) != -q.reflect()) return false;
  return true;
}

Scalar Quasipolynomial::value_at_zero() const {
  Scalar acc;
  for (const auto& [alpha, q] : terms_) acc += q.coeff(0);
  return acc;
}

Quasipolynomial Quasipolynomial::derivative() const {
  Quasipolynomial out;
  for (const auto& [alpha, q] : terms_) out.add_term(alpha, q * alpha + q.derivative());
  return out;
}

Quasipolynomial Quasipolynomial::apply_p_shift(const Polynomial& p, const Scalar& a) const {
  // p(d + a) [q e^{alpha x}] = e^{alpha x} p(d + a + alpha) q
  //                          = e^{alpha x} sum_k p^{(k)}(a + alpha)/k! q^{(k)}.
  Quasipolynomial out;
  for (const auto& [alpha, q] : terms_) {
    Polynomial shifted = p.shift(a + alpha);
    Polynomial acc;
    Polynomial dq = q;
    for (std::size_t k = 0; k < shifted.size() && !dq.is_zero(); ++k) {
      acc += dq * shifted.coeff(k);
      dq = dq.derivative();
    }
    out.add_term(alpha, acc);
  }
  return out;
}

Series Quasipolynomial::to_series(unsigned order) const {
  // coefficient of x^n in x^d e^{alpha x} is alpha^{n-d}/(n-d)!.
  std::vector<Scalar> coeffs(order + 1);
  for (const auto& [alpha, q] : terms_) {
    std::vector<Scalar> exp_coeffs(order + 1);
    Scalar t = 1;
    for (unsigned n = 0; n <= order; ++n) {
      exp_coeffs[n] = t;
      t = t * alpha / Scalar(static_cast<long>(n + 1));
    }
    for (std::size_t d = 0; d < q.size() && d <= order; ++d) {
      if (q.coeff(d).is_zero()) continue;
      for (unsigned n = static_cast<unsigned>(d); n <= order; ++n) coeffs[n] += q.coeff(d) * exp_coeffs[n - d];
    }
  }
  return Series(order, std::move(coeffs));
}

Quasipolynomial& Quasipolynomial::operator+=(const Quasipolynomial& o) {
  for (const auto& [alpha, q] : o.terms_) add_term(alpha, q);
  return *this;
}

Quasipolynomial& Quasipolynomial::operator-=(const Quasipolynomial& o) {
  for (const auto& [alpha, q] : o.terms_) add_term(alpha, -q);
  return *this;
}

Quasipolynomial& Quasipolynomial::operator*=(const Scalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [alpha, q] : terms_) q *= c;
  return *this;
}

Quasipolynomial operator*(const Quasipolynomial& a, const Quasipolynomial& b) {
  Quasipolynomial out;
  for (const auto& [alpha, q] : a.terms_)
    for (const auto& [beta, r] : b.terms_) out.add_term(alpha + beta, q * r);
  return out;
}

std::string Quasipolynomial::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [alpha, q] : terms_) {
    if (!out.empty()) out += " + ";
    out += "[" + q.str() + "]e^{" + alpha.str() + "x}";
  }
  return out;
}

Series quasipoly_to_series(const Quasipolynomial& q, unsigned order) { return q.to_series(order); }

}  // namespace qf
