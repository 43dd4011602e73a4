#include "qf/polynomial.hpp"

#include <algorithm>
#include <set>

#include "qf/error.hpp"
#include "qf/trunc_poly.hpp"

namespace qf {

Polynomial::Polynomial(std::vector<Scalar> coefficients) : coeffs_(std::move(coefficients)) { normalize(); }

Polynomial::Polynomial(std::initializer_list<Scalar> coefficients) : coeffs_(coefficients) { normalize(); }

void Polynomial::normalize() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Polynomial Polynomial::constant(const Scalar& c) { return Polynomial(std::vector<Scalar>{c}); }

Polynomial Polynomial::monomial(unsigned d, const Scalar& c) {
  std::vector<Scalar> v(d + 1);
  v[d] = c;
  return Polynomial(std::move(v));
}

Polynomial Polynomial::power_of_linear(const Scalar& a, unsigned d) {
  Polynomial out = constant(1);
  Polynomial lin{-a, Scalar(1)};
  for (unsigned k = 0; k < d; ++k) out = out * lin;
  return out;
}

Polynomial Polynomial::falling_factorial(unsigned l) {
  Polynomial out = constant(1);
  for (unsigned k = 0; k < l; ++k) out = out * Polynomial{Scalar(-static_cast<long>(k)), Scalar(1)};
  return out;
}

std::optional<std::size_t> Polynomial::degree() const {
  if (coeffs_.empty()) return std::nullopt;
  return coeffs_.size() - 1;
}

const Scalar& Polynomial::leading() const {
  if (coeffs_.empty()) throw DomainError("leading coefficient of the zero polynomial");
  return coeffs_.back();
}

Scalar Polynomial::coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Scalar(); }

Scalar Polynomial::eval(const Scalar& x) const {
  Scalar acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

TruncPoly Polynomial::eval(const TruncPoly& base) const {
  TruncPoly acc(base.order());
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= base;
    acc[0] += *it;
  }
  return acc;
}

Polynomial Polynomial::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Scalar> d(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = coeffs_[k] * Scalar(static_cast<long>(k));
  return Polynomial(std::move(d));
}

Polynomial Polynomial::shift(const Scalar& a) const { return compose_linear(1, a); }

Polynomial Polynomial::compose_linear(const Scalar& a, const Scalar& b) const {
  Polynomial lin{b, a};
  Polynomial acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * lin;
    acc += constant(*it);
  }
  return acc;
}

bool Polynomial::is_even() const {
  for (std::size_t k = 1; k < coeffs_.size(); k += 2)
    if (!coeffs_[k].is_zero()) return false;
  return true;
}

bool Polynomial::is_odd() const {
  for (std::size_t k = 0; k < coeffs_.size(); k += 2)
    if (!coeffs_[k].is_zero()) return false;
  return true;
}

Polynomial Polynomial::even_part() const {
  std::vector<Scalar> v = coeffs_;
  for (std::size_t k = 1; k < v.size(); k += 2) v[k] = Scalar();
  return Polynomial(std::move(v));
}

Polynomial Polynomial::odd_part() const {
  std::vector<Scalar> v = coeffs_;
  for (std::size_t k = 0; k < v.size(); k += 2) v[k] = Scalar();
  return Polynomial(std::move(v));
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return {};
  return *this * leading().inverse();
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& divisor) const {
  if (divisor.is_zero()) throw NonInvertibleError("polynomial division by zero");
  std::vector<Scalar> rem = coeffs_;
  const std::size_t dd = divisor.coeffs_.size() - 1;
  if (rem.size() <= dd) return {Polynomial(), *this};
  std::vector<Scalar> quot(rem.size() - dd);
  Scalar lead_inv = divisor.leading().inverse();
  for (std::size_t k = rem.size(); k-- > dd;) {
    Scalar q = rem[k] * lead_inv;
    quot[k - dd] = q;
    if (q.is_zero()) continue;
    for (std::size_t j = 0; j <= dd; ++j) rem[k - dd + j] -= q * divisor.coeffs_[j];
  }
  rem.resize(dd);
  return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

std::optional<Polynomial> Polynomial::exact_divide(const Polynomial& divisor) const {
  auto [q, r] = divmod(divisor);
  if (!r.is_zero()) return std::nullopt;
  return q;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  normalize();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
  normalize();
  return *this;
}

Polynomial& Polynomial::operator*=(const Scalar& c) {
  if (c.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  for (auto& x : coeffs_) x *= c;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Scalar> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Polynomial(std::move(out));
}

std::string Polynomial::str(char var) const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    if (coeffs_[k].is_zero()) continue;
    if (!out.empty()) out += " + ";
    out += "(" + coeffs_[k].str() + ")";
    if (k >= 1) out += var;
    if (k >= 2) out += "^" + std::to_string(k);
  }
  return out;
}

namespace {

// Positive divisors of |n|, by trial division. A cofactor above the trial
// bound is treated as prime, so very large inputs may miss candidates; any
// root missed that way simply stays in the residual.
std::vector<mpz_class> divisors(mpz_class n) {
  n = abs(n);
  std::vector<std::pair<mpz_class, unsigned>> factors;
  const mpz_class bound = 1000000;
  for (mpz_class p = 2; p <= bound && p * p <= n; ++p) {
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e) factors.emplace_back(p, e);
  }
  if (n > 1) factors.emplace_back(n, 1);
  std::vector<mpz_class> out{1};
  for (const auto& [p, e] : factors) {
    std::size_t base = out.size();
    mpz_class pk = 1;
    for (unsigned k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * pk);
    }
  }
  return out;
}

}  // namespace

RationalRoots rational_roots(const Polynomial& p) {
  RationalRoots result;
  result.residual = p;
  if (p.is_zero()) return result;
  for (const auto& c : p.coefficients())
    if (!c.is_real()) return result;

  Polynomial rest = p;
  unsigned zero_mult = 0;
  while (rest.degree().value_or(0) > 0 && rest.coeff(0).is_zero()) {
    rest = rest.divmod(Polynomial::x()).first;
    ++zero_mult;
  }
  if (zero_mult) result.roots.emplace_back(Scalar(0), zero_mult);

  if (rest.degree().value_or(0) > 0) {
    mpz_class lcm_den = 1;
    for (const auto& c : rest.coefficients()) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.re().get_den_mpz_t());
    mpz_class a0 = mpz_class(rest.coeff(0).re() * lcm_den);
    mpz_class an = mpz_class(rest.leading().re() * lcm_den);
    std::set<Scalar> candidates;
    for (const auto& num : divisors(a0))
      for (const auto& den : divisors(an)) {
        mpq_class q(num, den);
        q.canonicalize();
        candidates.insert(Scalar(q));
        candidates.insert(Scalar(mpq_class(-q)));
      }
    for (const auto& cand : candidates) {
      unsigned mult = 0;
      while (rest.degree().value_or(0) > 0 && rest.eval(cand).is_zero()) {
        rest = rest.divmod(Polynomial{-cand, Scalar(1)}).first;
        ++mult;
      }
      if (mult) result.roots.emplace_back(cand, mult);
    }
  }
  std::sort(result.roots.begin(), result.roots.end());
  result.residual = rest;
  return result;
}

}  // namespace qf
