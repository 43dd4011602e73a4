#include "qf/involution.hpp"

#include "qf/error.hpp"

namespace qf {

namespace {

bool in_class(const Polynomial& g, ParityClass parity) {
  switch (parity) {
    case ParityClass::Even: return g.is_even();
    case ParityClass::Odd: return g.is_odd();
    case ParityClass::Any: return true;
  }
  return true;
}

}  // namespace

ParityClass overline(long j) { return j % 2 != 0 ? ParityClass::Even : ParityClass::Odd; }

SymmetricP SymmetricP::with_center(const Scalar& center) const {
  if (!free_c) throw DomainError("with_center: the center of a non-constant p is fixed");
  SymmetricP out = *this;
  out.c = center;
  return out;
}

std::optional<SymmetricP> validate_symmetry(const Polynomial& p) {
  if (p.is_zero()) throw DomainError("validate_symmetry: zero polynomial");
  const std::size_t n = *p.degree();
  if (n == 0) return SymmetricP{p, 1, 0, true};
  Scalar epsilon = n % 2 == 0 ? Scalar(1) : Scalar(-1);
  // Comparing x^{n-1} coefficients of p(x) and epsilon p(-x+c).
  Scalar c = -Scalar(2) * p.coeff(n - 1) / (Scalar(static_cast<long>(n)) * p.leading());
  if (p.compose_linear(-1, c) * epsilon != p) return std::nullopt;
  return SymmetricP{p, epsilon, c, false};
}

DiffOp apply_sigma(const DiffOp& x, Sign s, const SymmetricP& P, const std::optional<Scalar>& c_choice) {
  if (!x.central().is_zero()) throw DomainError("apply_sigma: central part must be zero");
  const Scalar c = c_choice ? *c_choice : P.c;
  DiffOp out;
  for (const auto& [k, F] : x.terms()) {
    auto f = F.exact_divide(P.p);
    if (!f) throw DomainError("apply_sigma: weight " + std::to_string(k) + " cofactor is not a multiple of p");
    Scalar sign = P.epsilon;
    if (s == Sign::Minus && k % 2 != 0) sign = -sign;
    out += DiffOp::term(k, f->compose_linear(-1, c - Scalar(k)) * P.p * sign);
  }
  return out;
}

DiffOp project_antifixed(const DiffOp& x, Sign s, const SymmetricP& P) {
  return (x - apply_sigma(x, s, P)) * Scalar(1, 2);
}

ParityClass component_parity(long k, Sign s, const SymmetricP& P) {
  return s == Sign::Plus ? overline(P.degree()) : overline(P.degree() + k);
}

std::vector<DiffOp> component_basis(long k, unsigned degmax, Sign s, const SymmetricP& P) {
  const ParityClass parity = component_parity(k, s, P);
  const Scalar center = (P.c - Scalar(k)) / Scalar(2);
  std::vector<DiffOp> out;
  for (unsigned d = 0; d <= degmax; ++d) {
    if ((parity == ParityClass::Even) != (d % 2 == 0)) continue;
    DiffOp e = DiffOp::term(k, Polynomial::power_of_linear(center, d) * P.p);
    if (!(apply_sigma(e, s, P) == -e))
      throw ConsistencyError("component_basis: element " + e.str() + " is not anti-fixed");
    out.push_back(std::move(e));
  }
  return out;
}

std::optional<Polynomial> centered_cofactor(const DiffOp& x, long k, const SymmetricP& P) {
  auto f = x.part(k).exact_divide(P.p);
  if (!f) return std::nullopt;
  return f->shift((P.c - Scalar(k)) / Scalar(2));
}

bool in_antifixed_span(const DiffOp& x, Sign s, const SymmetricP& P) {
  if (!x.central().is_zero()) return false;
  for (long k : x.weights()) {
    auto g = centered_cofactor(x, k, P);
    if (!g || !in_class(*g, component_parity(k, s, P))) return false;
  }
  return true;
}

ParityClass delta_parity(Sign s, const SymmetricP& P) {
  return s == Sign::Plus ? overline(P.degree()) : overline(P.degree() - 1);
}

}  // namespace qf
