#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qf/annihilator.hpp"
#include "qf/diffop.hpp"
#include "qf/polynomial.hpp"

namespace qf {

enum class Sign { Plus, Minus };

inline std::string sign_name(Sign s) { return s == Sign::Plus ? "+" : "-"; }

/// The overline map on integers: odd j -> even class, even j -> odd class.
ParityClass overline(long j);

/// A polynomial p with p(x) = epsilon p(-x + c), epsilon = (-1)^{deg p}.
/// For constant p the center c is free; `c` then holds the chosen value.
struct SymmetricP {
  Polynomial p;
  Scalar epsilon;
  Scalar c;
  bool free_c = false;

  long degree() const { return static_cast<long>(p.degree().value_or(0)); }
  SymmetricP with_center(const Scalar& center) const;
};

/// Symmetry data for p, or nullopt when no center exists.
/// Throws DomainError on the zero polynomial.
std::optional<SymmetricP> validate_symmetry(const Polynomial& p);

/// sigma_{+/-}(t^k f(D) p(D)) = epsilon (+/-1)^k t^k f(-D-k+c) p(D).
/// `c_choice` overrides the center (required in spirit when free_c).
/// Throws DomainError naming the weight whose cofactor p does not divide.
DiffOp apply_sigma(const DiffOp& x, Sign s, const SymmetricP& P,
                   const std::optional<Scalar>& c_choice = std::nullopt);

/// (X - sigma(X)) / 2
DiffOp project_antifixed(const DiffOp& x, Sign s, const SymmetricP& P);

/// Parity class of the centered cofactor in the weight-k component.
ParityClass component_parity(long k, Sign s, const SymmetricP& P);

/// t^k (D - (c-k)/2)^d p(D) for every d <= degmax in the component's
/// parity class; each element is checked to be anti-fixed.
std::vector<DiffOp> component_basis(long k, unsigned degmax, Sign s, const SymmetricP& P);

/// Centered cofactor g with X_k = t^k g(D - (c-k)/2) p(D), or nullopt when
/// p does not divide the weight-k part.
std::optional<Polynomial> centered_cofactor(const DiffOp& x, long k, const SymmetricP& P);

/// Whether every homogeneous component of X lies in the span of the
/// corresponding component basis.
bool in_antifixed_span(const DiffOp& x, Sign s, const SymmetricP& P);

/// delta: overline(n) for sign +, overline(n-1) for sign -, n = deg p.
ParityClass delta_parity(Sign s, const SymmetricP& P);

}  // namespace qf
