#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qf/annihilator.hpp"
#include "qf/involution.hpp"
#include "qf/quasipolynomial.hpp"
#include "qf/series.hpp"

namespace qf {

/// Highest-weight functional on the centrally extended anti-fixed
/// subalgebra: either a closed form phi or a truncated label series Delta.
struct Weight {
  SymmetricP P;
  Sign sign = Sign::Plus;
  Scalar c0;
  std::optional<Quasipolynomial> phi;
  std::optional<Series> delta;

  /// Validates that phi is even with phi(0) = 0.
  static Weight closed(const SymmetricP& P, Sign sign, const Scalar& c0, const Quasipolynomial& phi);
  /// Validates that only parity-allowed powers of x are populated.
  static Weight series(const SymmetricP& P, Sign sign, const Scalar& c0, const Series& delta);

  bool is_closed() const { return phi.has_value(); }
};

/// Delta(x) = p(d/dx + c/2)(phi(x) / (2 sinh(x/2))) to order N - 1 - deg p.
Series delta_series(const Weight& w, unsigned order);

struct GammaSolution {
  /// Odd solution with free kernel coordinates set to zero.
  Series gamma;
  /// Odd functions x^r e^{ax} combinations with p(a + c/2) = 0 that remain free.
  std::vector<Quasipolynomial> kernel;
  /// Dimension of the free part of the truncated solve.
  std::size_t free_dimension = 0;
};

/// Odd Gamma with p(d/dx + c/2) Gamma = Delta. Throws ConsistencyError
/// when Delta is not in the image.
GammaSolution gamma_solve(const Series& delta, const SymmetricP& P);

/// F = 2 sinh(x/2) Gamma + cosh((c+1)x/2) c0
Series f_from_gamma(const Series& gamma, const SymmetricP& P, const Scalar& c0);

/// p(d/dx + (c+1)/2) p(d/dx + (c-1)/2), the fixed factor of the equation for F.
Polynomial fixed_shift_factor(const SymmetricP& P);

struct QuasifiniteReport {
  bool quasifinite = false;
  /// Minimal annihilator in the delta-parity class, when one was found.
  std::optional<Polynomial> b;
  unsigned order = 0;
  unsigned dmax = 0;
  std::string caveat;
};

/// Verdict from an explicit Gamma (used to probe kernel perturbations).
QuasifiniteReport quasifinite_from_gamma(const Series& gamma, const SymmetricP& P, Sign sign, const Scalar& c0,
                                         unsigned dmax, unsigned margin = 8);

/// Closed forms are quasifinite by construction; series forms go through
/// gamma_solve and a bounded annihilator search.
QuasifiniteReport quasifinite_check(const Weight& w, unsigned order, unsigned dmax, unsigned margin = 8);

/// Canonical member of {a, -a}: Re > 0, or Re = 0 and Im >= 0.
Scalar positive_exponent(const Scalar& a);

struct ExponentData {
  /// e+ -> nonzero even q (cosh type)
  std::map<Scalar, Polynomial> even_type;
  /// e- -> nonzero odd r (sinh type)
  std::map<Scalar, Polynomial> odd_type;

  Quasipolynomial to_quasipolynomial() const;
  friend bool operator==(const ExponentData&, const ExponentData&) = default;
};

/// phi + cosh((c+1)x/2) c0 as a quasipolynomial.
Quasipolynomial weight_f(const Weight& w);

/// Cosh/sinh decomposition of an even quasipolynomial.
ExponentData exponent_decompose(const Quasipolynomial& f);
ExponentData exponent_decompose(const Weight& w);

struct EtaData {
  /// s -> (i -> a_{s,i}), canonical s, no zero coefficients.
  std::map<Scalar, std::map<unsigned, Scalar>> coefficients;

  Scalar get(const Scalar& s, unsigned i) const;
  unsigned max_index(const Scalar& s) const;
  Quasipolynomial to_quasipolynomial() const;
  friend bool operator==(const EtaData&, const EtaData&) = default;
};

bool is_canonical_s(const Scalar& s);

/// F = sum a_{s,i} eta_i(x, s) with canonical s. Throws DomainError when F is not even.
EtaData eta_decompose(const Quasipolynomial& f);

/// Recovers F in closed form from a series-form weight: gamma_solve,
/// F from Gamma, exact recognition.
Quasipolynomial recover_f(const Weight& w, unsigned order, const RecognitionOptions& options);

struct CharPolyResult {
  /// Minimal monic b in the delta class.
  Polynomial b;
  /// b(x - (c+1)/2) p(x)
  Polynomial characteristic;
  /// Route through the singular-vector condition on the weight -1 component.
  Polynomial b_bracket_route;
  /// Route through the annihilator of the fixed-shift image of F.
  Polynomial b_series_route;
};

/// Both routes must agree; throws ConsistencyError otherwise.
CharPolyResult char_poly_search(const Weight& w, unsigned k_bound, unsigned dmax, unsigned order = 24,
                                unsigned margin = 8);

/// lambda of an element g(D - c/2) p(D) + z C given the Delta labels.
Scalar lambda_of(const DiffOp& x, const Series& delta, const SymmetricP& P, const Scalar& c0);

}  // namespace qf
