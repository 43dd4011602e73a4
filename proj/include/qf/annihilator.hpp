#pragma once

#include <optional>
#include <vector>

#include "qf/polynomial.hpp"
#include "qf/quasipolynomial.hpp"
#include "qf/series.hpp"

namespace qf {

enum class ParityClass { Even, Odd, Any };

struct AnnihilatorOptions {
  unsigned dmax = 8;
  ParityClass parity = ParityClass::Any;
  /// Extra valid coefficients demanded beyond 2*dmax.
  unsigned margin = 8;
};

/// Minimal-degree monic b in the requested parity class with b(d/dx) F = 0
/// through F's valid order, or nullopt when none exists up to dmax.
/// Throws OrderError when F.order() < 2*dmax + margin.
std::optional<Polynomial> annihilator_search(const Series& f, const AnnihilatorOptions& options);

/// b(d/dx) F as a series (valid through N - deg b).
Series apply_operator(const Polynomial& b, const Series& f);

struct RecognitionOptions {
  AnnihilatorOptions annihilator;
  /// Verification mode: a user-supplied exponent set. When present the
  /// annihilator search is skipped and multiplicities up to
  /// `multiplicity_degree` are solved for at these exponents only.
  std::optional<std::vector<Scalar>> candidates;
  unsigned multiplicity_degree = 2;
  /// Restrict to even quasipolynomials (cosh/sinh-paired basis).
  bool even = false;
};

/// Recovers the closed form of a quasipolynomial from its truncated series
/// by an exact solve. Throws ConsistencyError when the data is not a
/// quasipolynomial of the requested shape or is not identifiable at the
/// available order.
Quasipolynomial recognize_quasipolynomial(const Series& f, const RecognitionOptions& options);

}  // namespace qf
