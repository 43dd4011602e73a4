#pragma once

#include <utility>

#include "qf/banded_matrix.hpp"
#include "qf/diffop.hpp"
#include "qf/involution.hpp"
#include "qf/quasipolynomial.hpp"
#include "qf/series.hpp"

namespace qf {

/// eta_i(x, s) = (x^i / i!) (e^{(s-1/2)x} + (-1)^i e^{-(s-1/2)x}) / 2
Quasipolynomial eta_function(unsigned i, const Scalar& s);
Series eta_series(unsigned i, const Scalar& s, unsigned order);

/// Whether X lies in the anti-fixed subalgebra for p = x, c = 0.
bool in_dx_pm(const DiffOp& x, Sign sign);

/// t^k F(D) -> diagonal k with P_k(j) = F(s - j + u). The central part of X
/// is ignored. Throws DomainError when X is not anti-fixed for p = x.
BandedMatrix phi_map(const DiffOp& x, const Scalar& s, unsigned m, Sign sign);

/// The lifted image of D^{2l+1}: diagonal part and central part, read off
/// the generating series at x^{2l+1}. Throws OrderError when N is too small.
std::pair<BandedMatrix, TruncPoly> phi_hat_deg0(unsigned l, const Scalar& s, unsigned m, unsigned order);

/// Lifted homomorphism on the central extension: phi_map on nonzero
/// weights, phi_hat_deg0 on the weight-0 part, C -> 1.
BandedMatrix phi_hat(const DiffOp& x, const Scalar& s, unsigned m, Sign sign, unsigned order = 24);

struct WitnessTarget {
  long j0 = 0;
  unsigned i0 = 0;
  long k = 0;
  Scalar coefficient = 1;
};

/// t^k g(D + k/2) D with g of the parity required by the sign whose image
/// equals coefficient * (u + s - j0) u^{i0} E_{j0-k, j0} on the columns
/// [-W, W+1]. Built by Hermite interpolation; s in Z/2 is unsupported.
DiffOp hermite_witness(const WitnessTarget& target, const Scalar& s, unsigned m, Sign sign, unsigned half_width);

}  // namespace qf
