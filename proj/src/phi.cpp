#include "qf/phi.hpp"

#include "qf/error.hpp"
#include "qf/hermite.hpp"

namespace qf {

Quasipolynomial eta_function(unsigned i, const Scalar& s) {
  const Scalar beta = s - Scalar(1, 2);
  const Scalar scale = Scalar(1, 2) / factorial(i);
  Quasipolynomial q = Quasipolynomial::term(beta, Polynomial::monomial(i, scale));
  q += Quasipolynomial::term(-beta, Polynomial::monomial(i, i % 2 == 0 ? scale : -scale));
  return q;
}

Series eta_series(unsigned i, const Scalar& s, unsigned order) { return eta_function(i, s).to_series(order); }

bool in_dx_pm(const DiffOp& x, Sign sign) {
  static const SymmetricP P = *validate_symmetry(Polynomial::x());
  for (const auto& [k, f] : x.terms())
    if (!f.exact_divide(P.p)) return false;
  return apply_sigma(x.noncentral(), sign, P) == -x.noncentral();
}

BandedMatrix phi_map(const DiffOp& x, const Scalar& s, unsigned m, Sign sign) {
  if (!in_dx_pm(x, sign))
    throw DomainError("phi_map: operator is not anti-fixed under sigma" + sign_name(sign) + " for p = x");
  const IndexPoly inner = IndexPoly::linear(m, -1, TruncPoly::shifted_u(m, s));
  BandedMatrix out(m);
  for (const auto& [k, f] : x.terms()) out += BandedMatrix::diagonal(k, IndexPoly::compose(f, inner));
  return out;
}

std::pair<BandedMatrix, TruncPoly> phi_hat_deg0(unsigned l, const Scalar& s, unsigned m, unsigned order) {
  const unsigned power = 2 * l + 1;
  if (order < power + 1)
    throw OrderError("phi_hat_deg0: order " + std::to_string(order) + " too small for D^" + std::to_string(power));
  const Series denom = Series::two_sinh_half(order);
  const Scalar scale = factorial(power);

  // Diagonal: (eta_i(x, s-j+1) - eta_i(x, s-j)) / (2 sinh(x/2)) at sample j.
  BandedMatrix diag = phi_map(DiffOp::term(0, Polynomial::monomial(power)), s, m, Sign::Plus);
  const IndexPoly& expected = diag.diagonals().at(0);
  for (long j = -2; j <= 2; ++j) {
    TruncPoly sampled(m);
    for (unsigned i = 0; i <= m; ++i) {
      Series num = eta_series(i, s - Scalar(j) + Scalar(1), order) - eta_series(i, s - Scalar(j), order);
      sampled[i] = series_divide(num, denom).coeff(power) * scale;
    }
    if (!(sampled == expected.eval(j)))
      throw ConsistencyError("phi_hat_deg0: series diagonal disagrees with phi_map at j = " + std::to_string(j));
  }

  TruncPoly central(m);
  for (unsigned i = 0; i <= m; ++i) {
    Series num = -eta_series(i, s, order);
    if (i == 0) num += Series::cosh(Scalar(1, 2), order);
    central[i] = series_divide(num, denom).coeff(power) * scale;
  }
  return {diag, central};
}

BandedMatrix phi_hat(const DiffOp& x, const Scalar& s, unsigned m, Sign sign, unsigned order) {
  BandedMatrix out = phi_map(x.noncentral(), s, m, sign);
  TruncPoly central = TruncPoly::constant(m, x.central());
  const Polynomial f0 = x.part(0);
  const auto& c = f0.coefficients();
  for (std::size_t d = 0; d < c.size(); ++d) {
    if (c[d].is_zero()) continue;
    if (d % 2 == 0) throw DomainError("phi_hat: weight-0 part has an even power of D");
    central += phi_hat_deg0(static_cast<unsigned>(d / 2), s, m, order).second * c[d];
  }
  return out + BandedMatrix::central_element(central);
}

DiffOp hermite_witness(const WitnessTarget& target, const Scalar& s, unsigned m, Sign sign, unsigned half_width) {
  if ((s * Scalar(2)).is_integer()) throw UnsupportedError("hermite_witness: s = " + s.str() + " lies in Z/2");
  if (target.coefficient.is_zero()) return {};
  const bool odd_g = sign == Sign::Minus && target.k % 2 != 0;
  const Scalar half_k = Scalar(target.k, 2);
  const long lo = -static_cast<long>(half_width), hi = static_cast<long>(half_width) + 1;

  std::vector<HermiteNode> nodes;
  for (long j = lo; j <= hi; ++j) {
    const Scalar x = -Scalar(j) + half_k + s;
    std::vector<Scalar> taylor(m + 1), mirror(m + 1);
    if (j == target.j0 && target.i0 <= m) taylor[target.i0] = target.coefficient;
    for (unsigned i = 0; i <= m; ++i) {
      // g(-x + v) = eps g(x - v)
      const bool flip = (i % 2 != 0) != odd_g;
      mirror[i] = flip ? -taylor[i] : taylor[i];
    }
    nodes.push_back({x, taylor});
    nodes.push_back({-x, mirror});
  }
  Polynomial g = hermite_interpolate(nodes);
  const Polynomial reflected = g.reflect();
  g = (odd_g ? g - reflected : g + reflected) * Scalar(1, 2);
  if (odd_g ? !g.is_odd() : !g.is_even()) throw ConsistencyError("hermite_witness: symmetrized g has wrong parity");
  return DiffOp::term(target.k, g.shift(half_k) * Polynomial::x());
}

}  // namespace qf
