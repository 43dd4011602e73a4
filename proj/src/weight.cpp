#include "qf/weight.hpp"

#include "qf/diffop.hpp"
#include "qf/error.hpp"
#include "qf/linear_solve.hpp"
#include "qf/phi.hpp"

namespace qf {

namespace {

bool parity_ok(unsigned l, ParityClass parity) {
  return parity == ParityClass::Any || (parity == ParityClass::Even) == (l % 2 == 0);
}

unsigned parity_bit(ParityClass parity) { return parity == ParityClass::Odd ? 1 : 0; }

// Odd part of x^r e^{ax}.
Quasipolynomial odd_part_term(const Scalar& a, unsigned r) {
  Quasipolynomial q = Quasipolynomial::term(a, Polynomial::monomial(r, Scalar(1, 2)));
  return q - q.reflect();
}

}  // namespace

Weight Weight::closed(const SymmetricP& P, Sign sign, const Scalar& c0, const Quasipolynomial& phi) {
  if (!phi.is_even()) throw DomainError("weight: phi is not an even quasipolynomial");
  if (!phi.value_at_zero().is_zero()) throw DomainError("weight: phi(0) = " + phi.value_at_zero().str() + " != 0");
  return Weight{P, sign, c0, phi, std::nullopt};
}

Weight Weight::series(const SymmetricP& P, Sign sign, const Scalar& c0, const Series& delta) {
  const ParityClass parity = overline(P.degree());
  for (unsigned l = 0; l <= delta.order(); ++l)
    if (!parity_ok(l, parity) && !delta.coeff(l).is_zero())
      throw DomainError("weight: Delta has a coefficient at x^" + std::to_string(l) + " outside the parity class");
  return Weight{P, sign, c0, std::nullopt, delta};
}

Series delta_series(const Weight& w, unsigned order) {
  if (!w.phi) throw DomainError("delta_series: weight is not in closed form");
  Series ratio = series_divide(w.phi->to_series(order), Series::two_sinh_half(order));
  return apply_p_shift(w.P.p, w.P.c / Scalar(2), ratio);
}

GammaSolution gamma_solve(const Series& delta, const SymmetricP& P) {
  const Polynomial q = P.p.shift(P.c / Scalar(2));
  const unsigned d = static_cast<unsigned>(*q.degree());
  const unsigned n_delta = delta.order();
  const unsigned top = n_delta + d;

  // Unknowns: derivative coordinates G_n at odd n <= top.
  std::vector<unsigned> unknowns;
  for (unsigned n = 1; n <= top; n += 2) unknowns.push_back(n);
  std::vector<long> column(top + 1, -1);
  for (std::size_t c = 0; c < unknowns.size(); ++c) column[unknowns[c]] = static_cast<long>(c);

  Matrix a;
  std::vector<Scalar> rhs;
  for (unsigned n = 0; n <= n_delta; ++n) {
    std::vector<Scalar> row(unknowns.size());
    for (unsigned k = 0; k <= d; ++k)
      if (column[n + k] >= 0) row[column[n + k]] += q.coeff(k);
    a.push_back(std::move(row));
    rhs.push_back(delta.derivative_at_zero(n));
  }
  LinearSolution sol = solve_linear(std::move(a), std::move(rhs), unknowns.size());
  if (!sol.consistent) throw ConsistencyError("gamma_solve: Delta is not in the image of p(d/dx + c/2) on odd series");

  std::vector<Scalar> coeffs(top + 1);
  for (std::size_t c = 0; c < unknowns.size(); ++c) coeffs[unknowns[c]] = sol.particular[c] / factorial(unknowns[c]);

  GammaSolution out{Series(top, std::move(coeffs)), {}, sol.nullspace.size()};
  RationalRoots split = rational_roots(q);
  for (const auto& [alpha, mult] : split.roots) {
    if (!(alpha == positive_exponent(alpha))) continue;
    for (unsigned r = 0; r < mult; ++r) {
      Quasipolynomial k = odd_part_term(alpha, r);
      if (!k.is_zero()) out.kernel.push_back(k);
    }
  }
  return out;
}

Series f_from_gamma(const Series& gamma, const SymmetricP& P, const Scalar& c0) {
  const unsigned n = gamma.order();
  Series f = Series::two_sinh_half(n) * gamma;
  return f.truncate(std::min(f.order(), n)) + Series::cosh((P.c + Scalar(1)) / Scalar(2), n) * c0;
}

Polynomial fixed_shift_factor(const SymmetricP& P) {
  return P.p.shift((P.c + Scalar(1)) / Scalar(2)) * P.p.shift((P.c - Scalar(1)) / Scalar(2));
}

QuasifiniteReport quasifinite_from_gamma(const Series& gamma, const SymmetricP& P, Sign sign, const Scalar& c0,
                                         unsigned dmax, unsigned margin) {
  Series g = apply_operator(fixed_shift_factor(P), f_from_gamma(gamma, P, c0));
  QuasifiniteReport report;
  report.order = g.order();
  report.dmax = g.order() >= margin ? std::min(dmax, (g.order() - margin) / 2) : 0;
  if (g.order() < margin) throw OrderError("quasifinite: series order " + std::to_string(g.order()) + " below margin");
  report.b = annihilator_search(g, {report.dmax, delta_parity(sign, P), margin});
  report.quasifinite = report.b.has_value();
  report.caveat = "searched annihilators of degree <= " + std::to_string(report.dmax) + " at order " +
                  std::to_string(report.order) +
                  (report.quasifinite ? "" : "; a negative verdict only holds within these bounds");
  return report;
}

QuasifiniteReport quasifinite_check(const Weight& w, unsigned order, unsigned dmax, unsigned margin) {
  if (w.is_closed()) {
    QuasifiniteReport report;
    report.quasifinite = true;
    report.order = order;
    report.dmax = dmax;
    report.caveat = "closed-form weight: quasifinite by construction";
    return report;
  }
  GammaSolution gs = gamma_solve(*w.delta, w.P);
  return quasifinite_from_gamma(gs.gamma, w.P, w.sign, w.c0, dmax, margin);
}

Scalar positive_exponent(const Scalar& a) {
  if (sgn(a.re()) > 0) return a;
  if (sgn(a.re()) < 0) return -a;
  return sgn(a.im()) >= 0 ? a : -a;
}

Quasipolynomial ExponentData::to_quasipolynomial() const {
  Quasipolynomial out;
  for (const auto& [e, q] : even_type) {
    Quasipolynomial c = Quasipolynomial::cosh(e);
    out += c * Quasipolynomial::term(0, q);
  }
  for (const auto& [e, r] : odd_type) {
    Quasipolynomial s = Quasipolynomial::sinh(e);
    out += s * Quasipolynomial::term(0, r);
  }
  return out;
}

Quasipolynomial weight_f(const Weight& w) {
  if (!w.phi) throw DomainError("weight_f: weight is not in closed form");
  return *w.phi + Quasipolynomial::cosh((w.P.c + Scalar(1)) / Scalar(2)) * w.c0;
}

ExponentData exponent_decompose(const Quasipolynomial& f) {
  if (!f.is_even()) throw DomainError("exponent_decompose: input is not even");
  ExponentData out;
  for (const auto& [alpha, q] : f.terms()) {
    if (!(alpha == positive_exponent(alpha))) continue;
    if (alpha.is_zero()) {
      out.even_type[alpha] = q;
      continue;
    }
    Polynomial even = q.even_part() * Scalar(2), odd = q.odd_part() * Scalar(2);
    if (!even.is_zero()) out.even_type[alpha] = even;
    if (!odd.is_zero()) out.odd_type[alpha] = odd;
  }
  return out;
}

ExponentData exponent_decompose(const Weight& w) { return exponent_decompose(weight_f(w)); }

Scalar EtaData::get(const Scalar& s, unsigned i) const {
  auto it = coefficients.find(s);
  if (it == coefficients.end()) return 0;
  auto jt = it->second.find(i);
  return jt == it->second.end() ? Scalar(0) : jt->second;
}

unsigned EtaData::max_index(const Scalar& s) const {
  auto it = coefficients.find(s);
  if (it == coefficients.end() || it->second.empty()) return 0;
  return it->second.rbegin()->first;
}

Quasipolynomial EtaData::to_quasipolynomial() const {
  Quasipolynomial out;
  for (const auto& [s, row] : coefficients)
    for (const auto& [i, a] : row) out += eta_function(i, s) * a;
  return out;
}

bool is_canonical_s(const Scalar& s) {
  if (!s.is_real()) return sgn(s.im()) > 0;
  if (s.is_integer()) return s <= Scalar(0);
  if (s.is_half_integer()) return s <= Scalar(1, 2);
  return s - Scalar(mpq_class(s.floor())) < Scalar(1, 2);
}

EtaData eta_decompose(const Quasipolynomial& f) {
  if (!f.is_even()) throw DomainError("eta_decompose: input is not even");
  EtaData out;
  for (const auto& [alpha, q] : f.terms()) {
    Scalar s = alpha + Scalar(1, 2);
    const bool flip = !is_canonical_s(s);
    if (flip) s = Scalar(1) - s;
    const auto& c = q.coefficients();
    for (unsigned i = 0; i < c.size(); ++i) {
      if (c[i].is_zero()) continue;
      Scalar a = c[i] * factorial(i);
      if (flip && i % 2 == 1) a = -a;
      auto& row = out.coefficients[s];
      row[i] += a;
      if (row[i].is_zero()) row.erase(i);
    }
  }
  std::erase_if(out.coefficients, [](const auto& kv) { return kv.second.empty(); });
  return out;
}

Quasipolynomial recover_f(const Weight& w, unsigned order, const RecognitionOptions& options) {
  const Series delta = w.delta ? *w.delta : delta_series(w, order);
  GammaSolution gs = gamma_solve(delta, w.P);
  RecognitionOptions opts = options;
  opts.even = true;
  return recognize_quasipolynomial(f_from_gamma(gs.gamma, w.P, w.c0), opts);
}

Scalar lambda_of(const DiffOp& x, const Series& delta, const SymmetricP& P, const Scalar& c0) {
  for (long k : x.weights())
    if (k != 0) throw DomainError("lambda_of: element has nonzero weight " + std::to_string(k));
  auto f = x.part(0).exact_divide(P.p);
  if (!f) throw DomainError("lambda_of: weight-0 part is not a multiple of p");
  const Polynomial g = f->shift(P.c / Scalar(2));
  Scalar value = x.central() * c0;
  const auto& gc = g.coefficients();
  for (unsigned l = 0; l < gc.size(); ++l)
    if (!gc[l].is_zero()) value -= gc[l] * delta.derivative_at_zero(l);
  return value;
}

CharPolyResult char_poly_search(const Weight& w, unsigned k_bound, unsigned dmax, unsigned order, unsigned margin) {
  const Series delta = w.delta ? *w.delta : delta_series(w, order);
  const SymmetricP& P = w.P;
  const ParityClass delta_class = delta_parity(w.sign, P);
  const unsigned dbit = parity_bit(delta_class);
  const Scalar lower = (P.c - Scalar(1)) / Scalar(2), upper = (P.c + Scalar(1)) / Scalar(2);

  auto a_k = [&](unsigned k) { return DiffOp::term(1, Polynomial::power_of_linear(lower, 2 * k + dbit) * P.p); };
  auto b_e = [&](unsigned e) { return DiffOp::term(-1, Polynomial::power_of_linear(upper, e) * P.p); };

  // v[k][e] = lambda([A_k, B_e]^)
  std::vector<std::vector<Scalar>> v(k_bound + 1, std::vector<Scalar>(dmax + 1));
  for (unsigned k = 0; k <= k_bound; ++k)
    for (unsigned e = 0; e <= dmax; ++e)
      if (parity_ok(e, delta_class)) v[k][e] = lambda_of(bracket_hat(a_k(k), b_e(e)), delta, P, w.c0);

  std::optional<Polynomial> route_a;
  for (unsigned d = 0; d <= dmax && !route_a; ++d) {
    if (!parity_ok(d, delta_class)) continue;
    std::vector<unsigned> free_e;
    for (unsigned e = 0; e < d; ++e)
      if (parity_ok(e, delta_class)) free_e.push_back(e);
    Matrix a;
    std::vector<Scalar> rhs;
    for (unsigned k = 0; k <= k_bound; ++k) {
      std::vector<Scalar> row;
      for (unsigned e : free_e) row.push_back(v[k][e]);
      a.push_back(std::move(row));
      rhs.push_back(-v[k][d]);
    }
    LinearSolution sol = solve_linear(std::move(a), std::move(rhs), free_e.size());
    if (!sol.consistent) continue;
    std::vector<Scalar> coeffs(d + 1);
    coeffs[d] = 1;
    for (std::size_t i = 0; i < free_e.size(); ++i) coeffs[free_e[i]] = sol.particular[i];
    route_a = Polynomial(std::move(coeffs));
  }
  if (!route_a) throw ConsistencyError("char_poly_search: no b of degree <= " + std::to_string(dmax) + " satisfies the bracket condition");

  GammaSolution gs = gamma_solve(delta, P);
  QuasifiniteReport report = quasifinite_from_gamma(gs.gamma, P, w.sign, w.c0, dmax, margin);
  if (!report.b) throw ConsistencyError("char_poly_search: series route found no annihilator; " + report.caveat);
  if (!(*report.b == *route_a))
    throw ConsistencyError("char_poly_search: routes disagree, bracket route b = " + route_a->str('y') +
                           ", series route b = " + report.b->str('y'));

  CharPolyResult out;
  out.b = *route_a;
  out.characteristic = route_a->shift(-upper) * P.p;
  out.b_bracket_route = *route_a;
  out.b_series_route = *report.b;
  return out;
}

}  // namespace qf
