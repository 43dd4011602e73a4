#include "qf/annihilator.hpp"

#include <set>

#include "qf/error.hpp"
#include "qf/linear_solve.hpp"

namespace qf {

namespace {

bool parity_allows(ParityClass parity, unsigned k) {
  switch (parity) {
    case ParityClass::Even: return k % 2 == 0;
    case ParityClass::Odd: return k % 2 == 1;
    case ParityClass::Any: return true;
  }
  return true;
}

// Canonical member of {alpha, -alpha}: positive real part, or purely
// imaginary with nonnegative imaginary part.
Scalar positive_representative(const Scalar& a) {
  if (sgn(a.re()) > 0) return a;
  if (sgn(a.re()) < 0) return -a;
  return sgn(a.im()) >= 0 ? a : -a;
}

}  // namespace

Series apply_operator(const Polynomial& b, const Series& f) {
  return apply_p_shift(b, 0, f);
}

std::optional<Polynomial> annihilator_search(const Series& f, const AnnihilatorOptions& options) {
  const unsigned n_order = f.order();
  if (n_order < 2 * options.dmax + options.margin)
    throw OrderError("annihilator_search: order " + std::to_string(n_order) + " < 2*dmax + margin = " +
                     std::to_string(2 * options.dmax + options.margin));
  std::vector<Scalar> derivs(n_order + 1);
  for (unsigned n = 0; n <= n_order; ++n) derivs[n] = f.derivative_at_zero(n);

  for (unsigned d = 0; d <= options.dmax; ++d) {
    if (!parity_allows(options.parity, d)) continue;
    std::vector<unsigned> free_k;
    for (unsigned k = 0; k < d; ++k)
      if (options.parity == ParityClass::Any || k % 2 == d % 2) free_k.push_back(k);

    Matrix a;
    std::vector<Scalar> rhs;
    for (unsigned n = 0; n + d <= n_order; ++n) {
      std::vector<Scalar> row;
      row.reserve(free_k.size());
      for (unsigned k : free_k) row.push_back(derivs[n + k]);
      a.push_back(std::move(row));
      rhs.push_back(-derivs[n + d]);
    }
    LinearSolution sol = solve_linear(std::move(a), std::move(rhs), free_k.size());
    if (!sol.consistent) continue;

    std::vector<Scalar> coeffs(d + 1);
    coeffs[d] = 1;
    for (std::size_t i = 0; i < free_k.size(); ++i) coeffs[free_k[i]] = sol.particular[i];
    Polynomial b(std::move(coeffs));
    if (!apply_operator(b, f).is_zero())
      throw ConsistencyError("annihilator_search: candidate failed re-verification");
    return b;
  }
  return std::nullopt;
}

Quasipolynomial recognize_quasipolynomial(const Series& f, const RecognitionOptions& options) {
  const unsigned n_order = f.order();

  // Basis functions: (exponent, power r, paired) where paired means the
  // even combination x^r (e^{ax} + (-1)^r e^{-ax}).
  struct BasisFn {
    Scalar alpha;
    unsigned r;
    bool paired;
  };
  std::vector<BasisFn> basis;

  if (options.candidates) {
    std::set<Scalar> seen;
    for (const Scalar& raw : *options.candidates) {
      Scalar alpha = options.even ? positive_representative(raw) : raw;
      if (!seen.insert(alpha).second) continue;
      for (unsigned r = 0; r <= options.multiplicity_degree; ++r) {
        if (options.even) {
          if (alpha.is_zero() && r % 2 == 1) continue;
          basis.push_back({alpha, r, !alpha.is_zero()});
        } else {
          basis.push_back({alpha, r, false});
        }
      }
    }
  } else {
    AnnihilatorOptions ann = options.annihilator;
    if (options.even) ann.parity = ParityClass::Even;
    auto b = annihilator_search(f, ann);
    if (!b) throw ConsistencyError("recognize: no annihilator of degree <= " + std::to_string(ann.dmax));
    RationalRoots split = rational_roots(*b);
    if (split.residual.degree().value_or(0) > 0)
      throw ConsistencyError("recognize: annihilator " + b->str() + " has non-rational roots");
    for (const auto& [alpha, mult] : split.roots) {
      if (options.even && !(alpha == positive_representative(alpha))) continue;
      for (unsigned r = 0; r < mult; ++r) {
        if (options.even) {
          if (alpha.is_zero() && r % 2 == 1) continue;
          basis.push_back({alpha, r, !alpha.is_zero()});
        } else {
          basis.push_back({alpha, r, false});
        }
      }
    }
  }

  std::vector<Quasipolynomial> fns;
  for (const BasisFn& bf : basis) {
    Quasipolynomial q = Quasipolynomial::term(bf.alpha, Polynomial::monomial(bf.r));
    if (bf.paired) {
      Scalar sign = bf.r % 2 == 0 ? Scalar(1) : Scalar(-1);
      q += Quasipolynomial::term(-bf.alpha, Polynomial::monomial(bf.r, sign));
    }
    fns.push_back(std::move(q));
  }
  std::vector<Series> fn_series;
  for (const auto& q : fns) fn_series.push_back(q.to_series(n_order));

  Matrix a;
  std::vector<Scalar> rhs;
  for (unsigned n = 0; n <= n_order; ++n) {
    std::vector<Scalar> row;
    for (const auto& s : fn_series) row.push_back(s.coeff(n));
    a.push_back(std::move(row));
    rhs.push_back(f.coeff(n));
  }
  LinearSolution sol = solve_linear(std::move(a), std::move(rhs), fns.size());
  if (!sol.consistent) throw ConsistencyError("recognize: series is not in the span of the candidate basis");
  if (sol.rank != fns.size())
    throw ConsistencyError("recognize: closed form not identifiable at order " + std::to_string(n_order));

  Quasipolynomial result;
  for (std::size_t i = 0; i < fns.size(); ++i) result += fns[i] * sol.particular[i];
  if (!(result.to_series(n_order) == f.truncate(n_order)))
    throw ConsistencyError("recognize: recovered closed form does not reproduce the series");
  return result;
}

}  // namespace qf
