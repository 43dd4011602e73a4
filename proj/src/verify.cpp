#include "qf/verify.hpp"

#include <algorithm>
#include <future>
#include <set>
#include <sstream>

#include "qf/annihilator.hpp"
#include "qf/error.hpp"
#include "qf/hermite.hpp"
#include "qf/labels.hpp"
#include "qf/phi.hpp"
#include "qf/serialize.hpp"
#include "qf/windowed_matrix.hpp"

namespace qf {

namespace {

using Check = std::optional<std::string>;

template <class F>
BatteryResult run_battery(std::string module, std::string name, std::size_t trials, F&& trial) {
  BatteryResult r{std::move(module), std::move(name), trials, 0, {}};
  for (std::size_t t = 0; t < trials; ++t) {
    Check failure;
    try {
      failure = trial(t);
    } catch (const std::exception& e) {
      failure = std::string("exception: ") + e.what();
    }
    if (!failure) {
      ++r.passed;
    } else if (r.counterexample.empty()) {
      r.counterexample = "trial " + std::to_string(t) + ": " + *failure;
    }
  }
  return r;
}

const SymmetricP& p_x() {
  static const SymmetricP P = *validate_symmetry(Polynomial::x());
  return P;
}

Sign random_sign(RandomSource& rng) { return rng.coin() ? Sign::Plus : Sign::Minus; }

SymmetricP symmetric_or_throw(const Polynomial& p) {
  auto P = validate_symmetry(p);
  if (!P) throw DomainError("no center for p = " + p.str());
  return *P;
}

bool in_class(unsigned d, ParityClass c) {
  return c == ParityClass::Any || (d % 2 == 0) == (c == ParityClass::Even);
}

std::string parity_name(ParityClass c) {
  switch (c) {
    case ParityClass::Even: return "even";
    case ParityClass::Odd: return "odd";
    default: return "any";
  }
}

Scalar gaussian(RandomSource& rng) { return rng.scalar() + Scalar::imag_unit() * rng.scalar(); }

Quasipolynomial cosh_type(const Scalar& alpha, const Polynomial& q) {
  return (Quasipolynomial::term(alpha, q) + Quasipolynomial::term(-alpha, q)) * Scalar(1, 2);
}

Quasipolynomial sinh_type(const Scalar& alpha, const Polynomial& r) {
  return (Quasipolynomial::term(alpha, r) - Quasipolynomial::term(-alpha, r)) * Scalar(1, 2);
}

const std::vector<Scalar>& exponent_pool() {
  static const std::vector<Scalar> pool{Scalar(1, 4), Scalar(1, 3), Scalar(1, 2), Scalar(2, 3), Scalar(1),
                                        Scalar(3, 2), Scalar(2),    Scalar(5, 2), Scalar(7, 3)};
  return pool;
}

}  // namespace

std::vector<Polynomial> standard_ps() {
  return {Polynomial{1}, Polynomial{0, 1}, Polynomial{0, 0, 1}, Polynomial{0, -1, 1}, Polynomial{0, 0, 0, 1}};
}

Weight random_closed_weight(RandomSource& rng, const SymmetricP& P, Sign sign, unsigned exponents,
                            unsigned max_mult) {
  // Exponent 0 is spent on the constant correction, (c+1)/2 on the c0 term.
  const Scalar c0_exponent = (P.c + Scalar(1)) / Scalar(2);
  Scalar c0 = exponents >= 3 && rng.coin() ? rng.nonzero_scalar() : Scalar(0);
  std::set<Scalar> used{Scalar(0)};
  if (!c0.is_zero()) used.insert(positive_exponent(c0_exponent));
  Quasipolynomial f;
  while (true) {
    std::vector<Scalar> fresh;
    for (const Scalar& a : exponent_pool())
      if (!used.count(a)) fresh.push_back(a);
    if (used.size() >= exponents || fresh.empty()) break;
    const Scalar alpha = rng.pick(fresh);
    used.insert(alpha);
    Polynomial q{rng.scalar()};
    if (max_mult >= 2) q += Polynomial::monomial(2, rng.scalar());
    Polynomial r = max_mult >= 1 ? Polynomial::monomial(1, rng.scalar()) : Polynomial();
    if (q.is_zero() && r.is_zero()) q = Polynomial{1};
    f += cosh_type(alpha, q) + sinh_type(alpha, r);
    if (!rng.coin()) break;
  }
  if (max_mult >= 2 && rng.coin()) f += Quasipolynomial::term(0, Polynomial::monomial(2, rng.nonzero_scalar()));
  f -= Quasipolynomial::constant(f.value_at_zero());
  return Weight::closed(P, sign, c0, f);
}

std::vector<Scalar> weight_support(const Weight& w) {
  std::set<Scalar> out;
  const Quasipolynomial f = weight_f(w);
  for (const auto& [alpha, q] : f.terms()) out.insert(positive_exponent(alpha));
  return {out.begin(), out.end()};
}

BatteryResult battery_field_axioms(std::uint64_t seed, std::size_t trials) {
  RandomSource rng(seed);
  return run_battery("exact-core", "field axioms and scalar round-trip", trials, [&](std::size_t) -> Check {
    const Scalar a = gaussian(rng), b = gaussian(rng), c = gaussian(rng);
    if (!((a + b) * c == a * c + b * c)) return "distributivity fails for " + a.str() + ", " + b.str() + ", " + c.str();
    if (!((a * b).conj() == a.conj() * b.conj())) return "conjugation not multiplicative for " + a.str();
    if (!a.is_zero() && !(a * a.inverse() == Scalar(1))) return "inverse fails for " + a.str();
    if (!(Scalar::parse(a.str()) == a)) return "parse(str) differs for " + a.str();
    return std::nullopt;
  });
}

BatteryResult battery_series_division(std::uint64_t seed, std::size_t trials, unsigned order) {
  RandomSource rng(seed);
  return run_battery("exact-core", "series division inverts multiplication", trials, [&](std::size_t) -> Check {
    std::vector<Scalar> fc(order + 1), gc(order + 1);
    for (auto& x : fc) x = rng.scalar();
    for (auto& x : gc) x = rng.scalar();
    gc[0] = rng.nonzero_scalar();
    const Series f(order, fc), g(order, gc);
    if (!(series_divide(f * g, g) == f)) return "(f g)/g != f for f = " + f.str();
    const Series s = Series::two_sinh_half(order);
    const Series h = series_divide(f * s, s);
    if (h.order() + 1 != order) return "division by valuation 1 should lose one order";
    if (!(h == f.truncate(h.order()))) return "(f 2sinh(x/2)) / 2sinh(x/2) != f for f = " + f.str();
    return std::nullopt;
  });
}

BatteryResult battery_annihilator(std::uint64_t seed, std::size_t trials, unsigned order) {
  RandomSource rng(seed);
  return run_battery("exact-core", "minimal annihilator of exponential polynomials", trials,
                     [&](std::size_t) -> Check {
                       // Oracle: prod (x - alpha)^{deg q_alpha + 1}.
                       std::vector<Scalar> pool{0, 1, -1, 2, Scalar(1, 2), Scalar(-3, 2), Scalar(1, 3)};
                       Quasipolynomial q;
                       Polynomial oracle{1};
                       const long n = rng.integer(1, 2);
                       for (long t = 0; t < n; ++t) {
                         const Scalar alpha = rng.pick(pool);
                         std::erase(pool, alpha);
                         const Polynomial m = rng.polynomial(1);
                         q += Quasipolynomial::term(alpha, m);
                         oracle = oracle * Polynomial::power_of_linear(alpha, static_cast<unsigned>(*m.degree()) + 1);
                       }
                       const Series f = q.to_series(order);
                       auto b = annihilator_search(f, {8, ParityClass::Any, 4});
                       if (!b) return "no annihilator found for " + q.str();
                       if (!(*b == oracle)) return "annihilator " + b->str() + " != " + oracle.str() + " for " + q.str();
                       if (!apply_operator(*b, f).is_zero()) return "b(d/dx) F != 0 for " + q.str();
                       return std::nullopt;
                     });
}

BatteryResult battery_hermite(std::uint64_t seed, std::size_t trials) {
  RandomSource rng(seed);
  return run_battery("exact-core", "Hermite interpolation matches Taylor data", trials, [&](std::size_t) -> Check {
    std::vector<Scalar> xs{0, 1, -1, Scalar(1, 2), Scalar(-2, 3), 3};
    std::vector<HermiteNode> nodes;
    const long n = rng.integer(1, 4);
    for (long t = 0; t < n; ++t) {
      HermiteNode node{rng.pick(xs), {}};
      std::erase(xs, node.x);
      const long l = rng.integer(1, 3);
      for (long r = 0; r < l; ++r) node.taylor.push_back(rng.scalar());
      nodes.push_back(node);
    }
    const Polynomial h = hermite_interpolate(nodes);
    for (const auto& node : nodes) {
      Polynomial d = h;
      for (std::size_t r = 0; r < node.taylor.size(); ++r) {
        if (!(d.eval(node.x) / factorial(static_cast<unsigned>(r)) == node.taylor[r]))
          return "derivative " + std::to_string(r) + " at " + node.x.str() + " differs, h = " + h.str();
        d = d.derivative();
      }
    }
    return std::nullopt;
  });
}

BatteryResult battery_jacobi(std::uint64_t seed, std::size_t trials) {
  RandomSource rng(seed);
  return run_battery("diffop-algebra", "Jacobi identity on the central extension", trials, [&](std::size_t) -> Check {
    auto draw = [&] { return rng.diffop(4, 5, 3) + DiffOp::central_element(rng.scalar()); };
    const DiffOp x = draw(), y = draw(), z = draw();
    const DiffOp j = bracket_hat(x, bracket_hat(y, z)) + bracket_hat(y, bracket_hat(z, x)) +
                     bracket_hat(z, bracket_hat(x, y));
    if (!j.is_zero()) return "X = " + x.str() + ", Y = " + y.str() + ", Z = " + z.str() + " give " + j.str();
    return std::nullopt;
  });
}

BatteryResult battery_degree_drop(std::uint64_t seed, std::size_t trials) {
  RandomSource rng(seed);
  return run_battery("diffop-algebra", "degree drop criterion for brackets", trials, [&](std::size_t) -> Check {
    Polynomial f, g;
    do {
      f = rng.polynomial(5);
      g = rng.polynomial(5);
    } while (*f.degree() + *g.degree() == 0);
    const long k = rng.integer(-4, 4), l = rng.integer(-4, 4);
    const long df = static_cast<long>(*f.degree()), dg = static_cast<long>(*g.degree());
    const Polynomial h = bracket(DiffOp::term(k, f), DiffOp::term(l, g)).part(k + l);
    const bool full = !h.is_zero() && static_cast<long>(*h.degree()) == df + dg - 1;
    if (full != (df * l != dg * k))
      return "k = " + std::to_string(k) + ", f = " + f.str() + ", l = " + std::to_string(l) + ", g = " + g.str() +
             ", h = " + h.str();
    return std::nullopt;
  });
}

BatteryResult battery_anti_involution(std::uint64_t seed, const std::vector<Polynomial>& ps, std::size_t trials,
                                      const SigmaFn& sigma) {
  RandomSource rng(seed);
  const SigmaFn apply = sigma ? sigma : SigmaFn([](const DiffOp& x, Sign s, const SymmetricP& P) {
    return apply_sigma(x, s, P);
  });
  const std::size_t per = trials;
  return run_battery("involutions", "anti-involution laws", per * ps.size() * 2, [&](std::size_t t) -> Check {
    SymmetricP P = symmetric_or_throw(ps[t / (2 * per)]);
    if (P.free_c) P = P.with_center(rng.scalar());
    const Sign sign = (t / per) % 2 == 0 ? Sign::Plus : Sign::Minus;
    const DiffOp x = rng.multiple_of_p(P, 4, 6, 3), y = rng.multiple_of_p(P, 4, 6, 3);
    const std::string where = "p = " + P.p.str() + ", c = " + P.c.str() + ", sign " + sign_name(sign);
    if (!(apply(apply(x, sign, P), sign, P) == x)) return where + ": sigma^2 != id on X = " + x.str();
    if (!(apply(compose(x, y), sign, P) == compose(apply(y, sign, P), apply(x, sign, P))))
      return where + ": sigma(XY) != sigma(Y) sigma(X) for X = " + x.str() + ", Y = " + y.str();
    return std::nullopt;
  });
}

BatteryResult battery_symmetry_rejection(const std::vector<Polynomial>& asymmetric) {
  return run_battery("involutions", "asymmetric p rejected", asymmetric.size(), [&](std::size_t t) -> Check {
    if (validate_symmetry(asymmetric[t])) return "accepted p = " + asymmetric[t].str();
    return std::nullopt;
  });
}

BatteryResult battery_antifixed_coherence(std::uint64_t seed, const std::vector<Polynomial>& ps, std::size_t trials) {
  RandomSource rng(seed);
  const std::size_t per = trials;
  return run_battery("involutions", "anti-fixed membership matches centered-parity basis", per * ps.size() * 2,
                     [&](std::size_t t) -> Check {
                       const SymmetricP P = symmetric_or_throw(ps[t / (2 * per)]);
                       const Sign sign = (t / per) % 2 == 0 ? Sign::Plus : Sign::Minus;
                       const std::string where = "p = " + P.p.str() + ", sign " + sign_name(sign);
                       const DiffOp x = rng.multiple_of_p(P, 4, 4, 3);
                       const DiffOp a = project_antifixed(x, sign, P);
                       if (!in_antifixed_span(a, sign, P)) return where + ": projection of " + x.str() + " not in span";
                       const DiffOp fixed = x + apply_sigma(x, sign, P);
                       if (!fixed.is_zero() && in_antifixed_span(fixed, sign, P))
                         return where + ": fixed element " + fixed.str() + " reported in span";
                       const long k = rng.integer(-4, 4);
                       DiffOp y;
                       for (const DiffOp& e : component_basis(k, 5, sign, P)) y += e * rng.scalar();
                       if (!(apply_sigma(y, sign, P) == -y)) return where + ": span element " + y.str() + " not anti-fixed";
                       if (!in_antifixed_span(y, sign, P)) return where + ": span element " + y.str() + " rejected";
                       return std::nullopt;
                     });
}

BatteryResult battery_delta_parity(const std::vector<Polynomial>& ps, unsigned degmax) {
  return run_battery("involutions", "weight -1 parity equals delta", ps.size() * 2, [&](std::size_t t) -> Check {
    const SymmetricP P = symmetric_or_throw(ps[t / 2]);
    const Sign sign = t % 2 == 0 ? Sign::Plus : Sign::Minus;
    const ParityClass delta = delta_parity(sign, P);
    const std::string where = "p = " + P.p.str() + ", sign " + sign_name(sign);
    if (component_parity(-1, sign, P) != delta) return where + ": component parity differs from delta";
    for (unsigned d = 0; d <= degmax; ++d) {
      const Polynomial g = Polynomial::power_of_linear((P.c + Scalar(1)) / Scalar(2), d);
      const DiffOp y = DiffOp::term(-1, g * P.p);
      const bool anti = apply_sigma(y, sign, P) == -y;
      if (anti != in_class(d, delta))
        return where + ": degree " + std::to_string(d) + " anti-fixed = " + (anti ? "yes" : "no") + " but delta is " +
               parity_name(delta);
    }
    return std::nullopt;
  });
}

BatteryResult battery_phi_homomorphism(std::uint64_t seed, const std::vector<Scalar>& ss, unsigned mmax,
                                       std::size_t trials) {
  RandomSource rng(seed);
  const std::size_t per = trials;
  const std::size_t cells = ss.size() * (mmax + 1);
  return run_battery("matrix-realization", "phi_s is a homomorphism", per * cells, [&](std::size_t t) -> Check {
    const std::size_t cell = t / per;
    const Scalar& s = ss[cell / (mmax + 1)];
    const unsigned m = static_cast<unsigned>(cell % (mmax + 1));
    const Sign sign = random_sign(rng);
    const DiffOp x = rng.dx_element(sign, 3, 4, 2), y = rng.dx_element(sign, 3, 4, 2);
    const BandedMatrix a = phi_map(x, s, m, sign), b = phi_map(y, s, m, sign);
    if (!(phi_map(bracket(x, y), s, m, sign) == a * b - b * a))
      return "s = " + s.str() + ", m = " + std::to_string(m) + ", sign " + sign_name(sign) + ", X = " + x.str() +
             ", Y = " + y.str();
    return std::nullopt;
  });
}

BatteryResult battery_central_lift(std::uint64_t seed, long kmax, unsigned mmax, std::size_t trials,
                                   unsigned order) {
  RandomSource rng(seed);
  return run_battery("matrix-realization", "central lift intertwines Psi with C", trials, [&](std::size_t) -> Check {
    const long k = rng.integer(0, kmax);
    const Sign sign = random_sign(rng);
    const unsigned m = static_cast<unsigned>(rng.integer(0, mmax));
    const Scalar s = rng.scalar();
    const DiffOp x = project_antifixed(DiffOp::term(k, rng.polynomial(3) * Polynomial::x()), sign, p_x());
    const DiffOp y = project_antifixed(DiffOp::term(-k, rng.polynomial(3) * Polynomial::x()), sign, p_x());
    const BandedMatrix lhs = phi_hat(bracket_hat(x, y), s, m, sign, order);
    const BandedMatrix rhs = sb_bracket_hat(phi_map(x, s, m, sign), phi_map(y, s, m, sign));
    if (!(lhs == rhs))
      return "s = " + s.str() + ", m = " + std::to_string(m) + ", X = " + x.str() + ", Y = " + y.str() +
             ": central " + lhs.central().str() + " vs " + rhs.central().str();
    return std::nullopt;
  });
}

BatteryResult battery_central_worked(std::uint64_t seed, std::size_t count, unsigned order) {
  RandomSource rng(seed);
  return run_battery("matrix-realization", "[tD, t^-1 D] central part is s(s-1)", count, [&](std::size_t) -> Check {
    const Scalar s = rng.nonzero_scalar(7, 5);
    const DiffOp x = DiffOp::term(1, Polynomial::x()), y = DiffOp::term(-1, Polynomial::x());
    const TruncPoly expected = TruncPoly::constant(0, s * (s - Scalar(1)));
    const TruncPoly lhs = phi_hat(bracket_hat(x, y), s, 0, Sign::Plus, order).central();
    const TruncPoly rhs = cocycle_C(phi_map(x, s, 0, Sign::Plus), phi_map(y, s, 0, Sign::Plus));
    if (!(lhs == expected) || !(rhs == expected))
      return "s = " + s.str() + ": lift " + lhs.str() + ", cocycle " + rhs.str() + ", expected " + expected.str();
    return std::nullopt;
  });
}

BatteryResult battery_window_involutions(unsigned mmax, unsigned half_width) {
  struct Case {
    unsigned m;
    long i, j;
    unsigned a;
  };
  std::vector<Case> cases;
  const long lo = -static_cast<long>(half_width), hi = static_cast<long>(half_width) + 1;
  for (unsigned m = 0; m <= mmax; ++m)
    for (long i = lo; i <= hi; ++i)
      for (long w = -1; w <= 1; ++w)
        if (i + w >= lo && i + w <= hi)
          for (unsigned a = 0; a <= m; ++a) cases.push_back({m, i, i + w, a});
  return run_battery("matrix-realization", "rho = T^-1 w T on window basis", cases.size(), [&](std::size_t t) -> Check {
    const Case& c = cases[t];
    WindowedMatrix e(c.m, half_width);
    e.at(c.i, c.j) = TruncPoly::u(c.m).pow(c.a);
    const std::pair<WindowInvolution, WindowInvolution> pairs[] = {{WindowInvolution::RhoPlus, WindowInvolution::WPlus},
                                                                   {WindowInvolution::RhoMinus, WindowInvolution::WMinus}};
    for (const auto& [rho, w] : pairs) {
      const WindowedMatrix lhs = involution_apply(e, rho);
      const WindowedMatrix rhs = t_conjugate(involution_apply(t_conjugate(e, TVariant::Half, TDirection::Forward), w),
                                             TVariant::Half, TDirection::Inverse);
      if (!(lhs == rhs))
        return std::string(rho == WindowInvolution::RhoPlus ? "rho+" : "rho-") + " differs on u^" +
               std::to_string(c.a) + " E(" + std::to_string(c.i) + "," + std::to_string(c.j) + "), m = " +
               std::to_string(c.m);
    }
    return std::nullopt;
  });
}

BatteryResult battery_classical_images(std::uint64_t seed, std::size_t trials, unsigned half_width) {
  RandomSource rng(seed);
  return run_battery("matrix-realization", "images land in c, d and L+-", 4 * trials, [&](std::size_t t) -> Check {
    const std::size_t target = t / trials;
    const Sign sign = target % 2 == 0 ? Sign::Plus : Sign::Minus;
    const bool half = target < 2;
    const unsigned m = static_cast<unsigned>(rng.integer(0, 2));
    const DiffOp x = rng.dx_element(sign, 3, 4, 3);
    const AlgebraTag tag = half ? (sign == Sign::Plus ? AlgebraTag::C : AlgebraTag::D)
                                : (sign == Sign::Plus ? AlgebraTag::LPlus : AlgebraTag::LMinus);
    const WindowedMatrix a =
        half ? t_conjugate(window(phi_map(x, Scalar(1, 2), m, sign), half_width), TVariant::Half, TDirection::Inverse)
             : t_conjugate(window(phi_map(x, 0, m, sign), half_width), TVariant::Integer, TDirection::Forward);
    const MembershipResult r = classical_membership(a, tag, {false, 1});
    if (!r.member) return tag_name(tag) + ", m = " + std::to_string(m) + ", X = " + x.str() + ": " + r.violation;
    return std::nullopt;
  });
}

BatteryResult battery_round_trip(std::uint64_t seed, std::size_t trials, unsigned order) {
  RandomSource rng(seed);
  return run_battery("weight-analysis", "phi -> Delta -> Gamma -> exponents round-trip", trials,
                     [&](std::size_t) -> Check {
                       const Sign sign = random_sign(rng);
                       const Weight w = random_closed_weight(rng, p_x(), sign, static_cast<unsigned>(rng.integer(2, 3)));
                       const Weight ws = Weight::series(w.P, sign, w.c0, delta_series(w, order));
                       RecognitionOptions ro;
                       ro.candidates = weight_support(w);
                       ro.multiplicity_degree = 2;
                       const Quasipolynomial f = recover_f(ws, order, ro);
                       if (!(f == weight_f(w)) || !(exponent_decompose(f) == exponent_decompose(w)))
                         return "phi = " + w.phi->str() + ", c0 = " + w.c0.str() + " recovered F = " + f.str();
                       return std::nullopt;
                     });
}

BatteryResult battery_kernel_invariance(std::uint64_t seed, std::size_t trials, unsigned order, unsigned dmax) {
  RandomSource rng(seed);
  const std::vector<SymmetricP> ps{symmetric_or_throw(Polynomial{0, -1, 1}),
                                   symmetric_or_throw(Polynomial{Scalar(-1, 4), 0, 1})};
  return run_battery("weight-analysis", "Gamma kernel perturbations keep verdict and exponents", trials,
                     [&](std::size_t) -> Check {
                       const SymmetricP& P = rng.pick(ps);
                       const Sign sign = random_sign(rng);
                       const Weight w = random_closed_weight(rng, P, sign, 2, 1);
                       const GammaSolution gs = gamma_solve(delta_series(w, order), P);
                       if (gs.kernel.empty()) return "p = " + P.p.str() + " has an empty Gamma kernel";
                       const Polynomial fixed = fixed_shift_factor(P);
                       auto roots = [&](const QuasifiniteReport& r) {
                         return r.b ? rational_roots(*r.b * fixed).roots : std::vector<std::pair<Scalar, unsigned>>{};
                       };
                       const QuasifiniteReport base = quasifinite_from_gamma(gs.gamma, P, sign, w.c0, dmax);
                       for (const Quasipolynomial& kappa : gs.kernel) {
                         const Scalar lambda = rng.nonzero_scalar();
                         const Series g = gs.gamma + kappa.to_series(gs.gamma.order()) * lambda;
                         const QuasifiniteReport r = quasifinite_from_gamma(g, P, sign, w.c0, dmax);
                         if (r.quasifinite != base.quasifinite || r.b != base.b || roots(r) != roots(base))
                           return "p = " + P.p.str() + ", phi = " + w.phi->str() + ", kernel " + kappa.str() +
                                  " scaled by " + lambda.str() + " changes the verdict";
                       }
                       return std::nullopt;
                     });
}

BatteryResult battery_label_consistency(std::uint64_t seed, std::size_t trials, unsigned order) {
  RandomSource rng(seed);
  const std::vector<Scalar> generic{Scalar(1, 3), Scalar(1, 4), Scalar(2, 5), Scalar(7, 3), Scalar(-2, 3), Scalar(5, 4)};
  return run_battery("weight-analysis", "labels, Gamma and realize agree", trials, [&](std::size_t) -> Check {
    MatrixLabels ml;
    ml.tag = static_cast<AlgebraTag>(rng.integer(0, 4));
    Sign sign = random_sign(rng);
    Scalar s;
    switch (ml.tag) {
      case AlgebraTag::Gl: s = rng.pick(generic); break;
      case AlgebraTag::C: sign = Sign::Plus; s = Scalar(1, 2); break;
      case AlgebraTag::D: sign = Sign::Minus; s = Scalar(1, 2); break;
      case AlgebraTag::LPlus: sign = Sign::Plus; s = 0; break;
      case AlgebraTag::LMinus: sign = Sign::Minus; s = 0; break;
    }
    const bool cd = ml.tag == AlgebraTag::C || ml.tag == AlgebraTag::D;
    while (ml.h.empty()) {
      for (long k = 0; k <= 2; ++k) {
        if (!rng.coin()) continue;
        for (unsigned i = 0; i <= 2; ++i)
          if (!(cd && k == 0 && i % 2 == 1) && rng.coin()) ml.h[{k, i}] = rng.nonzero_scalar();
      }
    }
    ml.finalize();
    const std::string where = tag_name(ml.tag) + " labels at s = " + s.str() + ": " + to_json(ml).dump();
    const Series g1 = gamma_from_labels(ml, s, order);
    const Weight w = pullback(ml, s, sign);
    const Series g2 = gamma_solve(delta_series(w, order), w.P).gamma;
    const unsigned common = std::min(g1.order(), g2.order());
    if (!(g1.truncate(common) == g2.truncate(common))) return where + ": Gamma from labels differs from pullback";
    const Realization r = realize(w, order);
    const auto [normal, rep] = nu_normalize(ml, s);
    if (r.factors.size() != 1) return where + ": realize returned " + std::to_string(r.factors.size()) + " factors";
    if (!(r.factors[0].labels == normal) || !(r.factors[0].s_rep == rep))
      return where + ": realize gives " + to_json(r).dump();
    if (!(w.c0 == (ml.charges.empty() ? Scalar(0) : ml.charges[0]))) return where + ": c0 differs from the charge";
    return std::nullopt;
  });
}

BatteryResult battery_charge_sum(std::uint64_t seed, std::size_t trials, unsigned order) {
  RandomSource rng(seed);
  return run_battery("weight-analysis", "factor charges sum to c0", trials, [&](std::size_t) -> Check {
    const Weight w = random_closed_weight(rng, p_x(), random_sign(rng), 3);
    const Realization r = realize(w, order);
    Scalar sum;
    for (const auto& f : r.factors) sum += f.labels.charges.empty() ? Scalar(0) : f.labels.charges[0];
    if (!(sum == w.c0)) return "charges sum to " + sum.str() + " for c0 = " + w.c0.str();
    return std::nullopt;
  });
}

BatteryResult battery_char_poly(unsigned k_bound, unsigned dmax, unsigned order) {
  return run_battery("weight-analysis", "characteristic polynomial of the worked example", 1, [&](std::size_t) -> Check {
    const Weight w = Weight::closed(p_x(), Sign::Plus, 0, Quasipolynomial::cosh(1) - Quasipolynomial::constant(1));
    const CharPolyResult cp = char_poly_search(w, k_bound, dmax, order);
    const Polynomial expected{0, 0, -1, 0, 1};
    if (!(cp.b_bracket_route == expected) || !(cp.b_series_route == expected) || !(cp.b == expected))
      return "routes give " + cp.b_bracket_route.str('y') + " and " + cp.b_series_route.str('y');
    const Polynomial q = cp.b * w.P.p.shift(Scalar(1, 2)) * w.P.p.shift(Scalar(-1, 2));
    const Quasipolynomial f = weight_f(w);
    for (const auto& [alpha, m] : f.terms())
      if (!q.eval(alpha).is_zero()) return "exponent " + alpha.str() + " is not a root of " + q.str();
    return std::nullopt;
  });
}

BatteryResult battery_serialization(std::uint64_t seed, std::size_t trials) {
  RandomSource rng(seed);
  return run_battery("cli", "serialization round-trip", trials, [&](std::size_t) -> Check {
    auto again = [](const Json& j) { return Json::parse(j.dump()); };
    const DiffOp d = rng.diffop(4, 4, 3) + DiffOp::central_element(gaussian(rng));
    if (!(diffop_from_json(again(to_json(d)), "$") == d)) return "DiffOp " + d.str();
    const Sign sign = random_sign(rng);
    const Weight w = random_closed_weight(rng, p_x(), sign, 3);
    const Quasipolynomial& phi = *w.phi;
    if (!(quasipolynomial_from_json(again(to_json(phi)), "$") == phi)) return "Quasipolynomial " + phi.str();
    const Series delta = delta_series(w, 12);
    if (!(series_from_json(again(to_json(delta)), "$") == delta)) return "Series " + delta.str();
    for (const Weight& v : {w, Weight::series(w.P, sign, w.c0, delta)}) {
      const std::string text = to_json(v).dump();
      if (to_json(weight_from_json(Json::parse(text), "$")).dump() != text) return "Weight " + text;
    }
    const unsigned m = static_cast<unsigned>(rng.integer(0, 2));
    BandedMatrix a = phi_map(rng.dx_element(sign, 2, 3, 2), rng.scalar(), m, sign);
    a += BandedMatrix::unit(rng.integer(-3, 3), rng.integer(-3, 3), rng.unit(m));
    a += BandedMatrix::central_element(rng.trunc_poly(m));
    if (!(banded_from_json(again(to_json(a)), "$") == a)) return "BandedMatrix " + a.str();
    const Realization r = realize(w);
    const std::string text = to_json(r).dump();
    if (to_json(realization_from_json(Json::parse(text), "$")).dump() != text) return "Realization " + text;
    const SymmetricP P = symmetric_or_throw(rng.pick(standard_ps()));
    if (to_json(symmetric_p_from_json(again(to_json(P)), "$")).dump() != to_json(P).dump())
      return "SymmetricP " + P.p.str();
    return std::nullopt;
  });
}

const std::vector<std::string>& module_names() {
  static const std::vector<std::string> names{"exact-core",         "diffop-algebra",  "involutions",
                                              "matrix-realization", "weight-analysis", "cli"};
  return names;
}

std::vector<BatteryResult> run_verify(const VerifyOptions& o) {
  std::set<std::string> selected;
  for (const auto& name : o.scope) {
    if (name == "all") {
      selected.insert(module_names().begin(), module_names().end());
    } else if (std::find(module_names().begin(), module_names().end(), name) != module_names().end()) {
      selected.insert(name);
    } else {
      throw SchemaError("scope", "unknown module '" + name + "'");
    }
  }
  const std::uint64_t seed = o.seed;
  std::vector<std::function<BatteryResult()>> jobs;
  auto add = [&](const std::string& module, std::function<BatteryResult()> job) {
    if (selected.count(module)) jobs.push_back(std::move(job));
  };
  const std::vector<Polynomial> ps = standard_ps();
  add("exact-core", [=] { return battery_field_axioms(seed, 200); });
  add("exact-core", [=] { return battery_series_division(seed, 50, o.order); });
  add("exact-core", [=] { return battery_annihilator(seed, 50, o.order); });
  add("exact-core", [=] { return battery_hermite(seed, 100); });
  add("diffop-algebra", [=] { return battery_jacobi(seed, 200); });
  add("diffop-algebra", [=] { return battery_degree_drop(seed, 500); });
  add("involutions", [=] { return battery_anti_involution(seed, ps, 200, o.sigma); });
  add("involutions", [=] { return battery_symmetry_rejection({Polynomial{0, 0, 1, 1}}); });
  add("involutions", [=] { return battery_antifixed_coherence(seed, ps, 50); });
  add("involutions", [=] { return battery_delta_parity(ps); });
  add("matrix-realization", [=] { return battery_phi_homomorphism(seed, {Scalar(1, 4), 3, Scalar(7, 3)}, 2, 100); });
  add("matrix-realization", [=] { return battery_central_lift(seed, 3, 2, 100, o.order); });
  add("matrix-realization", [=] { return battery_central_worked(seed, 5, o.order); });
  add("matrix-realization", [=] { return battery_window_involutions(2, o.half_width); });
  add("matrix-realization", [=] { return battery_classical_images(seed, 50, o.half_width); });
  add("weight-analysis", [=] { return battery_round_trip(seed, 50, o.order); });
  add("weight-analysis", [=] { return battery_kernel_invariance(seed, 20, o.order, o.dmax); });
  add("weight-analysis", [=] { return battery_label_consistency(seed, 50, o.order); });
  add("weight-analysis", [=] { return battery_charge_sum(seed, 30, o.order); });
  add("weight-analysis", [=] { return battery_char_poly(o.k_bound, o.dmax, o.order); });
  add("cli", [=] { return battery_serialization(seed, 30); });

  std::vector<std::future<BatteryResult>> running;
  for (auto& job : jobs) running.push_back(std::async(std::launch::async, job));
  std::vector<BatteryResult> out;
  for (auto& f : running) out.push_back(f.get());
  return out;
}

}  // namespace qf
