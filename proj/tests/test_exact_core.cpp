#include "doctest.h"
#include "qf/annihilator.hpp"
#include "qf/error.hpp"
#include "qf/hermite.hpp"
#include "qf/linear_solve.hpp"
#include "qf/quasipolynomial.hpp"
#include "qf/series.hpp"
#include "qf/trunc_poly.hpp"
#include "qf/verify.hpp"

using namespace qf;

namespace {

// Oracle: sum_n c_n x^n with c_n = alpha^n / n!, computed by a running product.
Series exp_series(const Scalar& alpha, unsigned order) {
  std::vector<Scalar> c(order + 1);
  Scalar term = 1;
  for (unsigned n = 0; n <= order; ++n) {
    c[n] = term;
    term = term * alpha / Scalar(static_cast<long>(n) + 1);
  }
  return Series(order, c);
}

}  // namespace

TEST_CASE("scalars are exact and canonical") {
  CHECK(Scalar::parse("3/6") == Scalar(1, 2));
  CHECK(Scalar(3, -6).str() == "-1/2");
  CHECK(Scalar(4, 2).str() == "2");
  const Scalar z = Scalar::parse("1/2+3/4*i");
  CHECK(z.re() == mpq_class(1, 2));
  CHECK(z.im() == mpq_class(3, 4));
  CHECK(Scalar::parse(z.str()) == z);
  CHECK(z * z.conj() == Scalar(13, 16));
  CHECK(Scalar::imag_unit() * Scalar::imag_unit() == Scalar(-1));
  CHECK_THROWS_AS(Scalar(0).inverse(), NonInvertibleError);
  CHECK_THROWS_AS(Scalar::parse("1/0"), SchemaError);
  CHECK_THROWS_AS(Scalar::parse("abc"), SchemaError);
  CHECK(Scalar(5, 2).floor() == 2);
  CHECK(Scalar(-1, 2).is_half_integer());
  CHECK(battery_field_axioms(11, 100).ok());
}

TEST_CASE("polynomials keep no trailing zeros") {
  const Polynomial zero{0, 0};
  CHECK(zero.is_zero());
  CHECK(zero.coefficients().empty());
  CHECK_FALSE(zero.degree().has_value());
  const Polynomial p{1, 2, 0};
  CHECK(p.size() == 2);
  CHECK(*p.degree() == 1);
  // (x+1)^2 shifted by -1 is x^2
  CHECK(Polynomial{1, 2, 1}.shift(-1) == Polynomial::monomial(2));
  const auto [q, r] = Polynomial{-1, 0, 0, 1}.divmod(Polynomial{-1, 1});
  CHECK(q == Polynomial{1, 1, 1});
  CHECK(r.is_zero());
  CHECK(Polynomial::power_of_linear(2, 2) == Polynomial{4, -4, 1});
  const RationalRoots roots = rational_roots(Polynomial{0, -1, 0, 1} * Polynomial{1, 0, 1});
  CHECK(roots.roots.size() == 3);
  CHECK(roots.residual == Polynomial{1, 0, 1});
}

TEST_CASE("truncated polynomial ring") {
  const TruncPoly a(2, {1, -1, 0});
  const TruncPoly inv = rm_invert(a);
  CHECK(inv == TruncPoly(2, {1, 1, 1}));
  CHECK(inv * a == TruncPoly::constant(2, 1));
  CHECK(rm_invert(TruncPoly::constant(0, 2)) == TruncPoly::constant(0, Scalar(1, 2)));
  CHECK_THROWS_AS(rm_invert(TruncPoly::u(2)), NonInvertibleError);
  CHECK(TruncPoly::u(1).pow(2).is_zero());
}

TEST_CASE("series division tracks the valid order") {
  const unsigned n = 16;
  const Series f = Series::cosh(1, n) - Series::from_polynomial(Polynomial{1}, n);
  const Series q = series_divide(f, Series::two_sinh_half(n));
  CHECK(q.order() == n - 1);
  CHECK(q == Series::sinh(Scalar(1, 2), n - 1));
  CHECK(series_divide(Series(n), Series::two_sinh_half(n)).is_zero());
  CHECK_THROWS_AS(series_divide(Series::from_polynomial(Polynomial{1}, n), Series::two_sinh_half(n)), MathError);
  CHECK_THROWS_AS(f.coeff(n + 1), OrderError);
  CHECK(battery_series_division(5, 20, 12).ok());
}

TEST_CASE("quasipolynomial series against explicit coefficients") {
  const unsigned n = 10;
  CHECK(Quasipolynomial::constant(1).to_series(n) == Series::from_polynomial(Polynomial{1}, n));
  CHECK(Quasipolynomial::exp(1).to_series(n) == exp_series(1, n));
  const Series s = Quasipolynomial::term(2, Polynomial::x()).to_series(n);
  CHECK(s.coeff(0) == Scalar(0));
  for (unsigned k = 1; k <= n; ++k) CHECK(s.coeff(k) == Scalar(2).pow(k - 1) / factorial(k - 1));
}

TEST_CASE("quasipolynomial parity from term data") {
  CHECK(Quasipolynomial::cosh(3).is_even());
  CHECK(Quasipolynomial::sinh(3).is_odd());
  const Quasipolynomial xsinh = Quasipolynomial::term(0, Polynomial::x()) * Quasipolynomial::sinh(1);
  CHECK(xsinh.is_even());
  CHECK_FALSE(Quasipolynomial::exp(1).is_even());
  CHECK(xsinh.reflect() == xsinh);
  for (const auto& [alpha, q] : xsinh.terms()) CHECK_FALSE(q.is_zero());
}

TEST_CASE("annihilator search") {
  const Series c = Series::cosh(1, 12);
  AnnihilatorOptions even{4, ParityClass::Even, 4};
  const auto b = annihilator_search(c, even);
  REQUIRE(b.has_value());
  CHECK(*b == Polynomial{-1, 0, 1});
  // minimality: no constant annihilates cosh x
  CHECK_FALSE(apply_operator(Polynomial{1}, c).is_zero());
  CHECK(apply_operator(*b, c).is_zero());
  CHECK(*annihilator_search(Series(12), even) == Polynomial{1});
  std::vector<Scalar> ones(13, Scalar(1));
  CHECK_FALSE(annihilator_search(Series(12, ones), {4, ParityClass::Any, 4}).has_value());
  CHECK_THROWS_AS(annihilator_search(c, {4, ParityClass::Even, 8}), OrderError);
  CHECK(battery_annihilator(3, 20, 24).ok());
}

TEST_CASE("quasipolynomial recognition") {
  const Quasipolynomial q = Quasipolynomial::term(2, Polynomial{0, 1}) + Quasipolynomial::constant(3);
  RecognitionOptions ro;
  ro.annihilator = {6, ParityClass::Any, 4};
  CHECK(recognize_quasipolynomial(q.to_series(20), ro) == q);
  ro.candidates = std::vector<Scalar>{0, 2};
  CHECK(recognize_quasipolynomial(q.to_series(20), ro) == q);
  ro.candidates = std::vector<Scalar>{0};
  CHECK_THROWS_AS(recognize_quasipolynomial(q.to_series(20), ro), ConsistencyError);
}

TEST_CASE("apply_p_shift") {
  const unsigned n = 12;
  CHECK(apply_p_shift(Polynomial::x(), 0, Series::from_polynomial(Polynomial::monomial(2), n)) ==
        Series::from_polynomial(Polynomial{0, 2}, n - 1));
  CHECK(apply_p_shift(Polynomial{0, -1, 1}, Scalar(1, 2), Series::sinh(Scalar(1, 2), n)).is_zero());
  const Series f = Series::cosh(3, n);
  CHECK(apply_p_shift(Polynomial{1}, 5, f) == f);
  CHECK(Quasipolynomial::sinh(Scalar(1, 2)).apply_p_shift(Polynomial{0, -1, 1}, Scalar(1, 2)).is_zero());
}

TEST_CASE("linear solve") {
  const LinearSolution s = solve_linear({{1, 1}, {1, -1}, {2, 0}}, {3, 1, 4}, 2);
  CHECK(s.consistent);
  CHECK(s.rank == 2);
  CHECK(s.particular == std::vector<Scalar>{2, 1});
  CHECK_FALSE(solve_linear({{1, 1}, {1, 1}}, {1, 2}, 2).consistent);
  CHECK(solve_linear({{1, 1}}, {0}, 2).nullspace.size() == 1);
}

TEST_CASE("Hermite interpolation") {
  // x^3: value and slope at 0 and 1
  const Polynomial h = hermite_interpolate({{0, {0, 0}}, {1, {1, 3}}});
  CHECK(h == Polynomial::monomial(3));
  CHECK(battery_hermite(9, 50).ok());
}
