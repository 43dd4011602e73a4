#include <algorithm>

#include "doctest.h"
#include "qf/error.hpp"
#include "qf/labels.hpp"
#include "qf/phi.hpp"
#include "qf/verify.hpp"
#include "qf/weight.hpp"

using namespace qf;

namespace {

const SymmetricP& px() {
  static const SymmetricP P = *validate_symmetry(Polynomial::x());
  return P;
}

const SymmetricP& pquad() {
  static const SymmetricP P = *validate_symmetry(Polynomial{0, -1, 1});
  return P;
}

Quasipolynomial cosh_minus_one() { return Quasipolynomial::cosh(1) - Quasipolynomial::constant(1); }

Weight worked(Sign sign, const Scalar& c0 = 0) { return Weight::closed(px(), sign, c0, cosh_minus_one()); }

Series cosh_series(const Scalar& b, unsigned n) { return Quasipolynomial::cosh(b).to_series(n); }

}  // namespace

TEST_CASE("weight validation") {
  CHECK_THROWS_AS(Weight::closed(px(), Sign::Plus, 0, Quasipolynomial::sinh(1)), DomainError);
  CHECK_THROWS_AS(Weight::closed(px(), Sign::Plus, 0, Quasipolynomial::cosh(1)), DomainError);
  std::vector<Scalar> c(11);
  c[1] = 1;
  CHECK_THROWS_AS(Weight::series(px(), Sign::Plus, 0, Series(10, c)), DomainError);
  CHECK_NOTHROW(Weight::series(px(), Sign::Plus, 0, Series::cosh(1, 10)));
}

TEST_CASE("Delta of the worked example") {
  const Series d = delta_series(worked(Sign::Plus), 24);
  CHECK(d.coeff(0) == Scalar(1, 2));
  CHECK(d.derivative_at_zero(2) == Scalar(1, 8));
  CHECK(d == cosh_series(Scalar(1, 2), d.order()) * Scalar(1, 2));
  CHECK(delta_series(Weight::closed(px(), Sign::Plus, 0, Quasipolynomial()), 24).is_zero());
  CHECK(delta_series(Weight::closed(pquad(), Sign::Plus, 0, cosh_minus_one()), 24).is_zero());
}

TEST_CASE("Gamma solve") {
  const Series delta = cosh_series(Scalar(1, 2), 20) * Scalar(1, 2);
  const GammaSolution g = gamma_solve(delta, px());
  CHECK(g.gamma == Series::sinh(Scalar(1, 2), g.gamma.order()));
  CHECK(g.kernel.empty());
  CHECK(gamma_solve(Series(20), px()).gamma.is_zero());
  const GammaSolution k = gamma_solve(Series(20), pquad());
  CHECK(k.gamma.is_zero());
  REQUIRE(k.kernel.size() == 1);
  CHECK(apply_p_shift(pquad().p, Scalar(1, 2), k.kernel[0].to_series(20)).is_zero());
  CHECK(k.kernel[0].is_odd());
  // F from Gamma closes the loop on the worked example.
  const Series f = f_from_gamma(g.gamma, px(), 0);
  CHECK(f == cosh_minus_one().to_series(f.order()));
}

TEST_CASE("quasifiniteness") {
  for (const Scalar& c0 : {Scalar(0), Scalar(3, 2)}) CHECK(quasifinite_check(worked(Sign::Plus, c0), 24, 8).quasifinite);
  CHECK(quasifinite_check(Weight::closed(px(), Sign::Minus, 0, Quasipolynomial()), 24, 8).quasifinite);
  // Gamma = sum n! x^{2n+1} is not a quasipolynomial
  std::vector<Scalar> g(25);
  for (unsigned n = 0; 2 * n + 1 <= 24; ++n) g[2 * n + 1] = factorial(n);
  const Series delta = Series(24, g).derivative();
  const QuasifiniteReport r = quasifinite_check(Weight::series(px(), Sign::Plus, 0, delta), 24, 8);
  CHECK_FALSE(r.quasifinite);
  CHECK_FALSE(r.b.has_value());
  CHECK_FALSE(r.caveat.empty());
  CHECK(battery_kernel_invariance(4, 5, 24, 8).ok());
}

TEST_CASE("exponent data") {
  const ExponentData e = exponent_decompose(worked(Sign::Plus, 1));
  CHECK(e.odd_type.empty());
  REQUIRE(e.even_type.size() == 3);
  CHECK(e.even_type.at(1) == Polynomial{1});
  CHECK(e.even_type.at(Scalar(1, 2)) == Polynomial{1});
  CHECK(e.even_type.at(0) == Polynomial{-1});
  Scalar total;
  for (const auto& [x, q] : e.even_type) total += q.eval(0);
  CHECK(total == Scalar(1));
  const Quasipolynomial xsinh = Quasipolynomial::term(0, Polynomial::x()) * Quasipolynomial::sinh(Scalar(1, 2));
  const ExponentData o = exponent_decompose(Weight::closed(px(), Sign::Plus, 0, xsinh));
  CHECK(o.even_type.empty());
  REQUIRE(o.odd_type.size() == 1);
  CHECK(o.odd_type.at(Scalar(1, 2)) == Polynomial::x());
  CHECK(exponent_decompose(Weight::closed(px(), Sign::Plus, 0, Quasipolynomial())).even_type.empty());
  CHECK(o.to_quasipolynomial() == xsinh);
}

TEST_CASE("eta decomposition") {
  const EtaData a = eta_decompose(Quasipolynomial::cosh(1));
  CHECK(a.get(Scalar(-1, 2), 0) == Scalar(1));
  CHECK(a.coefficients.size() == 1);
  const EtaData b = eta_decompose(Quasipolynomial::term(0, Polynomial::x()) * Quasipolynomial::sinh(1));
  CHECK(b.get(Scalar(-1, 2), 1) == Scalar(-1));
  CHECK(eta_decompose(Quasipolynomial()).coefficients.empty());
  for (const auto& [s, row] : eta_decompose(weight_f(worked(Sign::Minus, 2))).coefficients) CHECK(is_canonical_s(s));
  // Oracle: reassembling from eta functions returns F.
  const Quasipolynomial f = weight_f(worked(Sign::Plus, Scalar(2, 3)));
  CHECK(eta_decompose(f).to_quasipolynomial() == f);
  CHECK(is_canonical_s(Scalar(1, 4)));
  CHECK_FALSE(is_canonical_s(Scalar(3, 4)));
  CHECK(is_canonical_s(Scalar(-3)));
  CHECK_FALSE(is_canonical_s(Scalar(1)));
  CHECK(is_canonical_s(Scalar(1, 2)));
  CHECK_FALSE(is_canonical_s(Scalar(3, 2)));
}

TEST_CASE("exponent classes") {
  EtaData ed;
  ed.coefficients[Scalar(-1, 2)][0] = 1;
  ed.coefficients[Scalar(1, 2)][0] = 1;
  auto cls = partition_classes(ed);
  REQUIRE(cls.size() == 1);
  CHECK(cls[0].rep == Scalar(1, 2));
  CHECK(cls[0].ks == std::vector<long>{0, 1});
  ed.coefficients.clear();
  ed.coefficients[Scalar(0)][0] = 1;
  ed.coefficients[Scalar(-3)][0] = 1;
  cls = partition_classes(ed);
  REQUIRE(cls.size() == 1);
  CHECK(cls[0].rep == Scalar(0));
  CHECK(cls[0].ks == std::vector<long>{0, 3});
  ed.coefficients.clear();
  ed.coefficients[Scalar(1, 4)][0] = 1;
  cls = partition_classes(ed);
  REQUIRE(cls.size() == 1);
  CHECK(cls[0].rep == Scalar(1, 4));
}

TEST_CASE("matrix labels") {
  EtaData ed;
  ed.coefficients[Scalar(1, 4)][0] = 1;
  const MatrixLabels gl = matrix_labels_build({Scalar(1, 4), {0}}, ed, Sign::Plus);
  CHECK(gl.tag == AlgebraTag::Gl);
  CHECK(gl.get_h(0, 0) == Scalar(1));
  CHECK(gl.charges == std::vector<Scalar>{1});
  CHECK(matrix_labels_build({Scalar(1, 4), {}}, EtaData{}, Sign::Plus).h.empty());
  // Worked example, sign -: a single d factor.
  const Realization r = realize(worked(Sign::Minus));
  REQUIRE(r.factors.size() == 1);
  const MatrixLabels& d = r.factors[0].labels;
  CHECK(d.tag == AlgebraTag::D);
  CHECK(d.m == 0);
  CHECK(d.get_h(0, 0) == Scalar(-1));
  CHECK(d.get_h(1, 0) == Scalar(1));
  CHECK(d.charges == std::vector<Scalar>{0});
  CHECK_FALSE(d.conflicts.empty());
}

TEST_CASE("Gamma from labels") {
  MatrixLabels zero;
  zero.finalize();
  CHECK(gamma_from_labels(zero, Scalar(1, 3), 20).is_zero());
  const Scalar s(1, 3);
  MatrixLabels gl;
  gl.h[{0, 0}] = 1;
  gl.finalize();
  const Series expected =
      series_divide((cosh_series(s - Scalar(1, 2), 21) - cosh_series(Scalar(1, 2), 21)) * Scalar(1, 2),
                    Series::sinh(Scalar(1, 2), 21));
  CHECK(gamma_from_labels(gl, s, 20) == expected);
  MatrixLabels d;
  d.tag = AlgebraTag::D;
  d.h[{1, 0}] = 1;
  d.finalize();
  CHECK(d.charges == std::vector<Scalar>{1});
  const Series expected_d = series_divide(cosh_series(1, 21) - cosh_series(Scalar(1, 2), 21), Series::two_sinh_half(21));
  CHECK(gamma_from_labels(d, Scalar(1, 2), 20) == expected_d);
  MatrixLabels bad;
  bad.h[{0, 0}] = 1;
  bad.finalize();
  bad.charges = {0};
  CHECK_THROWS_AS(gamma_from_labels(bad, s, 20), ConsistencyError);
}

TEST_CASE("realization") {
  CHECK(realize(Weight::closed(px(), Sign::Plus, 0, Quasipolynomial())).factors.empty());
  const Quasipolynomial phi = Quasipolynomial::cosh(Scalar(1, 4)) - Quasipolynomial::constant(1);
  const Realization r = realize(Weight::closed(px(), Sign::Plus, 0, phi));
  REQUIRE(r.factors.size() == 2);
  std::vector<AlgebraTag> tags{r.factors[0].labels.tag, r.factors[1].labels.tag};
  CHECK(std::count(tags.begin(), tags.end(), AlgebraTag::Gl) == 1);
  CHECK(std::count(tags.begin(), tags.end(), AlgebraTag::C) == 1);
  CHECK_THROWS_AS(realize(Weight::closed(pquad(), Sign::Plus, 0, phi)), DomainError);
  CHECK(battery_label_consistency(13, 20, 24).ok());
  CHECK(battery_charge_sum(13, 10, 24).ok());
}

TEST_CASE("round trip through series form") {
  CHECK(battery_round_trip(8, 10, 24).ok());
  RecognitionOptions ro;
  ro.candidates = std::vector<Scalar>{1, Scalar(1, 2), 0};
  const Weight w = worked(Sign::Plus, 3);
  const Weight ws = Weight::series(px(), Sign::Plus, 3, delta_series(w, 24));
  CHECK(recover_f(ws, 24, ro) == weight_f(w));
}

TEST_CASE("characteristic polynomial") {
  const CharPolyResult plus = char_poly_search(worked(Sign::Plus), 6, 8);
  CHECK(plus.b == Polynomial{0, 0, -1, 0, 1});
  const Polynomial shifted = Polynomial{0, 0, -1, 0, 1}.shift(Scalar(-1, 2));
  CHECK(plus.characteristic == shifted * Polynomial::x());
  const CharPolyResult minus = char_poly_search(worked(Sign::Minus), 6, 8);
  CHECK(minus.b == Polynomial{0, -1, 0, 1});
  const CharPolyResult zero = char_poly_search(Weight::closed(px(), Sign::Plus, 0, Quasipolynomial()), 6, 8);
  CHECK(zero.b == Polynomial{1});
  CHECK(zero.characteristic == px().p);
  CHECK(battery_char_poly(6, 8, 24).ok());
}

TEST_CASE("lambda of weight-zero elements") {
  const Weight w = worked(Sign::Plus, 2);
  const Series delta = delta_series(w, 24);
  // D: g = 1, lambda = -Delta(0)
  CHECK(lambda_of(DiffOp::term(0, Polynomial::x()), delta, px(), 2) == Scalar(-1, 2));
  CHECK(lambda_of(DiffOp::central_element(), delta, px(), 2) == Scalar(2));
  CHECK_THROWS_AS(lambda_of(DiffOp::term(1, Polynomial::x()), delta, px(), 2), DomainError);
}
