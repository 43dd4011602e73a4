#include "doctest.h"
#include "qf/error.hpp"
#include "qf/involution.hpp"
#include "qf/random.hpp"
#include "qf/verify.hpp"

using namespace qf;

namespace {

const SymmetricP& px() {
  static const SymmetricP P = *validate_symmetry(Polynomial::x());
  return P;
}

const DiffOp tD = DiffOp::term(1, Polynomial::x());

// Oracle: p(x) - eps p(-x + c) evaluated at several points.
bool symmetric_at_points(const SymmetricP& P) {
  for (long x = -3; x <= 3; ++x)
    if (!(P.p.eval(Scalar(x)) == P.epsilon * P.p.eval(P.c - Scalar(x)))) return false;
  return true;
}

}  // namespace

TEST_CASE("symmetry validation") {
  const auto Px = validate_symmetry(Polynomial::x());
  REQUIRE(Px);
  CHECK(Px->epsilon == Scalar(-1));
  CHECK(Px->c == Scalar(0));
  CHECK_FALSE(validate_symmetry(Polynomial{0, 0, 1, 1}));
  const auto P1 = validate_symmetry(Polynomial{1});
  REQUIRE(P1);
  CHECK(P1->free_c);
  CHECK(P1->epsilon == Scalar(1));
  const auto P2 = validate_symmetry(Polynomial{0, -1, 1});
  REQUIRE(P2);
  CHECK(P2->c == Scalar(1));
  for (const Polynomial& p : standard_ps()) CHECK(symmetric_at_points(*validate_symmetry(p)));
  CHECK(symmetric_at_points(*validate_symmetry(Polynomial{2, 3, 1})));
  CHECK_THROWS_AS(validate_symmetry(Polynomial{}), DomainError);
}

TEST_CASE("sigma on p = x") {
  CHECK(apply_sigma(tD, Sign::Plus, px()) == -tD);
  CHECK(apply_sigma(tD, Sign::Minus, px()) == tD);
  const DiffOp D3 = DiffOp::term(0, Polynomial::monomial(3));
  CHECK(apply_sigma(D3, Sign::Plus, px()) == -D3);
  CHECK(apply_sigma(D3, Sign::Minus, px()) == -D3);
  CHECK_THROWS_AS(apply_sigma(DiffOp::term(1, Polynomial{1}), Sign::Plus, px()), DomainError);
}

TEST_CASE("sigma is an anti-involution") {
  CHECK(battery_anti_involution(31, standard_ps(), 20).ok());
  CHECK(battery_symmetry_rejection({Polynomial{0, 0, 1, 1}, Polynomial{1, 1, 0, 1}}).ok());
}

TEST_CASE("a sign-flipped sigma is caught") {
  const SigmaFn flipped = [](const DiffOp& x, Sign s, const SymmetricP& P) { return -apply_sigma(x, s, P); };
  const BatteryResult r = battery_anti_involution(31, {Polynomial::x()}, 10, flipped);
  CHECK_FALSE(r.ok());
  CHECK(r.counterexample.find("X = ") != std::string::npos);
  CHECK(r.counterexample.find("Y = ") != std::string::npos);
}

TEST_CASE("anti-fixed projection") {
  CHECK(project_antifixed(tD, Sign::Plus, px()) == tD);
  CHECK(project_antifixed(DiffOp::term(0, Polynomial::monomial(2)), Sign::Plus, px()).is_zero());
  CHECK(project_antifixed(DiffOp::term(0, Polynomial::monomial(2)), Sign::Minus, px()).is_zero());
  CHECK(project_antifixed(tD, Sign::Minus, px()).is_zero());
  RandomSource rng(4);
  for (int trial = 0; trial < 50; ++trial) {
    const Sign s = rng.coin() ? Sign::Plus : Sign::Minus;
    const DiffOp a = project_antifixed(rng.multiple_of_p(px(), 3, 4), s, px());
    CHECK(apply_sigma(a, s, px()) == -a);
  }
}

TEST_CASE("component bases") {
  const DiffOp D = DiffOp::term(0, Polynomial::x());
  auto basis = component_basis(0, 5, Sign::Plus, px());
  REQUIRE(basis.size() == 3);
  CHECK(basis[0] == D);
  CHECK(basis[1] == DiffOp::term(0, Polynomial::monomial(3)));
  CHECK(basis[2] == DiffOp::term(0, Polynomial::monomial(5)));
  basis = component_basis(1, 3, Sign::Minus, px());
  REQUIRE(basis.size() == 2);
  CHECK(basis[0] == DiffOp::term(1, Polynomial{Scalar(1, 2), 1} * Polynomial::x()));
  CHECK(basis[1] == DiffOp::term(1, Polynomial::power_of_linear(Scalar(-1, 2), 3) * Polynomial::x()));
  const SymmetricP P1 = validate_symmetry(Polynomial{1})->with_center(0);
  basis = component_basis(0, 4, Sign::Plus, P1);
  REQUIRE(basis.size() == 2);
  CHECK(basis[0] == D);
  CHECK(basis[1] == DiffOp::term(0, Polynomial::monomial(3)));
  CHECK(component_parity(0, Sign::Plus, P1) == ParityClass::Odd);
}

TEST_CASE("parity classes") {
  CHECK(overline(3) == ParityClass::Even);
  CHECK(overline(0) == ParityClass::Odd);
  CHECK(overline(-2) == ParityClass::Odd);
  CHECK(delta_parity(Sign::Plus, px()) == ParityClass::Even);
  CHECK(delta_parity(Sign::Minus, px()) == ParityClass::Odd);
  CHECK(battery_delta_parity(standard_ps()).ok());
  CHECK(battery_antifixed_coherence(8, standard_ps(), 10).ok());
}

TEST_CASE("centered cofactor") {
  const DiffOp x = DiffOp::term(1, Polynomial{Scalar(1, 2), 1} * Polynomial::x());
  const auto g = centered_cofactor(x, 1, px());
  REQUIRE(g);
  CHECK(*g == Polynomial::x());
  CHECK_FALSE(centered_cofactor(DiffOp::term(1, Polynomial{1}), 1, px()));
}
