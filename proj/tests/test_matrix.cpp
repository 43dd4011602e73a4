#include "doctest.h"
#include "qf/banded_matrix.hpp"
#include "qf/error.hpp"
#include "qf/phi.hpp"
#include "qf/random.hpp"
#include "qf/verify.hpp"
#include "qf/windowed_matrix.hpp"

using namespace qf;

namespace {

TruncPoly one(unsigned m) { return TruncPoly::constant(m, 1); }

BandedMatrix E(long i, long j, unsigned m = 0) { return BandedMatrix::unit(i, j, one(m)); }

// Oracle: tr([J, A] B) summed entrywise over a finite support.
TruncPoly trace_oracle(const BandedMatrix& a, const BandedMatrix& b, long lo, long hi) {
  TruncPoly total(a.order());
  auto J = [](long i) { return i <= 0 ? 1 : 0; };
  for (long i = lo; i <= hi; ++i)
    for (long j = lo; j <= hi; ++j) {
      const int d = J(i) - J(j);
      if (d != 0) total += a.entry(i, j) * b.entry(j, i) * Scalar(d);
    }
  return total;
}

WindowedMatrix unit_window(unsigned m, unsigned w, long i, long j, const TruncPoly& f) {
  WindowedMatrix a(m, w);
  a.at(i, j) = f;
  return a;
}

}  // namespace

TEST_CASE("central bracket on matrix units") {
  const BandedMatrix r = sb_bracket_hat(E(0, 1), E(1, 0));
  CHECK(r.noncentral() == E(0, 0) - E(1, 1));
  CHECK(r.central() == one(0));
  const TruncPoly u = TruncPoly::u(2);
  const BandedMatrix r2 = sb_bracket_hat(BandedMatrix::unit(0, 1, u), BandedMatrix::unit(1, 0, u));
  CHECK(r2.central() == u * u);
  const BandedMatrix d1 = BandedMatrix::diagonal(0, IndexPoly::linear(1, 1, one(1)));
  const BandedMatrix d2 = BandedMatrix::diagonal(0, IndexPoly::linear(1, 3, TruncPoly::u(1)));
  CHECK(sb_bracket_hat(d1, d2).is_zero());
  CHECK(cocycle_C(E(0, 1), E(1, 0)) == one(0));
  CHECK(cocycle_C(d1, d2).is_zero());
}

TEST_CASE("cocycle agrees with the explicit trace") {
  RandomSource rng(2);
  for (int trial = 0; trial < 40; ++trial) {
    BandedMatrix a(1), b(1);
    for (int n = 0; n < 4; ++n) {
      a += BandedMatrix::unit(rng.integer(-3, 3), rng.integer(-3, 3), rng.trunc_poly(1));
      b += BandedMatrix::unit(rng.integer(-3, 3), rng.integer(-3, 3), rng.trunc_poly(1));
    }
    CHECK(cocycle_C(a, b) == trace_oracle(a, b, -3, 3));
  }
  // Diagonal plus overlay: the overlay pairs against the band.
  const BandedMatrix band = BandedMatrix::diagonal(1, IndexPoly::linear(0, -1, TruncPoly::constant(0, 2)));
  const BandedMatrix spot = E(1, 0) * TruncPoly::constant(0, 3);
  CHECK(cocycle_C(band, spot) == trace_oracle(band, spot, -3, 3));
}

TEST_CASE("banded product agrees with windowed product away from the edges") {
  RandomSource rng(6);
  for (int trial = 0; trial < 20; ++trial) {
    const unsigned m = static_cast<unsigned>(rng.integer(0, 2));
    const Sign sign = rng.coin() ? Sign::Plus : Sign::Minus;
    const BandedMatrix a = phi_map(rng.dx_element(sign, 2, 3, 2), rng.scalar(), m, sign);
    const BandedMatrix b = phi_map(rng.dx_element(sign, 2, 3, 2), rng.scalar(), m, sign);
    const WindowedMatrix full = window(a * b, 6), partial = window(a, 6) * window(b, 6);
    CHECK(full.trimmed(3) == partial.trimmed(3));
  }
}

TEST_CASE("nu shift") {
  CHECK(nu_shift(E(0, 0), 1) == E(1, 1));
  const BandedMatrix a = phi_map(DiffOp::term(1, Polynomial::x()), Scalar(1, 3), 1, Sign::Plus);
  CHECK(nu_shift(a, 0) == a);
  CHECK(nu_shift(BandedMatrix::unit(-1, 2, TruncPoly::u(1)), 1) == BandedMatrix::unit(0, 3, TruncPoly::u(1)));
  // Shifting a diagonal moves P(j) to P(j - r).
  CHECK(nu_shift(a, 2).entry(3, 4) == a.entry(1, 2));
}

TEST_CASE("T conjugation") {
  const WindowedMatrix e00 = unit_window(1, 3, 0, 0, TruncPoly::u(1));
  CHECK(t_conjugate(e00, TVariant::Half, TDirection::Forward) == e00);
  CHECK(t_conjugate(unit_window(1, 3, 0, 1, one(1)), TVariant::Half, TDirection::Forward) ==
        unit_window(1, 3, 0, 1, TruncPoly(1, {Scalar(-1, 2), 1})));
  CHECK(t_conjugate(unit_window(1, 3, 1, 0, one(1)), TVariant::Half, TDirection::Forward) ==
        unit_window(1, 3, 1, 0, TruncPoly(1, {-2, -4})));
  RandomSource rng(3);
  for (TVariant v : {TVariant::Half, TVariant::Integer}) {
    WindowedMatrix a(2, 3);
    for (long i = -3; i <= 4; ++i)
      for (long j = -3; j <= 4; ++j) a.at(i, j) = rng.trunc_poly(2);
    CHECK(t_conjugate(t_conjugate(a, v, TDirection::Forward), v, TDirection::Inverse) == a);
  }
}

TEST_CASE("window involutions") {
  const TruncPoly u = TruncPoly::u(1);
  CHECK(involution_apply(unit_window(1, 2, 0, 1, u), WindowInvolution::RhoPlus) == unit_window(1, 2, 0, 1, u));
  CHECK(involution_apply(unit_window(0, 2, 0, 0, one(0)), WindowInvolution::RhoMinus) ==
        unit_window(0, 2, 1, 1, one(0)));
  for (long i = -1; i <= 2; ++i)
    for (long j = -1; j <= 2; ++j)
      for (int sign : {1, -1}) {
        const Scalar factor = Scalar(sign).pow(static_cast<unsigned>(i + j + 2)) * (Scalar(1, 2) - Scalar(i)) /
                              (Scalar(1, 2) - Scalar(j));
        const auto which = sign == 1 ? WindowInvolution::WPlus : WindowInvolution::WMinus;
        CHECK(involution_apply(unit_window(0, 2, i, j, one(0)), which) ==
              unit_window(0, 2, 1 - j, 1 - i, TruncPoly::constant(0, factor)));
      }
  CHECK(battery_window_involutions(2, 3).ok());
}

TEST_CASE("classical membership") {
  const WindowedMatrix e01 = unit_window(0, 3, 0, 1, one(0));
  CHECK(classical_membership(e01, AlgebraTag::C).member);
  const MembershipResult d = classical_membership(e01, AlgebraTag::D);
  CHECK_FALSE(d.member);
  CHECK_FALSE(d.violation.empty());
  WindowedMatrix diag(1, 3);
  diag.at(0, 0) = TruncPoly::u(1);
  diag.at(1, 1) = TruncPoly::u(1);
  CHECK(classical_membership(diag, AlgebraTag::D).member);
  CHECK(classical_membership(diag, AlgebraTag::Gl).member);
  CHECK_THROWS_AS(classical_membership(unit_window(0, 3, -3, 4, one(0)), AlgebraTag::C), DomainError);
  CHECK(parse_tag("L+") == AlgebraTag::LPlus);
  CHECK(tag_name(AlgebraTag::D) == "d");
  CHECK_THROWS_AS(parse_tag("e8"), SchemaError);
}

TEST_CASE("phi_s on small operators") {
  const Scalar s(1, 4);
  const BandedMatrix a = phi_map(DiffOp::term(1, Polynomial::x()), s, 0, Sign::Plus);
  CHECK(a.weights() == std::vector<long>{1});
  for (long j = -3; j <= 3; ++j) CHECK(a.entry(j - 1, j) == TruncPoly::constant(0, s - Scalar(j)));
  const BandedMatrix c = phi_map(DiffOp::term(0, Polynomial::monomial(3)), s, 2, Sign::Plus);
  for (long j = -3; j <= 3; ++j) CHECK(c.entry(j, j) == TruncPoly::shifted_u(2, s - Scalar(j)).pow(3));
  CHECK(phi_map(DiffOp(), s, 1, Sign::Minus).is_zero());
  CHECK_THROWS_AS(phi_map(DiffOp::term(0, Polynomial::monomial(2)), s, 0, Sign::Plus), DomainError);
}

TEST_CASE("lift of D") {
  for (const Scalar& s : {Scalar(1, 3), Scalar(0), Scalar(1), Scalar(5, 2)}) {
    const auto [diag, central] = phi_hat_deg0(0, s, 0, 24);
    CHECK(central == TruncPoly::constant(0, s * (Scalar(1) - s) / Scalar(2)));
    for (long j = -2; j <= 2; ++j) CHECK(diag.entry(j, j) == TruncPoly::constant(0, s - Scalar(j)));
  }
  CHECK_THROWS_AS(phi_hat_deg0(12, Scalar(1, 3), 0, 24), OrderError);
}

TEST_CASE("homomorphism and central lift") {
  CHECK(battery_phi_homomorphism(12, {Scalar(1, 4), Scalar(7, 3)}, 2, 10).ok());
  CHECK(battery_central_lift(12, 3, 2, 30, 24).ok());
  CHECK(battery_central_worked(12, 5, 24).ok());
  const Scalar s(2, 7);
  CHECK(cocycle_C(phi_map(DiffOp::term(1, Polynomial::x()), s, 0, Sign::Plus),
                  phi_map(DiffOp::term(-1, Polynomial::x()), s, 0, Sign::Plus)) ==
        TruncPoly::constant(0, s * (s - Scalar(1))));
}

TEST_CASE("images of the conjugated realizations") {
  CHECK(battery_classical_images(21, 10, 6).ok());
  // A fixed element fails: its image is not anti-symmetric under rho.
  WindowedMatrix a = window(BandedMatrix::diagonal(0, IndexPoly::linear(0, -1, one(0))), 4);
  a = t_conjugate(a, TVariant::Half, TDirection::Inverse);
  CHECK_FALSE(classical_membership(a.trimmed(1), AlgebraTag::C, {false, 1}).member);
}

TEST_CASE("Hermite witnesses") {
  const Scalar s(1, 4);
  const DiffOp h = hermite_witness({0, 0, 0, 1}, s, 0, Sign::Plus, 1);
  CHECK(in_dx_pm(h, Sign::Plus));
  const WindowedMatrix img = window(phi_map(h, s, 0, Sign::Plus), 1);
  for (long j = -1; j <= 2; ++j)
    CHECK(img.at(j, j) == TruncPoly::constant(0, j == 0 ? Scalar(1, 4) : Scalar(0)));
  const WitnessTarget t{1, 1, 1, 2};
  const Scalar s2(1, 3);
  const DiffOp h2 = hermite_witness(t, s2, 1, Sign::Minus, 2);
  const WindowedMatrix img2 = window(phi_map(h2, s2, 1, Sign::Minus), 2);
  for (long j = -2; j <= 3; ++j) {
    const TruncPoly expected = j == 1 ? TruncPoly::shifted_u(1, s2 - Scalar(1)) * TruncPoly::u(1) * Scalar(2)
                                      : TruncPoly(1);
    CHECK(img2.get(j - 1, j) == expected);
  }
  CHECK(hermite_witness({0, 0, 0, 0}, s, 0, Sign::Plus, 1).is_zero());
  CHECK_THROWS_AS(hermite_witness({0, 0, 0, 1}, Scalar(1, 2), 0, Sign::Plus, 1), UnsupportedError);
}
