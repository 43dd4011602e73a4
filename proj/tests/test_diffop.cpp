#include <map>

#include "doctest.h"
#include "qf/diffop.hpp"
#include "qf/error.hpp"
#include "qf/random.hpp"
#include "qf/verify.hpp"

using namespace qf;

namespace {

using Laurent = std::map<long, Scalar>;

// Oracle: t^k f(D) acts on t^n as f(n) t^{n+k}.
Laurent act(const DiffOp& x, const Laurent& v) {
  Laurent out;
  for (const auto& [n, a] : v)
    for (const auto& [k, f] : x.terms()) out[n + k] += a * f.eval(Scalar(n));
  std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
  return out;
}

// Oracle: the defining sum for the cocycle, term by term.
Scalar psi_oracle(const DiffOp& a, const DiffOp& b) {
  Scalar total;
  for (const auto& [r, f] : a.terms())
    for (const auto& [s, g] : b.terms()) {
      if (r + s != 0 || r == 0) continue;
      if (r > 0) {
        for (long m = -r; m <= -1; ++m) total += f.eval(Scalar(m)) * g.eval(Scalar(m + r));
      } else {
        for (long m = r; m <= -1; ++m) total -= g.eval(Scalar(m)) * f.eval(Scalar(m - r));
      }
    }
  return total;
}

const DiffOp tD = DiffOp::term(1, Polynomial::x());
const DiffOp tinvD = DiffOp::term(-1, Polynomial::x());

}  // namespace

TEST_CASE("composition follows the shift rule") {
  const DiffOp D = DiffOp::term(0, Polynomial::x());
  const DiffOp t = DiffOp::term(1, Polynomial{1});
  CHECK(compose(D, t) == DiffOp::term(1, Polynomial{1, 1}));
  CHECK(compose(DiffOp::term(0, Polynomial{1, 2}), DiffOp::term(0, Polynomial{3, 1})) ==
        DiffOp::term(0, Polynomial{1, 2} * Polynomial{3, 1}));
  CHECK(compose(tD, tinvD) == DiffOp::term(0, Polynomial{0, -1, 1}));
  CHECK_THROWS_AS(compose(tD, DiffOp::central_element()), DomainError);
}

TEST_CASE("composition agrees with the action on Laurent monomials") {
  RandomSource rng(17);
  for (int trial = 0; trial < 100; ++trial) {
    const DiffOp x = rng.diffop(3, 4), y = rng.diffop(3, 4);
    Laurent v;
    for (long n = -3; n <= 3; ++n) v[n] = rng.scalar();
    CHECK(act(compose(x, y), v) == act(x, act(y, v)));
    const Laurent commutator = [&] {
      Laurent a = act(x, act(y, v)), b = act(y, act(x, v));
      for (const auto& [n, c] : b) a[n] -= c;
      std::erase_if(a, [](const auto& kv) { return kv.second.is_zero(); });
      return a;
    }();
    CHECK(act(bracket(x, y), v) == commutator);
  }
}

TEST_CASE("bracket and cocycle values") {
  CHECK(bracket(tD, tinvD) == DiffOp::term(0, Polynomial{0, -2}));
  CHECK(bracket(DiffOp::term(0, Polynomial{1, 1}), DiffOp::term(0, Polynomial{0, 0, 3})).is_zero());
  const DiffOp t2 = DiffOp::term(2, Polynomial{1}), tm2 = DiffOp::term(-2, Polynomial{1});
  CHECK(bracket(t2, tm2).is_zero());
  CHECK(psi_cocycle(t2, tm2) == Scalar(2));
  CHECK(psi_cocycle(tD, tinvD) == Scalar(0));
  CHECK(psi_cocycle(DiffOp::term(2, Polynomial{0, 1}), DiffOp::term(3, Polynomial{1, 1})) == Scalar(0));
  CHECK(bracket_hat(t2, tm2) == DiffOp::central_element(2));
  CHECK(bracket_hat(tD, tinvD) == DiffOp::term(0, Polynomial{0, -2}));
  const DiffOp D2 = DiffOp::term(0, Polynomial::monomial(2)), D3 = DiffOp::term(0, Polynomial::monomial(3));
  CHECK(bracket_hat(D2, D3).is_zero());
}

TEST_CASE("cocycle agrees with the defining sum") {
  RandomSource rng(23);
  for (int trial = 0; trial < 100; ++trial) {
    const DiffOp x = rng.diffop(4, 4), y = rng.diffop(4, 4);
    CHECK(psi_cocycle(x, y) == psi_oracle(x, y));
    CHECK(psi_cocycle(x, y) == -psi_cocycle(y, x));
  }
}

TEST_CASE("weights") {
  CHECK(weight_of(DiffOp::term(3, Polynomial{1, 1})) == 3);
  CHECK(weight_of(DiffOp::central_element()) == 0);
  CHECK_THROWS_AS(weight_of(tD + DiffOp::term(0, Polynomial::x())), DomainError);
  CHECK(DiffOp::term(2, Polynomial{}).is_zero());
  CHECK(DiffOp::L(1, 1) == -tD);
  CHECK(DiffOp::J(1, 2) == DiffOp::term(1, Polynomial{0, 1, -1}));
}

TEST_CASE("Jacobi identity and degree drop") {
  CHECK(battery_jacobi(5, 60).ok());
  CHECK(battery_degree_drop(5, 200).ok());
}
