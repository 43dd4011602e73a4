#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "qf/diffop.hpp"
#include "qf/involution.hpp"
#include "qf/random.hpp"
#include "qf/weight.hpp"

namespace qf {

struct BatteryResult {
  std::string module;
  std::string name;
  std::size_t trials = 0;
  std::size_t passed = 0;
  /// First failing instance, empty when every trial passed.
  std::string counterexample;

  bool ok() const { return passed == trials && counterexample.empty(); }
};

using SigmaFn = std::function<DiffOp(const DiffOp&, Sign, const SymmetricP&)>;

/// The polynomials p used by the involution batteries: 1, x, x^2, x^2-x, x^3.
std::vector<Polynomial> standard_ps();

/// Random closed-form weight with at most `exponents` distinct positive
/// exponents in F (the constant correction and the c0 term included) and
/// multiplicity degree <= max_mult.
Weight random_closed_weight(RandomSource& rng, const SymmetricP& P, Sign sign, unsigned exponents,
                            unsigned max_mult = 2);

/// Positive representatives of the exponents of F.
std::vector<Scalar> weight_support(const Weight& w);

// exact-core
BatteryResult battery_field_axioms(std::uint64_t seed, std::size_t trials);
BatteryResult battery_series_division(std::uint64_t seed, std::size_t trials, unsigned order);
BatteryResult battery_annihilator(std::uint64_t seed, std::size_t trials, unsigned order);
BatteryResult battery_hermite(std::uint64_t seed, std::size_t trials);

// diffop-algebra
BatteryResult battery_jacobi(std::uint64_t seed, std::size_t trials);
BatteryResult battery_degree_drop(std::uint64_t seed, std::size_t trials);

// involutions
/// sigma^2 = id and sigma(XY) = sigma(Y) sigma(X), trials pairs per (p, sign).
/// `sigma` replaces apply_sigma when given.
BatteryResult battery_anti_involution(std::uint64_t seed, const std::vector<Polynomial>& ps, std::size_t trials,
                                      const SigmaFn& sigma = {});
/// Polynomials without a center are rejected.
BatteryResult battery_symmetry_rejection(const std::vector<Polynomial>& asymmetric);
/// Anti-fixed projections lie in the centered-parity span, fixed parts do
/// not, and span elements are anti-fixed.
BatteryResult battery_antifixed_coherence(std::uint64_t seed, const std::vector<Polynomial>& ps, std::size_t trials);
/// Parity of the weight -1 component from sigma directly against delta.
BatteryResult battery_delta_parity(const std::vector<Polynomial>& ps, unsigned degmax = 6);

// matrix-realization
BatteryResult battery_phi_homomorphism(std::uint64_t seed, const std::vector<Scalar>& ss, unsigned mmax,
                                       std::size_t trials);
BatteryResult battery_central_lift(std::uint64_t seed, long kmax, unsigned mmax, std::size_t trials,
                                   unsigned order);
/// [tD, t^{-1}D] at m = 0: both central parts equal s(s-1).
BatteryResult battery_central_worked(std::uint64_t seed, std::size_t count, unsigned order);
BatteryResult battery_window_involutions(unsigned mmax, unsigned half_width);
BatteryResult battery_classical_images(std::uint64_t seed, std::size_t trials, unsigned half_width);

// weight-analysis
BatteryResult battery_round_trip(std::uint64_t seed, std::size_t trials, unsigned order);
BatteryResult battery_kernel_invariance(std::uint64_t seed, std::size_t trials, unsigned order, unsigned dmax);
BatteryResult battery_label_consistency(std::uint64_t seed, std::size_t trials, unsigned order);
BatteryResult battery_charge_sum(std::uint64_t seed, std::size_t trials, unsigned order);
BatteryResult battery_char_poly(unsigned k_bound, unsigned dmax, unsigned order);

// cli
BatteryResult battery_serialization(std::uint64_t seed, std::size_t trials);

struct VerifyOptions {
  std::uint64_t seed = 1;
  /// Module names; "all" selects every module, an empty list selects none.
  std::vector<std::string> scope;
  unsigned order = 24;
  unsigned half_width = 6;
  unsigned dmax = 8;
  unsigned k_bound = 6;
  SigmaFn sigma;
};

const std::vector<std::string>& module_names();

/// Runs the selected batteries concurrently; results in a fixed order.
/// Throws SchemaError on an unknown module name.
std::vector<BatteryResult> run_verify(const VerifyOptions& options);

}  // namespace qf
