// Acceptance run: one PASS/FAIL line per criterion, exit status 1 on any failure.

#include <chrono>
#include <functional>
#include <future>
#include <iostream>
#include <string>
#include <vector>

#include "qf/verify.hpp"

using namespace qf;

namespace {

constexpr std::uint64_t kSeed = 20241;

struct Criterion {
  int id;
  std::string title;
  std::function<std::vector<BatteryResult>()> run;
};

}  // namespace

int main() {
  const std::vector<Polynomial> ps = standard_ps();
  const unsigned N = 24, W = 6;
  const std::vector<Criterion> criteria{
      {1, "anti-involution laws for p in {1, x, x^2, x^2-x, x^3}; x^3+x^2 rejected",
       [&] {
         return std::vector{battery_anti_involution(kSeed, ps, 200),
                            battery_symmetry_rejection({Polynomial{0, 0, 1, 1}})};
       }},
      {2, "Jacobi identity on 200 random triples of the central extension",
       [&] { return std::vector{battery_jacobi(kSeed, 200)}; }},
      {3, "anti-fixed membership matches the centered-parity basis; weight -1 parity equals delta",
       [&] { return std::vector{battery_antifixed_coherence(kSeed, ps, 50), battery_delta_parity(ps)}; }},
      {4, "degree drop criterion on 500 random brackets", [&] { return std::vector{battery_degree_drop(kSeed, 500)}; }},
      {5, "phi_s homomorphism for s in {1/4, 3, 7/3}, m <= 2, 100 pairs each",
       [&] { return std::vector{battery_phi_homomorphism(kSeed, {Scalar(1, 4), Scalar(3), Scalar(7, 3)}, 2, 100)}; }},
      {6, "central lift intertwines Psi with C; [tD, t^-1 D] gives s(s-1)",
       [&] {
         return std::vector{battery_central_lift(kSeed, 3, 2, 100, N), battery_central_worked(kSeed, 5, N)};
       }},
      {7, "rho = T^-1 w T on weight -1, 0, 1 window basis elements, m <= 2",
       [&] { return std::vector{battery_window_involutions(2, W)}; }},
      {8, "T^-1 phi_1/2 lands in c/d and T phi_0 lands in L+/L- on W = 6",
       [&] { return std::vector{battery_classical_images(kSeed, 50, W)}; }},
      {9, "phi -> Delta -> Gamma -> exponents round-trip; kernel perturbations inert",
       [&] { return std::vector{battery_round_trip(kSeed, 50, N), battery_kernel_invariance(kSeed, 50, N, 8)}; }},
      {10, "labels Gamma equals pullback Gamma; realize . pullback = id up to nu; charges sum to c0",
       [&] { return std::vector{battery_label_consistency(kSeed, 50, N), battery_charge_sum(kSeed, 50, N)}; }},
      {11, "characteristic polynomial y^4 - y^2 by both routes; exponents are roots",
       [&] { return std::vector{battery_char_poly(6, 8, N)}; }},
  };

  const auto start = std::chrono::steady_clock::now();
  std::vector<std::future<std::vector<BatteryResult>>> running;
  for (const auto& c : criteria) running.push_back(std::async(std::launch::async, c.run));

  int failures = 0;
  for (std::size_t n = 0; n < criteria.size(); ++n) {
    const auto results = running[n].get();
    bool ok = true;
    std::string detail;
    for (const auto& r : results) {
      ok = ok && r.ok();
      if (!detail.empty()) detail += "; ";
      detail += r.name + " " + std::to_string(r.passed) + "/" + std::to_string(r.trials);
      if (!r.ok()) detail += " [" + r.counterexample + "]";
    }
    failures += ok ? 0 : 1;
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << criteria[n].id << ": " << criteria[n].title << " ("
              << detail << ")\n";
  }
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::cout << (criteria.size() - failures) << "/" << criteria.size() << " criteria passed in " << seconds << " s\n";
  return failures == 0 ? 0 : 1;
}
