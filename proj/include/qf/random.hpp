#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "qf/diffop.hpp"
#include "qf/involution.hpp"
#include "qf/labels.hpp"
#include "qf/trunc_poly.hpp"
#include "qf/weight.hpp"

namespace qf {

/// Seeded generator for the randomized batteries; all draws are exact.
class RandomSource {
 public:
  explicit RandomSource(std::uint64_t seed) : engine_(seed) {}

  long integer(long lo, long hi);
  bool coin() { return integer(0, 1) == 1; }
  /// Small rational a/b with |a| <= bound, 1 <= b <= den_bound.
  Scalar scalar(long bound = 5, long den_bound = 3);
  Scalar nonzero_scalar(long bound = 5, long den_bound = 3);
  Polynomial polynomial(unsigned max_degree, long bound = 5);
  TruncPoly trunc_poly(unsigned m, long bound = 5);
  TruncPoly unit(unsigned m, long bound = 5);
  /// Sum of up to `terms` homogeneous pieces t^k f(D), |k| <= kmax.
  DiffOp diffop(long kmax, unsigned max_degree, unsigned terms = 3);
  DiffOp homogeneous(long k, unsigned max_degree);
  /// Element of D^a p (every cofactor a multiple of p).
  DiffOp multiple_of_p(const SymmetricP& P, long kmax, unsigned max_degree, unsigned terms = 3);
  /// Anti-fixed element for p = x.
  DiffOp dx_element(Sign sign, long kmax, unsigned max_degree, unsigned terms = 3);

  template <class T>
  const T& pick(const std::vector<T>& items) {
    return items[static_cast<std::size_t>(integer(0, static_cast<long>(items.size()) - 1))];
  }

  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace qf
