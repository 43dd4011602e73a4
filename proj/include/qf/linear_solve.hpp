#pragma once

#include <optional>
#include <vector>

#include "qf/scalar.hpp"

namespace qf {

using Matrix = std::vector<std::vector<Scalar>>;

/// Row-reduced view of an exact linear system A x = b.
struct LinearSolution {
  std::size_t rank = 0;
  bool consistent = false;
  /// Solution with every free variable set to zero (valid iff consistent).
  std::vector<Scalar> particular;
  /// Basis of the null space of A.
  std::vector<std::vector<Scalar>> nullspace;
};

/// Gauss-Jordan elimination over Q(i). `a` is rows x cols, `b` has one
/// entry per row; `cols` is passed so that zero-row systems are well-formed.
LinearSolution solve_linear(Matrix a, std::vector<Scalar> b, std::size_t cols);

}  // namespace qf
