#pragma once

#include <vector>

#include "qf/polynomial.hpp"

namespace qf {

/// Interpolation node with prescribed Taylor data: taylor[l] = f^{(l)}(x)/l!.
struct HermiteNode {
  Scalar x;
  std::vector<Scalar> taylor;
};

/// Unique polynomial of degree < sum(taylor sizes) matching every node,
/// computed by confluent divided differences. Nodes must be distinct.
Polynomial hermite_interpolate(const std::vector<HermiteNode>& nodes);

}  // namespace qf
