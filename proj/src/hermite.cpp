#include "qf/hermite.hpp"

#include "qf/error.hpp"

namespace qf {

Polynomial hermite_interpolate(const std::vector<HermiteNode>& nodes) {
  std::vector<Scalar> z;
  std::vector<std::size_t> owner;
  for (std::size_t n = 0; n < nodes.size(); ++n) {
    for (std::size_t m = 0; m < n; ++m)
      if (nodes[m].x == nodes[n].x) throw DomainError("hermite_interpolate: repeated node " + nodes[n].x.str());
    for (std::size_t l = 0; l < nodes[n].taylor.size(); ++l) {
      z.push_back(nodes[n].x);
      owner.push_back(n);
    }
  }
  const std::size_t total = z.size();
  if (total == 0) return {};

  // column[i] holds f[z_i .. z_{i+j}] for the current j.
  std::vector<Scalar> column(total);
  for (std::size_t i = 0; i < total; ++i) column[i] = nodes[owner[i]].taylor[0];
  std::vector<Scalar> newton{column[0]};
  for (std::size_t j = 1; j < total; ++j) {
    std::vector<Scalar> next(total - j);
    for (std::size_t i = 0; i + j < total; ++i) {
      if (z[i] == z[i + j])
        next[i] = nodes[owner[i]].taylor[j];
      else
        next[i] = (column[i + 1] - column[i]) / (z[i + j] - z[i]);
    }
    column = std::move(next);
    newton.push_back(column[0]);
  }

  Polynomial result;
  Polynomial basis = Polynomial::constant(1);
  for (std::size_t j = 0; j < total; ++j) {
    result += basis * newton[j];
    basis = basis * Polynomial{-z[j], Scalar(1)};
  }
  return result;
}

}  // namespace qf
