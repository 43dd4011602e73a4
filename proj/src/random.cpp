#include "qf/random.hpp"

namespace qf {

long RandomSource::integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(engine_); }

Scalar RandomSource::scalar(long bound, long den_bound) { return Scalar(integer(-bound, bound), integer(1, den_bound)); }

Scalar RandomSource::nonzero_scalar(long bound, long den_bound) {
  Scalar s;
  while (s.is_zero()) s = scalar(bound, den_bound);
  return s;
}

Polynomial RandomSource::polynomial(unsigned max_degree, long bound) {
  const long d = integer(0, static_cast<long>(max_degree));
  std::vector<Scalar> c(static_cast<std::size_t>(d) + 1);
  for (auto& x : c) x = scalar(bound);
  c.back() = nonzero_scalar(bound);
  return Polynomial(std::move(c));
}

TruncPoly RandomSource::trunc_poly(unsigned m, long bound) {
  TruncPoly t(m);
  for (unsigned i = 0; i <= m; ++i) t[i] = scalar(bound);
  return t;
}

TruncPoly RandomSource::unit(unsigned m, long bound) {
  TruncPoly t = trunc_poly(m, bound);
  t[0] = nonzero_scalar(bound);
  return t;
}

DiffOp RandomSource::homogeneous(long k, unsigned max_degree) { return DiffOp::term(k, polynomial(max_degree)); }

DiffOp RandomSource::diffop(long kmax, unsigned max_degree, unsigned terms) {
  DiffOp out;
  const long n = integer(1, terms);
  for (long t = 0; t < n; ++t) out += homogeneous(integer(-kmax, kmax), max_degree);
  return out;
}

DiffOp RandomSource::multiple_of_p(const SymmetricP& P, long kmax, unsigned max_degree, unsigned terms) {
  DiffOp out;
  const long n = integer(1, terms);
  for (long t = 0; t < n; ++t) out += DiffOp::term(integer(-kmax, kmax), polynomial(max_degree) * P.p);
  return out;
}

DiffOp RandomSource::dx_element(Sign sign, long kmax, unsigned max_degree, unsigned terms) {
  static const SymmetricP P = *validate_symmetry(Polynomial::x());
  return project_antifixed(multiple_of_p(P, kmax, max_degree, terms), sign, P);
}

}  // namespace qf
