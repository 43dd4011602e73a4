#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qf/weight.hpp"
#include "qf/windowed_matrix.hpp"

namespace qf {

/// Equivalence class of canonical s under s ~ +/-s' mod Z. Members are
/// rep - k with k >= 0; rep is 0, 1/2, or the largest generic member.
struct ExponentClass {
  Scalar rep;
  std::vector<long> ks;
  friend bool operator==(const ExponentClass&, const ExponentClass&) = default;
};

std::vector<ExponentClass> partition_classes(const EtaData& ed);

/// Highest-weight labels of the matrix algebra attached to a class.
struct MatrixLabels {
  AlgebraTag tag = AlgebraTag::Gl;
  unsigned m = 0;
  /// (k, i) -> h_k^{(i)}; zero values are not stored.
  std::map<std::pair<long, unsigned>, Scalar> h;
  /// c_i for i = 0..m
  std::vector<Scalar> charges;
  /// (j, i) -> lambda_j^{(i)} by tail sums.
  std::map<std::pair<long, unsigned>, Scalar> lambda;
  /// Bookkeeping relations that fail on these labels (reported, not patched).
  std::vector<std::string> conflicts;

  Scalar get_h(long k, unsigned i) const;
  /// Fills charges, lambda and conflicts from h.
  void finalize();
  friend bool operator==(const MatrixLabels& a, const MatrixLabels& b) {
    return a.tag == b.tag && a.m == b.m && a.h == b.h && a.charges == b.charges;
  }
};

/// Algebra attached to a class representative.
AlgebraTag class_tag(const Scalar& rep, Sign sign);

/// Labels for one class, cross-checked against the generating series.
MatrixLabels matrix_labels_build(const ExponentClass& cls, const EtaData& ed, Sign sign, unsigned order = 24);

/// Gamma_{m,s,lambda}(x) from the labels: sums of eta_i / sinh(x/2) minus
/// (1/2) coth(x/2) c_0, with the pole cancellation asserted.
Series gamma_from_labels(const MatrixLabels& ml, const Scalar& s, unsigned order);

/// Exponent description of the module attached to labels (cosh/sinh type).
ExponentData labels_exponents(const MatrixLabels& ml, const Scalar& s);

/// Closed-form weight (p = x) whose Gamma is that of the labels.
Weight pullback(const MatrixLabels& ml, const Scalar& s, Sign sign);

struct RealizationFactor {
  MatrixLabels labels;
  Scalar s_rep;
  std::vector<long> members;
};

struct Realization {
  std::vector<RealizationFactor> factors;
};

/// Tensor-product realization of a closed-form weight with p = x.
Realization realize(const Weight& w, unsigned order = 24);

/// Shifts generic labels so that the smallest populated k is 0 (the nu-shift
/// normalization); returns the adjusted representative alongside.
std::pair<MatrixLabels, Scalar> nu_normalize(const MatrixLabels& ml, const Scalar& s);

}  // namespace qf
