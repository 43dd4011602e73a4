#include "qf/labels.hpp"

#include <algorithm>

#include "qf/error.hpp"
#include "qf/phi.hpp"

namespace qf {

namespace {

bool same_class(const Scalar& a, const Scalar& b) { return (a - b).is_integer(); }

Scalar class_rep_for(const Scalar& s) {
  if (s.is_integer()) return 0;
  if (s.is_half_integer()) return Scalar(1, 2);
  return s;
}

Series class_gamma_oracle(const EtaData& ed, const ExponentClass& cls, const Scalar& c0, unsigned order) {
  Quasipolynomial f;
  for (long k : cls.ks) {
    const Scalar s = cls.rep - Scalar(k);
    for (unsigned i = 0; i <= ed.max_index(s); ++i) {
      Scalar a = ed.get(s, i);
      if (!a.is_zero()) f += eta_function(i, s) * a;
    }
  }
  f -= Quasipolynomial::cosh(Scalar(1, 2)) * c0;
  return series_divide(f.to_series(order + 1), Series::two_sinh_half(order + 1));
}

}  // namespace

std::vector<ExponentClass> partition_classes(const EtaData& ed) {
  std::vector<ExponentClass> classes;
  std::vector<std::vector<Scalar>> members;
  for (const auto& [s, row] : ed.coefficients) {
    const Scalar key = class_rep_for(s);
    auto it = std::find_if(classes.begin(), classes.end(), [&](const ExponentClass& c) {
      return key.in_half_lattice() ? c.rep == key : (!c.rep.in_half_lattice() && same_class(c.rep, s));
    });
    if (it == classes.end()) {
      classes.push_back({key, {}});
      members.push_back({});
      it = classes.end() - 1;
    }
    members[it - classes.begin()].push_back(s);
  }
  for (std::size_t c = 0; c < classes.size(); ++c) {
    if (!classes[c].rep.in_half_lattice())
      classes[c].rep = *std::max_element(members[c].begin(), members[c].end(),
                                         [](const Scalar& a, const Scalar& b) { return a.re() < b.re(); });
    for (const Scalar& s : members[c]) classes[c].ks.push_back((classes[c].rep - s).to_long());
    std::sort(classes[c].ks.begin(), classes[c].ks.end());
  }
  std::sort(classes.begin(), classes.end(), [](const ExponentClass& a, const ExponentClass& b) { return a.rep < b.rep; });
  return classes;
}

Scalar MatrixLabels::get_h(long k, unsigned i) const {
  auto it = h.find({k, i});
  return it == h.end() ? Scalar(0) : it->second;
}

void MatrixLabels::finalize() {
  const bool cd = tag == AlgebraTag::C || tag == AlgebraTag::D;
  std::erase_if(h, [](const auto& kv) { return kv.second.is_zero(); });
  for (const auto& [ki, v] : h) m = std::max(m, ki.second);
  charges.assign(m + 1, Scalar(0));
  long kmax = 0;
  for (const auto& [ki, v] : h) {
    kmax = std::max(kmax, ki.first);
    if (!cd || ki.second % 2 == 0) charges[ki.second] += v;
  }
  lambda.clear();
  conflicts.clear();
  for (unsigned i = 0; i <= m; ++i)
    for (long j = cd ? 1 : 0; j <= kmax + 1; ++j) {
      Scalar tail;
      for (long k = j; k <= kmax; ++k) tail += get_h(k, i) - (!cd && k == 0 ? charges[i] : Scalar(0));
      if (!tail.is_zero()) lambda[{j, i}] = tail;
    }
  if (cd) {
    for (unsigned i = 0; i <= m; i += 2) {
      auto it = lambda.find({1, i});
      Scalar lambda1 = it == lambda.end() ? Scalar(0) : it->second;
      if (!(get_h(0, i) == lambda1 + charges[i]))
        conflicts.push_back("h_0^(" + std::to_string(i) + ") = " + get_h(0, i).str() + " but lambda_1 + c_" +
                            std::to_string(i) + " = " + (lambda1 + charges[i]).str());
    }
  }
}

AlgebraTag class_tag(const Scalar& rep, Sign sign) {
  if (rep.is_integer()) return sign == Sign::Plus ? AlgebraTag::LPlus : AlgebraTag::LMinus;
  if (rep.is_half_integer()) return sign == Sign::Plus ? AlgebraTag::C : AlgebraTag::D;
  return AlgebraTag::Gl;
}

MatrixLabels matrix_labels_build(const ExponentClass& cls, const EtaData& ed, Sign sign, unsigned order) {
  MatrixLabels ml;
  ml.tag = class_tag(cls.rep, sign);
  const bool cd = ml.tag == AlgebraTag::C || ml.tag == AlgebraTag::D;
  for (long k : cls.ks) {
    const Scalar s = cls.rep - Scalar(k);
    ml.m = std::max(ml.m, ed.max_index(s));
    for (unsigned i = 0; i <= ed.max_index(s); ++i) {
      Scalar a = ed.get(s, i);
      if (a.is_zero()) continue;
      // Half-integer members below 1/2 are read through eta_i(x,1/2-k) = (-1)^i eta_i(x,1/2+k).
      if (cd && k > 0 && i % 2 == 1) a = -a;
      if (cd && k == 0 && i % 2 == 1)
        throw ConsistencyError("matrix_labels_build: odd coefficient at s = 1/2 has no eta function");
      ml.h[{k, i}] = a;
    }
  }
  ml.finalize();

  const Series from_labels = gamma_from_labels(ml, cls.rep, order);
  const Series oracle = class_gamma_oracle(ed, cls, ml.charges.empty() ? Scalar(0) : ml.charges[0], order);
  const unsigned common = std::min(from_labels.order(), oracle.order());
  if (!(from_labels.truncate(common) == oracle.truncate(common)))
    throw ConsistencyError("matrix_labels_build: label series " + from_labels.str() + " differs from exponent series " +
                           oracle.str());
  return ml;
}

Series gamma_from_labels(const MatrixLabels& ml, const Scalar& s, unsigned order) {
  const unsigned n = order + 1;
  Series numer(n);
  for (const auto& [ki, value] : ml.h) {
    const auto [k, i] = ki;
    Scalar arg;
    switch (ml.tag) {
      case AlgebraTag::Gl: arg = s - Scalar(k); break;
      case AlgebraTag::C:
      case AlgebraTag::D: arg = Scalar(k) + Scalar(1, 2); break;
      case AlgebraTag::LPlus:
      case AlgebraTag::LMinus: arg = -Scalar(k); break;
    }
    numer += eta_series(i, arg, n) * value;
  }
  const Scalar c0 = ml.charges.empty() ? Scalar(0) : ml.charges[0];
  numer -= Series::cosh(Scalar(1, 2), n) * c0;
  if (!numer.is_zero() && numer.valuation() == 0)
    throw ConsistencyError("gamma_from_labels: pole at x = 0 does not cancel (labels inconsistent with charges)");
  return series_divide(numer, Series::two_sinh_half(n));
}

ExponentData labels_exponents(const MatrixLabels& ml, const Scalar& s) {
  // Exponent attached to label index k: s-k-1/2 (gl), k (c/d), -k-1/2 (L).
  std::map<long, Polynomial> even, odd;
  for (const auto& [ki, value] : ml.h) {
    const auto [k, i] = ki;
    Polynomial term = Polynomial::monomial(i, value / factorial(i));
    (i % 2 == 0 ? even[k] : odd[k]) += term;
  }
  auto exponent = [&](long k) -> Scalar {
    switch (ml.tag) {
      case AlgebraTag::Gl: return s - Scalar(k) - Scalar(1, 2);
      case AlgebraTag::C:
      case AlgebraTag::D: return Scalar(k);
      default: return -Scalar(k) - Scalar(1, 2);
    }
  };
  ExponentData out;
  for (const auto& [k, q] : even) {
    if (q.is_zero()) continue;
    const Scalar e = exponent(k);
    out.even_type[positive_exponent(e)] += q;
  }
  for (const auto& [k, r] : odd) {
    if (r.is_zero()) continue;
    const Scalar e = exponent(k);
    // sinh(-ex) r = sinh(ex) (-r)
    out.odd_type[positive_exponent(e)] += e == positive_exponent(e) ? r : -r;
  }
  std::erase_if(out.even_type, [](const auto& kv) { return kv.second.is_zero(); });
  std::erase_if(out.odd_type, [](const auto& kv) { return kv.second.is_zero(); });
  return out;
}

Weight pullback(const MatrixLabels& ml, const Scalar& s, Sign sign) {
  const SymmetricP P = *validate_symmetry(Polynomial::x());
  const Scalar c0 = ml.charges.empty() ? Scalar(0) : ml.charges[0];
  Quasipolynomial phi = labels_exponents(ml, s).to_quasipolynomial() - Quasipolynomial::cosh(Scalar(1, 2)) * c0;
  return Weight::closed(P, sign, c0, phi);
}

Realization realize(const Weight& w, unsigned order) {
  if (w.P.p != Polynomial::x() || !w.P.c.is_zero()) throw DomainError("realize: requires p = x");
  const EtaData ed = eta_decompose(weight_f(w));
  Realization out;
  Scalar charge_sum;
  Series gamma_sum(order);
  for (const ExponentClass& cls : partition_classes(ed)) {
    RealizationFactor factor{matrix_labels_build(cls, ed, w.sign, order), cls.rep, cls.ks};
    charge_sum += factor.labels.charges[0];
    gamma_sum += gamma_from_labels(factor.labels, cls.rep, order);
    out.factors.push_back(std::move(factor));
  }
  if (!(charge_sum == w.c0))
    throw ConsistencyError("realize: factor charges sum to " + charge_sum.str() + ", expected " + w.c0.str());
  const Series gamma = series_divide(w.phi->to_series(order + 1), Series::two_sinh_half(order + 1));
  const unsigned common = std::min(gamma.order(), gamma_sum.order());
  if (!(gamma.truncate(common) == gamma_sum.truncate(common)))
    throw ConsistencyError("realize: sum of factor series differs from Gamma");
  return out;
}

std::pair<MatrixLabels, Scalar> nu_normalize(const MatrixLabels& ml, const Scalar& s) {
  if (ml.tag != AlgebraTag::Gl || ml.h.empty()) return {ml, s};
  long kmin = ml.h.begin()->first.first;
  for (const auto& [ki, v] : ml.h) kmin = std::min(kmin, ki.first);
  MatrixLabels out = ml;
  out.h.clear();
  for (const auto& [ki, v] : ml.h) out.h[{ki.first - kmin, ki.second}] = v;
  out.finalize();
  return {out, s - Scalar(kmin)};
}

}  // namespace qf
