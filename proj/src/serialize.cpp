#include "qf/serialize.hpp"

#include "qf/error.hpp"

namespace qf {

namespace {

std::string child(const std::string& path, const std::string& key) { return path + "." + key; }
std::string child(const std::string& path, std::size_t index) { return path + "[" + std::to_string(index) + "]"; }

const Json& require_array(const Json& j, const std::string& path) {
  if (!j.is_array()) throw SchemaError(path, "expected an array");
  return j;
}

std::vector<Scalar> scalars_from_json(const Json& j, const std::string& path) {
  std::vector<Scalar> out;
  const Json& arr = require_array(j, path);
  for (std::size_t n = 0; n < arr.size(); ++n) out.push_back(scalar_from_json(arr[n], child(path, n)));
  return out;
}

Json scalars_to_json(const std::vector<Scalar>& v) {
  Json arr = Json::array();
  for (const auto& s : v) arr.push_back(to_json(s));
  return arr;
}

}  // namespace

const Json& require(const Json& j, const std::string& key, const std::string& path) {
  if (!j.is_object()) throw SchemaError(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw SchemaError(child(path, key), "missing field");
  return *it;
}

long integer_from_json(const Json& j, const std::string& path) {
  if (!j.is_number_integer()) throw SchemaError(path, "expected an integer");
  return j.get<long>();
}

Json to_json(const Scalar& s) { return s.str(); }

Scalar scalar_from_json(const Json& j, const std::string& path) {
  if (j.is_number_integer()) return Scalar(j.get<long>());
  if (!j.is_string()) throw SchemaError(path, "expected an exact scalar string");
  try {
    return Scalar::parse(j.get<std::string>());
  } catch (const SchemaError& e) {
    throw SchemaError(path, e.what());
  }
}

Json to_json(const Polynomial& p) { return scalars_to_json(p.coefficients()); }

Polynomial polynomial_from_json(const Json& j, const std::string& path) { return Polynomial(scalars_from_json(j, path)); }

Json to_json(const TruncPoly& t) { return scalars_to_json(t.coefficients()); }

TruncPoly trunc_poly_from_json(const Json& j, unsigned m, const std::string& path) {
  std::vector<Scalar> c = scalars_from_json(j, path);
  if (c.size() > m + 1) throw SchemaError(path, "more than m+1 coefficients");
  c.resize(m + 1);
  return TruncPoly(m, std::move(c));
}

Json to_json(const Series& s) {
  const unsigned v = s.valuation();
  std::vector<Scalar> retained;
  for (unsigned n = v; n <= s.order(); ++n) retained.push_back(s.coeff(n));
  return Json{{"order", s.order()}, {"valuation", v}, {"coefficients", scalars_to_json(retained)}};
}

Series series_from_json(const Json& j, const std::string& path) {
  const long order = integer_from_json(require(j, "order", path), child(path, "order"));
  if (order < 0) throw SchemaError(child(path, "order"), "negative order");
  long valuation = 0;
  if (j.contains("valuation")) valuation = integer_from_json(j["valuation"], child(path, "valuation"));
  std::vector<Scalar> c = scalars_from_json(require(j, "coefficients", path), child(path, "coefficients"));
  if (valuation < 0 || valuation + static_cast<long>(c.size()) > order + 1)
    throw SchemaError(child(path, "coefficients"), "coefficients exceed the stated order");
  c.resize(static_cast<std::size_t>(order + 1 - valuation));
  return Series::from_retained(static_cast<unsigned>(order), static_cast<unsigned>(valuation), std::move(c));
}

Json to_json(const Quasipolynomial& q) {
  Json arr = Json::array();
  for (const auto& [alpha, m] : q.terms())
    arr.push_back(Json{{"exponent", to_json(alpha)}, {"multiplicity_coefficients", to_json(m)}});
  return arr;
}

Quasipolynomial quasipolynomial_from_json(const Json& j, const std::string& path) {
  Quasipolynomial q;
  const Json& arr = require_array(j, path);
  for (std::size_t n = 0; n < arr.size(); ++n) {
    const std::string p = child(path, n);
    q += Quasipolynomial::term(scalar_from_json(require(arr[n], "exponent", p), child(p, "exponent")),
                               polynomial_from_json(require(arr[n], "multiplicity_coefficients", p),
                                                    child(p, "multiplicity_coefficients")));
  }
  return q;
}

Json to_json(const DiffOp& d) {
  Json terms = Json::array();
  for (const auto& [k, f] : d.terms()) terms.push_back(Json{{"k", k}, {"f_coefficients", to_json(f)}});
  return Json{{"terms", terms}, {"central", to_json(d.central())}};
}

DiffOp diffop_from_json(const Json& j, const std::string& path) {
  DiffOp d;
  const std::string tp = child(path, "terms");
  const Json& arr = require_array(require(j, "terms", path), tp);
  for (std::size_t n = 0; n < arr.size(); ++n) {
    const std::string p = child(tp, n);
    d += DiffOp::term(integer_from_json(require(arr[n], "k", p), child(p, "k")),
                      polynomial_from_json(require(arr[n], "f_coefficients", p), child(p, "f_coefficients")));
  }
  if (j.contains("central")) d += DiffOp::central_element(scalar_from_json(j["central"], child(path, "central")));
  return d;
}

Json to_json(const SymmetricP& P) {
  return Json{{"p_coefficients", to_json(P.p)},
              {"epsilon", to_json(P.epsilon)},
              {"c", to_json(P.c)},
              {"free_c", P.free_c}};
}

SymmetricP symmetric_p_from_json(const Json& j, const std::string& path) {
  // Accepts a bare coefficient array or {p_coefficients, c?}.
  const bool bare = j.is_array();
  const std::string pp = bare ? path : child(path, "p_coefficients");
  Polynomial p = polynomial_from_json(bare ? j : require(j, "p_coefficients", path), pp);
  if (p.is_zero()) throw SchemaError(pp, "p must be nonzero");
  auto P = validate_symmetry(p);
  if (!P) throw DomainError("p = " + p.str() + " admits no symmetry p(x) = eps p(-x+c)");
  if (!bare && j.contains("c")) {
    Scalar c = scalar_from_json(j["c"], child(path, "c"));
    if (P->free_c)
      P = P->with_center(c);
    else if (!(c == P->c))
      throw DomainError("stated center " + c.str() + " differs from the forced center " + P->c.str());
  }
  return *P;
}

Json to_json(const IndexPoly& p) {
  Json arr = Json::array();
  for (const auto& c : p.coefficients()) arr.push_back(to_json(c));
  return arr;
}

Json to_json(const BandedMatrix& a) {
  Json diagonals = Json::array();
  for (const auto& [k, p] : a.diagonals()) diagonals.push_back(Json{{"k", k}, {"entry_poly", to_json(p)}});
  Json overlay = Json::array();
  for (const auto& [ij, v] : a.overlay()) overlay.push_back(Json{{"i", ij.first}, {"j", ij.second}, {"coeffs", to_json(v)}});
  return Json{{"m", a.order()},
              {"central_coefficients", to_json(a.central())},
              {"diagonals", diagonals},
              {"overlay", overlay}};
}

BandedMatrix banded_from_json(const Json& j, const std::string& path) {
  const long ml = integer_from_json(require(j, "m", path), child(path, "m"));
  if (ml < 0 || ml > 64) throw SchemaError(child(path, "m"), "m out of range");
  const unsigned m = static_cast<unsigned>(ml);
  BandedMatrix a(m);
  if (j.contains("central_coefficients"))
    a += BandedMatrix::central_element(trunc_poly_from_json(j["central_coefficients"], m, child(path, "central_coefficients")));
  if (j.contains("diagonals")) {
    const std::string dp = child(path, "diagonals");
    const Json& arr = require_array(j["diagonals"], dp);
    for (std::size_t n = 0; n < arr.size(); ++n) {
      const std::string p = child(dp, n);
      const long k = integer_from_json(require(arr[n], "k", p), child(p, "k"));
      const std::string ep = child(p, "entry_poly");
      const Json& coeffs = require_array(require(arr[n], "entry_poly", p), ep);
      std::vector<TruncPoly> c;
      for (std::size_t d = 0; d < coeffs.size(); ++d) c.push_back(trunc_poly_from_json(coeffs[d], m, child(ep, d)));
      a += BandedMatrix::diagonal(k, IndexPoly(m, std::move(c)));
    }
  }
  if (j.contains("overlay")) {
    const std::string op = child(path, "overlay");
    const Json& arr = require_array(j["overlay"], op);
    for (std::size_t n = 0; n < arr.size(); ++n) {
      const std::string p = child(op, n);
      a += BandedMatrix::unit(integer_from_json(require(arr[n], "i", p), child(p, "i")),
                              integer_from_json(require(arr[n], "j", p), child(p, "j")),
                              trunc_poly_from_json(require(arr[n], "coeffs", p), m, child(p, "coeffs")));
    }
  }
  return a;
}

Json to_json(const WindowedMatrix& a) {
  Json entries = Json::array();
  for (long i = a.lo(); i <= a.hi(); ++i)
    for (long j = a.lo(); j <= a.hi(); ++j)
      if (!a.at(i, j).is_zero()) entries.push_back(Json{{"i", i}, {"j", j}, {"coeffs", to_json(a.at(i, j))}});
  return Json{{"m", a.order()}, {"window", a.half_width()}, {"entries", entries}};
}

Sign sign_from_json(const Json& j, const std::string& path) {
  if (j == "+") return Sign::Plus;
  if (j == "-") return Sign::Minus;
  throw SchemaError(path, "sign must be \"+\" or \"-\"");
}

Json to_json(const Weight& w) {
  Json out{{"p", to_json(w.P.p)}, {"sign", sign_name(w.sign)}, {"c0", to_json(w.c0)}};
  if (w.P.free_c) out["c"] = to_json(w.P.c);
  if (w.phi) out["phi"] = to_json(*w.phi);
  if (w.delta) out["delta"] = to_json(*w.delta);
  return out;
}

Weight weight_from_json(const Json& j, const std::string& path) {
  Json pj = Json{{"p_coefficients", require(j, "p", path)}};
  if (j.contains("c")) pj["c"] = j["c"];
  const SymmetricP P = symmetric_p_from_json(pj, path);
  if (P.free_c && !j.contains("c")) throw SchemaError(child(path, "c"), "constant p requires an explicit center c");
  const Sign sign = sign_from_json(require(j, "sign", path), child(path, "sign"));
  const Scalar c0 = j.contains("c0") ? scalar_from_json(j["c0"], child(path, "c0")) : Scalar(0);
  const bool has_phi = j.contains("phi"), has_delta = j.contains("delta");
  if (has_phi == has_delta) throw SchemaError(path, "exactly one of phi or delta is required");
  if (has_phi) return Weight::closed(P, sign, c0, quasipolynomial_from_json(j["phi"], child(path, "phi")));
  return Weight::series(P, sign, c0, series_from_json(j["delta"], child(path, "delta")));
}

Json to_json(const ExponentData& e) {
  Json even = Json::array(), odd = Json::array();
  for (const auto& [x, q] : e.even_type) even.push_back(Json{{"exponent", to_json(x)}, {"q", to_json(q)}});
  for (const auto& [x, r] : e.odd_type) odd.push_back(Json{{"exponent", to_json(x)}, {"r", to_json(r)}});
  return Json{{"even_type", even}, {"odd_type", odd}};
}

Json to_json(const EtaData& e) {
  Json arr = Json::array();
  for (const auto& [s, row] : e.coefficients)
    for (const auto& [i, a] : row) arr.push_back(Json{{"s", to_json(s)}, {"i", i}, {"a", to_json(a)}});
  return arr;
}

Json to_json(const MatrixLabels& ml) {
  Json h = Json::array();
  for (const auto& [ki, v] : ml.h) h.push_back(Json{{"k", ki.first}, {"i", ki.second}, {"value", to_json(v)}});
  Json lambda = Json::array();
  for (const auto& [ji, v] : ml.lambda) lambda.push_back(Json{{"j", ji.first}, {"i", ji.second}, {"value", to_json(v)}});
  return Json{{"tag", tag_name(ml.tag)},
              {"m", ml.m},
              {"h", h},
              {"charges", scalars_to_json(ml.charges)},
              {"lambda", lambda},
              {"conflicts", ml.conflicts}};
}

MatrixLabels labels_from_json(const Json& j, const std::string& path) {
  MatrixLabels ml;
  const Json& tag = require(j, "tag", path);
  if (!tag.is_string()) throw SchemaError(child(path, "tag"), "expected a string");
  try {
    ml.tag = parse_tag(tag.get<std::string>());
  } catch (const SchemaError& e) {
    throw SchemaError(child(path, "tag"), e.what());
  }
  if (j.contains("m")) ml.m = static_cast<unsigned>(integer_from_json(j["m"], child(path, "m")));
  const std::string hp = child(path, "h");
  const Json& arr = require_array(require(j, "h", path), hp);
  for (std::size_t n = 0; n < arr.size(); ++n) {
    const std::string p = child(hp, n);
    const long i = integer_from_json(require(arr[n], "i", p), child(p, "i"));
    if (i < 0) throw SchemaError(child(p, "i"), "negative index");
    ml.h[{integer_from_json(require(arr[n], "k", p), child(p, "k")), static_cast<unsigned>(i)}] =
        scalar_from_json(require(arr[n], "value", p), child(p, "value"));
  }
  ml.finalize();
  return ml;
}

Json to_json(const Realization& r) {
  Json factors = Json::array();
  for (const auto& f : r.factors) {
    Json members = Json::array();
    for (long k : f.members) members.push_back(k);
    Json fj = to_json(f.labels);
    fj["s_rep"] = to_json(f.s_rep);
    fj["members"] = members;
    factors.push_back(fj);
  }
  return Json{{"factors", factors}};
}

Realization realization_from_json(const Json& j, const std::string& path) {
  Realization r;
  const std::string fp = child(path, "factors");
  const Json& arr = require_array(require(j, "factors", path), fp);
  for (std::size_t n = 0; n < arr.size(); ++n) {
    const std::string p = child(fp, n);
    RealizationFactor f{labels_from_json(arr[n], p), scalar_from_json(require(arr[n], "s_rep", p), child(p, "s_rep")), {}};
    const Json& members = require_array(require(arr[n], "members", p), child(p, "members"));
    for (std::size_t t = 0; t < members.size(); ++t) f.members.push_back(integer_from_json(members[t], child(child(p, "members"), t)));
    r.factors.push_back(std::move(f));
  }
  return r;
}

}  // namespace qf
