#include "qf/cli.hpp"

#include <functional>
#include <map>

#include "qf/error.hpp"
#include "qf/labels.hpp"
#include "qf/phi.hpp"
#include "qf/serialize.hpp"
#include "qf/windowed_matrix.hpp"

namespace qf::cli {

namespace {

using Handler = std::function<Json(const Json&, const Options&)>;

std::string parity_name(ParityClass c) {
  switch (c) {
    case ParityClass::Even: return "even";
    case ParityClass::Odd: return "odd";
    default: return "any";
  }
}

unsigned unsigned_field(const Json& doc, const std::string& key, unsigned fallback) {
  if (!doc.contains(key)) return fallback;
  const long v = integer_from_json(doc[key], "$." + key);
  if (v < 0) throw SchemaError("$." + key, "must be non-negative");
  return static_cast<unsigned>(v);
}

bool bool_field(const Json& doc, const std::string& key, bool fallback) {
  if (!doc.contains(key)) return fallback;
  if (!doc[key].is_boolean()) throw SchemaError("$." + key, "expected a boolean");
  return doc[key].get<bool>();
}

// A constant p has no forced center; commands that act with it need c spelled out.
SymmetricP p_field(const Json& doc, bool need_center = true) {
  Json pj{{"p_coefficients", require(doc, "p", "$")}};
  if (doc.contains("c")) pj["c"] = doc["c"];
  const SymmetricP P = symmetric_p_from_json(pj, "$");
  if (need_center && P.free_c && !doc.contains("c")) throw SchemaError("$.c", "constant p requires an explicit center c");
  return P;
}

Sign sign_field(const Json& doc) { return sign_from_json(require(doc, "sign", "$"), "$.sign"); }

Weight weight_field(const Json& doc) {
  if (doc.contains("weight")) return weight_from_json(doc["weight"], "$.weight");
  return weight_from_json(doc, "$");
}

Json validate_p(const Json& doc, const Options&) {
  const SymmetricP P = doc.is_array() ? symmetric_p_from_json(doc, "$") : p_field(doc, false);
  Json out = to_json(P);
  out.erase("p_coefficients");
  out["degree"] = P.degree();
  return out;
}

Json sigma(const Json& doc, const Options&) {
  const SymmetricP P = p_field(doc);
  const DiffOp x = diffop_from_json(require(doc, "x", "$"), "$.x");
  return Json{{"result", to_json(apply_sigma(x, sign_field(doc), P))}};
}

Json bracket_cmd(const Json& doc, const Options&) {
  const DiffOp x = diffop_from_json(require(doc, "x", "$"), "$.x");
  const DiffOp y = diffop_from_json(require(doc, "y", "$"), "$.y");
  return Json{{"bracket", to_json(bracket_hat(x, y))}, {"psi", to_json(psi_cocycle(x, y))}};
}

Json basis(const Json& doc, const Options&) {
  const SymmetricP P = p_field(doc);
  const Sign sign = sign_field(doc);
  const long k = integer_from_json(require(doc, "k", "$"), "$.k");
  const unsigned degmax = unsigned_field(doc, "degmax", 4);
  Json elements = Json::array();
  for (const DiffOp& e : component_basis(k, degmax, sign, P)) elements.push_back(to_json(e));
  return Json{{"parity", parity_name(component_parity(k, sign, P))}, {"elements", elements}};
}

struct PhiArgs {
  DiffOp x;
  Scalar s;
  unsigned m;
  Sign sign;
};

PhiArgs phi_args(const Json& doc) {
  return {diffop_from_json(require(doc, "x", "$"), "$.x"), scalar_from_json(require(doc, "s", "$"), "$.s"),
          unsigned_field(doc, "m", 0), sign_field(doc)};
}

Json phi(const Json& doc, const Options&) {
  const PhiArgs a = phi_args(doc);
  return to_json(phi_map(a.x, a.s, a.m, a.sign));
}

Json phi_hat_cmd(const Json& doc, const Options& o) {
  const PhiArgs a = phi_args(doc);
  return to_json(phi_hat(a.x, a.s, a.m, a.sign, o.order));
}

Json cocycle(const Json& doc, const Options&) {
  if (doc.contains("x")) {
    const DiffOp x = diffop_from_json(doc["x"], "$.x");
    const DiffOp y = diffop_from_json(require(doc, "y", "$"), "$.y");
    return Json{{"psi", to_json(psi_cocycle(x, y))}};
  }
  const BandedMatrix a = banded_from_json(require(doc, "a", "$"), "$.a");
  const BandedMatrix b = banded_from_json(require(doc, "b", "$"), "$.b");
  return Json{{"C", to_json(cocycle_C(a, b))}};
}

Json membership(const Json& doc, const Options& o) {
  const Json& tj = require(doc, "tag", "$");
  if (!tj.is_string()) throw SchemaError("$.tag", "expected a string");
  const AlgebraTag tag = [&] {
    try {
      return parse_tag(tj.get<std::string>());
    } catch (const SchemaError& e) {
      throw SchemaError("$.tag", e.what());
    }
  }();
  WindowedMatrix a = window(banded_from_json(require(doc, "matrix", "$"), "$.matrix"), o.window);
  const std::string conj = doc.contains("conjugate") && doc["conjugate"].is_string() ? doc["conjugate"].get<std::string>()
                                                                                      : "none";
  if (conj == "half-inverse") {
    a = t_conjugate(a, TVariant::Half, TDirection::Inverse);
  } else if (conj == "half-forward") {
    a = t_conjugate(a, TVariant::Half, TDirection::Forward);
  } else if (conj == "integer-forward") {
    a = t_conjugate(a, TVariant::Integer, TDirection::Forward);
  } else if (conj == "integer-inverse") {
    a = t_conjugate(a, TVariant::Integer, TDirection::Inverse);
  } else if (conj != "none") {
    throw SchemaError("$.conjugate", "expected none, half-forward, half-inverse, integer-forward or integer-inverse");
  }
  MembershipOptions mo{bool_field(doc, "strict", true), unsigned_field(doc, "trim", 0)};
  const MembershipResult r = classical_membership(a, tag, mo);
  Json out{{"member", r.member}};
  if (!r.member) out["violation"] = r.violation;
  return out;
}

Json delta(const Json& doc, const Options& o) {
  const Weight w = weight_field(doc);
  return Json{{"delta", to_json(w.delta ? *w.delta : delta_series(w, o.order))},
              {"parity", parity_name(delta_parity(w.sign, w.P))}};
}

Json quasifinite(const Json& doc, const Options& o) {
  const QuasifiniteReport r = quasifinite_check(weight_field(doc), o.order, o.dmax);
  Json out{{"quasifinite", r.quasifinite}, {"order", r.order}, {"dmax", r.dmax}};
  if (r.b) out["b"] = to_json(*r.b);
  if (!r.caveat.empty()) out["caveat"] = r.caveat;
  return out;
}

Json exponents(const Json& doc, const Options& o) {
  const Weight w = weight_field(doc);
  Quasipolynomial f;
  if (w.is_closed()) {
    f = weight_f(w);
  } else {
    RecognitionOptions ro;
    ro.annihilator.dmax = o.dmax;
    if (doc.contains("candidates")) {
      std::vector<Scalar> c;
      const Json& arr = doc["candidates"];
      if (!arr.is_array()) throw SchemaError("$.candidates", "expected an array");
      for (std::size_t n = 0; n < arr.size(); ++n)
        c.push_back(scalar_from_json(arr[n], "$.candidates[" + std::to_string(n) + "]"));
      ro.candidates = c;
    }
    ro.multiplicity_degree = unsigned_field(doc, "multiplicity_degree", 2);
    f = recover_f(w, o.order, ro);
  }
  return Json{{"F", to_json(f)}, {"exponents", to_json(exponent_decompose(f))}, {"eta", to_json(eta_decompose(f))}};
}

Json realize_cmd(const Json& doc, const Options& o) { return to_json(realize(weight_field(doc), o.order)); }

Json charpoly(const Json& doc, const Options& o) {
  const CharPolyResult r = char_poly_search(weight_field(doc), o.k_bound, o.dmax, o.order);
  return Json{{"b", to_json(r.b)},
              {"characteristic", to_json(r.characteristic)},
              {"b_bracket_route", to_json(r.b_bracket_route)},
              {"b_series_route", to_json(r.b_series_route)}};
}

Json verify(const Json& doc, const Options& o) {
  VerifyOptions vo;
  vo.seed = o.seed;
  vo.order = o.order;
  vo.half_width = o.window;
  vo.dmax = o.dmax;
  vo.k_bound = o.k_bound;
  vo.sigma = o.sigma;
  vo.scope = {"all"};
  if (doc.contains("scope")) {
    const Json& arr = doc["scope"];
    if (!arr.is_array()) throw SchemaError("$.scope", "expected an array of module names");
    vo.scope.clear();
    for (std::size_t n = 0; n < arr.size(); ++n) {
      if (!arr[n].is_string()) throw SchemaError("$.scope[" + std::to_string(n) + "]", "expected a string");
      vo.scope.push_back(arr[n].get<std::string>());
    }
  }
  Json batteries = Json::array();
  bool all = true;
  for (const BatteryResult& r : run_verify(vo)) {
    Json b{{"module", r.module}, {"name", r.name}, {"trials", r.trials}, {"passed", r.passed}};
    if (!r.ok()) b["counterexample"] = r.counterexample;
    all = all && r.ok();
    batteries.push_back(b);
  }
  return Json{{"seed", o.seed}, {"all_passed", all}, {"batteries", batteries}};
}

const std::map<std::string, Handler>& handlers() {
  static const std::map<std::string, Handler> table{
      {"validate-p", validate_p}, {"sigma", sigma},         {"bracket", bracket_cmd},   {"basis", basis},
      {"phi", phi},               {"phi-hat", phi_hat_cmd}, {"cocycle", cocycle},       {"membership", membership},
      {"delta", delta},           {"quasifinite", quasifinite}, {"exponents", exponents}, {"realize", realize_cmd},
      {"charpoly", charpoly},     {"verify", verify}};
  return table;
}

}  // namespace

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names{"validate-p", "sigma",      "bracket", "basis",      "phi",
                                              "phi-hat",    "cocycle",    "membership", "delta",   "quasifinite",
                                              "exponents",  "realize",    "charpoly", "verify"};
  return names;
}

Result run(const std::string& command, const std::string& input, const Options& options) {
  auto it = handlers().find(command);
  if (it == handlers().end()) return {"", "unknown command '" + command + "'", 2};
  try {
    const bool blank = input.find_first_not_of(" \t\r\n") == std::string::npos;
    const Json doc = blank ? Json::object() : Json::parse(input);
    Json out = it->second(doc, options);
    if (command == "verify" && !out["all_passed"].get<bool>()) return {out.dump(2), "verification failed", 1};
    return {out.dump(2), "", 0};
  } catch (const Json::exception& e) {
    return {"", std::string("malformed input: ") + e.what(), 2};
  } catch (const SchemaError& e) {
    return {"", std::string("schema error at ") + e.what(), 2};
  } catch (const MathError& e) {
    return {"", e.what(), 1};
  }
}

}  // namespace qf::cli
