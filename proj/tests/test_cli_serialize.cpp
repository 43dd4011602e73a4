#include "doctest.h"
#include "qf/cli.hpp"
#include "qf/error.hpp"
#include "qf/serialize.hpp"
#include "qf/verify.hpp"

using namespace qf;

namespace {

const std::string worked_weight = R"({"p": ["0", "1"], "sign": "-", "c0": "0",
  "phi": [{"exponent": "1", "multiplicity_coefficients": ["1/2"]},
          {"exponent": "-1", "multiplicity_coefficients": ["1/2"]},
          {"exponent": "0", "multiplicity_coefficients": ["-1"]}]})";

Json run_ok(const std::string& command, const std::string& input, const cli::Options& o = {}) {
  const cli::Result r = cli::run(command, input, o);
  INFO(r.diagnostic);
  REQUIRE(r.exit_code == 0);
  return Json::parse(r.output);
}

}  // namespace

TEST_CASE("scalar and polynomial encoding") {
  CHECK(to_json(Scalar(-3, 6)) == "-1/2");
  CHECK(to_json(Scalar(1, 2) + Scalar::imag_unit() * Scalar(3, 4)).get<std::string>() == "1/2+3/4*i");
  CHECK(scalar_from_json(Json("2/4"), "$") == Scalar(1, 2));
  CHECK(scalar_from_json(Json(7), "$") == Scalar(7));
  CHECK(to_json(Polynomial{1, 0, 2}).dump() == R"(["1","0","2"])");
  try {
    scalar_from_json(Json(1.5), "$.x");
    FAIL("float accepted");
  } catch (const SchemaError& e) {
    CHECK(e.path() == "$.x");
  }
}

TEST_CASE("series encoding keeps valuation") {
  const Series s = Series::sinh(Scalar(1, 2), 6);
  const Json j = to_json(s);
  CHECK(j["order"] == 6);
  CHECK(j["valuation"] == 1);
  CHECK(series_from_json(j, "$") == s);
  CHECK(series_from_json(to_json(Series(5)), "$") == Series(5));
  CHECK_THROWS_AS(series_from_json(Json::parse(R"({"order": 1, "coefficients": ["1", "2", "3"]})"), "$"), SchemaError);
}

TEST_CASE("serialization round-trips") { CHECK(battery_serialization(77, 20).ok()); }

TEST_CASE("validate-p") {
  const Json out = run_ok("validate-p", R"({"p": [0, 1]})");
  CHECK(out["epsilon"] == "-1");
  CHECK(out["c"] == "0");
  CHECK(run_ok("validate-p", R"(["0", "-1", "1"])")["c"] == "1");
  const cli::Result bad = cli::run("validate-p", R"({"p": [0, 0, 1, 1]})");
  CHECK(bad.exit_code == 1);
  CHECK_FALSE(bad.diagnostic.empty());
  CHECK(run_ok("validate-p", R"({"p": [1], "c": "3"})")["c"] == "3");
  // Constant p: acting commands need the center.
  const std::string x = R"("x": {"terms": [{"k": 1, "f_coefficients": [0, 1]}]})";
  const cli::Result no_c = cli::run("sigma", R"({"p": [1], "sign": "+", )" + x + "}");
  CHECK(no_c.exit_code == 2);
  CHECK(no_c.diagnostic.find("$.c") != std::string::npos);
  CHECK(run_ok("sigma", R"({"p": [1], "c": "0", "sign": "+", )" + x + "}")["result"]["terms"][0]["k"] == 1);
}

TEST_CASE("algebra commands") {
  const Json b = run_ok("bracket", R"({"x": {"terms": [{"k": 2, "f_coefficients": ["1"]}]},
                                       "y": {"terms": [{"k": -2, "f_coefficients": ["1"]}]}})");
  CHECK(b["psi"] == "2");
  CHECK(b["bracket"]["central"] == "2");
  CHECK(b["bracket"]["terms"].empty());
  const Json s = run_ok("sigma", R"({"p": ["0", "1"], "sign": "+", "x": {"terms": [{"k": 1, "f_coefficients": [0, 1]}]}})");
  CHECK(s["result"]["terms"][0]["f_coefficients"].dump() == R"(["0","-1"])");
  const Json basis = run_ok("basis", R"({"p": [0, 1], "sign": "+", "k": 0, "degmax": 5})");
  CHECK(basis["elements"].size() == 3);
  CHECK(basis["parity"] == "even");
  const Json phi = run_ok("phi", R"({"x": {"terms": [{"k": 1, "f_coefficients": [0, 1]}]}, "s": "1/4", "sign": "+"})");
  CHECK(phi["diagonals"][0]["k"] == 1);
  const Json hat = run_ok("phi-hat", R"({"x": {"terms": [{"k": 0, "f_coefficients": [0, 1]}]}, "s": "1/3", "sign": "+"})");
  CHECK(hat["central_coefficients"][0] == "1/9");
  const Json c = run_ok("cocycle", R"({"a": {"m": 0, "overlay": [{"i": 0, "j": 1, "coeffs": ["1"]}]},
                                       "b": {"m": 0, "overlay": [{"i": 1, "j": 0, "coeffs": ["1"]}]}})");
  CHECK(c["C"].dump() == R"(["1"])");
  const Json m = run_ok("membership", R"({"matrix": {"m": 0, "overlay": [{"i": 0, "j": 1, "coeffs": ["1"]}]}, "tag": "d"})");
  CHECK(m["member"] == false);
}

TEST_CASE("weight commands on the worked example") {
  const Json r = run_ok("realize", worked_weight);
  REQUIRE(r["factors"].size() == 1);
  CHECK(r["factors"][0]["tag"] == "d");
  CHECK_FALSE(r["factors"][0]["conflicts"].empty());
  const Json d = run_ok("delta", worked_weight);
  CHECK(d["parity"] == "odd");
  CHECK(run_ok("quasifinite", worked_weight)["quasifinite"] == true);
  const Json e = run_ok("exponents", worked_weight);
  CHECK(e["exponents"]["even_type"].size() == 2);
  const Json cp = run_ok("charpoly", worked_weight);
  CHECK(cp["b"].dump() == R"(["0","-1","0","1"])");
  // Series form with verification candidates.
  Json series = Json::parse(worked_weight);
  series.erase("phi");
  series["delta"] = d["delta"];
  series["candidates"] = {"1", "0"};
  CHECK(run_ok("exponents", series.dump())["F"] == e["F"]);
}

TEST_CASE("malformed input") {
  const cli::Result r = cli::run("bracket", "{\"x\": [");
  CHECK(r.exit_code == 2);
  const cli::Result s = cli::run("bracket", R"({"x": {"terms": [{"k": "a", "f_coefficients": []}]}, "y": {"terms": []}})");
  CHECK(s.exit_code == 2);
  CHECK(s.diagnostic.find("$.x.terms[0].k") != std::string::npos);
  CHECK(cli::run("sigma", R"({"p": [0, 1], "sign": "*", "x": {"terms": []}})").exit_code == 2);
  CHECK(cli::run("no-such-command", "{}").exit_code == 2);
  const cli::Result w = cli::run("realize", R"({"p": [0, 1], "sign": "+", "phi": [], "delta": {"order": 2, "coefficients": []}})");
  CHECK(w.exit_code == 2);
}

TEST_CASE("output is byte-identical across runs") {
  const cli::Result a = cli::run("realize", worked_weight), b = cli::run("realize", worked_weight);
  CHECK(a.output == b.output);
  cli::Options o;
  o.seed = 5;
  const std::string scope = R"({"scope": ["exact-core", "cli"]})";
  CHECK(cli::run("verify", scope, o).output == cli::run("verify", scope, o).output);
}

TEST_CASE("verify scopes and mutation") {
  const Json empty = run_ok("verify", R"({"scope": []})");
  CHECK(empty["batteries"].empty());
  CHECK(empty["all_passed"] == true);
  CHECK(run_ok("verify", R"({"scope": ["diffop-algebra"]})")["all_passed"] == true);
  CHECK(cli::run("verify", R"({"scope": ["topology"]})").exit_code == 2);
  cli::Options o;
  o.sigma = [](const DiffOp& x, Sign s, const SymmetricP& P) { return -apply_sigma(x, s, P); };
  const cli::Result r = cli::run("verify", R"({"scope": ["involutions"]})", o);
  CHECK(r.exit_code == 1);
  const Json report = Json::parse(r.output);
  bool caught = false;
  for (const auto& b : report["batteries"])
    if (b["name"] == "anti-involution laws") {
      caught = b.contains("counterexample");
      CHECK(b["counterexample"].get<std::string>().find("X = ") != std::string::npos);
    }
  CHECK(caught);
}
