#pragma once

#include <string>

#include "json.hpp"
#include "qf/banded_matrix.hpp"
#include "qf/diffop.hpp"
#include "qf/involution.hpp"
#include "qf/labels.hpp"
#include "qf/quasipolynomial.hpp"
#include "qf/series.hpp"
#include "qf/weight.hpp"
#include "qf/windowed_matrix.hpp"

namespace qf {

using Json = nlohmann::ordered_json;

// Writers produce canonical output: scalars as "a/b" or "a/b+c/d*i",
// maps in ascending key order. Readers take the JSON path used in
// SchemaError diagnostics.

Json to_json(const Scalar& s);
Json to_json(const Polynomial& p);
Json to_json(const TruncPoly& t);
Json to_json(const Series& s);
Json to_json(const Quasipolynomial& q);
Json to_json(const DiffOp& d);
Json to_json(const SymmetricP& P);
Json to_json(const IndexPoly& p);
Json to_json(const BandedMatrix& a);
Json to_json(const WindowedMatrix& a);
Json to_json(const Weight& w);
Json to_json(const ExponentData& e);
Json to_json(const EtaData& e);
Json to_json(const MatrixLabels& ml);
Json to_json(const Realization& r);

Scalar scalar_from_json(const Json& j, const std::string& path);
Polynomial polynomial_from_json(const Json& j, const std::string& path);
TruncPoly trunc_poly_from_json(const Json& j, unsigned m, const std::string& path);
Series series_from_json(const Json& j, const std::string& path);
Quasipolynomial quasipolynomial_from_json(const Json& j, const std::string& path);
DiffOp diffop_from_json(const Json& j, const std::string& path);
SymmetricP symmetric_p_from_json(const Json& j, const std::string& path);
BandedMatrix banded_from_json(const Json& j, const std::string& path);
Weight weight_from_json(const Json& j, const std::string& path);
MatrixLabels labels_from_json(const Json& j, const std::string& path);
Realization realization_from_json(const Json& j, const std::string& path);
Sign sign_from_json(const Json& j, const std::string& path);

const Json& require(const Json& j, const std::string& key, const std::string& path);
long integer_from_json(const Json& j, const std::string& path);

}  // namespace qf
