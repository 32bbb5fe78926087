#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "twistlab/absred.hpp"
#include "twistlab/hochschild.hpp"
#include "twistlab/oracle.hpp"

namespace twistlab::io {

using nlohmann::json;

inline constexpr int kSchemaVersion = 1;

/// Malformed or inconsistent JSON input.
class ParseError : public InvalidInput {
public:
    using InvalidInput::InvalidInput;
};

json to_json(const Scalar& s);
Scalar scalar_from_json(const json& j, const Field& f);

json to_json(const Vector& v);
Vector vector_from_json(const json& j, const Field& f);

/// Row-major array of rows.
json matrix_rows(const Matrix& m);
Matrix matrix_from_rows(const json& j, const Field& f);

/// {"dimension", "field", "entries"}.
json to_json(const Matrix& m);
Matrix endo_from_json(const json& j);

json to_json(const Algebra& a);
Algebra algebra_from_json(const json& j, const Field& f);

json to_json(const Quiver& q);
Quiver quiver_from_json(const json& j);

/// {"n", "m", "field", "E"} plus "algebra" when A is not K^m.
json to_json(const EGrid& g);
EGrid grid_from_json(const json& j);

/// {"schema_version", "seed", "count", "grids"}.
json gridset_to_json(const GridSet& s, std::uint64_t seed);
/// Accepts the wrapper or a bare array of grids.
GridSet gridset_from_json(const json& j);

json to_json(const CycleDatum& d);
CycleDatum cycle_datum_from_json(const json& j, const Field& f);
json to_json(const RankOneDatum& d);
json to_json(const CycleFamily& fam);

json to_json(const AxiomReport& r);

/// {"dim", "unit", "structure"} with structure[a * dim + b] = b_a b_b.
json twisted_algebra_json(const Algebra& a);

json to_json(const OmegaMatrix& w);
OmegaMatrix omega_from_json(const json& j, const Field& f);

json to_json(const NormalizedMatrix& nm);
json to_json(const Canonical2& c);

json to_json(const HochschildData& h);
HochschildData hochschild_from_json(const json& j);

json read_file(const std::string& path);
void write_file(const std::string& path, const json& j);

} // namespace twistlab::io
