#pragma once

#include "tropcheck/analysis.hpp"
#include "tropcheck/clarke.hpp"

#include <json.hpp>

namespace tropcheck {

// Every rational is emitted as a "p/q" string (just "p" for integers).
using Json = nlohmann::ordered_json;

Json to_json(std::span<const Rational> v);
Json to_json(const MatrixQ& m);
Json to_json(const Polyhedron& p);
Json to_json(const LinearPiece& p);
Json to_json(const Decomposition& d);
Json to_json(const Preimage& p);
Json to_json(const ClarkeSet& c);
Json to_json(const AnalysisReport& r);

}  // namespace tropcheck
