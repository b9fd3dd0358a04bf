#pragma once

#include "glmn/module.hpp"
#include "glmn/relations.hpp"
#include "glmn/verify.hpp"

#include <json.hpp>

#include <string>

namespace glmn {

using Json = nlohmann::ordered_json;

// All rationals serialize as strings ("p" or "p/q"), never as floats. Key
// order and set ordering are fixed, so equal inputs give byte-equal output.

Json to_json(const Shape& shape);
Shape shape_from_json(const Json& j);

Json to_json(const Shape& shape, const Weight& w);  // {"m","n","lambda"}
std::pair<Shape, Weight> weight_from_json(const Json& j);

Json to_json(const Tableau& t);  // {"m","n","rows"} with row 1 first
Tableau tableau_from_json(const Json& j);

Json to_json(const RelationSet& c);  // {"n","pairs":[{"from","to","class"}]}
RelationSet relation_set_from_json(const Json& j);

Json to_json(const SuperRelationSet& c);  // {"m","n","c1","c2"}
SuperRelationSet super_set_from_json(const Json& j);

// {"gen": "e1"} or {"bracket": [lhs, rhs]}; relation expressions round-trip.
Json to_json(const BracketExpr& e);
BracketExpr bracket_expr_from_json(const Json& j);
Json to_json(const RelationExpr& r);
RelationExpr relation_expr_from_json(const Json& j);

// Module description sufficient to rebuild: shape, mode, cap/radius, seed,
// relations, plus the enumerated basis. Matrices are optional sparse
// triplets per generator.
Json module_to_json(const ModuleSpace& mod, bool with_matrices = false);
ModuleSpace module_from_json(const Json& j);

Json to_json(const VerificationReport& r);

std::string canonical_dump(const Json& j);  // two-space indent, '\n'-terminated

}  // namespace glmn
