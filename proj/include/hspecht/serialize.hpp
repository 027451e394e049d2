#ifndef HSPECHT_SERIALIZE_HPP
#define HSPECHT_SERIALIZE_HPP

#include "json.hpp"

#include "hspecht/decomp.hpp"
#include "hspecht/group_algebra.hpp"
#include "hspecht/weyl.hpp"

namespace hspecht {

using Json = nlohmann::ordered_json;

Json to_json(const BlockStructure& b);
Json to_json(const Partition& p);
Json to_json(const MultiDiagram& d);
/// {"block": [..], "components": [grid, ...]}
Json to_json(const MultiTableau& t);
Json to_json(const IndexTableau& t);
Json to_json(const Permutation& p);
/// [{"exponents": [..], "coeff": "p/q"}, ...] in graded-lex order.
Json to_json(const Polynomial& f);
/// [{"x": [..], "d": [..], "coeff": "p/q"}, ...]
Json to_json(const DifferentialOperator& op);
/// [{"perm": [..], "coeff": "p/q"}, ...]
Json to_json(const GroupAlgebraElement& a);
Json to_json(const HigherSpechtKey& key);
/// {"generators": [...], "coefficients": [...]}
Json to_json(const DecompositionResult& r);
Json to_json(const GradedSeries& s);

MultiTableau multi_tableau_from_json(const Json& j);
Polynomial polynomial_from_json(const Json& j, int n);
DifferentialOperator operator_from_json(const Json& j, int n);

}  // namespace hspecht

#endif
