#pragma once

#include <json.hpp>

#include "iceschur/combinatorics.hpp"
#include "iceschur/lattice.hpp"
#include "iceschur/polynomial.hpp"
#include "iceschur/schur.hpp"

namespace iceschur {

using Json = nlohmann::json;

// [{"coeff": "p/q", "exps": {"z1": 2, "a3": 1}}, ...] in canonical term order.
Json to_json(const Polynomial& p);
Polynomial polynomial_from_json(const Json& j);

Json to_json(const Partition& p);
Partition partition_from_json(const Json& j);

Json to_json(const Tableau& t);
Tableau tableau_from_json(const Json& j);

Json to_json(const GTPattern& g);
GTPattern gt_from_json(const Json& j);

Json to_json(const Staircase& s);
Staircase staircase_from_json(const Json& j);

Json to_json(const Permutation& w);
Permutation permutation_from_json(const Json& j);

// {"lambda": [...], "n": k, "method": "...", "value": <polynomial>}
Json to_json(const SchurResult& r);
SchurResult schur_result_from_json(const Json& j);

// {"gt": [...], "columns": [cols..1], "classes": [[...]], "weight": <polynomial>}
// Class rows are listed left to right, i.e. by descending column label.
Json state_to_json(const LatticeSystem& s, const LatticeState& st);
LatticeState state_from_json(const Json& j);

}  // namespace iceschur
