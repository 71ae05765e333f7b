#pragma once

#include <nlohmann/json.hpp>

#include "hermite/invariant_hunter.hpp"
#include "hermite/isomorphisms.hpp"
#include "hermite/polyring.hpp"
#include "hermite/tensor_spaces.hpp"

namespace hermite {

using json = nlohmann::ordered_json;

json partition_to_json(const Partition& p);
Partition partition_from_json(const json& j);

json descriptor_to_json(const SpaceDescriptor& d);
SpaceDescriptor descriptor_from_json(const json& j);

// {"space": {...}, "terms": [{"index": [...], "coeff": "..."}]}
json sparse_vector_to_json(const SparseVector& v);
SparseVector sparse_vector_from_json(const json& j);

// {"field": "...", "ell": n, "vars": "x11,...", "terms": [{"exps": [...], "coeff": "..."}]}
json polynomial_to_json(const Polynomial& p);
Polynomial polynomial_from_json(const json& j);

json space_ref_to_json(const SpaceRef& r);
json linear_map_to_json(const LinearMapMatrix& m);

json invariant_report_to_json(const InvariantReport& r);
json listed_invariants_to_json(const ListedInvariantsReport& r);

} // namespace hermite
