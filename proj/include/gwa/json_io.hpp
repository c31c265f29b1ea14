#pragma once

#include <json.hpp>

#include "gwa/growth.hpp"
#include "gwa/laurent_auto.hpp"
#include "gwa/plane_classify.hpp"
#include "gwa/smc.hpp"

namespace gwa {

using json = nlohmann::json;

json to_json(const IntMatrix& m);
IntMatrix intmatrix_from_json(const json& j);

/// {"n": 2, "matrix": [[-1,2],[0,1]], "alpha": ["1","3/2"]}
json to_json(const LaurentAuto& a);
LaurentAuto laurent_auto_from_json(const json& j);

/// {"f": ["z2", "z1 + z2^2"]}
json to_json(const PlaneEndo& e);
PlaneEndo plane_endo_from_json(const json& j);

json to_json(const TameWord& w);
json to_json(const TriangularAuto& t);
json to_json(const LaneForm& lane);
json to_json(const OrderVerdict& v);
json to_json(const GrowthReport& r);
json to_json(const SandwichReport& r);
json to_json(const SMCReport& r);

/// {"base": {"kind": "polynomial"|"laurent", "n": 2}, "sigma": ..., "a": "..."}
/// where sigma is a LaurentAuto object for Laurent bases and {"f": [...]} for
/// polynomial bases (one coordinate for n = 1, two for n = 2).
json to_json(const GWASpec& spec);
GWASpec gwa_spec_from_json(const json& j);

} // namespace gwa
