#pragma once

#include "bip/check.hpp"
#include "bip/faces.hpp"
#include "bip/gamma.hpp"
#include "bip/hull_oracle.hpp"
#include "bip/lattice.hpp"
#include "bip/order.hpp"
#include "bip/skeleton.hpp"

#include <json.hpp>

#include <string>

namespace bip {

using nlohmann::json;

json to_json(const IntervalPoset& poset);
/// Interval poset schema plus "degrees".
json to_json(const Skeleton& sk);
json to_json(const LabeledDag& g);
json to_json(const ThetaClass& c);
/// {"w", "dim", "f", "h", "simple", "smooth": {...}}.
json face_vector_json(const Skeleton& sk);
json to_json(const SmoothnessWitness& s);
json to_json(const OracleEdges& e, const Permutation& w);
json to_json(const OracleFaces& f, const Permutation& w);
/// Wall time is only included when asked for, so reports compare byte for byte.
json to_json(const SweepReport& r, bool timing = false);

/// Hasse diagram with covers pointing upwards.
std::string to_dot(const IntervalPoset& poset, const std::string& name);

} // namespace bip
