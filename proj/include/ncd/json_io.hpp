#pragma once

#include "ncd/hopf.hpp"
#include "ncd/parking.hpp"
#include "ncd/parking_tree.hpp"
#include "ncd/partition.hpp"
#include "ncd/plane_tree.hpp"
#include "ncd/poset.hpp"
#include "ncd/series.hpp"

#include <json.hpp>

namespace ncd {

using Json = nlohmann::json;

// {"n": 11, "blocks": [[1],[2,9,10],[3],[4,5,6,7,8],[11]]}
Json to_json(const NoncrossingPartition& pi);
NoncrossingPartition partition_from_json(const Json& j);

// {"n":..., "d":..., "elements":[partition...], "covers":[[i,j]...]}
Json to_json(const GradedPoset& p);
GradedPoset poset_from_json(const Json& j);

// {"shape": nested child arrays, "labels": preorder parent-edge labels}
Json to_json(const LabeledPlaneTree& t);
LabeledPlaneTree labeled_tree_from_json(const Json& j);

// {"d":2, "k":5, "tree": nested [label, [children...]]}, label "inf" or [i,j]
Json to_json(const DParkingTree& t);
DParkingTree parking_tree_from_json(const Json& j);

// {"d":2, "values":[2,1,3,1,3]}
Json to_json(const DParkingFunction& pf);
DParkingFunction parking_function_from_json(const Json& j);

// {"order":..., "terms":[{"x":k,"s":i,"t":j,"num":...,"den":...}...]}
Json to_json(const Series& s);
Series series_from_json(const Json& j);

// [{"sizes":[...], "coeff":...}...] sorted canonically
Json to_json(const HopfElement& h);

} // namespace ncd
