#pragma once

// JSON forms of the library's values.

#include "macq/graphs.hpp"
#include "macq/macdonald.hpp"
#include "macq/symfunc.hpp"

#include <json.hpp>

#include <string>

namespace macq {

using json = nlohmann::json;

/// [{"q":0,"t":1,"u":0,"c":"2"}, ...] in canonical term order.
json to_json(const MPoly& p);
MPoly mpoly_from_json(const json& j);

json to_json(const Partition& p);
Partition partition_from_json(const json& j);

/// {"shape":[...],"rows":[[...],...]}, rows bottom first.
json to_json(const Filling& f);
Filling filling_from_json(const json& j);

/// {"vertices":3,"edges":[[1,2],[3,3]],"root":1}
json to_json(const Multigraph& g);
Multigraph multigraph_from_json(const json& j);
Multigraph load_multigraph(const std::string& path);

/// {"degree":3,"basis":"m","coeffs":{"[2,1]":"1"}}
json to_json(const SymFunc& f);
SymFunc symfunc_from_json(const json& j);

/// {"partitions":[[2,1],[1]]}
json to_json(const CumulantProblem& p);

json to_json(const QSymExpansion& f);

} // namespace macq
