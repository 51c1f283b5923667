#pragma once

#include <string>
#include <vector>

#include "orbitwidth/gkm.hpp"
#include "orbitwidth/weyl.hpp"
#include "orbitwidth/width.hpp"

namespace orbitwidth {

/// { "n": ..., "vertices": [["3","1","0"], ...],
///   "edges": [{"u":0,"v":1,"swap":[i,j],"area":"p/q"}, ...] }
/// Rationals are serialized as canonical strings.
std::string gkm_to_json(const GkmGraph& g, int indent = 2);

/// Undirected DOT graph; vertices labeled with their vectors, edges labeled
/// area=p/q.
std::string gkm_to_dot(const GkmGraph& g);

/// { "n", "flag_type", "upper", "upper_pair", "lower", "lower_applicable",
///   "exact", "degenerate", "regular" }; absent bounds are null.
std::string width_report_to_json(const WidthReport& r, int indent = 2);

/// Representatives as one-line notation arrays: [[1,2,3],[2,1,3],...]
std::string reps_to_json(const std::vector<CosetRep>& reps, int indent = 2);

}  // namespace orbitwidth
