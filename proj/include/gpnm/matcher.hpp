#pragma once

#include <map>
#include <string>
#include <vector>

#include "gpnm/distance.hpp"
#include "gpnm/graph.hpp"

namespace gpnm {

// Per pattern node, the sorted set of matching data nodes. A result where some
// pattern node matched nothing collapses to the all-empty result.
struct MatchResult {
  std::map<NodeId, std::vector<NodeId>> matches;

  bool all_empty() const;
  bool any_empty() const;
  MatchResult collapsed() const;

  // "pattern_node: id1,id2,..." lines, order-normalized.
  std::string serialize() const;

  bool operator==(const MatchResult&) const = default;
};

// Maximal bounded-simulation relation, projected per pattern node. slen must
// be the APSP matrix of data.
MatchResult match_nodes(const PatternGraph& pattern, const DataGraph& data,
                        const DistanceMatrix& slen);

// Same fixpoint semantics but without the collapse, for result maintenance
// across a batch.
MatchResult match_nodes_raw(const PatternGraph& pattern, const DataGraph& data,
                            const DistanceMatrix& slen);

// Independent oracle: own BFS distances, own fixpoint loop, no shared code
// with match_nodes.
MatchResult brute_force_match(const PatternGraph& pattern, const DataGraph& data);

// Re-evaluates only pairs involving touched nodes (plus cascading dependents)
// against the post-update state. prev must be the correct result for the
// pre-update state; pattern/data/slen_new describe the post-update state.
MatchResult incremental_match(const PatternGraph& pattern, const DataGraph& data,
                              const DistanceMatrix& slen_new, const MatchResult& prev,
                              const Update& update, const std::vector<NodeId>& touched);

// Engine-facing variant on uncollapsed results; allow_additions may be cleared
// for tightening-only batches to skip the optimistic re-admission stage.
MatchResult incremental_match_raw(const PatternGraph& pattern, const DataGraph& data,
                                  const DistanceMatrix& slen_new, const MatchResult& prev_raw,
                                  const Update& update, const std::vector<NodeId>& touched,
                                  bool allow_additions = true);

// Label-compatible data nodes for one pattern node, sorted.
std::vector<NodeId> compatible_nodes(const PatternGraph& pattern, NodeId p, const DataGraph& data);

std::uint64_t result_digest(const MatchResult& r);

}  // namespace gpnm
