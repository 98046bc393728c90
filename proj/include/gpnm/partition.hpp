#pragma once

#include <string>
#include <vector>

#include "gpnm/distance.hpp"
#include "gpnm/graph.hpp"

namespace gpnm {

struct Partition {
  Label label;
  std::vector<NodeId> members;
  std::vector<std::pair<NodeId, NodeId>> intra_edges;
  // Cross-partition edges are recorded in the partition of the source node.
  std::vector<std::pair<NodeId, NodeId>> cross_edges;
  std::vector<NodeId> inner_bridge;  // IB: members with an edge leaving the partition
  std::vector<NodeId> outer_bridge;  // OB: outside targets of such edges
};

struct PartitionSet {
  std::vector<Partition> partitions;     // sorted by label
  std::vector<std::uint32_t> member_of;  // node id -> index into partitions

  const Partition* find(const Label& l) const;
};

// Multi-label nodes go to the partition of their lexicographically smallest
// label; correctness of the partitioned APSP does not depend on the choice.
PartitionSet partition_by_label(const DataGraph& g);

// Shortest paths between nodes sharing a partition (and, as a byproduct, all
// pairs inside one combined-partition group). Entries for pairs in different
// groups stay infinite.
DistanceMatrix intra_partition_apsp(const DataGraph& g, const PartitionSet& parts);

// Completes the matrix with cross-partition distances by composing
// intra-partition distances over bridge crossings (one hop per crossing).
DistanceMatrix inter_partition_apsp(const DataGraph& g, const PartitionSet& parts,
                                    const DistanceMatrix& intra);

// Full pipeline; result is entry-for-entry identical to apsp_baseline.
DistanceMatrix partitioned_apsp(const DataGraph& g);

}  // namespace gpnm
