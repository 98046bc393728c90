#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "gpnm/graph.hpp"

namespace gpnm {

// All-pairs shortest path lengths (hop counts), indexed by node id. Rows and
// columns of deleted ids go stale; consumers consult the graph's alive set.
class DistanceMatrix {
 public:
  DistanceMatrix() = default;
  explicit DistanceMatrix(std::size_t id_bound);

  Dist at(NodeId u, NodeId v) const { return d_[std::size_t(u) * bound_ + v]; }
  void set(NodeId u, NodeId v, Dist d) { d_[std::size_t(u) * bound_ + v] = d; }

  std::size_t id_bound() const { return bound_; }

  // Extends to new_bound; fresh rows/columns are infinity with a zero diagonal.
  void grow(std::size_t new_bound);

  std::string to_csv(const DataGraph& g) const;
  static DistanceMatrix from_csv(const std::string& text);

 private:
  std::size_t bound_ = 0;
  std::vector<Dist> d_;
};

struct DistanceChange {
  NodeId source;
  NodeId target;
  Dist before;
  Dist after;

  bool operator==(const DistanceChange&) const = default;
};

// Hop-count single-source shortest path lengths; unreachable ids map to kInf.
std::vector<Dist> dijkstra_sssp(const DataGraph& g, NodeId source);

DistanceMatrix apsp_baseline(const DataGraph& g);

// ---- incremental maintenance ----

// Pairs improved by inserting edge (u, v), computed against the pre-insert
// matrix. Pure read; the caller applies the changes.
std::vector<DistanceChange> changes_for_edge_insert(const DistanceMatrix& m, const DataGraph& g,
                                                    NodeId u, NodeId v);

// Describes removed elements for a single delete-type update.
struct Removal {
  std::vector<std::pair<NodeId, NodeId>> edges;  // removed directed edges
  std::optional<NodeId> node;                    // removed node, if a node delete
};

// Pairs whose distance grows after the removal. `g` may be either the
// pre-removal graph (set graph_updated=false; the removal is masked during
// adjacency walks) or the already-mutated graph (graph_updated=true). The
// matrix is always the pre-removal one. Only pairs between surviving nodes are
// reported.
std::vector<DistanceChange> changes_for_removal(const DistanceMatrix& m, const DataGraph& g,
                                                const Removal& r, bool graph_updated);

void apply_changes(DistanceMatrix& m, const std::vector<DistanceChange>& changes);

// Full contract of the spec operation: returns the post-update matrix and the
// exact change set. Unchanged entries are carried over, not recomputed.
std::pair<DistanceMatrix, std::vector<DistanceChange>> update_distances(
    const DistanceMatrix& m, const DataGraph& graph_before, const Update& u);

// Entry-for-entry equality over alive pairs of g.
bool matrices_equal(const DataGraph& g, const DistanceMatrix& a, const DistanceMatrix& b);

}  // namespace gpnm
