#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "gpnm/common.hpp"

namespace gpnm {

using Label = std::string;

// Bounded path length on a pattern edge: a positive hop count or "*".
struct PathBound {
  std::uint32_t hops = 0;  // meaningful only when !unbounded
  bool unbounded = false;

  static PathBound star() { return PathBound{0, true}; }
  static PathBound k(std::uint32_t hops) { return PathBound{hops, false}; }

  // A distance satisfies "*" when any path exists at all.
  bool admits(Dist d) const { return unbounded ? d != kInf : d != kInf && d <= hops; }

  bool operator==(const PathBound&) const = default;
};

std::string to_string(const PathBound& b);

// Directed labeled graph. Node ids are dense on load and stay stable across
// update application; deleted ids are never reused within a session.
class DataGraph {
 public:
  NodeId add_node(std::vector<Label> labels);
  void add_node_with_id(NodeId id, std::vector<Label> labels);
  void remove_node(NodeId id);  // cascades incident edges
  void add_edge(NodeId from, NodeId to);
  void remove_edge(NodeId from, NodeId to);

  bool has_node(NodeId id) const { return id < alive_.size() && alive_[id]; }
  bool has_edge(NodeId from, NodeId to) const;
  bool has_label(NodeId id, const Label& l) const;
  const std::vector<Label>& labels(NodeId id) const { return labels_[id]; }

  const std::vector<NodeId>& out_neighbors(NodeId id) const { return out_[id]; }
  const std::vector<NodeId>& in_neighbors(NodeId id) const { return in_[id]; }

  std::size_t node_count() const { return alive_count_; }
  std::size_t edge_count() const { return edge_count_; }
  // One past the largest id ever allocated; array-shaped per-node state in the
  // distance and matcher modules is sized by this.
  std::size_t id_bound() const { return alive_.size(); }

  std::vector<NodeId> nodes() const;

  bool operator==(const DataGraph& other) const;

 private:
  std::vector<bool> alive_;
  std::vector<std::vector<Label>> labels_;
  std::vector<std::vector<NodeId>> out_;
  std::vector<std::vector<NodeId>> in_;
  std::size_t alive_count_ = 0;
  std::size_t edge_count_ = 0;
};

// Pattern graph: single label per node, bounded edges.
class PatternGraph {
 public:
  NodeId add_node(Label label);
  void add_node_with_id(NodeId id, Label label);
  void remove_node(NodeId id);
  void add_edge(NodeId from, NodeId to, PathBound bound);
  void remove_edge(NodeId from, NodeId to);

  bool has_node(NodeId id) const { return id < alive_.size() && alive_[id]; }
  bool has_edge(NodeId from, NodeId to) const;
  const Label& label(NodeId id) const { return labels_[id]; }
  PathBound bound(NodeId from, NodeId to) const;

  struct Edge {
    NodeId from;
    NodeId to;
    PathBound bound;
  };
  std::vector<Edge> edges() const;
  std::vector<Edge> out_edges(NodeId from) const;
  std::vector<Edge> in_edges(NodeId to) const;

  std::size_t node_count() const { return alive_count_; }
  std::size_t edge_count() const;
  std::size_t id_bound() const { return alive_.size(); }
  std::vector<NodeId> nodes() const;

  bool operator==(const PatternGraph& other) const;

 private:
  std::vector<bool> alive_;
  std::vector<Label> labels_;
  std::map<std::pair<NodeId, NodeId>, PathBound> edges_;
  std::size_t alive_count_ = 0;
};

enum class UpdateTarget : std::uint8_t { Pattern, Data };
enum class UpdateKind : std::uint8_t { InsertEdge, DeleteEdge, InsertNode, DeleteNode };

inline bool is_insertion(UpdateKind k) {
  return k == UpdateKind::InsertEdge || k == UpdateKind::InsertNode;
}
inline bool is_edge_update(UpdateKind k) {
  return k == UpdateKind::InsertEdge || k == UpdateKind::DeleteEdge;
}

struct Update {
  UpdateTarget target = UpdateTarget::Data;
  UpdateKind kind = UpdateKind::InsertEdge;
  NodeId u = 0;                      // edge source, or the node for node updates
  NodeId v = 0;                      // edge target (edge updates only)
  std::optional<PathBound> bound;    // pattern edge inserts only
  std::vector<Label> labels;         // node inserts only
  std::size_t ordinal = 0;           // position in batch

  // Content key: identifies the updated element independent of batch position.
  // Used for annihilation pairing, deterministic tie-breaks and debug dumps.
  std::string key() const;
};

struct UpdateBatch {
  std::vector<Update> updates;

  std::size_t size() const { return updates.size(); }
  bool empty() const { return updates.empty(); }

  // Drops insert/delete pairs of the identical element (either order) and
  // renumbers ordinals.
  void annihilate();
};

// Applies one update; throws ValidationError when a delete references an
// absent element or an insert references a present one.
void apply_update(DataGraph& g, const Update& u);
void apply_update(PatternGraph& g, const Update& u);

}  // namespace gpnm
