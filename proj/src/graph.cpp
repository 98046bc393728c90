#include "gpnm/graph.hpp"

#include <algorithm>
#include <unordered_map>

namespace gpnm {

std::string to_string(const PathBound& b) {
  return b.unbounded ? "*" : std::to_string(b.hops);
}

namespace {

void erase_value(std::vector<NodeId>& vec, NodeId v) {
  vec.erase(std::remove(vec.begin(), vec.end(), v), vec.end());
}

}  // namespace

NodeId DataGraph::add_node(std::vector<Label> labels) {
  NodeId id = NodeId(alive_.size());
  add_node_with_id(id, std::move(labels));
  return id;
}

void DataGraph::add_node_with_id(NodeId id, std::vector<Label> labels) {
  if (has_node(id)) throw ValidationError("insert of present node " + std::to_string(id));
  if (labels.empty()) throw ValidationError("node " + std::to_string(id) + " has no label");
  if (id >= alive_.size()) {
    alive_.resize(id + 1, false);
    labels_.resize(id + 1);
    out_.resize(id + 1);
    in_.resize(id + 1);
  }
  alive_[id] = true;
  std::sort(labels.begin(), labels.end());
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
  labels_[id] = std::move(labels);
  ++alive_count_;
}

void DataGraph::remove_node(NodeId id) {
  if (!has_node(id)) throw ValidationError("delete of absent node " + std::to_string(id));
  for (NodeId t : out_[id]) erase_value(in_[t], id);
  for (NodeId s : in_[id]) erase_value(out_[s], id);
  edge_count_ -= out_[id].size() + in_[id].size();
  out_[id].clear();
  in_[id].clear();
  labels_[id].clear();
  alive_[id] = false;
  --alive_count_;
}

void DataGraph::add_edge(NodeId from, NodeId to) {
  if (!has_node(from) || !has_node(to))
    throw ValidationError("edge endpoint missing: " + std::to_string(from) + "->" + std::to_string(to));
  if (from == to) throw ValidationError("self-loop rejected: " + std::to_string(from));
  if (has_edge(from, to))
    throw ValidationError("insert of present edge " + std::to_string(from) + "->" + std::to_string(to));
  out_[from].push_back(to);
  in_[to].push_back(from);
  ++edge_count_;
}

void DataGraph::remove_edge(NodeId from, NodeId to) {
  if (!has_edge(from, to))
    throw ValidationError("delete of absent edge " + std::to_string(from) + "->" + std::to_string(to));
  erase_value(out_[from], to);
  erase_value(in_[to], from);
  --edge_count_;
}

bool DataGraph::has_edge(NodeId from, NodeId to) const {
  if (!has_node(from) || !has_node(to)) return false;
  const auto& nb = out_[from];
  return std::find(nb.begin(), nb.end(), to) != nb.end();
}

bool DataGraph::has_label(NodeId id, const Label& l) const {
  const auto& ls = labels_[id];
  return std::binary_search(ls.begin(), ls.end(), l);
}

std::vector<NodeId> DataGraph::nodes() const {
  std::vector<NodeId> out;
  out.reserve(alive_count_);
  for (NodeId i = 0; i < alive_.size(); ++i)
    if (alive_[i]) out.push_back(i);
  return out;
}

bool DataGraph::operator==(const DataGraph& other) const {
  if (node_count() != other.node_count() || edge_count() != other.edge_count()) return false;
  for (NodeId i : nodes()) {
    if (!other.has_node(i)) return false;
    if (labels_[i] != other.labels_[i]) return false;
    auto a = out_[i];
    auto b = other.out_[i];
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) return false;
  }
  return true;
}

NodeId PatternGraph::add_node(Label label) {
  NodeId id = NodeId(alive_.size());
  add_node_with_id(id, std::move(label));
  return id;
}

void PatternGraph::add_node_with_id(NodeId id, Label label) {
  if (has_node(id)) throw ValidationError("insert of present pattern node " + std::to_string(id));
  if (label.empty()) throw ValidationError("pattern node " + std::to_string(id) + " has empty label");
  if (id >= alive_.size()) {
    alive_.resize(id + 1, false);
    labels_.resize(id + 1);
  }
  alive_[id] = true;
  labels_[id] = std::move(label);
  ++alive_count_;
}

void PatternGraph::remove_node(NodeId id) {
  if (!has_node(id)) throw ValidationError("delete of absent pattern node " + std::to_string(id));
  for (auto it = edges_.begin(); it != edges_.end();) {
    if (it->first.first == id || it->first.second == id)
      it = edges_.erase(it);
    else
      ++it;
  }
  alive_[id] = false;
  labels_[id].clear();
  --alive_count_;
}

void PatternGraph::add_edge(NodeId from, NodeId to, PathBound bound) {
  if (!has_node(from) || !has_node(to))
    throw ValidationError("pattern edge endpoint missing: " + std::to_string(from) + "->" + std::to_string(to));
  if (from == to) throw ValidationError("pattern self-loop rejected: " + std::to_string(from));
  if (!bound.unbounded && bound.hops < 1)
    throw ValidationError("pattern bound must be >= 1");
  if (has_edge(from, to))
    throw ValidationError("insert of present pattern edge " + std::to_string(from) + "->" + std::to_string(to));
  edges_.emplace(std::make_pair(from, to), bound);
}

void PatternGraph::remove_edge(NodeId from, NodeId to) {
  auto it = edges_.find({from, to});
  if (it == edges_.end())
    throw ValidationError("delete of absent pattern edge " + std::to_string(from) + "->" + std::to_string(to));
  edges_.erase(it);
}

bool PatternGraph::has_edge(NodeId from, NodeId to) const {
  return edges_.count({from, to}) != 0;
}

PathBound PatternGraph::bound(NodeId from, NodeId to) const {
  auto it = edges_.find({from, to});
  if (it == edges_.end())
    throw ValidationError("no pattern edge " + std::to_string(from) + "->" + std::to_string(to));
  return it->second;
}

std::vector<PatternGraph::Edge> PatternGraph::edges() const {
  std::vector<Edge> out;
  out.reserve(edges_.size());
  for (const auto& [k, b] : edges_) out.push_back({k.first, k.second, b});
  return out;
}

std::vector<PatternGraph::Edge> PatternGraph::out_edges(NodeId from) const {
  std::vector<Edge> out;
  for (const auto& [k, b] : edges_)
    if (k.first == from) out.push_back({k.first, k.second, b});
  return out;
}

std::vector<PatternGraph::Edge> PatternGraph::in_edges(NodeId to) const {
  std::vector<Edge> out;
  for (const auto& [k, b] : edges_)
    if (k.second == to) out.push_back({k.first, k.second, b});
  return out;
}

std::size_t PatternGraph::edge_count() const { return edges_.size(); }

std::vector<NodeId> PatternGraph::nodes() const {
  std::vector<NodeId> out;
  out.reserve(alive_count_);
  for (NodeId i = 0; i < alive_.size(); ++i)
    if (alive_[i]) out.push_back(i);
  return out;
}

bool PatternGraph::operator==(const PatternGraph& other) const {
  if (node_count() != other.node_count()) return false;
  for (NodeId i : nodes()) {
    if (!other.has_node(i) || labels_[i] != other.labels_[i]) return false;
  }
  return edges_ == other.edges_;
}

std::string Update::key() const {
  std::string s = target == UpdateTarget::Pattern ? "P" : "D";
  switch (kind) {
    case UpdateKind::InsertEdge: s += "+E"; break;
    case UpdateKind::DeleteEdge: s += "-E"; break;
    case UpdateKind::InsertNode: s += "+N"; break;
    case UpdateKind::DeleteNode: s += "-N"; break;
  }
  s += " " + std::to_string(u);
  if (is_edge_update(kind)) s += " " + std::to_string(v);
  return s;
}

void UpdateBatch::annihilate() {
  // Pair up insert/delete of the identical element. The element key ignores
  // the bound/labels payload, so re-inserting an edge with a different bound
  // still annihilates its deletion.
  std::unordered_map<std::string, std::vector<std::size_t>> by_element;
  std::vector<bool> dead(updates.size(), false);
  for (std::size_t i = 0; i < updates.size(); ++i) {
    const Update& u = updates[i];
    std::string element = (u.target == UpdateTarget::Pattern ? "P" : "D");
    element += is_edge_update(u.kind) ? "E" : "N";
    element += " " + std::to_string(u.u);
    if (is_edge_update(u.kind)) element += " " + std::to_string(u.v);
    auto& bucket = by_element[element];
    bool paired = false;
    for (auto it = bucket.begin(); it != bucket.end(); ++it) {
      if (is_insertion(updates[*it].kind) != is_insertion(u.kind)) {
        dead[*it] = true;
        dead[i] = true;
        bucket.erase(it);
        paired = true;
        break;
      }
    }
    if (!paired) bucket.push_back(i);
  }
  std::vector<Update> kept;
  kept.reserve(updates.size());
  for (std::size_t i = 0; i < updates.size(); ++i)
    if (!dead[i]) kept.push_back(updates[i]);
  for (std::size_t i = 0; i < kept.size(); ++i) kept[i].ordinal = i;
  updates = std::move(kept);
}

void apply_update(DataGraph& g, const Update& u) {
  if (u.target != UpdateTarget::Data)
    throw ContractError("pattern update applied to data graph");
  switch (u.kind) {
    case UpdateKind::InsertEdge: g.add_edge(u.u, u.v); break;
    case UpdateKind::DeleteEdge: g.remove_edge(u.u, u.v); break;
    case UpdateKind::InsertNode: g.add_node_with_id(u.u, u.labels); break;
    case UpdateKind::DeleteNode: g.remove_node(u.u); break;
  }
}

void apply_update(PatternGraph& g, const Update& u) {
  if (u.target != UpdateTarget::Pattern)
    throw ContractError("data update applied to pattern graph");
  switch (u.kind) {
    case UpdateKind::InsertEdge:
      if (!u.bound) throw ValidationError("pattern edge insert without bound");
      g.add_edge(u.u, u.v, *u.bound);
      break;
    case UpdateKind::DeleteEdge: g.remove_edge(u.u, u.v); break;
    case UpdateKind::InsertNode:
      if (u.labels.size() != 1)
        throw ValidationError("pattern node insert needs exactly one label");
      g.add_node_with_id(u.u, u.labels.front());
      break;
    case UpdateKind::DeleteNode: g.remove_node(u.u); break;
  }
}

}  // namespace gpnm
