#include "gpnm/distance.hpp"

#include <algorithm>
#include <charconv>
#include <queue>
#include <sstream>

namespace gpnm {

DistanceMatrix::DistanceMatrix(std::size_t id_bound)
    : bound_(id_bound), d_(id_bound * id_bound, kInf) {
  for (std::size_t i = 0; i < bound_; ++i) d_[i * bound_ + i] = 0;
}

void DistanceMatrix::grow(std::size_t new_bound) {
  if (new_bound <= bound_) return;
  std::vector<Dist> nd(new_bound * new_bound, kInf);
  for (std::size_t i = 0; i < bound_; ++i)
    std::copy(d_.begin() + std::ptrdiff_t(i * bound_), d_.begin() + std::ptrdiff_t(i * bound_ + bound_),
              nd.begin() + std::ptrdiff_t(i * new_bound));
  for (std::size_t i = 0; i < new_bound; ++i) nd[i * new_bound + i] = 0;
  d_ = std::move(nd);
  bound_ = new_bound;
}

std::string DistanceMatrix::to_csv(const DataGraph& g) const {
  std::ostringstream os;
  auto ids = g.nodes();
  os << "ids";
  for (NodeId id : ids) os << "," << id;
  os << "\n";
  for (NodeId u : ids) {
    os << u;
    for (NodeId v : ids) {
      Dist d = at(u, v);
      if (d == kInf)
        os << ",INF";
      else
        os << "," << d;
    }
    os << "\n";
  }
  return os.str();
}

DistanceMatrix DistanceMatrix::from_csv(const std::string& text) {
  std::istringstream is(text);
  std::string line;
  if (!std::getline(is, line)) throw ParseError("empty distance csv");
  auto split = [](const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
      if (c == ',') {
        out.push_back(cur);
        cur.clear();
      } else if (c != '\r') {
        cur += c;
      }
    }
    out.push_back(cur);
    return out;
  };
  auto head = split(line);
  if (head.empty() || head[0] != "ids") throw ParseError("distance csv must start with 'ids'");
  std::vector<NodeId> ids;
  NodeId max_id = 0;
  for (std::size_t i = 1; i < head.size(); ++i) {
    NodeId id = 0;
    auto [p, ec] = std::from_chars(head[i].data(), head[i].data() + head[i].size(), id);
    if (ec != std::errc()) throw ParseError("bad id in distance csv: " + head[i]);
    (void)p;
    ids.push_back(id);
    max_id = std::max(max_id, id);
  }
  DistanceMatrix m(ids.empty() ? 0 : max_id + 1);
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    auto row = split(line);
    if (row.size() != ids.size() + 1) throw ParseError("ragged distance csv row");
    NodeId u = 0;
    std::from_chars(row[0].data(), row[0].data() + row[0].size(), u);
    for (std::size_t i = 0; i < ids.size(); ++i) {
      const std::string& cell = row[i + 1];
      if (cell == "INF") {
        m.set(u, ids[i], kInf);
      } else {
        unsigned long v = std::stoul(cell);
        m.set(u, ids[i], Dist(v));
      }
    }
  }
  return m;
}

std::vector<Dist> dijkstra_sssp(const DataGraph& g, NodeId source) {
  if (!g.has_node(source)) throw ValidationError("unknown source node " + std::to_string(source));
  std::vector<Dist> dist(g.id_bound(), kInf);
  using Entry = std::pair<Dist, NodeId>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> pq;
  dist[source] = 0;
  pq.push({0, source});
  while (!pq.empty()) {
    auto [d, u] = pq.top();
    pq.pop();
    if (d != dist[u]) continue;
    for (NodeId v : g.out_neighbors(u)) {
      Dist nd = sat_add(d, 1);
      if (nd < dist[v]) {
        dist[v] = nd;
        pq.push({nd, v});
      }
    }
  }
  return dist;
}

DistanceMatrix apsp_baseline(const DataGraph& g) {
  DistanceMatrix m(g.id_bound());
  for (NodeId u : g.nodes()) {
    auto row = dijkstra_sssp(g, u);
    for (NodeId v : g.nodes()) m.set(u, v, row[v]);
  }
  return m;
}

std::vector<DistanceChange> changes_for_edge_insert(const DistanceMatrix& m, const DataGraph& g,
                                                    NodeId u, NodeId v) {
  std::vector<DistanceChange> changes;
  auto nodes = g.nodes();
  for (NodeId a : nodes) {
    Dist via = sat_add(m.at(a, u), 1);
    if (via >= m.at(a, v)) continue;  // no shortest path from a can use the new edge
    for (NodeId b : nodes) {
      Dist nd = sat_add(via, m.at(v, b));
      Dist old = m.at(a, b);
      if (nd < old) changes.push_back({a, b, old, nd});
    }
  }
  return changes;
}

namespace {

// Per-source decremental repair. The matrix holds pre-removal distances; the
// adjacency walk sees the post-removal graph (either because the graph is
// already mutated or via the removal mask).
class RemovalView {
 public:
  RemovalView(const DataGraph& g, const Removal& r, bool graph_updated)
      : g_(g), r_(r), masked_(!graph_updated) {}

  bool skip_node(NodeId x) const { return masked_ && r_.node && *r_.node == x; }

  bool skip_edge(NodeId x, NodeId y) const {
    if (!masked_) return false;
    if (r_.node && (*r_.node == x || *r_.node == y)) return true;
    for (const auto& [a, b] : r_.edges)
      if (a == x && b == y) return true;
    return false;
  }

  template <typename Fn>
  void for_in(NodeId w, Fn&& fn) const {
    for (NodeId x : g_.in_neighbors(w))
      if (!skip_node(x) && !skip_edge(x, w)) fn(x);
  }

  template <typename Fn>
  void for_out(NodeId w, Fn&& fn) const {
    for (NodeId y : g_.out_neighbors(w))
      if (!skip_node(y) && !skip_edge(w, y)) fn(y);
  }

 private:
  const DataGraph& g_;
  const Removal& r_;
  bool masked_;
};

}  // namespace

std::vector<DistanceChange> changes_for_removal(const DistanceMatrix& m, const DataGraph& g,
                                                const Removal& r, bool graph_updated) {
  std::vector<DistanceChange> changes;
  if (r.edges.empty()) return changes;
  RemovalView view(g, r, graph_updated);

  // Survivor node list.
  std::vector<NodeId> nodes;
  for (NodeId i = 0; i < g.id_bound(); ++i) {
    if (r.node && *r.node == i) continue;
    if (graph_updated ? g.has_node(i) : (g.has_node(i))) nodes.push_back(i);
  }

  // Scratch buffers reused across sources.
  std::vector<std::uint8_t> affected(g.id_bound(), 0);
  std::vector<std::uint8_t> dirty(g.id_bound(), 0);
  std::vector<Dist> repaired(g.id_bound(), kInf);
  std::vector<NodeId> region;

  using Entry = std::pair<Dist, NodeId>;

  for (NodeId a : nodes) {
    // Seeds: targets of removed edges that were tight from a.
    std::vector<NodeId> seeds;
    for (const auto& [x, y] : r.edges) {
      if (r.node && *r.node == y) continue;  // pairs into a deleted node vanish
      Dist dax = m.at(a, x);
      if (dax == kInf) continue;
      if (sat_add(dax, 1) == m.at(a, y)) seeds.push_back(y);
    }
    if (seeds.empty()) continue;

    // Discovery: nodes whose distance from a grows. Processed in old-distance
    // order so every tight predecessor is classified before its successors.
    std::priority_queue<Entry, std::vector<Entry>, std::greater<>> disc;
    for (NodeId s : seeds) {
      if (!dirty[s]) {
        dirty[s] = 1;
        disc.push({m.at(a, s), s});
      }
    }
    region.clear();
    while (!disc.empty()) {
      auto [dw, w] = disc.top();
      disc.pop();
      if (!dirty[w] || affected[w]) continue;
      dirty[w] = 0;
      bool has_stable_pred = false;
      view.for_in(w, [&](NodeId x) {
        if (has_stable_pred) return;
        if (!affected[x] && sat_add(m.at(a, x), 1) == dw) has_stable_pred = true;
      });
      if (has_stable_pred) continue;
      affected[w] = 1;
      region.push_back(w);
      view.for_out(w, [&](NodeId y) {
        if (affected[y] || dirty[y]) return;
        if (sat_add(dw, 1) == m.at(a, y)) {
          dirty[y] = 1;
          disc.push({m.at(a, y), y});
        }
      });
    }
    // Clear any leftover dirty marks (nodes judged stable).
    for (NodeId s : seeds) dirty[s] = 0;

    if (region.empty()) continue;

    // Repair: settle new distances for the region from its stable frontier.
    std::priority_queue<Entry, std::vector<Entry>, std::greater<>> heap;
    for (NodeId w : region) {
      Dist best = kInf;
      view.for_in(w, [&](NodeId x) {
        if (affected[x]) return;
        best = std::min(best, sat_add(m.at(a, x), 1));
      });
      repaired[w] = best;
      if (best != kInf) heap.push({best, w});
    }
    while (!heap.empty()) {
      auto [dw, w] = heap.top();
      heap.pop();
      if (dw != repaired[w]) continue;
      view.for_out(w, [&](NodeId y) {
        if (!affected[y]) return;
        Dist nd = sat_add(dw, 1);
        if (nd < repaired[y]) {
          repaired[y] = nd;
          heap.push({nd, y});
        }
      });
    }
    for (NodeId w : region) {
      Dist old = m.at(a, w);
      if (repaired[w] != old) changes.push_back({a, w, old, repaired[w]});
      affected[w] = 0;
      dirty[w] = 0;
      repaired[w] = kInf;
    }
  }
  return changes;
}

void apply_changes(DistanceMatrix& m, const std::vector<DistanceChange>& changes) {
  for (const auto& c : changes) m.set(c.source, c.target, c.after);
}

std::pair<DistanceMatrix, std::vector<DistanceChange>> update_distances(
    const DistanceMatrix& m, const DataGraph& graph_before, const Update& u) {
  if (u.target != UpdateTarget::Data)
    throw ContractError("update_distances requires a data-graph update");
  DistanceMatrix out = m;
  std::vector<DistanceChange> changes;
  switch (u.kind) {
    case UpdateKind::InsertEdge: {
      DataGraph after = graph_before;
      apply_update(after, u);  // validates
      changes = changes_for_edge_insert(m, graph_before, u.u, u.v);
      apply_changes(out, changes);
      break;
    }
    case UpdateKind::DeleteEdge: {
      DataGraph after = graph_before;
      apply_update(after, u);
      Removal r{{{u.u, u.v}}, std::nullopt};
      changes = changes_for_removal(m, after, r, true);
      apply_changes(out, changes);
      break;
    }
    case UpdateKind::InsertNode: {
      DataGraph after = graph_before;
      apply_update(after, u);
      out.grow(after.id_bound());
      break;
    }
    case UpdateKind::DeleteNode: {
      Removal r;
      r.node = u.u;
      if (!graph_before.has_node(u.u))
        throw ValidationError("delete of absent node " + std::to_string(u.u));
      for (NodeId t : graph_before.out_neighbors(u.u)) r.edges.emplace_back(u.u, t);
      for (NodeId s : graph_before.in_neighbors(u.u)) r.edges.emplace_back(s, u.u);
      DataGraph after = graph_before;
      apply_update(after, u);
      changes = changes_for_removal(m, after, r, true);
      apply_changes(out, changes);
      break;
    }
  }
  return {std::move(out), std::move(changes)};
}

bool matrices_equal(const DataGraph& g, const DistanceMatrix& a, const DistanceMatrix& b) {
  auto nodes = g.nodes();
  for (NodeId u : nodes)
    for (NodeId v : nodes)
      if (a.at(u, v) != b.at(u, v)) return false;
  return true;
}

}  // namespace gpnm
