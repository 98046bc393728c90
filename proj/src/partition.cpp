#include "gpnm/partition.hpp"

#include <algorithm>
#include <map>
#include <queue>

namespace gpnm {

const Partition* PartitionSet::find(const Label& l) const {
  for (const auto& p : partitions)
    if (p.label == l) return &p;
  return nullptr;
}

PartitionSet partition_by_label(const DataGraph& g) {
  PartitionSet out;
  std::map<Label, std::size_t> index;
  for (NodeId u : g.nodes()) {
    const Label& home = g.labels(u).front();  // labels sorted at construction
    auto [it, fresh] = index.emplace(home, out.partitions.size());
    if (fresh) out.partitions.push_back(Partition{home, {}, {}, {}, {}, {}});
    out.partitions[it->second].members.push_back(u);
  }
  out.member_of.assign(g.id_bound(), 0);
  for (std::size_t pi = 0; pi < out.partitions.size(); ++pi)
    for (NodeId u : out.partitions[pi].members) out.member_of[u] = std::uint32_t(pi);

  for (NodeId u : g.nodes()) {
    Partition& p = out.partitions[out.member_of[u]];
    bool bridges_out = false;
    for (NodeId v : g.out_neighbors(u)) {
      if (out.member_of[v] == out.member_of[u]) {
        p.intra_edges.emplace_back(u, v);
      } else {
        p.cross_edges.emplace_back(u, v);
        bridges_out = true;
        if (std::find(p.outer_bridge.begin(), p.outer_bridge.end(), v) == p.outer_bridge.end())
          p.outer_bridge.push_back(v);
      }
    }
    if (bridges_out) p.inner_bridge.push_back(u);
  }
  for (auto& p : out.partitions) {
    std::sort(p.members.begin(), p.members.end());
    std::sort(p.inner_bridge.begin(), p.inner_bridge.end());
    std::sort(p.outer_bridge.begin(), p.outer_bridge.end());
  }
  return out;
}

namespace {

// Combined-partition groups: the fixpoint of the paper's pairwise combination
// rule is mutual reachability over the partition condensation, i.e. its
// strongly connected components. Shortest paths between two nodes of one group
// never leave the group's node set.
struct Groups {
  std::vector<std::uint32_t> group_of_partition;
  std::vector<std::vector<std::size_t>> partitions_in_group;
  std::vector<std::vector<std::uint32_t>> dag_out;  // group -> downstream groups
  std::vector<std::uint32_t> topo;                  // topological order of groups
};

Groups condense(const PartitionSet& parts) {
  std::size_t n = parts.partitions.size();
  std::vector<std::vector<std::uint32_t>> adj(n), radj(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (const auto& [u, v] : parts.partitions[i].cross_edges) {
      std::uint32_t j = parts.member_of[v];
      adj[i].push_back(j);
      radj[j].push_back(std::uint32_t(i));
    }
  }
  // Kosaraju.
  std::vector<std::uint8_t> seen(n, 0);
  std::vector<std::uint32_t> order;
  order.reserve(n);
  for (std::size_t s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::vector<std::pair<std::uint32_t, std::size_t>> stack{{std::uint32_t(s), 0}};
    seen[s] = 1;
    while (!stack.empty()) {
      auto& [u, next] = stack.back();
      if (next < adj[u].size()) {
        std::uint32_t v = adj[u][next++];
        if (!seen[v]) {
          seen[v] = 1;
          stack.push_back({v, 0});
        }
      } else {
        order.push_back(u);
        stack.pop_back();
      }
    }
  }
  Groups g;
  g.group_of_partition.assign(n, UINT32_MAX);
  std::uint32_t ngroups = 0;
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    if (g.group_of_partition[*it] != UINT32_MAX) continue;
    std::vector<std::uint32_t> stack{*it};
    g.group_of_partition[*it] = ngroups;
    g.partitions_in_group.emplace_back();
    while (!stack.empty()) {
      std::uint32_t u = stack.back();
      stack.pop_back();
      g.partitions_in_group[ngroups].push_back(u);
      for (std::uint32_t v : radj[u]) {
        if (g.group_of_partition[v] == UINT32_MAX) {
          g.group_of_partition[v] = ngroups;
          stack.push_back(v);
        }
      }
    }
    ++ngroups;
  }
  // Group DAG + topological order (groups discovered in reverse finish order
  // are already topologically sorted under Kosaraju).
  g.dag_out.assign(ngroups, {});
  for (std::size_t i = 0; i < n; ++i) {
    for (std::uint32_t j : adj[i]) {
      std::uint32_t a = g.group_of_partition[i];
      std::uint32_t b = g.group_of_partition[j];
      if (a != b) g.dag_out[a].push_back(b);
    }
  }
  g.topo.resize(ngroups);
  for (std::uint32_t i = 0; i < ngroups; ++i) g.topo[i] = i;
  return g;
}

// BFS from src restricted to nodes whose partition lies in the given group.
void group_bfs(const DataGraph& g, const std::vector<std::uint32_t>& member_of,
               const std::vector<std::uint32_t>& group_of_partition, std::uint32_t group,
               NodeId src, std::vector<Dist>& dist) {
  std::queue<NodeId> q;
  dist[src] = 0;
  q.push(src);
  while (!q.empty()) {
    NodeId u = q.front();
    q.pop();
    for (NodeId v : g.out_neighbors(u)) {
      if (group_of_partition[member_of[v]] != group) continue;
      if (dist[v] != kInf) continue;
      dist[v] = sat_add(dist[u], 1);
      q.push(v);
    }
  }
}

}  // namespace

DistanceMatrix intra_partition_apsp(const DataGraph& g, const PartitionSet& parts) {
  DistanceMatrix m(g.id_bound());
  Groups groups = condense(parts);
  std::vector<Dist> dist(g.id_bound(), kInf);
  for (std::uint32_t gi = 0; gi < groups.partitions_in_group.size(); ++gi) {
    std::vector<NodeId> members;
    for (std::size_t pi : groups.partitions_in_group[gi])
      members.insert(members.end(), parts.partitions[pi].members.begin(),
                     parts.partitions[pi].members.end());
    for (NodeId src : members) {
      group_bfs(g, parts.member_of, groups.group_of_partition, gi, src, dist);
      for (NodeId v : members) {
        m.set(src, v, dist[v]);
        dist[v] = kInf;
      }
      dist[src] = kInf;
    }
  }
  return m;
}

DistanceMatrix inter_partition_apsp(const DataGraph& g, const PartitionSet& parts,
                                    const DistanceMatrix& intra) {
  DistanceMatrix m = intra;
  Groups groups = condense(parts);
  std::size_t ngroups = groups.partitions_in_group.size();
  std::size_t bound = g.id_bound();

  std::vector<std::vector<NodeId>> group_members(ngroups);
  for (std::uint32_t gi = 0; gi < ngroups; ++gi)
    for (std::size_t pi : groups.partitions_in_group[gi])
      for (NodeId u : parts.partitions[pi].members) group_members[gi].push_back(u);

  // Bridge edges leaving each group.
  std::vector<std::vector<std::pair<NodeId, NodeId>>> group_bridges(ngroups);
  for (const auto& p : parts.partitions) {
    for (const auto& [u, v] : p.cross_edges) {
      std::uint32_t a = groups.group_of_partition[parts.member_of[u]];
      std::uint32_t b = groups.group_of_partition[parts.member_of[v]];
      if (a != b) group_bridges[a].emplace_back(u, v);
    }
  }

  // Sinks first: every distance from a bridge target is final before the
  // group upstream of it composes.
  for (auto it = groups.topo.rbegin(); it != groups.topo.rend(); ++it) {
    std::uint32_t gi = *it;
    const auto& bridges = group_bridges[gi];
    if (bridges.empty()) continue;  // no outer bridge: cross rows stay infinite

    // Per bridge source x: best distance to every y via its own crossings.
    std::map<NodeId, std::vector<Dist>> via;
    for (const auto& [x, z] : bridges) {
      auto [vit, fresh] = via.emplace(x, std::vector<Dist>());
      if (fresh) vit->second.assign(bound, kInf);
      auto& row = vit->second;
      for (NodeId y = 0; y < bound; ++y) {
        if (!g.has_node(NodeId(y))) continue;
        Dist cand = sat_add(1, m.at(z, NodeId(y)));
        if (cand < row[y]) row[y] = cand;
      }
    }
    for (NodeId a : group_members[gi]) {
      for (const auto& [x, row] : via) {
        Dist ax = m.at(a, x);
        if (ax == kInf) continue;
        for (NodeId y = 0; y < bound; ++y) {
          if (row[y] == kInf) continue;
          Dist cand = sat_add(ax, row[y]);
          if (cand < m.at(a, NodeId(y))) m.set(a, NodeId(y), cand);
        }
      }
    }
  }
  return m;
}

DistanceMatrix partitioned_apsp(const DataGraph& g) {
  PartitionSet parts = partition_by_label(g);
  DistanceMatrix intra = intra_partition_apsp(g, parts);
  return inter_partition_apsp(g, parts, intra);
}

}  // namespace gpnm
