#include "gpnm/io.hpp"

#include <charconv>
#include <fstream>
#include <map>
#include <sstream>

namespace gpnm {

namespace {

std::vector<std::string> split_ws(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream is(line);
  std::string tok;
  while (is >> tok) out.push_back(tok);
  return out;
}

std::vector<std::string> split_char(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

NodeId parse_node_id(const std::string& tok, std::size_t line_no) {
  NodeId value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size())
    throw ParseError("line " + std::to_string(line_no) + ": bad node id '" + tok + "'");
  return value;
}

PathBound parse_bound(const std::string& tok, std::size_t line_no) {
  if (tok == "*") return PathBound::star();
  long long k = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), k);
  if (ec != std::errc() || ptr != tok.data() + tok.size())
    throw ParseError("line " + std::to_string(line_no) + ": bad bound '" + tok + "'");
  if (k <= 0)
    throw ValidationError("line " + std::to_string(line_no) + ": bound must be >= 1, got " + tok);
  return PathBound::k(std::uint32_t(k));
}

template <typename Fn>
void for_each_line(const std::string& text, Fn&& fn) {
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string::npos) end = text.size();
    ++line_no;
    std::string line = text.substr(pos, end - pos);
    if (!line.empty() && line.back() == '\r') line.pop_back();
    fn(line, line_no);
    pos = end + 1;
    if (end == text.size()) break;
  }
}

}  // namespace

DataGraph load_data_graph(const std::string& edge_list_text, const std::string& label_text,
                          const LoadOptions& opts, LoadStats* stats) {
  LoadStats local;
  std::map<NodeId, std::vector<Label>> labels;
  for_each_line(label_text, [&](const std::string& line, std::size_t line_no) {
    if (line.empty() || line[0] == '#') return;
    auto toks = split_ws(line);
    if (toks.size() != 2)
      throw ParseError("line " + std::to_string(line_no) + ": expected 'u label[,label]*'");
    NodeId id = parse_node_id(toks[0], line_no);
    std::vector<Label> ls = split_char(toks[1], ',');
    for (const Label& l : ls)
      if (l.empty())
        throw ParseError("line " + std::to_string(line_no) + ": empty label");
    labels[id] = std::move(ls);
  });

  std::vector<std::pair<NodeId, NodeId>> edges;
  NodeId max_id = 0;
  bool any = !labels.empty();
  if (any) max_id = labels.rbegin()->first;
  for_each_line(edge_list_text, [&](const std::string& line, std::size_t line_no) {
    if (line.empty() || line[0] == '#') return;
    auto toks = split_ws(line);
    if (toks.size() != 2)
      throw ParseError("line " + std::to_string(line_no) + ": expected 'u v'");
    NodeId u = parse_node_id(toks[0], line_no);
    NodeId v = parse_node_id(toks[1], line_no);
    if (u == v) {
      ++local.self_loops_skipped;
      return;
    }
    if (opts.strict && (!labels.count(u) || !labels.count(v)))
      throw ValidationError("line " + std::to_string(line_no) + ": edge references unlabeled node");
    edges.emplace_back(u, v);
    max_id = std::max({max_id, u, v});
    any = true;
  });

  DataGraph g;
  if (!any) return g;
  for (NodeId id = 0; id <= max_id; ++id) {
    auto it = labels.find(id);
    bool in_edges = false;
    if (it == labels.end()) {
      for (const auto& [u, v] : edges)
        if (u == id || v == id) {
          in_edges = true;
          break;
        }
      if (!in_edges) continue;  // id not mentioned anywhere
      ++local.defaulted_labels;
      g.add_node_with_id(id, {opts.default_label});
    } else {
      g.add_node_with_id(id, it->second);
    }
  }
  for (const auto& [u, v] : edges) {
    if (g.has_edge(u, v)) {
      ++local.duplicate_edges;
      continue;
    }
    g.add_edge(u, v);
  }
  if (stats) *stats = local;
  return g;
}

PatternGraph load_pattern_graph(const std::string& pattern_text) {
  PatternGraph g;
  for_each_line(pattern_text, [&](const std::string& line, std::size_t line_no) {
    if (line.empty() || line[0] == '#') return;
    auto toks = split_ws(line);
    if (toks[0] == "node") {
      if (toks.size() != 3)
        throw ParseError("line " + std::to_string(line_no) + ": expected 'node <id> <label>'");
      g.add_node_with_id(parse_node_id(toks[1], line_no), toks[2]);
    } else if (toks[0] == "edge") {
      if (toks.size() != 4)
        throw ParseError("line " + std::to_string(line_no) + ": expected 'edge <u> <v> <k|*>'");
      NodeId u = parse_node_id(toks[1], line_no);
      NodeId v = parse_node_id(toks[2], line_no);
      if (!g.has_node(u) || !g.has_node(v))
        throw ValidationError("line " + std::to_string(line_no) + ": edge references unknown node");
      g.add_edge(u, v, parse_bound(toks[3], line_no));
    } else {
      throw ParseError("line " + std::to_string(line_no) + ": unknown directive '" + toks[0] + "'");
    }
  });
  return g;
}

UpdateBatch load_updates(const std::string& text) {
  UpdateBatch batch;
  for_each_line(text, [&](const std::string& line, std::size_t line_no) {
    if (line.empty() || line[0] == '#') return;
    auto toks = split_ws(line);
    if (toks.size() < 3) throw ParseError("line " + std::to_string(line_no) + ": truncated update");
    Update u;
    if (toks[0] == "P")
      u.target = UpdateTarget::Pattern;
    else if (toks[0] == "D")
      u.target = UpdateTarget::Data;
    else
      throw ParseError("line " + std::to_string(line_no) + ": target must be P or D");
    const std::string& op = toks[1];
    if (op == "+E") {
      u.kind = UpdateKind::InsertEdge;
      if (toks.size() < 4) throw ParseError("line " + std::to_string(line_no) + ": +E needs u v");
      u.u = parse_node_id(toks[2], line_no);
      u.v = parse_node_id(toks[3], line_no);
      if (u.target == UpdateTarget::Pattern) {
        if (toks.size() != 5)
          throw ParseError("line " + std::to_string(line_no) + ": pattern +E needs a bound");
        u.bound = parse_bound(toks[4], line_no);
      } else if (toks.size() != 4) {
        throw ParseError("line " + std::to_string(line_no) + ": data +E carries no bound");
      }
    } else if (op == "-E") {
      u.kind = UpdateKind::DeleteEdge;
      if (toks.size() != 4) throw ParseError("line " + std::to_string(line_no) + ": -E needs u v");
      u.u = parse_node_id(toks[2], line_no);
      u.v = parse_node_id(toks[3], line_no);
    } else if (op == "+N") {
      u.kind = UpdateKind::InsertNode;
      if (toks.size() != 4) throw ParseError("line " + std::to_string(line_no) + ": +N needs u labels");
      u.u = parse_node_id(toks[2], line_no);
      u.labels = split_char(toks[3], ',');
    } else if (op == "-N") {
      u.kind = UpdateKind::DeleteNode;
      if (toks.size() != 3) throw ParseError("line " + std::to_string(line_no) + ": -N needs u");
      u.u = parse_node_id(toks[2], line_no);
    } else {
      throw ParseError("line " + std::to_string(line_no) + ": unknown op '" + op + "'");
    }
    u.ordinal = batch.updates.size();
    batch.updates.push_back(std::move(u));
  });
  batch.annihilate();
  return batch;
}

std::string serialize_data_graph_edges(const DataGraph& g) {
  std::ostringstream os;
  for (NodeId u : g.nodes()) {
    auto nb = g.out_neighbors(u);
    std::sort(nb.begin(), nb.end());
    for (NodeId v : nb) os << u << " " << v << "\n";
  }
  return os.str();
}

std::string serialize_data_graph_labels(const DataGraph& g) {
  std::ostringstream os;
  for (NodeId u : g.nodes()) {
    os << u << " ";
    const auto& ls = g.labels(u);
    for (std::size_t i = 0; i < ls.size(); ++i) os << (i ? "," : "") << ls[i];
    os << "\n";
  }
  return os.str();
}

std::string serialize_pattern_graph(const PatternGraph& g) {
  std::ostringstream os;
  for (NodeId u : g.nodes()) os << "node " << u << " " << g.label(u) << "\n";
  for (const auto& e : g.edges())
    os << "edge " << e.from << " " << e.to << " " << to_string(e.bound) << "\n";
  return os.str();
}

std::string serialize_updates(const UpdateBatch& batch) {
  std::ostringstream os;
  for (const Update& u : batch.updates) {
    os << (u.target == UpdateTarget::Pattern ? "P" : "D") << " ";
    switch (u.kind) {
      case UpdateKind::InsertEdge:
        os << "+E " << u.u << " " << u.v;
        if (u.bound) os << " " << to_string(*u.bound);
        break;
      case UpdateKind::DeleteEdge: os << "-E " << u.u << " " << u.v; break;
      case UpdateKind::InsertNode: {
        os << "+N " << u.u << " ";
        for (std::size_t i = 0; i < u.labels.size(); ++i) os << (i ? "," : "") << u.labels[i];
        break;
      }
      case UpdateKind::DeleteNode: os << "-N " << u.u; break;
    }
    os << "\n";
  }
  return os.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ValidationError("cannot write " + path);
  out << content;
}

}  // namespace gpnm
