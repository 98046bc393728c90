#pragma once

#include <string>

#include "gpnm/graph.hpp"

namespace gpnm {

struct LoadOptions {
  bool strict = false;          // reject edges referencing unlabeled nodes
  Label default_label = "UNK";  // lenient mode fills missing labels with this
};

struct LoadStats {
  std::size_t duplicate_edges = 0;
  std::size_t self_loops_skipped = 0;
  std::size_t defaulted_labels = 0;
};

// SNAP-compatible edge list ("u v" per line, '#' comments) plus a label file
// ("u label[,label]*" per line). Nodes appearing only in the edge list get the
// default label under lenient mode; strict mode rejects them.
DataGraph load_data_graph(const std::string& edge_list_text, const std::string& label_text,
                          const LoadOptions& opts = {}, LoadStats* stats = nullptr);

// Pattern file: "node <id> <label>" and "edge <u> <v> <k|*>" lines.
PatternGraph load_pattern_graph(const std::string& pattern_text);

// Update file: "P|D +E u v [k]", "P|D -E u v", "P|D +N u label[,label]*",
// "P|D -N u". Annihilating pairs are removed at load.
UpdateBatch load_updates(const std::string& text);

std::string serialize_data_graph_edges(const DataGraph& g);
std::string serialize_data_graph_labels(const DataGraph& g);
std::string serialize_pattern_graph(const PatternGraph& g);
std::string serialize_updates(const UpdateBatch& batch);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace gpnm
