/*
   Copyright 2026 The blocktest authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "blocktest/detect.hpp"
#include "blocktest/graph.hpp"

namespace blocktest::io {

/// Data or format problem in an input file; the message carries file and
/// line context.
class IoError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Graph plus the mapping between dense vertex ids and the arbitrary string
/// labels of the source file. `file_edges` preserves the order and
/// orientation of the input lines so writing reproduces a previously
/// written file byte for byte.
struct LabeledGraph {
  Graph graph;
  std::vector<std::string> labels;                 // dense id -> label
  std::unordered_map<std::string, VertexId> index; // label -> dense id
  std::vector<EdgePair> file_edges;                // input order, dense ids

  VertexId require(const std::string& label) const;
};

/// Makes a LabeledGraph for a generated graph, labeling vertex i with
/// decimal "i" and listing edges in canonical order.
LabeledGraph with_numeric_labels(Graph g);

/// Edge-list format: one "u v" pair of whitespace-separated labels per
/// line, '#' starts a comment line. Self-loops and repeated edges are
/// rejected with their line number.
LabeledGraph read_edge_list(std::istream& in, const std::string& name);
LabeledGraph read_edge_list(const std::filesystem::path& path);
void write_edge_list(std::ostream& out, const LabeledGraph& g);
void write_edge_list(const std::filesystem::path& path, const LabeledGraph& g);

/// Labels format: one "vertexlabel communityid" per line, '#' comments.
using LabelAssignment = std::vector<std::pair<std::string, int>>;
LabelAssignment read_labels_file(std::istream& in, const std::string& name);
LabelAssignment read_labels_file(const std::filesystem::path& path);
void write_labels_file(std::ostream& out, const LabelAssignment& labels);
void write_labels_file(const std::filesystem::path& path, const LabelAssignment& labels);

/// FNV-1a over the canonical dense edge list; stable input fingerprint.
std::string graph_digest(const Graph& g);

/// Detection output: a versioned JSON document with the input fingerprint,
/// the configuration echo, per-vertex communities and the recursion tree.
void write_result_document(std::ostream& out, const LabeledGraph& input,
                           const std::string& input_name, const DetectConfig& cfg,
                           const DetectionResult& result, double elapsed_ms);
void write_result_document(const std::filesystem::path& path, const LabeledGraph& input,
                           const std::string& input_name, const DetectConfig& cfg,
                           const DetectionResult& result, double elapsed_ms);

/// The slice of a result document the eval command needs.
struct ResultInfo {
  int communities = 0;
  LabelAssignment labels;
};

ResultInfo read_result_document(std::istream& in, const std::string& name);
ResultInfo read_result_document(const std::filesystem::path& path);

/// Reads either a result document (JSON) or a plain labels file, deciding
/// by content.
ResultInfo read_prediction(const std::filesystem::path& path);

} // namespace blocktest::io
