#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ksync/errors.hpp"

namespace ksync {

/// Construction sequence of a threshold graph. Bit i says whether the
/// (i+2)-th vertex is added dominating (1) or isolated (0); the first vertex
/// carries no bit. The generated graph has length()+1 vertices.
class ThresholdCode {
 public:
  ThresholdCode() = default;
  explicit ThresholdCode(std::vector<bool> bits) : bits_(std::move(bits)) {}

  /// Parses a bare 0/1 string. Throws EmptyInput / InvalidCharacter.
  static ThresholdCode parse(std::string_view text);

  std::size_t length() const { return bits_.size(); }
  int vertex_count() const { return static_cast<int>(bits_.size()) + 1; }
  bool bit(std::size_t i) const { return bits_[i]; }
  const std::vector<bool>& bits() const { return bits_; }

  /// The generated graph is connected iff the last bit is 1 (or length 0).
  bool connected() const { return bits_.empty() || bits_.back(); }

  std::string str() const;

  bool operator==(const ThresholdCode&) const = default;

 private:
  std::vector<bool> bits_;
};

/// Undirected simple graph on vertices 0..n-1 (file formats are 1-indexed;
/// the shift happens at the I/O boundary).
class Graph {
 public:
  explicit Graph(int n);
  Graph(int n, const std::vector<std::pair<int, int>>& edges);

  int vertex_count() const { return n_; }
  long edge_count() const { return edge_count_; }
  int degree(int v) const { return static_cast<int>(adj_[v].size()); }
  int max_degree() const;
  const std::vector<int>& neighbors(int v) const { return adj_[v]; }
  bool adjacent(int u, int v) const;

  /// Throws InvalidParameters on self-loops, duplicates, or range errors.
  void add_edge(int u, int v);

  /// All edges as (u, v) with u < v, lexicographically sorted.
  std::vector<std::pair<int, int>> edges() const;

  /// Sorted N[v] = N(v) u {v}.
  std::vector<int> closed_neighborhood(int v) const;

  bool operator==(const Graph& other) const;

 private:
  int n_ = 0;
  long edge_count_ = 0;
  std::vector<std::vector<int>> adj_;  // sorted neighbor lists
};

/// Maximal classes of the closed-twin relation N[i] = N[j].
struct TwinPartition {
  std::vector<std::vector<int>> classes;  // each sorted, ordered by min vertex
};

/// Maximal runs of the construction sequence with the first vertex treated as
/// an implicit leading 0. Runs alternate I_1, U_1, ..., I_k, U_k; with the
/// implicit bit every I-run is nonempty, and a connected code ends in U_k.
struct BlockStructure {
  std::vector<std::vector<int>> isolated_blocks;    // I_1..I_k, creation order
  std::vector<std::vector<int>> dominating_blocks;  // U_1..U_k

  int block_count() const { return static_cast<int>(dominating_blocks.size()); }
};

/// Vertex weights and threshold with {u,v} in E <=> w(u)+w(v) >= t.
struct WeightRep {
  std::vector<double> weights;
  double threshold = 0.0;
};

Graph build_threshold(const ThresholdCode& code);

/// |E| of the generated graph without building it: each dominating vertex
/// contributes one edge per predecessor.
long edge_count_from_code(const ThresholdCode& code);

/// Recovers a construction sequence by repeatedly peeling a vertex that is
/// currently isolated or dominating (latest-created candidate first, which
/// makes build -> recognize the identity on generated graphs). Throws
/// NotThreshold when the peeling stalls.
ThresholdCode recognize_threshold(const Graph& g);

/// Peeling order behind recognize_threshold: creation_order[p] is the vertex
/// of g created at position p, bits aligned with the returned code.
struct PeelResult {
  std::vector<int> creation_order;
  ThresholdCode code;
};
PeelResult peel_threshold(const Graph& g);

/// True iff no 4-vertex induced subgraph is a path, a 4-cycle, or a perfect
/// matching on four vertices. Brute force over all 4-subsets.
bool is_forbidden_free(const Graph& g);

/// True iff for every pair u != v, N(u) is contained in N[v] or N(v) in N[u].
bool nested_neighborhoods(const Graph& g);

/// Constructive weight representation, self-verified against every vertex
/// pair before returning. Throws NotThreshold on non-threshold input.
WeightRep weight_representation(const Graph& g);

TwinPartition closed_twin_classes(const Graph& g);

/// Throws Disconnected when the (nonempty) code ends in 0.
BlockStructure block_decomposition(const ThresholdCode& code);

/// m cliques K_k sharing one universal hub (vertex 0); n = m(k-1)+1.
Graph windmill(int k, int m);

// Small generators used throughout the tests and controls.
Graph complete_graph(int n);
Graph cycle_graph(int n);
Graph path_graph(int n);
Graph star_graph(int leaves);

}  // namespace ksync
