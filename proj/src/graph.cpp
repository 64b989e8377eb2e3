#include "ksync/graph.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>

namespace ksync {

ThresholdCode ThresholdCode::parse(std::string_view text) {
  if (text.empty()) {
    throw DomainError(ErrorCode::EmptyInput, "empty construction code");
  }
  std::vector<bool> bits;
  bits.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (c == '0') {
      bits.push_back(false);
    } else if (c == '1') {
      bits.push_back(true);
    } else {
      throw DomainError(ErrorCode::InvalidCharacter,
                        "invalid character '" + std::string(1, c) +
                            "' at position " + std::to_string(i + 1));
    }
  }
  return ThresholdCode(std::move(bits));
}

std::string ThresholdCode::str() const {
  std::string s;
  s.reserve(bits_.size());
  for (bool b : bits_) s.push_back(b ? '1' : '0');
  return s;
}

Graph::Graph(int n) : n_(n), adj_(static_cast<std::size_t>(std::max(n, 0))) {
  if (n < 0) {
    throw DomainError(ErrorCode::InvalidParameters, "negative vertex count");
  }
}

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edges) : Graph(n) {
  for (auto [u, v] : edges) add_edge(u, v);
}

void Graph::add_edge(int u, int v) {
  if (u < 0 || v < 0 || u >= n_ || v >= n_) {
    throw DomainError(ErrorCode::InvalidParameters, "vertex out of range");
  }
  if (u == v) {
    throw DomainError(ErrorCode::InvalidParameters, "self-loop rejected");
  }
  if (adjacent(u, v)) {
    throw DomainError(ErrorCode::InvalidParameters, "duplicate edge rejected");
  }
  adj_[u].insert(std::lower_bound(adj_[u].begin(), adj_[u].end(), v), v);
  adj_[v].insert(std::lower_bound(adj_[v].begin(), adj_[v].end(), u), u);
  ++edge_count_;
}

bool Graph::adjacent(int u, int v) const {
  const auto& a = adj_[u];
  return std::binary_search(a.begin(), a.end(), v);
}

int Graph::max_degree() const {
  int d = 0;
  for (const auto& a : adj_) d = std::max(d, static_cast<int>(a.size()));
  return d;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(static_cast<std::size_t>(edge_count_));
  for (int u = 0; u < n_; ++u) {
    for (int v : adj_[u]) {
      if (v > u) out.emplace_back(u, v);
    }
  }
  return out;
}

std::vector<int> Graph::closed_neighborhood(int v) const {
  std::vector<int> out = adj_[v];
  out.insert(std::lower_bound(out.begin(), out.end(), v), v);
  return out;
}

bool Graph::operator==(const Graph& other) const {
  return n_ == other.n_ && adj_ == other.adj_;
}

Graph build_threshold(const ThresholdCode& code) {
  Graph g(code.vertex_count());
  for (std::size_t i = 0; i < code.length(); ++i) {
    if (!code.bit(i)) continue;
    int v = static_cast<int>(i) + 1;
    for (int u = 0; u < v; ++u) g.add_edge(u, v);
  }
  return g;
}

long edge_count_from_code(const ThresholdCode& code) {
  long total = 0;
  for (std::size_t i = 0; i < code.length(); ++i) {
    if (code.bit(i)) total += static_cast<long>(i) + 1;
  }
  return total;
}

PeelResult peel_threshold(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<bool> alive(n, true);
  std::vector<int> deg(n);
  for (int v = 0; v < n; ++v) deg[v] = g.degree(v);

  std::vector<int> removal;        // peel order, latest creation first
  std::vector<bool> removal_bits;  // 1 = dominating at removal time
  removal.reserve(n);

  for (int remaining = n; remaining > 1; --remaining) {
    // Isolated and dominating vertices never coexist at this size, so the
    // candidate kind is unambiguous; the latest-created candidate is chosen,
    // which peels generated graphs exactly in reverse creation order.
    int pick = -1;
    bool dominating = false;
    for (int v = 0; v < n; ++v) {
      if (!alive[v]) continue;
      if (deg[v] == 0 || deg[v] == remaining - 1) {
        pick = v;
        dominating = deg[v] == remaining - 1;
      }
    }
    if (pick < 0) {
      throw DomainError(ErrorCode::NotThreshold,
                        "peeling stalled with " + std::to_string(remaining) +
                            " vertices left");
    }
    alive[pick] = false;
    for (int u : g.neighbors(pick)) {
      if (alive[u]) --deg[u];
    }
    removal.push_back(pick);
    removal_bits.push_back(dominating);
  }

  PeelResult result;
  result.creation_order.resize(n);
  for (int v = 0; v < n; ++v) {
    if (alive[v]) result.creation_order[0] = v;  // the seed vertex
  }
  std::vector<bool> bits(removal_bits.rbegin(), removal_bits.rend());
  for (std::size_t p = 0; p < removal.size(); ++p) {
    result.creation_order[n - 1 - p] = removal[p];
  }
  result.code = ThresholdCode(std::move(bits));
  return result;
}

ThresholdCode recognize_threshold(const Graph& g) {
  return peel_threshold(g).code;
}

namespace {

// Signatures identifying the three forbidden 4-vertex induced subgraphs
// among all graphs on four vertices: edge count plus sorted degree sequence.
bool forbidden_quadruple(const Graph& g, int a, int b, int c, int d) {
  const std::array<int, 4> q{a, b, c, d};
  std::array<int, 4> deg{0, 0, 0, 0};
  int edges = 0;
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) {
      if (g.adjacent(q[i], q[j])) {
        ++edges;
        ++deg[i];
        ++deg[j];
      }
    }
  }
  std::sort(deg.begin(), deg.end());
  if (edges == 2 && deg == std::array<int, 4>{1, 1, 1, 1}) return true;  // 2K_2
  if (edges == 3 && deg == std::array<int, 4>{1, 1, 2, 2}) return true;  // P_4
  if (edges == 4 && deg == std::array<int, 4>{2, 2, 2, 2}) return true;  // C_4
  return false;
}

}  // namespace

bool is_forbidden_free(const Graph& g) {
  const int n = g.vertex_count();
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c)
        for (int d = c + 1; d < n; ++d)
          if (forbidden_quadruple(g, a, b, c, d)) return false;
  return true;
}

bool nested_neighborhoods(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<std::vector<int>> closed(n);
  for (int v = 0; v < n; ++v) closed[v] = g.closed_neighborhood(v);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      const auto& nu = g.neighbors(u);
      const auto& nv = g.neighbors(v);
      bool u_in_v = std::includes(closed[v].begin(), closed[v].end(),
                                  nu.begin(), nu.end());
      bool v_in_u = std::includes(closed[u].begin(), closed[u].end(),
                                  nv.begin(), nv.end());
      if (!u_in_v && !v_in_u) return false;
    }
  }
  return true;
}

WeightRep weight_representation(const Graph& g) {
  PeelResult peel = peel_threshold(g);  // throws NotThreshold
  const int n = g.vertex_count();

  // Creation position p gets magnitude p+1, signed by how the vertex was
  // added: dominating positive, isolated negative (the seed vertex counts as
  // isolated). Pair sums are then >= 0 exactly on edges, with threshold 0.
  WeightRep rep;
  rep.weights.assign(n, 0.0);
  rep.threshold = 0.0;
  for (int p = 0; p < n; ++p) {
    int v = peel.creation_order[p];
    bool dominating = p > 0 && peel.code.bit(static_cast<std::size_t>(p) - 1);
    rep.weights[v] = (dominating ? 1.0 : -1.0) * (p + 1);
  }

  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      bool weight_edge = rep.weights[u] + rep.weights[v] >= rep.threshold;
      if (weight_edge != g.adjacent(u, v)) {
        throw DomainError(ErrorCode::NotThreshold,
                          "weight representation failed pair check");
      }
    }
  }
  return rep;
}

TwinPartition closed_twin_classes(const Graph& g) {
  const int n = g.vertex_count();
  std::map<std::vector<int>, std::vector<int>> groups;
  for (int v = 0; v < n; ++v) {
    groups[g.closed_neighborhood(v)].push_back(v);
  }
  TwinPartition partition;
  partition.classes.reserve(groups.size());
  for (auto& [key, members] : groups) partition.classes.push_back(members);
  std::sort(partition.classes.begin(), partition.classes.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return partition;
}

BlockStructure block_decomposition(const ThresholdCode& code) {
  if (!code.connected()) {
    throw DomainError(ErrorCode::Disconnected,
                      "construction code ends in 0 (graph disconnected)");
  }
  // Vertex 0 behaves as an implicit leading 0-bit.
  const int n = code.vertex_count();
  std::vector<bool> bits(static_cast<std::size_t>(n));
  bits[0] = false;
  for (std::size_t i = 0; i < code.length(); ++i) bits[i + 1] = code.bit(i);

  BlockStructure blocks;
  int v = 0;
  while (v < n) {
    int start = v;
    while (v < n && bits[v] == bits[start]) ++v;
    std::vector<int> run(static_cast<std::size_t>(v - start));
    std::iota(run.begin(), run.end(), start);
    if (bits[start]) {
      blocks.dominating_blocks.push_back(std::move(run));
    } else {
      blocks.isolated_blocks.push_back(std::move(run));
    }
  }
  return blocks;
}

Graph windmill(int k, int m) {
  if (k < 2 || m < 1) {
    throw DomainError(ErrorCode::InvalidParameters,
                      "windmill requires clique size >= 2 and >= 1 blade");
  }
  const int blade = k - 1;
  Graph g(m * blade + 1);
  for (int b = 0; b < m; ++b) {
    int base = 1 + b * blade;
    for (int i = 0; i < blade; ++i) {
      g.add_edge(0, base + i);
      for (int j = i + 1; j < blade; ++j) g.add_edge(base + i, base + j);
    }
  }
  return g;
}

Graph complete_graph(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

Graph cycle_graph(int n) {
  if (n < 3) {
    throw DomainError(ErrorCode::InvalidParameters, "cycle needs >= 3 vertices");
  }
  Graph g(n);
  for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
  return g;
}

Graph path_graph(int n) {
  Graph g(n);
  for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

Graph star_graph(int leaves) {
  Graph g(leaves + 1);
  for (int v = 1; v <= leaves; ++v) g.add_edge(0, v);
  return g;
}

}  // namespace ksync
