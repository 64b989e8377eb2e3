#pragma once

#include <Eigen/Dense>
#include <array>
#include <filesystem>
#include <fstream>
#include <string>
#include <utility>
#include <vector>

#include "ksync/graph.hpp"
#include "ksync/landscape.hpp"

namespace ksync::testing {

// Labeled graph on n vertices from an edge bitmask over pairs (i,j), i<j,
// enumerated lexicographically. Drives the exhaustive small-n sweeps.
inline Graph graph_from_mask(int n, unsigned mask) {
  Graph g(n);
  int bit = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j, ++bit) {
      if (mask >> bit & 1u) g.add_edge(i, j);
    }
  }
  return g;
}

// The 9-vertex graph generated by the alternating code 01010101, edges frozen
// from its construction (0-indexed).
inline std::vector<std::pair<int, int>> alternating9_edges() {
  return {{0, 2}, {0, 4}, {0, 6}, {0, 8}, {2, 4}, {2, 6}, {2, 8},
          {4, 6}, {4, 8}, {6, 8}, {1, 2}, {1, 4}, {1, 6}, {1, 8},
          {3, 4}, {3, 6}, {3, 8}, {5, 6}, {5, 8}, {7, 8}};
}

// Four 19-vertex construction codes spanning the density range, star to clique.
inline std::array<std::string, 4> nineteen_vertex_codes() {
  return {"000000000000000001", "000100000000010001", "010001101101010001",
          "111111111111111111"};
}

// Central finite differences of the energy, the independent oracle for the
// analytic gradient.
inline Eigen::VectorXd fd_gradient(const Graph& g, const PhaseConfig& theta,
                                   double h = 1e-5) {
  Eigen::VectorXd out(theta.size());
  PhaseConfig probe = theta;
  for (Eigen::Index i = 0; i < theta.size(); ++i) {
    probe[i] = theta[i] + h;
    double up = energy(g, probe);
    probe[i] = theta[i] - h;
    double down = energy(g, probe);
    probe[i] = theta[i];
    out[i] = (up - down) / (2.0 * h);
  }
  return out;
}

inline Eigen::MatrixXd laplacian(const Graph& g) {
  const int n = g.vertex_count();
  Eigen::MatrixXd l = Eigen::MatrixXd::Zero(n, n);
  for (int u = 0; u < n; ++u) {
    l(u, u) = g.degree(u);
    for (int v : g.neighbors(u)) l(u, v) = -1.0;
  }
  return l;
}

class TempFile {
 public:
  explicit TempFile(const std::string& name)
      : path_(std::filesystem::temp_directory_path() /
              ("ksync_test_" + name)) {}
  ~TempFile() {
    std::error_code ec;
    std::filesystem::remove(path_, ec);
  }
  const std::filesystem::path& path() const { return path_; }
  void write(const std::string& contents) const {
    std::ofstream out(path_);
    out << contents;
  }

 private:
  std::filesystem::path path_;
};

}  // namespace ksync::testing
