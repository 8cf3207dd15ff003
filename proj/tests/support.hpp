#pragma once

#include "cdcg/graph.hpp"
#include "cdcg/network_io.hpp"
#include "cdcg/objective.hpp"

#include <filesystem>
#include <random>

namespace cdcg::testing {

inline std::filesystem::path source_dir() { return CDCG_SOURCE_DIR; }
inline std::filesystem::path fixture(const std::string& name) { return source_dir() / "fixtures" / name; }

/// Clusters {0,1} and {2,3}, each an edge, joined by the edge (1,2).
inline ClusterNetwork toy_network() { return ClusterNetwork::from_edges({0, 0, 1, 1}, {{0, 1}, {2, 3}, {1, 2}}); }

/// Objective with A_i = I_d and the given b_i.
inline QuadraticObjective identity_objective(const std::vector<Vector>& b) {
  std::vector<Matrix> A(b.size(), Matrix::Identity(b[0].size(), b[0].size()));
  return QuadraticObjective(A, b);
}

/// Random cluster network with r in [2, 5] clusters and at most max_nodes nodes,
/// external links forming a random connected aggregate graph.
inline ClusterNetwork random_cluster_network(std::uint64_t seed, int max_nodes = 100) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> rdist(2, 5);
  const int r = rdist(rng);
  std::uniform_int_distribution<int> sdist(1, max_nodes / r);
  std::uniform_real_distribution<double> dens(0.3, 1.0);
  ClusterSpec spec;
  spec.intra_density.clear();
  for (int a = 0; a < r; ++a) {
    spec.cluster_sizes.push_back(sdist(rng));
    spec.intra_density.push_back(dens(rng));
  }
  spec.seed = seed;
  std::vector<std::vector<int>> used(r, std::vector<int>(r, 0));
  auto link = [&](int a, int b, int count) {
    const int room = spec.cluster_sizes[a] * spec.cluster_sizes[b] - used[a][b];
    count = std::min(count, room);
    if (count <= 0) return;
    used[a][b] += count;
    used[b][a] += count;
    spec.external_links.push_back({a, b, count});
  };
  for (int a = 1; a < r; ++a) {
    std::uniform_int_distribution<int> parent(0, a - 1);
    link(parent(rng), a, 1 + static_cast<int>(rng() % 2));
  }
  for (int extra = static_cast<int>(rng() % 3); extra > 0; --extra) {
    int a = static_cast<int>(rng() % r), b = static_cast<int>(rng() % r);
    if (a != b) link(a, b, 1);
  }
  return build_cluster_network(spec);
}

inline State random_state(int N, int d, std::uint64_t seed, double scale = 1.0) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, scale);
  State X(N, d);
  for (int i = 0; i < X.size(); ++i) X.data()[i] = normal(rng);
  return X;
}

}  // namespace cdcg::testing
