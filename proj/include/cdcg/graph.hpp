#pragma once

#include "cdcg/core.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <queue>
#include <random>
#include <set>
#include <span>
#include <utility>

namespace cdcg {

/// Undirected edge, stored with first < second.
struct Edge {
  int first = 0;
  int second = 0;

  Edge() = default;
  Edge(int a, int b) : first(std::min(a, b)), second(std::max(a, b)) {}

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Random cross-cluster links between one pair of clusters.
struct ExternalLinkCount {
  int cluster_a = 0;
  int cluster_b = 0;
  int count = 0;
};

/// Recipe for a cluster network.
///
/// Intra-cluster graphs are Erdos-Renyi with the given edge probability
/// (one value for all clusters, or one per cluster) and are resampled until
/// connected. External edges are either listed explicitly (global node
/// indices) or drawn uniformly per cluster pair. Nodes are numbered
/// contiguously: cluster 0 owns [0, N_0), cluster 1 owns [N_0, N_0 + N_1), ...
struct ClusterSpec {
  std::vector<int> cluster_sizes;
  std::vector<double> intra_density{1.0};
  bool complete = false;
  std::vector<Edge> external_edges;
  std::vector<ExternalLinkCount> external_links;
  std::uint64_t seed = 0;
  int max_retries = 100;
};

inline std::vector<int> partition_from_sizes(std::span<const int> sizes) {
  std::vector<int> part;
  for (int a = 0; a < static_cast<int>(sizes.size()); ++a) {
    require(sizes[a] >= 1, "cluster sizes must be positive");
    part.insert(part.end(), sizes[a], a);
  }
  return part;
}

namespace detail {

inline Matrix laplacian_from_edges(int n, std::span<const Edge> edges) {
  Matrix lap = Matrix::Zero(n, n);
  for (const auto& e : edges) {
    lap(e.first, e.first) += 1.0;
    lap(e.second, e.second) += 1.0;
    lap(e.first, e.second) -= 1.0;
    lap(e.second, e.first) -= 1.0;
  }
  return lap;
}

// Connectivity of the subgraph induced by `nodes` using only `edges`.
inline bool connected(std::span<const int> nodes, std::span<const Edge> edges) {
  if (nodes.size() <= 1) return true;
  std::vector<int> local(static_cast<std::size_t>(*std::max_element(nodes.begin(), nodes.end())) + 1, -1);
  for (std::size_t k = 0; k < nodes.size(); ++k) local[nodes[k]] = static_cast<int>(k);
  std::vector<std::vector<int>> adj(nodes.size());
  auto idx = [&](int v) { return v < static_cast<int>(local.size()) ? local[v] : -1; };
  for (const auto& e : edges) {
    int a = idx(e.first), b = idx(e.second);
    if (a >= 0 && b >= 0) {
      adj[a].push_back(b);
      adj[b].push_back(a);
    }
  }
  std::vector<char> seen(nodes.size(), 0);
  std::queue<int> q;
  q.push(0);
  seen[0] = 1;
  std::size_t count = 1;
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (int w : adj[v]) {
      if (!seen[w]) {
        seen[w] = 1;
        ++count;
        q.push(w);
      }
    }
  }
  return count == nodes.size();
}

}  // namespace detail

/// A graph partitioned into clusters, with every derived matrix.
///
/// Immutable after construction. `L_agg` is assembled directly from the
/// cross-cluster edge list (edge counts between clusters); the product
/// U^T L_ext U is computed separately by aggregate_laplacian() so the two can
/// be compared.
class ClusterNetwork {
public:
  /// Builds all matrices from a node->cluster map and an undirected edge list.
  /// Does not check connectivity; see validate_connectivity().
  static ClusterNetwork from_edges(std::vector<int> partition, std::vector<Edge> edges,
                                   std::uint64_t seed = 0) {
    ClusterNetwork net;
    net.N_ = static_cast<int>(partition.size());
    require(net.N_ >= 1, "network must have at least one node");
    int r = 0;
    for (int c : partition) {
      require(c >= 0, "cluster index must be non-negative");
      r = std::max(r, c + 1);
    }
    net.r_ = r;
    net.sizes_.assign(r, 0);
    net.members_.assign(r, {});
    for (int i = 0; i < net.N_; ++i) {
      ++net.sizes_[partition[i]];
      net.members_[partition[i]].push_back(i);
    }
    for (int a = 0; a < r; ++a)
      require(net.sizes_[a] >= 1, "inconsistent partition: cluster " + std::to_string(a) + " is empty");

    std::set<Edge> uniq;
    for (const auto& e : edges) {
      require(e.first >= 0 && e.second < net.N_,
              "edge (" + std::to_string(e.first) + "," + std::to_string(e.second) +
                  ") references a node outside [0," + std::to_string(net.N_) + ")");
      require(e.first != e.second, "self loops are not allowed");
      require(uniq.insert(e).second, "duplicate edge (" + std::to_string(e.first) + "," +
                                         std::to_string(e.second) + ")");
    }
    net.edges_.assign(uniq.begin(), uniq.end());
    net.partition_ = std::move(partition);
    net.seed_ = seed;

    std::vector<Edge> internal, external;
    for (const auto& e : net.edges_) {
      (net.partition_[e.first] == net.partition_[e.second] ? internal : external).push_back(e);
    }
    net.internal_ = internal;
    net.external_ = external;

    net.adjacency_ = Matrix::Zero(net.N_, net.N_);
    for (const auto& e : net.edges_) {
      net.adjacency_(e.first, e.second) = 1.0;
      net.adjacency_(e.second, e.first) = 1.0;
    }
    net.L_int_ = detail::laplacian_from_edges(net.N_, internal);
    net.L_ext_ = detail::laplacian_from_edges(net.N_, external);
    net.L_ = detail::laplacian_from_edges(net.N_, net.edges_);

    std::vector<Edge> agg_edges;
    net.L_agg_ = Matrix::Zero(r, r);
    for (const auto& e : external) {
      int a = net.partition_[e.first], b = net.partition_[e.second];
      net.L_agg_(a, a) += 1.0;
      net.L_agg_(b, b) += 1.0;
      net.L_agg_(a, b) -= 1.0;
      net.L_agg_(b, a) -= 1.0;
    }

    net.U_ = Matrix::Zero(net.N_, r);
    for (int i = 0; i < net.N_; ++i) net.U_(i, net.partition_[i]) = 1.0;
    net.P_ = Matrix::Zero(r, r);
    for (int a = 0; a < r; ++a) net.P_(a, a) = net.sizes_[a];
    net.W_ = Matrix::Identity(net.N_, net.N_);
    for (int a = 0; a < r; ++a) {
      const double inv = 1.0 / net.sizes_[a];
      for (int i : net.members_[a])
        for (int j : net.members_[a]) net.W_(i, j) -= inv;
    }
    return net;
  }

  int N() const noexcept { return N_; }
  int r() const noexcept { return r_; }
  std::uint64_t seed() const noexcept { return seed_; }
  const std::vector<int>& partition() const noexcept { return partition_; }
  const std::vector<int>& cluster_sizes() const noexcept { return sizes_; }
  const std::vector<int>& members(int cluster) const { return members_.at(cluster); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const std::vector<Edge>& internal_edges() const noexcept { return internal_; }
  const std::vector<Edge>& external_edges() const noexcept { return external_; }

  const Matrix& adjacency() const noexcept { return adjacency_; }
  const Matrix& L() const noexcept { return L_; }
  const Matrix& L_int() const noexcept { return L_int_; }
  const Matrix& L_ext() const noexcept { return L_ext_; }
  const Matrix& L_agg() const noexcept { return L_agg_; }
  const Matrix& U() const noexcept { return U_; }
  const Matrix& P() const noexcept { return P_; }
  const Matrix& W_center() const noexcept { return W_; }

  int degree(int i) const { return static_cast<int>(adjacency_.row(i).sum()); }

  /// Block of L_int belonging to one cluster (the cluster's own Laplacian).
  Matrix cluster_laplacian(int cluster) const {
    const auto& m = members_.at(cluster);
    const int n = static_cast<int>(m.size());
    Matrix block(n, n);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) block(a, b) = L_int_(m[a], m[b]);
    return block;
  }

  bool cluster_connected(int cluster) const { return detail::connected(members_.at(cluster), internal_); }

  bool aggregate_connected() const {
    std::vector<int> clusters(r_);
    std::iota(clusters.begin(), clusters.end(), 0);
    std::vector<Edge> agg;
    for (const auto& e : external_) {
      int a = partition_[e.first], b = partition_[e.second];
      agg.emplace_back(a, b);
    }
    return detail::connected(clusters, agg);
  }

private:
  ClusterNetwork() = default;

  int N_ = 0;
  int r_ = 0;
  std::uint64_t seed_ = 0;
  std::vector<int> partition_;
  std::vector<int> sizes_;
  std::vector<std::vector<int>> members_;
  std::vector<Edge> edges_, internal_, external_;
  Matrix adjacency_, L_, L_int_, L_ext_, L_agg_, U_, P_, W_;
};

/// Throws AssumptionError unless every cluster graph and the aggregate
/// external graph are connected.
inline void validate_connectivity(const ClusterNetwork& net) {
  for (int a = 0; a < net.r(); ++a) {
    if (!net.cluster_connected(a))
      throw AssumptionError("Assumption 1 violated: internal graph of cluster " + std::to_string(a) +
                            " is disconnected");
  }
  if (!net.aggregate_connected())
    throw AssumptionError("Assumption 1 violated: aggregate external graph is disconnected");
}

inline ClusterNetwork build_cluster_network(const ClusterSpec& spec) {
  const auto& sizes = spec.cluster_sizes;
  require(!sizes.empty(), "cluster_sizes must not be empty");
  const int r = static_cast<int>(sizes.size());
  auto partition = partition_from_sizes(sizes);
  const int N = static_cast<int>(partition.size());
  std::vector<int> offset(r + 1, 0);
  for (int a = 0; a < r; ++a) offset[a + 1] = offset[a] + sizes[a];

  require(spec.complete || spec.intra_density.size() == 1 ||
              static_cast<int>(spec.intra_density.size()) == r,
          "intra_density must have one entry or one per cluster");
  auto density = [&](int a) {
    double p = spec.intra_density.size() == 1 ? spec.intra_density[0] : spec.intra_density[a];
    require(p > 0.0 && p <= 1.0, "intra_density must lie in (0, 1]");
    return p;
  };

  std::mt19937_64 rng(spec.seed);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  std::vector<Edge> edges;

  for (int a = 0; a < r; ++a) {
    std::vector<int> nodes(sizes[a]);
    std::iota(nodes.begin(), nodes.end(), offset[a]);
    if (spec.complete || density(a) >= 1.0) {
      for (int i = offset[a]; i < offset[a + 1]; ++i)
        for (int j = i + 1; j < offset[a + 1]; ++j) edges.emplace_back(i, j);
      continue;
    }
    const double p = density(a);
    bool ok = false;
    std::vector<Edge> block;
    for (int attempt = 0; attempt < spec.max_retries && !ok; ++attempt) {
      block.clear();
      for (int i = offset[a]; i < offset[a + 1]; ++i)
        for (int j = i + 1; j < offset[a + 1]; ++j)
          if (unif(rng) < p) block.emplace_back(i, j);
      ok = detail::connected(nodes, block);
    }
    if (!ok)
      throw AssumptionError("Assumption 1 violated: could not sample a connected graph for cluster " +
                            std::to_string(a) + " within " + std::to_string(spec.max_retries) + " retries");
    edges.insert(edges.end(), block.begin(), block.end());
  }

  std::set<Edge> external;
  for (const auto& e : spec.external_edges) {
    require(e.first >= 0 && e.second < N, "external edge references a node outside the network");
    require(partition[e.first] != partition[e.second],
            "external edge (" + std::to_string(e.first) + "," + std::to_string(e.second) +
                ") joins nodes of the same cluster");
    require(external.insert(e).second, "duplicate external edge");
  }
  for (const auto& link : spec.external_links) {
    const int a = link.cluster_a, b = link.cluster_b;
    require(a >= 0 && a < r && b >= 0 && b < r && a != b, "external link must join two distinct clusters");
    require(link.count >= 0 && static_cast<long>(link.count) <= static_cast<long>(sizes[a]) * sizes[b],
            "more external links requested than node pairs available");
    std::uniform_int_distribution<int> pick_a(offset[a], offset[a + 1] - 1);
    std::uniform_int_distribution<int> pick_b(offset[b], offset[b + 1] - 1);
    int placed = 0;
    while (placed < link.count) {
      if (external.insert(Edge(pick_a(rng), pick_b(rng))).second) ++placed;
    }
  }
  edges.insert(edges.end(), external.begin(), external.end());

  auto net = ClusterNetwork::from_edges(std::move(partition), std::move(edges), spec.seed);
  validate_connectivity(net);
  return net;
}

/// U^T L_ext U, the Laplacian of the aggregate external graph.
inline Matrix aggregate_laplacian(const ClusterNetwork& net) {
  return net.U().transpose() * net.L_ext() * net.U();
}

/// Ascending eigenvalues of a symmetric matrix.
inline Vector symmetric_eigenvalues(const Matrix& m) {
  if (m.rows() == 0) return Vector();
  Eigen::SelfAdjointEigenSolver<Matrix> es(m, Eigen::EigenvaluesOnly);
  return es.eigenvalues();
}

/// Largest singular value.
inline double spectral_norm(const Matrix& m) {
  if (m.size() == 0) return 0.0;
  Eigen::JacobiSVD<Matrix> svd(m);
  return svd.singularValues()(0);
}

/// Second smallest eigenvalue of a Laplacian; +infinity for a single node.
inline double algebraic_connectivity(const Matrix& laplacian) {
  if (laplacian.rows() <= 1) return std::numeric_limits<double>::infinity();
  return symmetric_eigenvalues(laplacian)(1);
}

struct SpectralConstants {
  std::vector<double> sigma2_clusters;  // sigma_2(L_alpha) per cluster
  double sigma2_int = 0.0;              // min over clusters
  double sigma2_agg = 0.0;              // sigma_2(L_agg)
  double sigma2_full = 0.0;             // sigma_2(L), for comparison only
  double norm_Lext = 0.0;
  double norm_Lagg = 0.0;
  int N_min = 0;
  int N_max = 0;
};

inline constexpr double kZeroEigenTolerance = 1e-9;

/// Throws AssumptionError if a cluster or the aggregate graph has
/// sigma_2 <= kZeroEigenTolerance.
inline SpectralConstants spectral_constants(const ClusterNetwork& net) {
  SpectralConstants sc;
  sc.sigma2_int = std::numeric_limits<double>::infinity();
  for (int a = 0; a < net.r(); ++a) {
    const double s2 = algebraic_connectivity(net.cluster_laplacian(a));
    if (s2 <= kZeroEigenTolerance)
      throw AssumptionError("Assumption 1 violated: sigma_2 of cluster " + std::to_string(a) +
                            " is zero (disconnected)");
    sc.sigma2_clusters.push_back(s2);
    sc.sigma2_int = std::min(sc.sigma2_int, s2);
  }
  sc.sigma2_agg = algebraic_connectivity(net.L_agg());
  if (sc.sigma2_agg <= kZeroEigenTolerance)
    throw AssumptionError("Assumption 1 violated: sigma_2 of the aggregate external graph is zero (disconnected)");
  sc.sigma2_full = algebraic_connectivity(net.L());
  sc.norm_Lext = spectral_norm(net.L_ext());
  sc.norm_Lagg = spectral_norm(net.L_agg());
  const auto& sizes = net.cluster_sizes();
  sc.N_min = *std::min_element(sizes.begin(), sizes.end());
  sc.N_max = *std::max_element(sizes.begin(), sizes.end());
  return sc;
}

struct InequalityReport {
  bool holds = false;
  double lhs = 0.0;
  double rhs = 0.0;
  double margin = 0.0;  // lhs - rhs; holds iff margin >= 0
};

struct ClusterAssumptionCheck {
  InequalityReport full;   // sigma2_int >= (12L/mu + ||L_ext||) N_max ||L_ext|| / (N_min sigma2_agg)
  InequalityReport proxy;  // sigma2_int >= ||L_agg||^2 / sigma2_agg
  bool holds() const noexcept { return full.holds; }
};

inline ClusterAssumptionCheck check_cluster_assumption(const SpectralConstants& sc, double L, double mu) {
  require(L > 0.0 && mu > 0.0, "gradient bound L and strong convexity mu must be positive");
  if (sc.sigma2_agg <= 0.0) throw AssumptionError("sigma_2 of the aggregate graph is zero");
  ClusterAssumptionCheck out;
  auto finish = [](InequalityReport& rep) {
    rep.margin = rep.lhs - rep.rhs;
    rep.holds = rep.margin >= 0.0;
  };
  out.full.lhs = sc.sigma2_int;
  out.full.rhs = sc.norm_Lext == 0.0
                     ? 0.0
                     : (12.0 * L / mu + sc.norm_Lext) * sc.N_max * sc.norm_Lext /
                           (sc.N_min * sc.sigma2_agg);
  finish(out.full);
  out.proxy.lhs = sc.sigma2_int;
  out.proxy.rhs = sc.norm_Lagg == 0.0 ? 0.0 : sc.norm_Lagg * sc.norm_Lagg / sc.sigma2_agg;
  finish(out.proxy);
  return out;
}

/// Metropolis averaging matrix: w_ij = 1 / max(d_i, d_j) on edges, diagonal
/// fills each row to one. With `plus_one` the customary 1 / (1 + max(d_i, d_j))
/// is used instead.
inline Matrix metropolis_weights(const ClusterNetwork& net, bool plus_one = false) {
  const int n = net.N();
  std::vector<int> deg(n);
  for (int i = 0; i < n; ++i) deg[i] = net.degree(i);
  Matrix w = Matrix::Zero(n, n);
  for (const auto& e : net.edges()) {
    const double v = 1.0 / (std::max(deg[e.first], deg[e.second]) + (plus_one ? 1 : 0));
    w(e.first, e.second) = v;
    w(e.second, e.first) = v;
  }
  for (int i = 0; i < n; ++i) {
    const double diag = 1.0 - w.row(i).sum();
    if (diag < -1e-15) throw Error("metropolis weights produced a negative diagonal at node " + std::to_string(i));
    w(i, i) = std::max(diag, 0.0);
  }
  return w;
}

}  // namespace cdcg
