// Pure consensus (no gradient term) on a clustered network: the within-cluster
// disagreement V(e_x) collapses quickly while the between-cluster disagreement
// V(e_y) decays on a much slower scale.

#include "cdcg/dynamics.hpp"

#include <cstdio>
#include <random>

int main() {
  cdcg::ClusterSpec spec;
  spec.cluster_sizes = {10, 10, 10};
  spec.intra_density = {0.9};
  spec.seed = 1;
  spec.external_edges = {{0, 10}, {11, 20}, {21, 1}};
  const auto net = cdcg::build_cluster_network(spec);
  const auto sc = cdcg::spectral_constants(net);
  const auto obj = cdcg::make_random_objective(net.N(), 2, 3, 5);

  std::mt19937_64 rng(3);
  std::normal_distribution<double> normal;
  cdcg::State X0(net.N(), obj.d());
  for (int i = 0; i < X0.size(); ++i) X0.data()[i] = normal(rng);

  cdcg::IntegratorConfig cfg;
  cfg.t0 = 1.0;
  cfg.T = 13.0;
  cfg.dt = 1e-3;
  cfg.sample_every = 500;
  cfg.gamma = cdcg::zero_step();
  const auto traj = cdcg::integrate(net, obj, X0, cfg);

  std::printf("%8s %14s %14s\n", "t", "V(e_x)", "V(e_y)");
  for (const auto& s : traj.samples) std::printf("%8.2f %14.6e %14.6e\n", s.t, s.lyap.V_ex, s.lyap.V_ey);

  const auto ts = cdcg::time_scale_separation(traj, sc);
  std::printf("\nfitted rates: fast %.4f, slow %.4f, ratio %.2f (spectral prediction %.2f)\n", ts.rate_ex,
              ts.rate_ey, ts.ratio, ts.predicted);
  return 0;
}
