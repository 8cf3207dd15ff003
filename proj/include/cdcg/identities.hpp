#pragma once

#include "cdcg/dynamics.hpp"

#include <random>

namespace cdcg {

struct IdentityItem {
  std::string name;
  double value = 0.0;      // observed residual
  double tolerance = 0.0;  // passes iff value <= tolerance
  double margin() const { return tolerance - value; }
  bool passed() const { return value <= tolerance; }
};

struct IdentityReport {
  std::vector<IdentityItem> items;
  bool passed() const {
    return std::all_of(items.begin(), items.end(), [](const IdentityItem& i) { return i.passed(); });
  }
  double margin() const {
    double m = std::numeric_limits<double>::infinity();
    for (const auto& i : items) m = std::min(m, i.margin());
    return m;
  }
  const IdentityItem& at(const std::string& name) const {
    for (const auto& i : items)
      if (i.name == name) return i;
    throw InputError("no identity named " + name);
  }
};

/// ||U^T L_ext U - L_agg||_inf, with L_agg assembled from the edge list.
inline double aggregate_identity_residual(const ClusterNetwork& net) {
  return inf_norm(aggregate_laplacian(net) - net.L_agg());
}

struct ProjectionResiduals {
  double fast = 0.0;     // ||W dcg_rhs - fast_rhs||_inf
  double slow = 0.0;     // ||P^-1 U^T dcg_rhs - slow_rhs||_inf
  double inter = 0.0;    // ||(slow_rhs - 1 mean(dcg_rhs)) - inter_rhs||_inf
  double average = 0.0;  // ||mean(dcg_rhs) + (gamma/N) 1^T grad F||_inf
};

inline ProjectionResiduals projection_residuals(const ClusterNetwork& net, const QuadraticObjective& obj,
                                                const State& X, double t, const StepSize& gamma) {
  const auto dec = decompose(net, X);
  const State full = dcg_rhs(net, obj, X, t, gamma);
  const Matrix fast = fast_rhs(net, obj, dec, X, t, gamma);
  const Matrix slow = slow_rhs(net, obj, dec, X, t, gamma);
  const Matrix inter = inter_rhs(net, obj, dec, X, t, gamma);
  Matrix projected_slow = net.U().transpose() * full;
  for (int a = 0; a < net.r(); ++a) projected_slow.row(a) /= net.cluster_sizes()[a];
  const Eigen::RowVectorXd mean = full.colwise().mean();
  const Eigen::RowVectorXd drift = -(gamma(t) / net.N()) * gradient_stack(obj, X).colwise().sum();
  Matrix slow_minus_mean = slow.rowwise() - mean;
  return {inf_norm(net.W_center() * full - fast), inf_norm(projected_slow - slow),
          inf_norm(slow_minus_mean - inter), inf_norm(mean - drift)};
}

/// Algebraic identity suite for one network and objective. `states` random
/// states (entries N(0, 1), seeded) exercise the projection identities and
/// the spectral inequalities.
inline IdentityReport identity_suite(const ClusterNetwork& net, const SpectralConstants& sc,
                                     const QuadraticObjective& obj, std::uint64_t seed = 1, int states = 50) {
  IdentityReport rep;
  auto add = [&](std::string name, double value, double tol) { rep.items.push_back({std::move(name), value, tol}); };

  add("aggregate_laplacian", aggregate_identity_residual(net), 1e-10);
  add("laplacian_split", inf_norm(net.L() - net.L_int() - net.L_ext()), 0.0);
  double sym = 0.0, rows = 0.0, neg = 0.0;
  for (const Matrix* m : {&net.L(), &net.L_int(), &net.L_ext(), &net.L_agg()}) {
    sym = std::max(sym, inf_norm(*m - m->transpose()));
    rows = std::max(rows, m->rowwise().sum().cwiseAbs().maxCoeff());
    neg = std::max(neg, -symmetric_eigenvalues(*m)(0));
  }
  add("laplacian_symmetry", sym, 0.0);
  add("laplacian_row_sums", rows, 0.0);
  add("laplacian_psd", std::max(neg, 0.0), 1e-10);
  add("size_matrix", inf_norm(net.U().transpose() * net.U() - net.P()), 0.0);
  const Matrix& W = net.W_center();
  add("centering_idempotent", inf_norm(W * W - W), 1e-12);
  add("centering_kills_ones", (W * Vector::Ones(net.N())).norm(), 1e-12);
  add("centering_kills_U", (W * net.U()).norm(), 1e-12);

  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  std::uniform_real_distribution<double> unif(1.0, 50.0);
  ProjectionResiduals worst;
  double ineq_int = -std::numeric_limits<double>::infinity();
  double ineq_agg = -std::numeric_limits<double>::infinity();
  const StepSize gamma = harmonic_step(obj.mu());
  for (int s = 0; s < states; ++s) {
    State X(net.N(), obj.d());
    for (int i = 0; i < X.size(); ++i) X.data()[i] = normal(rng);
    const auto res = projection_residuals(net, obj, X, unif(rng), gamma);
    worst.fast = std::max(worst.fast, res.fast);
    worst.slow = std::max(worst.slow, res.slow);
    worst.inter = std::max(worst.inter, res.inter);
    worst.average = std::max(worst.average, res.average);

    // Block-wise zero mean vector: -v^T L_int v <= -sigma2_int ||v||^2.
    const Vector v = W * Vector(X.col(0));
    if (std::isfinite(sc.sigma2_int))
      ineq_int = std::max(ineq_int, -v.dot(net.L_int() * v) + sc.sigma2_int * v.squaredNorm());
    // w orthogonal to 1_r: -w^T L_agg w <= -sigma2_agg ||w||^2.
    if (net.r() > 1 && std::isfinite(sc.sigma2_agg)) {
      Vector w(net.r());
      for (int a = 0; a < net.r(); ++a) w(a) = normal(rng);
      w.array() -= w.mean();
      ineq_agg = std::max(ineq_agg, -w.dot(net.L_agg() * w) + sc.sigma2_agg * w.squaredNorm());
    }
  }
  add("projection_fast", worst.fast, 1e-11);
  add("projection_slow", worst.slow, 1e-11);
  add("projection_inter", worst.inter, 1e-11);
  add("average_dynamics", worst.average, 1e-11);
  if (std::isfinite(ineq_int)) add("internal_spectral_inequality", std::max(ineq_int, 0.0), 1e-9);
  if (std::isfinite(ineq_agg)) add("aggregate_spectral_inequality", std::max(ineq_agg, 0.0), 1e-9);

  const Matrix Wm = metropolis_weights(net);
  add("metropolis_row_sums", (Wm.rowwise().sum().array() - 1.0).abs().maxCoeff(), 1e-12);
  add("metropolis_symmetry", inf_norm(Wm - Wm.transpose()), 0.0);
  add("metropolis_spectral_radius", std::max(symmetric_eigenvalues(Wm).cwiseAbs().maxCoeff() - 1.0, 0.0), 1e-12);
  return rep;
}

}  // namespace cdcg
