#pragma once

#include "cdcg/decomposition.hpp"
#include "cdcg/graph.hpp"
#include "cdcg/objective.hpp"

#include <functional>
#include <iomanip>
#include <optional>
#include <ostream>

namespace cdcg {

/// Step size as a function of the iteration counter k >= 1.
using IterationStep = std::function<double(long)>;

inline IterationStep inverse_iteration_step() {
  return [](long k) { return 1.0 / static_cast<double>(k); };
}

struct DiscreteConfig {
  long K = 1000;
  IterationStep gamma;    // empty: 1 / k
  Matrix weights;         // doubly stochastic mixing matrix, N x N
  std::vector<int> track; // nodes whose optimality gap is recorded
  int record_every = 1;

  IterationStep step_size() const { return gamma ? gamma : inverse_iteration_step(); }
};

/// X+ = Wm X - gamma(k) grad F(X).
inline State discrete_step(const Matrix& Wm, const QuadraticObjective& obj, const State& X, long k,
                           const IterationStep& gamma) {
  require(k >= 1, "iterations start at k = 1");
  State next = Wm * X;
  const double g = gamma(k);
  if (g != 0.0) next -= g * gradient_stack(obj, X);
  return next;
}

struct DiscreteRecord {
  long k = 0;
  double gamma = 0.0;
  std::vector<double> gap;  // ||z_p(k) - x*|| per tracked node
  double V_ex = 0.0;
  double V_ey = 0.0;
};

struct DiscreteHistory {
  std::vector<int> track;
  std::vector<DiscreteRecord> records;
  State final_state;
  State running_sum;  // sum of iterates x(1..K)
  long K = 0;
  // First iteration after which within-cluster disagreement stays below
  // between-cluster disagreement for the rest of the run.
  std::optional<long> sync_iteration;

  /// Gap of tracked node slot `slot` at the recorded iteration closest to k from below.
  double gap_at(long k, std::size_t slot = 0) const {
    const DiscreteRecord* best = nullptr;
    for (const auto& r : records) {
      if (r.k > k) break;
      best = &r;
    }
    require(best != nullptr, "no record at or before the requested iteration");
    return best->gap.at(slot);
  }
  double final_gap(std::size_t slot = 0) const { return records.back().gap.at(slot); }

  /// Local synchronization happens first, then a slower approach to the optimum.
  bool two_phase() const {
    return sync_iteration.has_value() && *sync_iteration <= K / 10 && final_gap() < gap_at(*sync_iteration);
  }
};

/// Runs K iterations from X0 and records, per iteration, the running-average
/// gaps ||z_p(k) - x*|| with z_p(k) = (1/k) sum_{j=1..k} x_p(j), where x(j)
/// is the state after j updates.
inline DiscreteHistory run_discrete(const ClusterNetwork& net, const QuadraticObjective& obj, const State& X0,
                                    const DiscreteConfig& cfg) {
  require(cfg.K >= 1, "K must be at least 1");
  require(cfg.weights.rows() == net.N() && cfg.weights.cols() == net.N(), "weight matrix must be N x N");
  require(X0.rows() == net.N() && X0.cols() == obj.d(), "initial state must be N x d");
  require(cfg.record_every >= 1, "record_every must be at least 1");
  for (int p : cfg.track) require(p >= 0 && p < net.N(), "tracked node out of range");
  const IterationStep gamma = cfg.step_size();

  DiscreteHistory h;
  h.track = cfg.track.empty() ? std::vector<int>{0} : cfg.track;
  h.K = cfg.K;
  State X = X0;
  h.running_sum = State::Zero(X0.rows(), X0.cols());
  std::vector<char> synced;  // per recorded iteration: V_ex < V_ey
  std::vector<long> rec_k;
  for (long k = 1; k <= cfg.K; ++k) {
    X = discrete_step(cfg.weights, obj, X, k, gamma);
    if (!X.allFinite()) throw DivergenceError("iterate became non-finite at k = " + std::to_string(k), double(k));
    h.running_sum += X;
    if (k % cfg.record_every != 0 && k != cfg.K) continue;
    DiscreteRecord rec;
    rec.k = k;
    rec.gamma = gamma(k);
    for (int p : h.track) {
      const Vector z = h.running_sum.row(p).transpose() / static_cast<double>(k);
      rec.gap.push_back((z - obj.x_star()).norm());
    }
    const auto dec = decompose(net, X);
    rec.V_ex = dec.e_x.norm();
    rec.V_ey = dec.e_y.norm();
    synced.push_back(rec.V_ex < rec.V_ey);
    rec_k.push_back(k);
    h.records.push_back(std::move(rec));
  }
  h.final_state = X;
  for (std::size_t i = synced.size(); i-- > 0;) {
    if (!synced[i]) break;
    h.sync_iteration = rec_k[i];
  }
  return h;
}

/// CSV with header k,gamma,gap_p,V_ex,V_ey for the tracked node in `slot`.
inline void write_discrete_csv(std::ostream& out, const DiscreteHistory& h, std::size_t slot = 0) {
  require(slot < h.track.size(), "tracked node slot out of range");
  out << "k,gamma,gap_p,V_ex,V_ey\n";
  out << std::setprecision(17);
  for (const auto& r : h.records)
    out << r.k << ',' << r.gamma << ',' << r.gap[slot] << ',' << r.V_ex << ',' << r.V_ey << '\n';
}

}  // namespace cdcg
