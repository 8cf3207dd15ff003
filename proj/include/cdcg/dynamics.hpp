#pragma once

#include "cdcg/decomposition.hpp"
#include "cdcg/graph.hpp"
#include "cdcg/objective.hpp"
#include "cdcg/rk4.hpp"
#include "cdcg/stats.hpp"

#include <cmath>
#include <functional>
#include <iomanip>
#include <optional>
#include <ostream>

namespace cdcg {

/// Step size as a function of continuous time.
using StepSize = std::function<double(double)>;

/// gamma(t) = 2 / (mu t), the schedule the rate result is stated for.
inline StepSize harmonic_step(double mu) {
  return [mu](double t) { return 2.0 / (mu * t); };
}

inline StepSize zero_step() {
  return [](double) { return 0.0; };
}

inline StepSize constant_step(double c) {
  return [c](double) { return c; };
}

// ---------------------------------------------------------------------------
// Right-hand sides

/// dX/dt = -(L_int + L_ext) X - gamma(t) grad F(X).
inline State dcg_rhs(const ClusterNetwork& net, const QuadraticObjective& obj, const State& X, double t,
                     const StepSize& gamma) {
  State out = -net.L() * X;
  const double g = gamma(t);
  if (g != 0.0) out -= g * gradient_stack(obj, X);
  return out;
}

/// Time derivative of the fast variable e_x expressed in (e_x, y):
/// -W (L_int + L_ext) e_x - W L_ext U y - gamma W grad F(X).
inline Matrix fast_rhs(const ClusterNetwork& net, const QuadraticObjective& obj, const Decomposition& dec,
                       const State& X, double t, const StepSize& gamma) {
  const Matrix& W = net.W_center();
  Matrix out = -W * (net.L_int() + net.L_ext()) * dec.e_x - W * net.L_ext() * net.U() * dec.y;
  const double g = gamma(t);
  if (g != 0.0) out -= g * W * gradient_stack(obj, X);
  return out;
}

namespace detail {

inline Matrix apply_inverse_sizes(const ClusterNetwork& net, Matrix m) {
  for (int a = 0; a < net.r(); ++a) m.row(a) /= net.cluster_sizes()[a];
  return m;
}

}  // namespace detail

/// dy/dt = -P^-1 L_agg y - P^-1 U^T L_ext e_x - gamma P^-1 U^T grad F(X).
inline Matrix slow_rhs(const ClusterNetwork& net, const QuadraticObjective& obj, const Decomposition& dec,
                       const State& X, double t, const StepSize& gamma) {
  Matrix acc = -net.L_agg() * dec.y - net.U().transpose() * (net.L_ext() * dec.e_x);
  const double g = gamma(t);
  if (g != 0.0) acc -= g * net.U().transpose() * gradient_stack(obj, X);
  return detail::apply_inverse_sizes(net, std::move(acc));
}

/// de_y/dt = -P^-1 L_agg e_y - P^-1 U^T L_ext e_x - gamma P^-1 U^T grad F(X)
///           + (gamma / N) 1_r (1_N^T grad F(X)).
inline Matrix inter_rhs(const ClusterNetwork& net, const QuadraticObjective& obj, const Decomposition& dec,
                        const State& X, double t, const StepSize& gamma) {
  Matrix acc = -net.L_agg() * dec.e_y - net.U().transpose() * (net.L_ext() * dec.e_x);
  const double g = gamma(t);
  Matrix out;
  if (g != 0.0) {
    const State G = gradient_stack(obj, X);
    acc -= g * net.U().transpose() * G;
    out = detail::apply_inverse_sizes(net, std::move(acc));
    const Eigen::RowVectorXd drift = (g / net.N()) * G.colwise().sum();
    out.rowwise() += drift;
  } else {
    out = detail::apply_inverse_sizes(net, std::move(acc));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Integration

struct IntegratorConfig {
  double t0 = 1.0;
  double T = 100.0;
  double dt = 1e-3;
  int sample_every = 1;
  double mu = 1.0;
  StepSize gamma;  // empty: harmonic_step(mu)

  StepSize step_size() const { return gamma ? gamma : harmonic_step(mu); }

  void validate() const {
    require(t0 > 0.0 && t0 < T, "integrator needs 0 < t0 < T");
    require(dt > 0.0, "integrator dt must be positive");
    require(sample_every >= 1, "sample_every must be at least 1");
    require(mu > 0.0, "mu must be positive");
  }
};

/// 1e-3 / max(1, ||L||).
inline double default_time_step(const ClusterNetwork& net) {
  return 1e-3 / std::max(1.0, spectral_norm(net.L()));
}

struct TrajectorySample {
  double t = 0.0;
  double gamma = 0.0;
  State X;
  State z_integral;  // integral of X from t0 to t
  Decomposition dec;
  LyapunovSample lyap;
};

struct Trajectory {
  double t0 = 0.0;
  std::vector<TrajectorySample> samples;
  double grad_norm_max = 0.0;

  const TrajectorySample& front() const { return samples.front(); }
  const TrajectorySample& back() const { return samples.back(); }

  /// Appends a sample, advancing the integral by the trapezoid rule over the
  /// gap to the previous sample. Used when building trajectories by hand.
  void append(double t, const State& X) {
    TrajectorySample s;
    s.t = t;
    s.X = X;
    if (samples.empty()) {
      t0 = t;
      s.z_integral = State::Zero(X.rows(), X.cols());
    } else {
      const auto& prev = samples.back();
      require(t > prev.t, "sample times must be strictly increasing");
      s.z_integral = prev.z_integral + 0.5 * (t - prev.t) * (prev.X + X);
    }
    samples.push_back(std::move(s));
  }
};

inline TrajectorySample make_sample(const ClusterNetwork& net, const QuadraticObjective& obj, double t,
                                    double gamma, const State& X, const State& z) {
  TrajectorySample s;
  s.t = t;
  s.gamma = gamma;
  s.X = X;
  s.z_integral = z;
  s.dec = decompose(net, X);
  s.lyap = lyapunov(s.dec, obj.x_star(), t);
  return s;
}

/// Fixed-step RK4 integration of the DCG flow from cfg.t0 to cfg.T. The
/// running integral of X is advanced by the trapezoid rule at every step and
/// the largest ||grad F(X)||_F seen at any step is tracked.
inline Trajectory integrate(const ClusterNetwork& net, const QuadraticObjective& obj, const State& X0,
                            const IntegratorConfig& cfg) {
  cfg.validate();
  require(X0.rows() == net.N() && X0.cols() == obj.d(), "initial state must be N x d");
  require(obj.N() == net.N(), "objective and network disagree on N");
  const StepSize gamma = cfg.step_size();
  const long steps = std::max(1L, static_cast<long>(std::ceil((cfg.T - cfg.t0) / cfg.dt - 1e-9)));
  const double h = (cfg.T - cfg.t0) / static_cast<double>(steps);

  Trajectory traj;
  traj.t0 = cfg.t0;
  State z = State::Zero(X0.rows(), X0.cols());
  traj.samples.push_back(make_sample(net, obj, cfg.t0, gamma(cfg.t0), X0, z));
  traj.grad_norm_max = gradient_stack(obj, X0).norm();

  State prev = X0;
  auto rhs = [&](const State& X, double t) { return dcg_rhs(net, obj, X, t, gamma); };
  rk4_integrate(rhs, X0, cfg.t0, cfg.T, steps, [&](long k, double t, const State& X) {
    if (!X.allFinite()) throw DivergenceError("state became non-finite at t = " + std::to_string(t), t);
    z += 0.5 * h * (prev + X);
    prev = X;
    traj.grad_norm_max = std::max(traj.grad_norm_max, gradient_stack(obj, X).norm());
    if (k % cfg.sample_every == 0 || k == steps) traj.samples.push_back(make_sample(net, obj, t, gamma(t), X, z));
  });
  return traj;
}

/// z_p(T) = (1 / (T - t0)) * integral_{t0}^{T} x_p dt. Between samples the
/// state is interpolated linearly; at T = t0 the state itself is returned.
inline Vector running_average(const Trajectory& traj, int p, double T) {
  require(!traj.samples.empty(), "empty trajectory");
  if (T < traj.t0) throw InputError("running_average: T precedes the start time");
  require(T <= traj.back().t + 1e-12 * std::max(1.0, std::abs(T)), "running_average: T beyond the last sample");
  require(p >= 0 && p < traj.front().X.rows(), "running_average: node index out of range");
  const auto& s = traj.samples;
  if (T <= traj.t0) return s.front().X.row(p).transpose();
  auto it = std::upper_bound(s.begin(), s.end(), T, [](double v, const TrajectorySample& x) { return v < x.t; });
  const std::size_t idx = static_cast<std::size_t>(std::distance(s.begin(), it)) - 1;
  const auto& lo = s[idx];
  Vector integral = lo.z_integral.row(p).transpose();
  if (T > lo.t && idx + 1 < s.size()) {
    const auto& hi = s[idx + 1];
    const double w = (T - lo.t) / (hi.t - lo.t);
    const Vector xT = ((1.0 - w) * lo.X.row(p) + w * hi.X.row(p)).transpose();
    integral += 0.5 * (T - lo.t) * (lo.X.row(p).transpose() + xT);
  }
  return integral / (T - traj.t0);
}

// ---------------------------------------------------------------------------
// Rate certificate

struct RateCertificate {
  double epsilon = 0.0;
  double D = 0.0;
  double L = 0.0;
  double mu = 0.0;
  int N_min = 1;

  double log_coefficient() const { return 2.0 * L * (N_min + epsilon) / (mu * N_min); }
  /// D / T + (2 L (N_min + eps) / (mu N_min)) ln(T) / T.
  double bound(double T) const { return D / T + log_coefficient() * std::log(T) / T; }
};

/// epsilon = 6 L N_max / (mu sigma2_agg) + N_max ||L_ext|| / sigma2_agg and
/// D = V_ex(t0) + epsilon V_ey(t0). L defaults to the trajectory's largest
/// observed ||grad F||.
inline RateCertificate rate_certificate(const SpectralConstants& sc, const QuadraticObjective& obj,
                                        const Trajectory& traj, std::optional<double> L_override = {}) {
  require(!traj.samples.empty(), "rate_certificate: empty trajectory");
  if (!(sc.sigma2_agg > 0.0)) throw AssumptionError("rate_certificate: sigma_2 of the aggregate graph is zero");
  RateCertificate c;
  c.L = L_override.value_or(traj.grad_norm_max);
  c.mu = obj.mu();
  c.N_min = sc.N_min;
  c.epsilon = 6.0 * c.L * sc.N_max / (c.mu * sc.sigma2_agg) + sc.N_max * sc.norm_Lext / sc.sigma2_agg;
  const auto& first = traj.front().lyap;
  c.D = first.V_ex + c.epsilon * first.V_ey;
  return c;
}

// ---------------------------------------------------------------------------
// Lyapunov inequality monitors

struct LemmaRow {
  double t = 0.0;
  double gamma = 0.0;
  // d/dt of each Lyapunov function and the upper bound it must respect.
  std::optional<double> dV_ey, bound_ey;
  std::optional<double> dV_ex, bound_ex;
  double dV_xbar = 0.0, bound_xbar = 0.0;
};

struct InequalityTally {
  long checked = 0;
  long skipped = 0;
  long violations = 0;
  double max_excess = -std::numeric_limits<double>::infinity();  // max of (lhs - rhs) / (1 + |rhs|)
  double worst_t = 0.0;
};

struct LemmaReport {
  std::vector<LemmaRow> rows;
  InequalityTally inter;  // V(e_y)
  InequalityTally fast;   // V(e_x)
  InequalityTally mean;   // V(xbar)
  double L = 0.0;
  double slack = 1e-8;

  long violations() const { return inter.violations + fast.violations + mean.violations; }
};

namespace detail {

inline void tally(InequalityTally& acc, double lhs, double rhs, double t, double slack) {
  ++acc.checked;
  const double excess = (lhs - rhs) / (1.0 + std::abs(rhs));
  if (excess > acc.max_excess) {
    acc.max_excess = excess;
    acc.worst_t = t;
  }
  if (excess > slack) ++acc.violations;
}

}  // namespace detail

/// Evaluates, at every stored sample, the exact time derivatives of
/// V(e_y) = ||e_y||, V(e_x) = ||e_x|| and V(xbar) = ||xbar - x*||^2 from the
/// analytic right-hand sides, and compares them with
///
///   dV(e_y)/dt  <= -sigma2_agg / N_max V(e_y) + ||L_ext|| / N_min V(e_x) + L gamma / N_min
///   dV(e_x)/dt  <= -sigma2_int V(e_x) + ||L_ext|| V(e_y) + L gamma
///   dV(xbar)/dt <= -(mu gamma / 2) ||xbar - x*||^2 + gamma (f(x*) - f(x_p)) + 3 L gamma (V(e_y) + V(e_x))
///
/// A sample counts as a violation when lhs - rhs > slack * (1 + |rhs|).
/// Samples where a norm is zero are skipped for that inequality. With p < 0
/// the third inequality is checked for the node with the largest f(x_p),
/// which is the binding one.
inline LemmaReport lemma_monitors(const ClusterNetwork& net, const SpectralConstants& sc,
                                  const QuadraticObjective& obj, const Trajectory& traj, const StepSize& gamma,
                                  int p = -1, std::optional<double> L_override = {}, double slack = 1e-8) {
  LemmaReport rep;
  rep.L = L_override.value_or(traj.grad_norm_max);
  rep.slack = slack;
  const double L = rep.L;
  const double mu = obj.mu();
  for (const auto& s : traj.samples) {
    LemmaRow row;
    row.t = s.t;
    row.gamma = gamma(s.t);
    const double g = row.gamma;
    const auto& lv = s.lyap;

    if (lv.V_ey > 0.0 && std::isfinite(sc.sigma2_agg)) {
      const Matrix dey = inter_rhs(net, obj, s.dec, s.X, s.t, gamma);
      row.dV_ey = (s.dec.e_y.array() * dey.array()).sum() / lv.V_ey;
      row.bound_ey = -sc.sigma2_agg / sc.N_max * lv.V_ey + sc.norm_Lext / sc.N_min * lv.V_ex + L * g / sc.N_min;
      detail::tally(rep.inter, *row.dV_ey, *row.bound_ey, s.t, slack);
    } else {
      ++rep.inter.skipped;
    }

    if (lv.V_ex > 0.0) {
      const Matrix dex = fast_rhs(net, obj, s.dec, s.X, s.t, gamma);
      row.dV_ex = (s.dec.e_x.array() * dex.array()).sum() / lv.V_ex;
      row.bound_ex = -sc.sigma2_int * lv.V_ex + sc.norm_Lext * lv.V_ey + L * g;
      detail::tally(rep.fast, *row.dV_ex, *row.bound_ex, s.t, slack);
    } else {
      ++rep.fast.skipped;
    }

    const Vector xbar_dot = -(g / net.N()) * gradient_stack(obj, s.X).colwise().sum().transpose();
    row.dV_xbar = 2.0 * (s.dec.xbar - obj.x_star()).dot(xbar_dot);
    double f_p = 0.0;
    if (p >= 0) {
      f_p = obj.value(s.X.row(p).transpose());
    } else {
      f_p = -std::numeric_limits<double>::infinity();
      for (int i = 0; i < net.N(); ++i) f_p = std::max(f_p, obj.value(s.X.row(i).transpose()));
    }
    row.bound_xbar = -(mu * g / 2.0) * lv.V_xbar + g * (obj.f_star() - f_p) + 3.0 * L * g * (lv.V_ey + lv.V_ex);
    detail::tally(rep.mean, row.dV_xbar, row.bound_xbar, s.t, slack);
    rep.rows.push_back(row);
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Theorem check

struct TheoremRow {
  double T = 0.0;
  double err = 0.0;  // ||z_p(T) - x*||^2
  double bound = 0.0;
  double slack() const { return bound - err; }
};

struct TheoremReport {
  int p = 0;
  std::vector<TheoremRow> rows;
  double min_slack = std::numeric_limits<double>::infinity();
  long violations = 0;
  LinearFit tail_fit;  // err = intercept + c * ln(T)/T over the last decade of T
};

/// Compares ||z_p(T) - x*||^2 against the certificate at every sample with
/// T >= e * t0, and fits err against ln(T)/T over T in [T_end / 10, T_end].
inline TheoremReport theorem_check(const Trajectory& traj, const RateCertificate& cert,
                                   const QuadraticObjective& obj, int p) {
  TheoremReport rep;
  rep.p = p;
  const double T_start = std::exp(1.0) * traj.t0;
  const double T_end = traj.back().t;
  std::vector<double> u, e;
  for (const auto& s : traj.samples) {
    if (s.t < T_start) continue;
    const Vector z = s.z_integral.row(p).transpose() / (s.t - traj.t0);
    TheoremRow row{s.t, (z - obj.x_star()).squaredNorm(), cert.bound(s.t)};
    rep.min_slack = std::min(rep.min_slack, row.slack());
    if (row.slack() < 0.0) ++rep.violations;
    if (s.t >= T_end / 10.0) {
      u.push_back(std::log(s.t) / s.t);
      e.push_back(row.err);
    }
    rep.rows.push_back(row);
  }
  rep.tail_fit = linear_fit(u, e);
  return rep;
}

// ---------------------------------------------------------------------------
// Two-time-scale separation

struct TimeScaleReport {
  double rate_ex = 0.0;
  double rate_ey = 0.0;
  double ratio = 0.0;      // rate_ex / rate_ey
  double predicted = 0.0;  // sigma2_int * N_max / sigma2_agg
  double margin = 0.0;     // ratio - predicted / 3
  bool holds = false;
};

/// Fits exponential decay rates of V(e_x) and V(e_y) over each one's first
/// `efolds` e-folds and compares their ratio against sigma2_int N_max / sigma2_agg
/// within a factor of three.
inline TimeScaleReport time_scale_separation(const Trajectory& traj, const SpectralConstants& sc,
                                             double efolds = 2.0) {
  std::vector<double> t, vx, vy;
  for (const auto& s : traj.samples) {
    t.push_back(s.t);
    vx.push_back(s.lyap.V_ex);
    vy.push_back(s.lyap.V_ey);
  }
  TimeScaleReport rep;
  rep.rate_ex = fit_decay_rate(t, vx, efolds);
  rep.rate_ey = fit_decay_rate(t, vy, efolds);
  rep.ratio = rep.rate_ex / rep.rate_ey;
  rep.predicted = sc.sigma2_int * sc.N_max / sc.sigma2_agg;
  rep.margin = rep.ratio - rep.predicted / 3.0;
  rep.holds = rep.margin >= 0.0;
  return rep;
}

// ---------------------------------------------------------------------------
// Export

/// CSV with header t,V_ex,V_ey,V_xbar,err_zp,bound,gamma; err_zp tracks node p.
inline void write_trajectory_csv(std::ostream& out, const Trajectory& traj, const RateCertificate& cert,
                                 const QuadraticObjective& obj, int p) {
  out << "t,V_ex,V_ey,V_xbar,err_zp,bound,gamma\n";
  out << std::setprecision(17);
  for (const auto& s : traj.samples) {
    const Vector z = s.t > traj.t0 ? Vector(s.z_integral.row(p).transpose() / (s.t - traj.t0))
                                   : Vector(s.X.row(p).transpose());
    out << s.t << ',' << s.lyap.V_ex << ',' << s.lyap.V_ey << ',' << s.lyap.V_xbar << ','
        << (z - obj.x_star()).squaredNorm() << ',' << cert.bound(s.t) << ',' << s.gamma << '\n';
  }
}

}  // namespace cdcg
