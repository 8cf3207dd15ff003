#pragma once

#include "cdcg/discrete.hpp"
#include "cdcg/dynamics.hpp"
#include "cdcg/identities.hpp"
#include "cdcg/network_io.hpp"
#include "cdcg/objective.hpp"
#include "cdcg/svg.hpp"

#include <nlohmann/json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>

namespace cdcg {

namespace fs = std::filesystem;
using nlohmann::json;

enum class Mode { continuous, discrete, both };

struct InitialState {
  enum class Kind { zero, random } kind = Kind::zero;
  std::uint64_t seed = 0;
  double scale = 1.0;

  State make(int N, int d) const {
    if (kind == Kind::zero) return State::Zero(N, d);
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> normal(0.0, scale);
    State X(N, d);
    for (int i = 0; i < N; ++i)
      for (int j = 0; j < d; ++j) X(i, j) = normal(rng);
    return X;
  }
};

struct NetworkSource {
  std::optional<fs::path> file;
  ClusterSpec spec;
};

struct ObjectiveSource {
  std::optional<fs::path> file;
  int d = 4;
  int l = 6;
  std::uint64_t seed = 0;
  double conditioning = 1.0;
};

struct ContinuousSettings {
  double t0 = 1.0;
  double T = 100.0;
  std::optional<double> dt;
  int sample_every = 1;
  bool zero_gamma = false;
  std::optional<double> L;
  int track = 0;
  InitialState x0;
};

struct DiscreteSettings {
  long K = 10000;
  bool zero_gamma = false;
  std::vector<int> track{0};
  bool metropolis_plus_one = false;
  int record_every = 1;
  InitialState x0;
};

struct ReportSettings {
  bool identities = true;
  bool assumption3 = true;
  bool assumption3_proxy = false;  // judge Assumption 3 by its simplified form
  std::optional<double> assumption3_radius;
  bool lemmas = true;
  bool theorem = true;
  bool two_time_scale = true;
  bool discrete_convergence = true;
  double lemma_slack = 1e-8;
  double theorem_r2 = 0.9;
};

struct ExperimentConfig {
  std::string name = "experiment";
  fs::path base_dir = ".";
  NetworkSource network;
  ObjectiveSource objective;
  Mode mode = Mode::discrete;
  ContinuousSettings integrator;
  DiscreteSettings discrete;
  ReportSettings report;
  std::optional<fs::path> outputs;

  bool runs_continuous() const { return mode != Mode::discrete; }
  bool runs_discrete() const { return mode != Mode::continuous; }
};

namespace detail {

inline InitialState parse_initial_state(const json& j) {
  InitialState s;
  if (j.is_string()) {
    const auto kind = j.get<std::string>();
    require(kind == "zero" || kind == "random", "initial_state must be \"zero\" or \"random\"");
    s.kind = kind == "zero" ? InitialState::Kind::zero : InitialState::Kind::random;
    return s;
  }
  const auto kind = j.value("kind", std::string("zero"));
  require(kind == "zero" || kind == "random", "initial_state.kind must be \"zero\" or \"random\"");
  s.kind = kind == "zero" ? InitialState::Kind::zero : InitialState::Kind::random;
  s.seed = j.value("seed", std::uint64_t{0});
  s.scale = j.value("scale", 1.0);
  return s;
}

inline std::vector<Edge> parse_edges(const json& j) {
  std::vector<Edge> out;
  for (const auto& e : j) {
    require(e.is_array() && e.size() == 2, "edges must be pairs [i, j]");
    out.emplace_back(e[0].get<int>(), e[1].get<int>());
  }
  return out;
}

inline std::string gamma_name(const json& j, const std::string& fallback) {
  return j.value("gamma", fallback);
}

}  // namespace detail

/// Parses an experiment config. Relative paths are resolved against the
/// config file's directory.
inline ExperimentConfig parse_experiment(const json& j, const fs::path& base_dir) {
  try {
    ExperimentConfig cfg;
    cfg.base_dir = base_dir;
    cfg.name = j.value("name", std::string("experiment"));

    require(j.contains("network"), "config needs a network section");
    const auto& jn = j.at("network");
    if (jn.contains("file")) {
      cfg.network.file = base_dir / jn.at("file").get<std::string>();
    } else {
      auto& s = cfg.network.spec;
      s.cluster_sizes = jn.at("cluster_sizes").get<std::vector<int>>();
      if (jn.contains("intra_density")) {
        const auto& d = jn.at("intra_density");
        if (d.is_string()) {
          require(d.get<std::string>() == "complete", "intra_density must be a probability, a list, or \"complete\"");
          s.complete = true;
        } else if (d.is_array()) {
          s.intra_density = d.get<std::vector<double>>();
        } else {
          s.intra_density = {d.get<double>()};
        }
      }
      if (jn.contains("external_edges")) s.external_edges = detail::parse_edges(jn.at("external_edges"));
      if (jn.contains("external_links")) {
        for (const auto& l : jn.at("external_links")) {
          require(l.is_array() && l.size() == 3, "external_links entries are [cluster_a, cluster_b, count]");
          s.external_links.push_back({l[0].get<int>(), l[1].get<int>(), l[2].get<int>()});
        }
      }
      s.seed = jn.value("seed", std::uint64_t{0});
      s.max_retries = jn.value("max_retries", 100);
    }

    require(j.contains("objective"), "config needs an objective section");
    const auto& jo = j.at("objective");
    if (jo.contains("file")) {
      cfg.objective.file = base_dir / jo.at("file").get<std::string>();
    } else {
      cfg.objective.d = jo.value("d", 4);
      cfg.objective.l = jo.value("l", 6);
      cfg.objective.seed = jo.value("seed", std::uint64_t{0});
      cfg.objective.conditioning = jo.value("conditioning", 1.0);
    }

    const auto mode = j.value("mode", std::string("discrete"));
    if (mode == "continuous") cfg.mode = Mode::continuous;
    else if (mode == "discrete") cfg.mode = Mode::discrete;
    else if (mode == "both") cfg.mode = Mode::both;
    else throw InputError("mode must be continuous, discrete or both");

    InitialState shared;
    if (j.contains("initial_state")) shared = detail::parse_initial_state(j.at("initial_state"));
    cfg.integrator.x0 = shared;
    cfg.discrete.x0 = shared;

    if (j.contains("integrator")) {
      const auto& ji = j.at("integrator");
      auto& c = cfg.integrator;
      c.t0 = ji.value("t0", c.t0);
      c.T = ji.value("T", c.T);
      if (ji.contains("dt")) c.dt = ji.at("dt").get<double>();
      c.sample_every = ji.value("sample_every", c.sample_every);
      const auto g = detail::gamma_name(ji, "harmonic");
      require(g == "harmonic" || g == "zero", "integrator.gamma must be \"harmonic\" or \"zero\"");
      c.zero_gamma = g == "zero";
      if (ji.contains("L")) c.L = ji.at("L").get<double>();
      c.track = ji.value("track", 0);
      if (ji.contains("initial_state")) c.x0 = detail::parse_initial_state(ji.at("initial_state"));
    }
    if (cfg.runs_continuous()) {
      require(cfg.integrator.t0 > 0.0 && cfg.integrator.t0 < cfg.integrator.T, "integrator needs 0 < t0 < T");
      require(!cfg.integrator.dt || *cfg.integrator.dt > 0.0, "integrator.dt must be positive");
    }

    if (j.contains("discrete")) {
      const auto& jd = j.at("discrete");
      auto& c = cfg.discrete;
      c.K = jd.value("K", c.K);
      const auto g = detail::gamma_name(jd, "inverse");
      require(g == "inverse" || g == "zero", "discrete.gamma must be \"inverse\" or \"zero\"");
      c.zero_gamma = g == "zero";
      if (jd.contains("track")) c.track = jd.at("track").get<std::vector<int>>();
      c.metropolis_plus_one = jd.value("metropolis_plus_one", false);
      c.record_every = jd.value("record_every", 1);
      if (jd.contains("initial_state")) c.x0 = detail::parse_initial_state(jd.at("initial_state"));
    }
    if (cfg.runs_discrete()) {
      require(cfg.discrete.K >= 1, "discrete.K must be at least 1");
      require(!cfg.discrete.track.empty(), "discrete.track must list at least one node");
    }

    if (j.contains("report")) {
      const auto& jr = j.at("report");
      auto& r = cfg.report;
      r.identities = jr.value("identities", r.identities);
      r.assumption3 = jr.value("assumption3", r.assumption3);
      const auto form = jr.value("assumption3_form", std::string("full"));
      require(form == "full" || form == "proxy", "report.assumption3_form must be \"full\" or \"proxy\"");
      r.assumption3_proxy = form == "proxy";
      if (jr.contains("assumption3_radius")) r.assumption3_radius = jr.at("assumption3_radius").get<double>();
      r.lemmas = jr.value("lemmas", r.lemmas);
      r.theorem = jr.value("theorem", r.theorem);
      r.two_time_scale = jr.value("two_time_scale", r.two_time_scale);
      r.discrete_convergence = jr.value("discrete_convergence", r.discrete_convergence);
      r.lemma_slack = jr.value("lemma_slack", r.lemma_slack);
      r.theorem_r2 = jr.value("theorem_r2", r.theorem_r2);
    }
    if (j.contains("outputs")) cfg.outputs = base_dir / j.at("outputs").get<std::string>();
    return cfg;
  } catch (const json::exception& ex) {
    throw InputError(std::string("malformed config: ") + ex.what());
  }
}

inline ExperimentConfig load_experiment(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open config " + path.string());
  json j;
  try {
    in >> j;
  } catch (const json::exception& ex) {
    throw InputError("malformed config " + path.string() + ": " + ex.what());
  }
  return parse_experiment(j, path.parent_path().empty() ? fs::path(".") : path.parent_path());
}

/// Replaces every random seed in the config (network generator, objective
/// generator, initial states) with values derived from `seed`.
inline void override_seed(ExperimentConfig& cfg, std::uint64_t seed) {
  cfg.network.spec.seed = seed;
  cfg.objective.seed = seed + 1;
  cfg.integrator.x0.seed = seed + 2;
  cfg.discrete.x0.seed = seed + 2;
}

struct ExperimentResult {
  json report;
  bool passed = true;
};

struct RunOptions {
  fs::path out_dir;
  bool quiet = false;
  bool probe_only = false;  // verify: identities, Assumption 3 and a short probe
};

namespace detail {

inline json tally_json(const InequalityTally& t) {
  return {{"checked", t.checked},
          {"skipped", t.skipped},
          {"violations", t.violations},
          {"max_excess", std::isfinite(t.max_excess) ? t.max_excess : 0.0},
          {"worst_t", t.worst_t},
          {"margin", std::isfinite(t.max_excess) ? -t.max_excess : 0.0}};
}

inline json inequality_json(const InequalityReport& r) {
  return {{"holds", r.holds}, {"lhs", r.lhs}, {"rhs", r.rhs}, {"margin", r.margin}};
}

inline void write_text(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path.string());
  out << text;
}

inline std::string number(double v) {
  std::ostringstream o;
  o << std::setprecision(4) << v;
  return o.str();
}

}  // namespace detail

inline ClusterNetwork make_network(const ExperimentConfig& cfg) {
  if (cfg.network.file) return load_network(*cfg.network.file);
  return build_cluster_network(cfg.network.spec);
}

inline QuadraticObjective make_objective(const ExperimentConfig& cfg, int N) {
  if (cfg.objective.file) {
    auto obj = load_objective(*cfg.objective.file);
    require(obj.N() == N, "objective file has " + std::to_string(obj.N()) + " nodes, network has " +
                              std::to_string(N));
    return obj;
  }
  return make_random_objective(N, cfg.objective.d, cfg.objective.l, cfg.objective.seed, cfg.objective.conditioning);
}

/// Runs the configured experiment, writes its artifacts into opts.out_dir and
/// returns the verification report. Throws InputError / AssumptionError for
/// configuration problems.
inline ExperimentResult run_experiment(const ExperimentConfig& cfg, const RunOptions& opts) {
  auto log = [&](const std::string& msg) {
    if (!opts.quiet) std::cerr << msg << '\n';
  };
  const ClusterNetwork net = make_network(cfg);
  const SpectralConstants sc = spectral_constants(net);
  const QuadraticObjective obj = make_objective(cfg, net.N());
  fs::create_directories(opts.out_dir);

  ExperimentResult res;
  json& rep = res.report;
  rep["name"] = cfg.name;
  rep["mode"] = cfg.mode == Mode::continuous ? "continuous" : cfg.mode == Mode::discrete ? "discrete" : "both";
  rep["kind"] = opts.probe_only ? "verify" : "run";
  rep["network"] = {{"N", net.N()},
                    {"r", net.r()},
                    {"cluster_sizes", net.cluster_sizes()},
                    {"internal_edges", net.internal_edges().size()},
                    {"external_edges", net.external_edges().size()},
                    {"sigma2_clusters", sc.sigma2_clusters},
                    {"sigma2_int", sc.sigma2_int},
                    {"sigma2_agg", std::isfinite(sc.sigma2_agg) ? json(sc.sigma2_agg) : json(nullptr)},
                    {"sigma2_full", sc.sigma2_full},
                    {"norm_Lext", sc.norm_Lext},
                    {"norm_Lagg", sc.norm_Lagg},
                    {"N_min", sc.N_min},
                    {"N_max", sc.N_max}};
  std::vector<double> xs(obj.x_star().data(), obj.x_star().data() + obj.d());
  rep["objective"] = {{"N", obj.N()}, {"d", obj.d()}, {"l", obj.l()}, {"mu", obj.mu()}, {"f_star", obj.f_star()},
                      {"x_star", xs}};
  json& checks = rep["checks"];
  checks = json::object();
  auto record = [&](const std::string& key, json value, bool passed) {
    value["passed"] = passed;
    checks[key] = std::move(value);
    res.passed = res.passed && passed;
    log(std::string(passed ? "[pass] " : "[FAIL] ") + key);
  };

  log("network: N=" + std::to_string(net.N()) + " r=" + std::to_string(net.r()) +
      " sigma2_int=" + detail::number(sc.sigma2_int) + " sigma2_agg=" + detail::number(sc.sigma2_agg));

  if (cfg.report.identities) {
    const auto ids = identity_suite(net, sc, obj);
    json items = json::object();
    for (const auto& i : ids.items)
      items[i.name] = {{"value", i.value}, {"tolerance", i.tolerance}, {"margin", i.margin()}};
    record("identities", {{"margin", ids.margin()}, {"items", items}}, ids.passed());
  }

  // Continuous run (or a short probe for verify).
  std::optional<Trajectory> traj;
  const StepSize gamma = cfg.integrator.zero_gamma ? zero_step() : harmonic_step(obj.mu());
  IntegratorConfig icfg;
  if (cfg.runs_continuous() || opts.probe_only) {
    icfg.t0 = cfg.integrator.t0;
    icfg.T = cfg.integrator.T;
    icfg.dt = cfg.integrator.dt.value_or(default_time_step(net));
    icfg.sample_every = cfg.integrator.sample_every;
    icfg.mu = obj.mu();
    icfg.gamma = gamma;
    if (opts.probe_only) {
      icfg.T = icfg.t0 + 100 * icfg.dt;
      icfg.sample_every = 1;
    }
    log("integrating t in [" + detail::number(icfg.t0) + ", " + detail::number(icfg.T) + "] with dt=" +
        detail::number(icfg.dt));
    traj = integrate(net, obj, cfg.integrator.x0.make(net.N(), obj.d()), icfg);
  }

  if (cfg.report.assumption3) {
    json a3;
    double L = 0.0;
    if (traj && !opts.probe_only) {
      L = cfg.integrator.L.value_or(traj->grad_norm_max);
      a3["L_source"] = cfg.integrator.L ? "config" : "trajectory";
    } else {
      const double radius = cfg.report.assumption3_radius.value_or(1.0 + obj.x_star().norm());
      L = estimate_constants(obj, radius).L_stacked;
      a3["L_source"] = "a_priori";
      a3["radius"] = radius;
    }
    const auto check = check_cluster_assumption(sc, L, obj.mu());
    const auto& judged = cfg.report.assumption3_proxy ? check.proxy : check.full;
    a3["form"] = cfg.report.assumption3_proxy ? "proxy" : "full";
    a3["L"] = L;
    a3["mu"] = obj.mu();
    a3["holds"] = judged.holds;
    a3["lhs"] = judged.lhs;
    a3["rhs"] = judged.rhs;
    a3["margin"] = judged.margin;
    a3["full"] = detail::inequality_json(check.full);
    a3["proxy"] = detail::inequality_json(check.proxy);
    record("assumption3", a3, judged.holds);
  }

  if (opts.probe_only && traj) {
    const bool finite = traj->back().X.allFinite();
    record("probe", {{"steps", 100}, {"t_end", traj->back().t}, {"grad_norm_max", traj->grad_norm_max},
                     {"margin", finite ? 1.0 : -1.0}},
           finite);
  }

  if (cfg.runs_continuous() && !opts.probe_only) {
    const int p = cfg.integrator.track;
    require(p >= 0 && p < net.N(), "integrator.track out of range");
    const auto cert = rate_certificate(sc, obj, *traj, cfg.integrator.L);
    {
      std::ofstream csv(opts.out_dir / "trajectory.csv", std::ios::binary);
      write_trajectory_csv(csv, *traj, cert, obj, p);
    }
    rep["certificate"] = {{"epsilon", cert.epsilon}, {"D", cert.D}, {"L", cert.L}, {"mu", cert.mu},
                          {"log_coefficient", cert.log_coefficient()}};

    if (cfg.report.lemmas) {
      const auto lm = lemma_monitors(net, sc, obj, *traj, gamma, -1, cfg.integrator.L, cfg.report.lemma_slack);
      const double margin = std::min({detail::tally_json(lm.inter)["margin"].get<double>(),
                                      detail::tally_json(lm.fast)["margin"].get<double>(),
                                      detail::tally_json(lm.mean)["margin"].get<double>()});
      record("lemmas",
             {{"L", lm.L},
              {"slack", lm.slack},
              {"margin", margin},
              {"inter_cluster", detail::tally_json(lm.inter)},
              {"fast", detail::tally_json(lm.fast)},
              {"mean", detail::tally_json(lm.mean)},
              {"violations", lm.violations()}},
             lm.violations() == 0);
    }

    if (cfg.report.theorem) {
      double min_slack = std::numeric_limits<double>::infinity();
      double min_r2 = std::numeric_limits<double>::infinity();
      long violations = 0;
      TheoremReport tracked;
      for (int i = 0; i < net.N(); ++i) {
        auto th = theorem_check(*traj, cert, obj, i);
        min_slack = std::min(min_slack, th.min_slack);
        min_r2 = std::min(min_r2, th.tail_fit.r2);
        violations += th.violations;
        if (i == p) tracked = std::move(th);
      }
      const bool ok = violations == 0 && min_r2 >= cfg.report.theorem_r2;
      record("theorem",
             {{"margin", min_slack},
              {"violations", violations},
              {"min_tail_r2", min_r2},
              {"r2_threshold", cfg.report.theorem_r2},
              {"r2_margin", min_r2 - cfg.report.theorem_r2},
              {"tracked_node", p},
              {"tail_fit", {{"c", tracked.tail_fit.slope}, {"intercept", tracked.tail_fit.intercept},
                            {"r2", tracked.tail_fit.r2}, {"points", tracked.tail_fit.n}}}},
             ok);

      PlotSeries err{"||z_p - x*||^2 (p=" + std::to_string(p) + ")", "#1f77b4", {}, {}};
      PlotSeries bnd{"bound(T)", "#d62728", {}, {}, true};
      for (const auto& row : tracked.rows) {
        err.x.push_back(row.T);
        err.y.push_back(row.err);
        bnd.x.push_back(row.T);
        bnd.y.push_back(row.bound);
      }
      detail::write_text(opts.out_dir / "convergence.svg",
                         render_loglog_svg(cfg.name + ": continuous DCG", "T", "squared error", {err, bnd}));
    }

    if (cfg.report.two_time_scale) {
      IntegratorConfig zcfg = icfg;
      zcfg.gamma = zero_step();
      zcfg.T = icfg.t0 + 6.0 * sc.N_max / sc.sigma2_agg;
      zcfg.dt = std::min(icfg.dt, 0.05 / std::max(1.0, spectral_norm(net.L())));
      zcfg.sample_every = 1;
      InitialState x0{InitialState::Kind::random, cfg.integrator.x0.seed + 1, 1.0};
      const auto ztraj = integrate(net, obj, x0.make(net.N(), obj.d()), zcfg);
      const auto ts = time_scale_separation(ztraj, sc);
      record("two_time_scale",
             {{"rate_ex", ts.rate_ex}, {"rate_ey", ts.rate_ey}, {"ratio", ts.ratio}, {"predicted", ts.predicted},
              {"factor", 3.0}, {"margin", ts.margin}},
             ts.holds);
    }
  }

  if (cfg.runs_discrete() && !opts.probe_only) {
    DiscreteConfig dcfg;
    dcfg.K = cfg.discrete.K;
    dcfg.weights = metropolis_weights(net, cfg.discrete.metropolis_plus_one);
    dcfg.track = cfg.discrete.track;
    dcfg.record_every = cfg.discrete.record_every;
    if (cfg.discrete.zero_gamma) dcfg.gamma = [](long) { return 0.0; };
    log("running " + std::to_string(dcfg.K) + " discrete iterations");
    const auto hist = run_discrete(net, obj, cfg.discrete.x0.make(net.N(), obj.d()), dcfg);
    {
      std::ofstream csv(opts.out_dir / "discrete.csv", std::ios::binary);
      write_discrete_csv(csv, hist, 0);
    }
    for (std::size_t s = 0; s < hist.track.size(); ++s) {
      std::ofstream csv(opts.out_dir / ("discrete_p" + std::to_string(hist.track[s]) + ".csv"), std::ios::binary);
      write_discrete_csv(csv, hist, s);
    }
    if (cfg.report.discrete_convergence) {
      json gaps = json::array();
      double margin = std::numeric_limits<double>::infinity();
      for (std::size_t s = 0; s < hist.track.size(); ++s) {
        const double early = hist.gap_at(std::max(1L, hist.K / 10), s);
        const double late = hist.final_gap(s);
        margin = std::min(margin, early - late);
        gaps.push_back({{"p", hist.track[s]}, {"gap_K_over_10", early}, {"gap_K", late}});
      }
      record("discrete_convergence",
             {{"K", hist.K},
              {"margin", margin},
              {"gaps", gaps},
              {"sync_iteration", hist.sync_iteration ? json(*hist.sync_iteration) : json(nullptr)},
              {"two_phase", hist.two_phase()}},
             margin > 0.0);
    }
    const char* palette[] = {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd", "#8c564b"};
    std::vector<PlotSeries> series;
    for (std::size_t s = 0; s < hist.track.size(); ++s) {
      PlotSeries ps{"gap p=" + std::to_string(hist.track[s]), palette[s % 6], {}, {}};
      for (const auto& r : hist.records) {
        ps.x.push_back(static_cast<double>(r.k));
        ps.y.push_back(r.gap[s]);
      }
      series.push_back(std::move(ps));
    }
    PlotSeries ex{"V(e_x)", "#7f7f7f", {}, {}, true};
    PlotSeries ey{"V(e_y)", "#17becf", {}, {}, true};
    for (const auto& r : hist.records) {
      ex.x.push_back(static_cast<double>(r.k));
      ex.y.push_back(r.V_ex);
      ey.x.push_back(static_cast<double>(r.k));
      ey.y.push_back(r.V_ey);
    }
    series.push_back(std::move(ex));
    series.push_back(std::move(ey));
    const auto file = cfg.runs_continuous() ? "convergence_discrete.svg" : "convergence.svg";
    detail::write_text(opts.out_dir / file,
                       render_loglog_svg(cfg.name + ": discrete DCG", "iteration k", "||z_p(k) - x*||", series));
  }

  rep["passed"] = res.passed;
  detail::write_text(opts.out_dir / "report.json", rep.dump(2) + "\n");
  return res;
}

/// Output directory precedence: explicit override, config "outputs",
/// $CLUSTER_DCG_OUT, then ./cdcg-out.
inline fs::path resolve_output_dir(const ExperimentConfig& cfg, const std::optional<fs::path>& override_dir) {
  if (override_dir) return *override_dir;
  if (cfg.outputs) return *cfg.outputs;
  if (const char* env = std::getenv("CLUSTER_DCG_OUT"); env && *env) return fs::path(env);
  return fs::path("cdcg-out");
}

}  // namespace cdcg
