#include "cdcg/experiment.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <sstream>

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, sep)) out.push_back(item);
  return out;
}

int run_or_verify(const std::string& config_path, const std::optional<std::string>& out,
                  std::optional<std::uint64_t> seed, bool quiet, bool probe_only) {
  auto cfg = cdcg::load_experiment(config_path);
  if (seed) cdcg::override_seed(cfg, *seed);
  cdcg::RunOptions opts;
  opts.out_dir = cdcg::resolve_output_dir(cfg, out ? std::optional<cdcg::fs::path>(*out) : std::nullopt);
  opts.quiet = quiet;
  opts.probe_only = probe_only;
  const auto res = cdcg::run_experiment(cfg, opts);
  if (!res.passed) {
    std::vector<std::string> failed;
    for (const auto& [key, value] : res.report.at("checks").items())
      if (!value.at("passed").get<bool>()) failed.push_back(key);
    std::cerr << "verification failed:";
    for (const auto& f : failed) std::cerr << ' ' << f;
    std::cerr << " (see " << (opts.out_dir / "report.json").string() << ")\n";
    return 1;
  }
  if (!quiet) std::cerr << "all checks passed; artifacts in " << opts.out_dir.string() << '\n';
  return 0;
}

int make_network(const std::vector<int>& sizes, const std::vector<double>& density, bool complete,
                 const std::vector<std::string>& edges, const std::vector<std::string>& links, std::uint64_t seed,
                 const std::string& out) {
  cdcg::ClusterSpec spec;
  spec.cluster_sizes = sizes;
  if (!density.empty()) spec.intra_density = density;
  spec.complete = complete;
  spec.seed = seed;
  for (const auto& e : edges) {
    const auto parts = split(e, ',');
    cdcg::require(parts.size() == 2, "--edge expects i,j");
    spec.external_edges.emplace_back(std::stoi(parts[0]), std::stoi(parts[1]));
  }
  for (const auto& l : links) {
    const auto parts = split(l, ',');
    cdcg::require(parts.size() == 3, "--links expects cluster_a,cluster_b,count");
    spec.external_links.push_back({std::stoi(parts[0]), std::stoi(parts[1]), std::stoi(parts[2])});
  }
  const auto net = cdcg::build_cluster_network(spec);
  cdcg::save_network(net, out);
  const auto sc = cdcg::spectral_constants(net);
  std::cout << "wrote " << out << ": N=" << net.N() << " r=" << net.r() << " internal_edges="
            << net.internal_edges().size() << " external_edges=" << net.external_edges().size() << '\n';
  std::cout << "sigma2 per cluster:";
  for (double s : sc.sigma2_clusters) std::cout << ' ' << s;
  std::cout << "\nsigma2_agg=" << sc.sigma2_agg << " sigma2(L)=" << sc.sigma2_full << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cluster-network decentralized consensus gradient experiments"};
  app.require_subcommand(1);

  std::string config;
  std::optional<std::string> out;
  std::optional<std::uint64_t> seed;
  bool quiet = false;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("config", config, "experiment config (JSON)")->required()->check(CLI::ExistingFile);
    sub->add_option("--out", out, "output directory");
    sub->add_option("--seed", seed, "override every random seed in the config");
    sub->add_flag("--quiet,-q", quiet, "suppress progress output");
  };
  auto* run = app.add_subcommand("run", "run the experiment and verify it");
  add_common(run);
  auto* verify = app.add_subcommand("verify", "identity suite, Assumption 3 and a short probe only");
  add_common(verify);

  auto* mk = app.add_subcommand("make-network", "generate a cluster network fixture");
  std::vector<int> sizes;
  std::vector<double> density;
  bool complete = false;
  std::vector<std::string> edges, links;
  std::uint64_t net_seed = 0;
  std::string net_out;
  mk->add_option("--sizes", sizes, "cluster sizes")->required()->delimiter(',');
  mk->add_option("--density", density, "intra-cluster edge probability, one value or one per cluster")
      ->delimiter(',');
  mk->add_flag("--complete", complete, "complete graphs inside clusters");
  mk->add_option("--edge", edges, "explicit external edge i,j (repeatable)");
  mk->add_option("--links", links, "random external links cluster_a,cluster_b,count (repeatable)");
  mk->add_option("--seed", net_seed, "generator seed");
  mk->add_option("--out,-o", net_out, "output JSON file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*run) return run_or_verify(config, out, seed, quiet, false);
    if (*verify) return run_or_verify(config, out, seed, quiet, true);
    return make_network(sizes, density, complete, edges, links, net_seed, net_out);
  } catch (const cdcg::DivergenceError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
