#pragma once

#include "cdcg/graph.hpp"

#include <nlohmann/json.hpp>

#include <filesystem>
#include <fstream>

namespace cdcg {

/// Network file layout:
///
///   { "cluster_sizes": [10, 20, 30],
///     "edges": [[0, 1], [0, 2], ...],      // 0-indexed, undirected
///     "seed": 7,
///     "partition": [0, 0, ..., 2] }         // optional; default is contiguous
inline nlohmann::json network_to_json(const ClusterNetwork& net) {
  nlohmann::json j;
  j["cluster_sizes"] = net.cluster_sizes();
  auto edges = nlohmann::json::array();
  for (const auto& e : net.edges()) edges.push_back({e.first, e.second});
  j["edges"] = std::move(edges);
  j["seed"] = net.seed();
  if (net.partition() != partition_from_sizes(net.cluster_sizes())) j["partition"] = net.partition();
  return j;
}

inline ClusterNetwork network_from_json(const nlohmann::json& j, bool validate = true) {
  try {
    require(j.is_object(), "network file must hold a JSON object");
    require(j.contains("cluster_sizes") && j.contains("edges"), "network file needs cluster_sizes and edges");
    auto sizes = j.at("cluster_sizes").get<std::vector<int>>();
    require(!sizes.empty(), "cluster_sizes must not be empty");
    std::vector<int> partition;
    if (j.contains("partition")) {
      partition = j.at("partition").get<std::vector<int>>();
      std::vector<int> counts(sizes.size(), 0);
      for (int c : partition) {
        require(c >= 0 && c < static_cast<int>(sizes.size()), "inconsistent partition: cluster index out of range");
        ++counts[c];
      }
      require(counts == sizes, "inconsistent partition: cluster counts do not match cluster_sizes");
    } else {
      partition = partition_from_sizes(sizes);
    }
    std::vector<Edge> edges;
    for (const auto& e : j.at("edges")) {
      require(e.is_array() && e.size() == 2, "each edge must be a pair [i, j]");
      edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    const auto seed = j.value("seed", std::uint64_t{0});
    auto net = ClusterNetwork::from_edges(std::move(partition), std::move(edges), seed);
    if (validate) validate_connectivity(net);
    return net;
  } catch (const nlohmann::json::exception& ex) {
    throw InputError(std::string("malformed network file: ") + ex.what());
  }
}

inline void save_network(const ClusterNetwork& net, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write " + path.string());
  out << network_to_json(net).dump() << '\n';
}

inline ClusterNetwork load_network(const std::filesystem::path& path, bool validate = true) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open network file " + path.string());
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& ex) {
    throw InputError("malformed network file " + path.string() + ": " + ex.what());
  }
  return network_from_json(j, validate);
}

}  // namespace cdcg
