#include "support.hpp"

#include <gtest/gtest.h>

#include <fstream>

using namespace cdcg;

namespace {

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("cdcg_io_" + name);
}

void write(const std::filesystem::path& p, const std::string& text) { std::ofstream(p) << text; }

}  // namespace

TEST(NetworkIo, RoundTripIsExact) {
  const auto net = cdcg::testing::toy_network();
  const auto path = temp_file("toy.json");
  save_network(net, path);
  const auto back = load_network(path);
  EXPECT_EQ(back.adjacency(), net.adjacency());
  EXPECT_EQ(back.partition(), net.partition());
  EXPECT_EQ(back.cluster_sizes(), net.cluster_sizes());
}

TEST(NetworkIo, RoundTripRandomNetworkAndCustomPartition) {
  const auto net = cdcg::testing::random_cluster_network(5);
  const auto back = network_from_json(network_to_json(net));
  EXPECT_EQ(back.adjacency(), net.adjacency());
  EXPECT_EQ(back.seed(), net.seed());

  const auto interleaved = ClusterNetwork::from_edges({0, 1, 0, 1}, {{0, 2}, {1, 3}, {0, 1}});
  const auto j = network_to_json(interleaved);
  ASSERT_TRUE(j.contains("partition"));
  EXPECT_EQ(network_from_json(j).partition(), interleaved.partition());
}

TEST(NetworkIo, ShippedFixturesLoad) {
  const auto a = load_network(cdcg::testing::fixture("fig2_3links.json"));
  EXPECT_EQ(a.N(), 60);
  EXPECT_EQ(a.r(), 3);
  EXPECT_EQ(a.external_edges().size(), 3u);
  const auto b = load_network(cdcg::testing::fixture("fig2_6links.json"));
  EXPECT_EQ(b.external_edges().size(), 6u);
  EXPECT_EQ(a.internal_edges(), b.internal_edges());
  const auto c = load_network(cdcg::testing::fixture("fig6_300nodes.json"));
  EXPECT_EQ(c.N(), 300);
  EXPECT_EQ(c.r(), 5);
}

TEST(NetworkIo, EdgeOutsideRangeIsRejected) {
  const auto p = temp_file("range.json");
  write(p, R"({"cluster_sizes":[2,2],"edges":[[0,1],[2,3],[1,4]]})");
  EXPECT_THROW(load_network(p), InputError);
}

TEST(NetworkIo, MalformedFilesAreRejected) {
  const auto p = temp_file("bad.json");
  write(p, "{ not json");
  EXPECT_THROW(load_network(p), InputError);
  write(p, R"({"cluster_sizes":[2,2]})");
  EXPECT_THROW(load_network(p), InputError);
  write(p, R"({"cluster_sizes":[2,2],"edges":[[0,1,2]]})");
  EXPECT_THROW(load_network(p), InputError);
  write(p, R"({"cluster_sizes":"two","edges":[]})");
  EXPECT_THROW(load_network(p), InputError);
  EXPECT_THROW(load_network(temp_file("missing_file.json")), InputError);
}

TEST(NetworkIo, InconsistentPartitionIsRejected) {
  EXPECT_THROW(network_from_json(nlohmann::json::parse(
                   R"({"cluster_sizes":[2,2],"partition":[0,0,0,1],"edges":[[0,1],[1,2],[2,3]]})")),
               InputError);
  EXPECT_THROW(network_from_json(nlohmann::json::parse(
                   R"({"cluster_sizes":[2,2],"partition":[0,0,1,5],"edges":[[0,1],[1,2],[2,3]]})")),
               InputError);
}

TEST(NetworkIo, ConnectivityValidationIsOptional) {
  const auto j = nlohmann::json::parse(R"({"cluster_sizes":[2,2],"edges":[[0,1],[2,3]]})");
  EXPECT_THROW(network_from_json(j), AssumptionError);
  EXPECT_NO_THROW(network_from_json(j, false));
}
