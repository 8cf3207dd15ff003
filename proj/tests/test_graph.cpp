#include "support.hpp"

#include <gtest/gtest.h>

using namespace cdcg;
using cdcg::testing::random_cluster_network;
using cdcg::testing::toy_network;

namespace {

Matrix mat(std::initializer_list<std::initializer_list<double>> rows) {
  Matrix m(rows.size(), rows.begin()->size());
  int i = 0;
  for (const auto& row : rows) {
    int j = 0;
    for (double v : row) m(i, j++) = v;
    ++i;
  }
  return m;
}

}  // namespace

TEST(ClusterNetwork, ToyNetworkHasExpectedShape) {
  ClusterSpec spec;
  spec.cluster_sizes = {2, 2};
  spec.complete = true;
  spec.external_edges = {{1, 2}};
  const auto net = build_cluster_network(spec);
  EXPECT_EQ(net.N(), 4);
  EXPECT_EQ(net.r(), 2);
  EXPECT_EQ(net.edges().size(), 3u);
  EXPECT_EQ(net.adjacency().sum(), 6.0);
}

TEST(ClusterNetwork, PaperSizedNetworks) {
  ClusterSpec spec;
  spec.cluster_sizes = {10, 20, 30};
  spec.intra_density = {0.5};
  spec.external_edges = {{3, 14}, {22, 41}, {52, 7}};
  spec.seed = 3;
  const auto net = build_cluster_network(spec);
  EXPECT_EQ(net.N(), 60);
  EXPECT_EQ(net.r(), 3);

  ClusterSpec big;
  big.cluster_sizes = std::vector<int>(5, 60);
  big.intra_density = {0.3};
  for (int a = 0; a < 4; ++a) big.external_links.push_back({a, a + 1, 1});
  const auto net300 = build_cluster_network(big);
  EXPECT_EQ(net300.N(), 300);
  EXPECT_EQ(net300.r(), 5);
}

TEST(ClusterNetwork, ToyMatricesByHand) {
  const auto net = toy_network();
  EXPECT_TRUE(net.L_ext().isApprox(mat({{0, 0, 0, 0}, {0, 1, -1, 0}, {0, -1, 1, 0}, {0, 0, 0, 0}})));
  EXPECT_TRUE(net.L_int().isApprox(mat({{1, -1, 0, 0}, {-1, 1, 0, 0}, {0, 0, 1, -1}, {0, 0, -1, 1}})));
  EXPECT_TRUE(net.U().isApprox(mat({{1, 0}, {1, 0}, {0, 1}, {0, 1}})));
  EXPECT_TRUE(net.P().isApprox(mat({{2, 0}, {0, 2}})));
  EXPECT_TRUE(net.W_center().isApprox(
      mat({{.5, -.5, 0, 0}, {-.5, .5, 0, 0}, {0, 0, .5, -.5}, {0, 0, -.5, .5}})));
}

TEST(AggregateLaplacian, SingleExternalEdge) {
  const auto net = toy_network();
  EXPECT_TRUE(aggregate_laplacian(net).isApprox(mat({{1, -1}, {-1, 1}})));
  EXPECT_TRUE(net.L_agg().isApprox(mat({{1, -1}, {-1, 1}})));
}

TEST(AggregateLaplacian, NoExternalEdgesIsZero) {
  const auto net = ClusterNetwork::from_edges({0, 0, 1, 1}, {{0, 1}, {2, 3}});
  EXPECT_EQ(aggregate_laplacian(net), Matrix::Zero(2, 2));
  EXPECT_EQ(net.L_agg(), Matrix::Zero(2, 2));
}

TEST(AggregateLaplacian, ParallelLinksAccumulate) {
  const auto net = ClusterNetwork::from_edges({0, 0, 1, 1}, {{0, 1}, {2, 3}, {1, 2}, {0, 3}});
  EXPECT_TRUE(aggregate_laplacian(net).isApprox(mat({{2, -2}, {-2, 2}})));
  EXPECT_TRUE(net.L_agg().isApprox(mat({{2, -2}, {-2, 2}})));
}

TEST(SpectralConstants, KnownSpectra) {
  for (int n : {2, 3, 5, 8}) {
    ClusterSpec spec;
    spec.cluster_sizes = {n};
    spec.complete = true;
    const auto net = build_cluster_network(spec);
    EXPECT_NEAR(algebraic_connectivity(net.L()), n, 1e-12) << "K_" << n;
  }
  const auto path = ClusterNetwork::from_edges({0, 0}, {{0, 1}});
  EXPECT_NEAR(algebraic_connectivity(path.L()), 2.0, 1e-12);
}

TEST(SpectralConstants, ToyValues) {
  const auto sc = spectral_constants(toy_network());
  EXPECT_NEAR(sc.sigma2_int, 2.0, 1e-12);
  EXPECT_NEAR(sc.sigma2_agg, 2.0, 1e-12);
  EXPECT_NEAR(sc.norm_Lext, 2.0, 1e-12);
  EXPECT_NEAR(sc.norm_Lagg, 2.0, 1e-12);
  EXPECT_EQ(sc.N_min, 2);
  EXPECT_EQ(sc.N_max, 2);
}

TEST(SpectralConstants, ShippedSixtyNodeFixture) {
  const auto net = load_network(cdcg::testing::fixture("fig2_3links.json"));
  EXPECT_EQ(net.N(), 60);
  EXPECT_EQ(net.r(), 3);
  const auto sc = spectral_constants(net);
  EXPECT_NEAR(sc.sigma2_agg, 3.0, 1e-12);
  EXPECT_EQ(sc.N_min, 10);
  EXPECT_EQ(sc.N_max, 30);
  EXPECT_GT(sc.sigma2_int, 0.0);
}

TEST(SpectralConstants, DisconnectedClusterIsRejected) {
  const auto net = ClusterNetwork::from_edges({0, 0, 0, 1, 1}, {{0, 1}, {3, 4}, {1, 3}});
  try {
    spectral_constants(net);
    FAIL() << "expected AssumptionError";
  } catch (const AssumptionError& e) {
    EXPECT_NE(std::string(e.what()).find("Assumption 1"), std::string::npos);
  }
}

TEST(BuildClusterNetwork, DisconnectedAggregateIsRejected) {
  ClusterSpec spec;
  spec.cluster_sizes = {3, 3, 3};
  spec.complete = true;
  spec.external_edges = {{0, 3}};
  try {
    build_cluster_network(spec);
    FAIL() << "expected AssumptionError";
  } catch (const AssumptionError& e) {
    EXPECT_NE(std::string(e.what()).find("Assumption 1"), std::string::npos);
  }
}

TEST(BuildClusterNetwork, UnreachableConnectivityIsRejected) {
  ClusterSpec spec;
  spec.cluster_sizes = {30};
  spec.intra_density = {0.01};
  spec.max_retries = 5;
  EXPECT_THROW(build_cluster_network(spec), AssumptionError);
}

TEST(BuildClusterNetwork, InvalidSpecsAreRejected) {
  ClusterSpec same;
  same.cluster_sizes = {2, 2};
  same.complete = true;
  same.external_edges = {{0, 1}};
  EXPECT_THROW(build_cluster_network(same), InputError);

  ClusterSpec empty_cluster;
  empty_cluster.cluster_sizes = {2, 0};
  EXPECT_THROW(build_cluster_network(empty_cluster), InputError);

  ClusterSpec bad_density;
  bad_density.cluster_sizes = {4};
  bad_density.intra_density = {1.5};
  EXPECT_THROW(build_cluster_network(bad_density), InputError);

  EXPECT_THROW(ClusterNetwork::from_edges({0, 0}, {{0, 0}}), InputError);
  EXPECT_THROW(ClusterNetwork::from_edges({0, 0}, {{0, 1}, {1, 0}}), InputError);
  EXPECT_THROW(ClusterNetwork::from_edges({0, 0}, {{0, 2}}), InputError);
}

TEST(BuildClusterNetwork, SameSeedSameNetwork) {
  ClusterSpec spec;
  spec.cluster_sizes = {8, 12};
  spec.intra_density = {0.4};
  spec.external_links = {{0, 1, 3}};
  spec.seed = 99;
  EXPECT_EQ(build_cluster_network(spec).adjacency(), build_cluster_network(spec).adjacency());
  spec.seed = 100;
  const auto other = build_cluster_network(spec);
  spec.seed = 99;
  EXPECT_NE(build_cluster_network(spec).adjacency(), other.adjacency());
}

TEST(ClusterAssumption, NoExternalCouplingHasZeroRhs) {
  SpectralConstants sc;
  sc.sigma2_int = 1.0;
  sc.sigma2_agg = std::numeric_limits<double>::infinity();
  sc.N_min = sc.N_max = 5;
  const auto check = check_cluster_assumption(sc, 10.0, 0.1);
  EXPECT_EQ(check.full.rhs, 0.0);
  EXPECT_EQ(check.proxy.rhs, 0.0);
  EXPECT_TRUE(check.holds());
}

TEST(ClusterAssumption, FormulaEvaluation) {
  SpectralConstants sc;
  sc.sigma2_int = 2.0;
  sc.sigma2_agg = 2.0;
  sc.norm_Lext = 2.0;
  sc.norm_Lagg = 2.0;
  sc.N_min = sc.N_max = 2;
  const auto check = check_cluster_assumption(sc, 1.0, 1.0);
  EXPECT_DOUBLE_EQ(check.full.rhs, 14.0);
  EXPECT_DOUBLE_EQ(check.full.lhs, 2.0);
  EXPECT_DOUBLE_EQ(check.full.margin, -12.0);
  EXPECT_FALSE(check.holds());
  EXPECT_DOUBLE_EQ(check.proxy.rhs, 2.0);
  EXPECT_TRUE(check.proxy.holds);
}

TEST(ClusterAssumption, SixtyNodeFixtureSatisfiesSimplifiedForm) {
  const auto sc = spectral_constants(load_network(cdcg::testing::fixture("fig2_3links.json")));
  const auto check = check_cluster_assumption(sc, 1.0, 1.0);
  EXPECT_TRUE(check.proxy.holds);
  EXPECT_GT(check.proxy.margin, 0.0);
}

TEST(ClusterAssumption, RejectsNonPositiveConstants) {
  const auto sc = spectral_constants(toy_network());
  EXPECT_THROW(check_cluster_assumption(sc, 0.0, 1.0), InputError);
  EXPECT_THROW(check_cluster_assumption(sc, 1.0, -1.0), InputError);
  SpectralConstants zero = sc;
  zero.sigma2_agg = 0.0;
  EXPECT_THROW(check_cluster_assumption(zero, 1.0, 1.0), AssumptionError);
}

TEST(Metropolis, PathOfThree) {
  const auto net = ClusterNetwork::from_edges({0, 0, 0}, {{0, 1}, {1, 2}});
  EXPECT_TRUE(metropolis_weights(net).isApprox(mat({{.5, .5, 0}, {.5, 0, .5}, {0, .5, .5}})));
}

TEST(Metropolis, CompleteTwo) {
  const auto net = ClusterNetwork::from_edges({0, 0}, {{0, 1}});
  EXPECT_TRUE(metropolis_weights(net).isApprox(mat({{0, 1}, {1, 0}})));
}

TEST(Metropolis, Star) {
  const auto net = ClusterNetwork::from_edges({0, 0, 0, 0}, {{0, 1}, {0, 2}, {0, 3}});
  const double t = 1.0 / 3.0;
  EXPECT_TRUE(metropolis_weights(net).isApprox(
      mat({{0, t, t, t}, {t, 2 * t, 0, 0}, {t, 0, 2 * t, 0}, {t, 0, 0, 2 * t}})));
}

TEST(Metropolis, PlusOneVariant) {
  const auto net = ClusterNetwork::from_edges({0, 0}, {{0, 1}});
  EXPECT_TRUE(metropolis_weights(net, true).isApprox(mat({{.5, .5}, {.5, .5}})));
}

class RandomNetworkProperties : public ::testing::TestWithParam<int> {};

TEST_P(RandomNetworkProperties, LaplacianAndProjectionInvariants) {
  const auto net = random_cluster_network(1000 + GetParam());
  EXPECT_LE(net.N(), 100);
  EXPECT_EQ(net.L(), net.L_int() + net.L_ext());
  for (const Matrix* m : {&net.L(), &net.L_int(), &net.L_ext(), &net.L_agg()}) {
    EXPECT_EQ(*m, m->transpose());
    EXPECT_EQ(m->rowwise().sum().cwiseAbs().maxCoeff(), 0.0);
    EXPECT_GE(symmetric_eigenvalues(*m)(0), -1e-10);
  }
  EXPECT_EQ(net.P(), net.U().transpose() * net.U());
  EXPECT_LE(inf_norm(aggregate_laplacian(net) - net.L_agg()), 1e-10);
  const Matrix& W = net.W_center();
  EXPECT_LE(inf_norm(W * W - W), 1e-12);
  EXPECT_LE((W * Vector::Ones(net.N())).norm(), 1e-12);
  EXPECT_LE((W * net.U()).norm(), 1e-12);
}

TEST_P(RandomNetworkProperties, SpectralInequalities) {
  const auto net = random_cluster_network(2000 + GetParam());
  const auto sc = spectral_constants(net);
  EXPECT_GT(sc.sigma2_int, 0.0);
  EXPECT_GT(sc.sigma2_agg, 0.0);
  EXPECT_LE(sc.N_min, sc.N_max);
  std::mt19937_64 rng(GetParam());
  std::normal_distribution<double> normal;
  for (int trial = 0; trial < 20; ++trial) {
    Vector x(net.N());
    for (auto& v : x) v = normal(rng);
    const Vector v = net.W_center() * x;
    if (std::isfinite(sc.sigma2_int))
      EXPECT_LE(-v.dot(net.L_int() * v), -sc.sigma2_int * v.squaredNorm() + 1e-9);
    Vector w(net.r());
    for (auto& c : w) c = normal(rng);
    w.array() -= w.mean();
    EXPECT_LE(-w.dot(net.L_agg() * w), -sc.sigma2_agg * w.squaredNorm() + 1e-9);
  }
}

TEST_P(RandomNetworkProperties, MetropolisIsDoublyStochastic) {
  const auto net = random_cluster_network(3000 + GetParam());
  const Matrix Wm = metropolis_weights(net);
  EXPECT_LE((Wm.rowwise().sum().array() - 1.0).abs().maxCoeff(), 1e-12);
  EXPECT_EQ(Wm, Wm.transpose());
  EXPECT_GE(Wm.minCoeff(), 0.0);
  EXPECT_LE(symmetric_eigenvalues(Wm).cwiseAbs().maxCoeff(), 1.0 + 1e-12);
}

INSTANTIATE_TEST_SUITE_P(Seeds, RandomNetworkProperties, ::testing::Range(0, 25));
