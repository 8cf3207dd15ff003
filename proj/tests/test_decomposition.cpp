#include "cdcg/decomposition.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

using namespace cdcg;

TEST(Decompose, ToyByHand) {
  const auto net = cdcg::testing::toy_network();
  State X(4, 1);
  X << 1, 3, 5, 7;
  const auto dec = decompose(net, X);
  EXPECT_DOUBLE_EQ(dec.xbar(0), 4.0);
  EXPECT_EQ(dec.y, (Matrix(2, 1) << 2, 6).finished());
  EXPECT_EQ(dec.e_x, (Matrix(4, 1) << -1, 1, -1, 1).finished());
  EXPECT_EQ(dec.e_y, (Matrix(2, 1) << -2, 2).finished());
  const auto lv = lyapunov(dec, Vector::Constant(1, 4.0));
  EXPECT_DOUBLE_EQ(lv.V_ex, 2.0);
  EXPECT_DOUBLE_EQ(lv.V_ey, std::sqrt(8.0));
  EXPECT_DOUBLE_EQ(lv.V_xbar, 0.0);
}

TEST(Decompose, ConsensusHasZeroResiduals) {
  const auto net = cdcg::testing::random_cluster_network(3);
  const Vector c = (Vector(3) << 1.5, -2.0, 0.25).finished();
  const State X = c.transpose().replicate(net.N(), 1);
  const auto dec = decompose(net, X);
  EXPECT_LE(dec.e_x.norm(), 1e-12);
  EXPECT_LE(dec.e_y.norm(), 1e-12);
  for (int a = 0; a < net.r(); ++a) EXPECT_LE((dec.y.row(a).transpose() - c).norm(), 1e-12);
  const auto lv = lyapunov(dec, c);
  EXPECT_LE(lv.V_ex + lv.V_ey + lv.V_xbar, 1e-12);
}

TEST(Lyapunov, SquaredOptimalResidual) {
  const auto net = ClusterNetwork::from_edges({0}, {});
  State X(1, 2);
  X << 3, 4;
  EXPECT_DOUBLE_EQ(lyapunov(decompose(net, X), Vector::Zero(2), 1.5).V_xbar, 25.0);
  EXPECT_DOUBLE_EQ(lyapunov(decompose(net, X), Vector::Zero(2), 1.5).t, 1.5);
}

TEST(Decompose, DimensionMismatch) {
  EXPECT_THROW(decompose(cdcg::testing::toy_network(), State::Zero(3, 1)), InputError);
}

class DecompositionProperties : public ::testing::TestWithParam<int> {};

TEST_P(DecompositionProperties, StructuralInvariants) {
  const auto net = cdcg::testing::random_cluster_network(500 + GetParam());
  const State X = cdcg::testing::random_state(net.N(), 3, GetParam(), 5.0);
  const auto dec = decompose(net, X);

  EXPECT_LE(inf_norm(net.U() * dec.y + dec.e_x - X), 1e-12);
  EXPECT_LE(inf_norm(dec.e_x - (X - net.U() * dec.y)), 1e-12);
  for (int a = 0; a < net.r(); ++a) {
    Vector block_sum = Vector::Zero(3);
    for (int i : net.members(a)) block_sum += dec.e_x.row(i).transpose();
    EXPECT_LE(block_sum.norm(), 1e-11);
  }
  EXPECT_LE((net.P() * dec.e_y).colwise().sum().norm(), 1e-10);
  EXPECT_LE(inf_norm(dec.e_y - (dec.y.rowwise() - dec.xbar.transpose())), 1e-15);

  const auto lv = lyapunov(dec, Vector::Zero(3));
  EXPECT_GE(lv.V_ex, 0.0);
  EXPECT_GE(lv.V_ey, 0.0);
  EXPECT_GE(lv.V_xbar, 0.0);
}

TEST_P(DecompositionProperties, IdempotentAndLinear) {
  const auto net = cdcg::testing::random_cluster_network(700 + GetParam());
  const State X = cdcg::testing::random_state(net.N(), 2, GetParam());
  const auto dec = decompose(net, X);
  const auto again = decompose(net, net.U() * dec.y + dec.e_x);
  EXPECT_LE(inf_norm(again.y - dec.y), 1e-12);
  EXPECT_LE(inf_norm(again.e_x - dec.e_x), 1e-12);

  const double c = -2.5;
  const auto scaled = decompose(net, c * X);
  EXPECT_LE(inf_norm(scaled.y - c * dec.y), 1e-12);
  EXPECT_LE(inf_norm(scaled.e_x - c * dec.e_x), 1e-12);
  EXPECT_LE(inf_norm(scaled.e_y - c * dec.e_y), 1e-12);
  EXPECT_LE((scaled.xbar - c * dec.xbar).lpNorm<Eigen::Infinity>(), 1e-12);
}

INSTANTIATE_TEST_SUITE_P(Seeds, DecompositionProperties, ::testing::Range(0, 20));
