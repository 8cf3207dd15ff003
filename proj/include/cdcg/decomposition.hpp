#pragma once

#include "cdcg/graph.hpp"

namespace cdcg {

/// A network state split into cluster coordinates. Matrix maps act
/// column-wise, so d > 1 is handled uniformly.
struct Decomposition {
  Vector xbar;  // network average, length d
  Matrix y;     // r x d cluster averages
  Matrix e_x;   // N x d deviation from own cluster average
  Matrix e_y;   // r x d deviation of cluster averages from xbar
};

struct LyapunovSample {
  double t = 0.0;
  double V_ex = 0.0;    // ||e_x||_F
  double V_ey = 0.0;    // ||e_y||_F
  double V_xbar = 0.0;  // ||xbar - x*||^2
};

/// y = P^-1 U^T X, e_x = W X, xbar = (1/N) 1^T X, e_y = y - 1 xbar^T.
inline Decomposition decompose(const ClusterNetwork& net, const State& X) {
  if (X.rows() != net.N())
    throw InputError("state has " + std::to_string(X.rows()) + " rows, network has " + std::to_string(net.N()) +
                     " nodes");
  Decomposition dec;
  dec.xbar = X.colwise().mean().transpose();
  dec.y = net.U().transpose() * X;
  for (int a = 0; a < net.r(); ++a) dec.y.row(a) /= net.cluster_sizes()[a];
  dec.e_x = net.W_center() * X;
  dec.e_y = dec.y.rowwise() - dec.xbar.transpose();
  return dec;
}

inline LyapunovSample lyapunov(const Decomposition& dec, const Vector& x_star, double t = 0.0) {
  return {t, dec.e_x.norm(), dec.e_y.norm(), (dec.xbar - x_star).squaredNorm()};
}

}  // namespace cdcg
