#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace cdcg {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

// Node states are stored row-wise: row i is x_i^T, so an N x d matrix.
using State = Eigen::MatrixXd;

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: bad file, bad config, dimension mismatch.
class InputError : public Error {
public:
  using Error::Error;
};

/// A structural assumption on the network or objective does not hold
/// (disconnected cluster, disconnected aggregate graph, singular Hessian).
class AssumptionError : public Error {
public:
  using Error::Error;
};

/// Integration or iteration produced a non-finite state.
class DivergenceError : public Error {
public:
  DivergenceError(const std::string& what, double at)
    : Error(what), at_(at) {}
  double at() const noexcept { return at_; }

private:
  double at_;
};

inline double inf_norm(const Matrix& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

inline void require(bool cond, const std::string& msg) {
  if (!cond) throw InputError(msg);
}

}  // namespace cdcg
