#pragma once

#include "cdcg/core.hpp"
#include "cdcg/graph.hpp"

#include <nlohmann/json.hpp>

#include <filesystem>
#include <fstream>
#include <random>

namespace cdcg {

/// f(x) = (1/N) sum_i ||A_i x - b_i||^2 with one (A_i, b_i) pair per node.
///
/// The global Hessian H = (2/N) sum_i A_i^T A_i must be positive definite;
/// the optimum, its value and mu = lambda_min(H) are computed once at
/// construction.
class QuadraticObjective {
public:
  QuadraticObjective(std::vector<Matrix> A, std::vector<Vector> b) : A_(std::move(A)), b_(std::move(b)) {
    require(!A_.empty(), "objective needs at least one node");
    require(A_.size() == b_.size(), "objective needs one b_i per A_i");
    d_ = static_cast<int>(A_[0].cols());
    l_ = static_cast<int>(A_[0].rows());
    require(d_ >= 1 && l_ >= 1, "objective dimensions must be positive");
    for (std::size_t i = 0; i < A_.size(); ++i) {
      require(A_[i].rows() == l_ && A_[i].cols() == d_, "A_i must all be l x d");
      require(b_[i].size() == l_, "b_i must have length l");
    }
    const double n = static_cast<double>(A_.size());
    H_ = Matrix::Zero(d_, d_);
    Vector rhs = Vector::Zero(d_);
    for (std::size_t i = 0; i < A_.size(); ++i) {
      H_.noalias() += A_[i].transpose() * A_[i];
      rhs.noalias() += A_[i].transpose() * b_[i];
    }
    H_ *= 2.0 / n;
    rhs *= 2.0 / n;
    H_ = 0.5 * (H_ + H_.transpose());

    const Vector eig = symmetric_eigenvalues(H_);
    mu_ = eig(0);
    if (!(mu_ > 1e-12 * std::max(1.0, eig(d_ - 1))))
      throw AssumptionError("objective Hessian is singular (lambda_min = " + std::to_string(mu_) + ")");
    Eigen::LDLT<Matrix> ldlt(H_);
    x_star_ = ldlt.solve(rhs);
    f_star_ = value(x_star_);
  }

  int N() const noexcept { return static_cast<int>(A_.size()); }
  int d() const noexcept { return d_; }
  int l() const noexcept { return l_; }
  const Matrix& A(int i) const { return A_.at(i); }
  const Vector& b(int i) const { return b_.at(i); }
  const Matrix& hessian() const noexcept { return H_; }
  const Vector& x_star() const noexcept { return x_star_; }
  double f_star() const noexcept { return f_star_; }
  double mu() const noexcept { return mu_; }

  double node_value(int i, const Vector& x) const { return (A_[i] * x - b_[i]).squaredNorm(); }
  Vector node_gradient(int i, const Vector& x) const { return 2.0 * A_[i].transpose() * (A_[i] * x - b_[i]); }

  double value(const Vector& x) const {
    double s = 0.0;
    for (int i = 0; i < N(); ++i) s += node_value(i, x);
    return s / N();
  }

  Vector gradient(const Vector& x) const { return H_ * x - H_ * x_star_; }

private:
  std::vector<Matrix> A_;
  std::vector<Vector> b_;
  int d_ = 0;
  int l_ = 0;
  Matrix H_;
  Vector x_star_;
  double f_star_ = 0.0;
  double mu_ = 0.0;
};

/// Row i of the result is grad f_i(x_i)^T.
inline State gradient_stack(const QuadraticObjective& obj, const State& X) {
  if (X.rows() != obj.N() || X.cols() != obj.d())
    throw InputError("state is " + std::to_string(X.rows()) + "x" + std::to_string(X.cols()) + ", objective expects " +
                     std::to_string(obj.N()) + "x" + std::to_string(obj.d()));
  State G(X.rows(), X.cols());
  for (int i = 0; i < obj.N(); ++i) {
    const Matrix& A = obj.A(i);
    G.row(i).noalias() = (2.0 * A.transpose() * (A * X.row(i).transpose() - obj.b(i))).transpose();
  }
  return G;
}

struct Optimum {
  Vector x;
  double value = 0.0;
};

inline Optimum optimum(const QuadraticObjective& obj) { return {obj.x_star(), obj.f_star()}; }

/// A_i entries are i.i.d. N(0, conditioning^2) and b_i entries i.i.d. N(0, 1).
/// Resamples while the global Hessian is singular.
inline QuadraticObjective make_random_objective(int N, int d, int l, std::uint64_t seed, double conditioning = 1.0,
                                                int max_retries = 100) {
  require(N >= 1 && d >= 1 && l >= 1, "N, d, l must be positive");
  require(conditioning > 0.0, "conditioning must be positive");
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  for (int attempt = 0; attempt < max_retries; ++attempt) {
    std::vector<Matrix> A(N, Matrix(l, d));
    std::vector<Vector> b(N, Vector(l));
    for (int i = 0; i < N; ++i) {
      for (int r = 0; r < l; ++r)
        for (int c = 0; c < d; ++c) A[i](r, c) = conditioning * normal(rng);
      for (int r = 0; r < l; ++r) b[i](r) = normal(rng);
    }
    try {
      return QuadraticObjective(std::move(A), std::move(b));
    } catch (const AssumptionError&) {
    }
  }
  throw AssumptionError("could not sample a strongly convex objective (N*l < d?)");
}

struct ObjectiveConstants {
  double mu = 0.0;
  double L_node = 0.0;     // bound on ||grad f_i(x)|| for ||x - x*|| <= R
  double L_stacked = 0.0;  // sqrt(N) * L_node, bounds ||grad F(X)||_F
};

inline ObjectiveConstants estimate_constants(const QuadraticObjective& obj, double region_radius) {
  require(region_radius > 0.0, "region radius must be positive");
  double curvature = 0.0, offset = 0.0;
  const Vector zero = Vector::Zero(obj.d());
  for (int i = 0; i < obj.N(); ++i) {
    curvature = std::max(curvature, spectral_norm(2.0 * obj.A(i).transpose() * obj.A(i)));
    offset = std::max(offset, obj.node_gradient(i, zero).norm());
  }
  ObjectiveConstants c;
  c.mu = obj.mu();
  c.L_node = curvature * (region_radius + obj.x_star().norm()) + offset;
  c.L_stacked = std::sqrt(static_cast<double>(obj.N())) * c.L_node;
  return c;
}

/// Objective file layout: { "d": 4, "l": 6, "nodes": [ { "A": [row-major l*d], "b": [l] }, ... ] }
inline nlohmann::json objective_to_json(const QuadraticObjective& obj) {
  nlohmann::json j;
  j["d"] = obj.d();
  j["l"] = obj.l();
  auto nodes = nlohmann::json::array();
  for (int i = 0; i < obj.N(); ++i) {
    std::vector<double> a;
    for (int r = 0; r < obj.l(); ++r)
      for (int c = 0; c < obj.d(); ++c) a.push_back(obj.A(i)(r, c));
    std::vector<double> b(obj.b(i).data(), obj.b(i).data() + obj.l());
    nodes.push_back({{"A", a}, {"b", b}});
  }
  j["nodes"] = std::move(nodes);
  return j;
}

inline QuadraticObjective objective_from_json(const nlohmann::json& j) {
  try {
    const int d = j.at("d").get<int>();
    const int l = j.at("l").get<int>();
    require(d >= 1 && l >= 1, "objective d and l must be positive");
    std::vector<Matrix> A;
    std::vector<Vector> b;
    for (const auto& node : j.at("nodes")) {
      auto a = node.at("A").get<std::vector<double>>();
      auto bv = node.at("b").get<std::vector<double>>();
      require(static_cast<int>(a.size()) == l * d, "A must hold l*d values");
      require(static_cast<int>(bv.size()) == l, "b must hold l values");
      Matrix m(l, d);
      for (int r = 0; r < l; ++r)
        for (int c = 0; c < d; ++c) m(r, c) = a[static_cast<std::size_t>(r * d + c)];
      A.push_back(std::move(m));
      b.push_back(Eigen::Map<Vector>(bv.data(), l));
    }
    return QuadraticObjective(std::move(A), std::move(b));
  } catch (const nlohmann::json::exception& ex) {
    throw InputError(std::string("malformed objective file: ") + ex.what());
  }
}

inline void save_objective(const QuadraticObjective& obj, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write " + path.string());
  out << objective_to_json(obj).dump() << '\n';
}

inline QuadraticObjective load_objective(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open objective file " + path.string());
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& ex) {
    throw InputError("malformed objective file " + path.string() + ": " + ex.what());
  }
  return objective_from_json(j);
}

}  // namespace cdcg
