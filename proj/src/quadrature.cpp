#include "cylflow/quadrature.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <stdexcept>

namespace cylflow {

QuadratureRule::QuadratureRule(int k, int order) : k_(k), order_(order) {
  if (k < 1) throw std::invalid_argument("QuadratureRule: k must be >= 1");
  if (order < 1) throw std::invalid_argument("QuadratureRule: order must be >= 1");

  // Golub-Welsch for the standard Gauss-Hermite rule (weight exp(-t^2)):
  // symmetric tridiagonal Jacobi matrix with zero diagonal and off-diagonal
  // sqrt(j/2).  Eigenvalues are the nodes t_j; the normalized first
  // eigenvector components squared are the weights divided by mu_0, so they
  // already sum to one.
  Eigen::MatrixXd jacobi = Eigen::MatrixXd::Zero(order, order);
  for (int j = 1; j < order; ++j) {
    const double b = std::sqrt(0.5 * j);
    jacobi(j, j - 1) = b;
    jacobi(j - 1, j) = b;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(jacobi);
  if (es.info() != Eigen::Success)
    throw std::runtime_error("QuadratureRule: eigen decomposition failed");

  nodes_.resize(order);
  weights_.resize(order);
  for (int j = 0; j < order; ++j) {
    nodes_[j] = 2.0 * es.eigenvalues()(j);  // map x = 2t
    const double v0 = es.eigenvectors()(0, j);
    weights_[j] = v0 * v0;
  }
}

std::size_t QuadratureRule::node_count() const {
  std::size_t n = 1;
  for (int i = 0; i < k_; ++i) n *= static_cast<std::size_t>(order_);
  return n;
}

void QuadratureRule::for_each_node(
    const std::function<void(std::span<const double>, double)>& cb) const {
  std::vector<int> idx(k_, 0);
  std::vector<double> pt(k_);
  while (true) {
    double w = 1.0;
    for (int c = 0; c < k_; ++c) {
      pt[c] = nodes_[idx[c]];
      w *= weights_[idx[c]];
    }
    cb(pt, w);
    int c = 0;
    while (c < k_ && ++idx[c] == order_) {
      idx[c] = 0;
      ++c;
    }
    if (c == k_) break;
  }
}

double QuadratureRule::integrate(
    const std::function<double(std::span<const double>)>& f) const {
  double sum = 0.0;
  for_each_node([&](std::span<const double> x, double w) {
    const double v = f(x);
    if (!std::isfinite(v))
      throw std::runtime_error("QuadratureRule: non-finite field value at node");
    sum += w * v;
  });
  return sum;
}

}  // namespace cylflow
