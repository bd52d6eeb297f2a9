#pragma once

#include <functional>
#include <span>
#include <vector>

namespace cylflow {

/// Tensorized Gauss quadrature for the normalized Gaussian weight
/// (4 pi)^(-1/2) exp(-x^2/4) per coordinate on R.  Nodes are the standard
/// Gauss-Hermite nodes (weight exp(-t^2)) mapped by x = 2t; the weights then
/// sum to one, so the rule integrates against a probability measure.
/// Order q is exact for polynomials of degree <= 2q - 1.
class QuadratureRule {
 public:
  QuadratureRule(int k, int order);

  int dim() const { return k_; }
  int order() const { return order_; }

  const std::vector<double>& nodes1d() const { return nodes_; }
  const std::vector<double>& weights1d() const { return weights_; }

  /// Integrate a scalar field on R^k against the normalized weight.
  /// Throws if the field returns a non-finite value at a node.
  double integrate(const std::function<double(std::span<const double>)>& f) const;

  /// Visit every tensor node: cb(point, weight).
  void for_each_node(
      const std::function<void(std::span<const double>, double)>& cb) const;

  std::size_t node_count() const;

 private:
  int k_;
  int order_;
  std::vector<double> nodes_;    // 1D, ascending
  std::vector<double> weights_;  // 1D, sum to 1
};

}  // namespace cylflow
