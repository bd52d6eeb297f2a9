#pragma once

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace cylflow {

/// Ambient dimensions of the round cylinder R^k x S^(n-k).
/// The sphere factor has radius sqrt(2(n-k)); codimension is fixed to one.
struct Dimensions {
  int n = 2;  ///< intrinsic dimension, n >= 2
  int k = 1;  ///< axis dimension, 1 <= k < n

  Dimensions() = default;
  Dimensions(int n_, int k_) : n(n_), k(k_) {
    if (n < 2) throw std::invalid_argument("Dimensions: n must be >= 2");
    if (k < 1 || k >= n) throw std::invalid_argument("Dimensions: need 1 <= k < n");
  }

  int codim_sphere() const { return n - k; }

  double sphere_radius() const { return std::sqrt(2.0 * (n - k)); }

  /// Conversion factor between the normalized Gaussian inner product on R^k
  /// (used for all mode coefficients) and the weighted L2 inner product over
  /// the full cylinder, which carries the sphere volume and the unnormalized
  /// Gaussian weight.  Applied only when reporting norms in cylinder units.
  double cylinder_l2f_factor() const {
    const int m = n - k;  // sphere dimension
    const double r = sphere_radius();
    // vol(S^m_r) = r^m * 2 pi^((m+1)/2) / Gamma((m+1)/2)
    const double vol_sphere = std::pow(r, m) * 2.0 *
                              std::pow(std::numbers::pi, 0.5 * (m + 1)) /
                              std::tgamma(0.5 * (m + 1));
    return vol_sphere * std::pow(4.0 * std::numbers::pi, 0.5 * k);
  }

  bool operator==(const Dimensions&) const = default;
};

}  // namespace cylflow
