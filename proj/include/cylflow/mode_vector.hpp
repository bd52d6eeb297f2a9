#pragma once

#include <cmath>
#include <map>

#include "cylflow/dims.hpp"
#include "cylflow/multi_index.hpp"

namespace cylflow {

/// Finite coefficient vector over orthonormal Hermite modes up to a degree
/// cap.  Coefficients are in the normalized Gaussian inner product, so
/// norm^2 is the plain sum of squares.  Zero entries may be omitted.
class ModeVector {
 public:
  ModeVector() = default;
  ModeVector(Dimensions dims, int cap) : dims_(dims), cap_(cap) {}

  const Dimensions& dims() const { return dims_; }
  int cap() const { return cap_; }

  double coeff(const MultiIndex& m) const {
    auto it = coeffs_.find(m);
    return it == coeffs_.end() ? 0.0 : it->second;
  }

  void set(const MultiIndex& m, double value);
  void add(const MultiIndex& m, double value);

  const std::map<MultiIndex, double>& coeffs() const { return coeffs_; }

  double norm_squared() const {
    double s = 0.0;
    for (const auto& [m, c] : coeffs_) s += c * c;
    return s;
  }
  double norm() const { return std::sqrt(norm_squared()); }

  /// Keep only modes whose total degree lies in [lo, hi].
  ModeVector restrict_degrees(int lo, int hi) const;

  /// Drop entries with |coefficient| <= tol.
  ModeVector pruned(double tol = 0.0) const;

  ModeVector& operator+=(const ModeVector& other);
  ModeVector& operator*=(double s);
  ModeVector operator-(const ModeVector& other) const;

  bool empty() const { return coeffs_.empty(); }

 private:
  Dimensions dims_;
  int cap_ = 8;
  std::map<MultiIndex, double> coeffs_;
};

}  // namespace cylflow
