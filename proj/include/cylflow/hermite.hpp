#pragma once

#include <functional>
#include <span>
#include <vector>

#include "cylflow/dims.hpp"
#include "cylflow/mode_vector.hpp"
#include "cylflow/multi_index.hpp"
#include "cylflow/quadrature.hpp"

namespace cylflow {

/// Default degree cap; covers every closed-form identity in use
/// (degree-6 products of quadratics, pure degree-4 modes).
inline constexpr int kDefaultDegreeCap = 8;

/// Orthonormal 1D Hermite polynomial of the given degree for the weight
/// (4 pi)^(-1/2) exp(-x^2/4).  Degrees 0-2 and 4 agree with the closed forms
///   h0 = 1,  h1 = x/sqrt(2),  h2 = (x^2-2)/(2 sqrt(2)),
///   h4 = (x^4 - 12 x^2 + 12)/(8 sqrt(6));
/// higher degrees come from the three-term recurrence
///   h_{d+1} = (x h_d / sqrt(2) - sqrt(d) h_{d-1}) / sqrt(d+1).
double hermite1d(int degree, double x);

/// First and second derivatives: h_d' = sqrt(d/2) h_{d-1}.
double hermite1d_deriv(int degree, double x);
double hermite1d_deriv2(int degree, double x);

/// Tensor-product mode value at a point of R^k.  Throws if the index total
/// degree exceeds cap.
double hermite_eval(const MultiIndex& m, std::span<const double> x,
                    int cap = kDefaultDegreeCap);

using ScalarField = std::function<double(std::span<const double>)>;

/// Inner product of two scalar fields against the normalized Gaussian
/// weight on R^k, by tensorized quadrature.
double inner(const ScalarField& f, const ScalarField& g,
             const QuadratureRule& rule);

double inner_with_mode(const ScalarField& f, const MultiIndex& m,
                       const QuadratureRule& rule, int cap = kDefaultDegreeCap);

/// Projection onto all modes with total degree <= cap.
ModeVector project(const ScalarField& f, Dimensions dims, int cap,
                   const QuadratureRule& rule);

/// Expansion of the product p_{m1} p_{m2} in the orthonormal basis.
/// The result carries cap = deg(m1) + deg(m2).  Computed by quadrature
/// against each candidate mode (factorized per coordinate, which is the
/// same tensor quadrature summed in a different order).
ModeVector product_expand(const MultiIndex& m1, const MultiIndex& m2,
                          Dimensions dims, int cap = kDefaultDegreeCap);

/// Eigenvalue of the linearization L = Delta_f + 1 on a rotationally
/// symmetric mode of total degree d: 1 - d/2.
double L_eigenvalue(const MultiIndex& m);
double L_eigenvalue(int total_degree);

/// Diagonal action of L on a coefficient vector.
ModeVector apply_L(const ModeVector& v);

/// A ModeVector viewed as a smooth field with analytic derivatives.
class ModeField {
 public:
  explicit ModeField(ModeVector v) : v_(std::move(v)) {}

  double value(std::span<const double> x) const;
  void gradient(std::span<const double> x, std::span<double> out) const;
  /// Dense Hessian, row-major k x k.
  void hessian(std::span<const double> x, std::span<double> out) const;

  const ModeVector& modes() const { return v_; }

  ScalarField as_field() const {
    return [this](std::span<const double> x) { return value(x); };
  }

 private:
  ModeVector v_;
};

}  // namespace cylflow
