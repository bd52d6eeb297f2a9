#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "cylflow/dims.hpp"
#include "cylflow/hermite.hpp"
#include "cylflow/mode_vector.hpp"

namespace cylflow {

/// Coefficients of the constant, linear and quadratic modes:
/// U = a p0 + sum_i b_i p1_i + sum_{ij} c_ij p2_ij with c symmetric
/// (double-sum convention, so the Frobenius norm of c matches the
/// orthonormal-coefficient norm of the quadratic part).
struct LeadingModes {
  double a = 0.0;
  Eigen::VectorXd b;
  Eigen::MatrixXd c;

  explicit LeadingModes(int k)
      : b(Eigen::VectorXd::Zero(k)), c(Eigen::MatrixXd::Zero(k, k)) {}
  LeadingModes(double a_, Eigen::VectorXd b_, Eigen::MatrixXd c_);

  int k() const { return static_cast<int>(b.size()); }
  double norm() const;
};

/// Conversion to/from orthonormal mode coefficients.  The off-diagonal
/// matrix entries pick up a factor sqrt(2) relative to the orthonormal
/// coefficient of the mixed mode x_i x_j / 2.
ModeVector to_mode_vector(const LeadingModes& lm, Dimensions dims,
                          int cap = kDefaultDegreeCap);
LeadingModes leading_from_modes(const ModeVector& v);

/// Constants that the closed-form cubic projection depends on.  These are
/// generated by quadrature (never hand-entered) and must agree between
/// quadrature orders q and q+4.
struct DerivedConstants {
  double C1 = 0.0;     ///< cubic self-interaction, depends on n-k
  double C2 = 0.0;     ///< universal quadratic/quartic coupling
  double Cstar = 0.0;  ///< cubic coefficient of the matrix ODE, depends on n-k
  int n_minus_k = 1;
  int quad_order = 20;
};

/// Second Taylor approximation of the nonlinearity: pointwise -1/2 U^2.
ScalarField q2_field(const ScalarField& u);

/// Closed-form projection of -1/2 U^2 back onto the leading modes.
LeadingModes q2_leading(const LeadingModes& u);

/// Projections of -1/2 U^2 for diagonal quadratic input, split by
/// eigenvalue.  pair_coeffs(i,j) holds the printed per-ordered-pair
/// coefficient -1/2 c_ii c_jj on the degree-4 product mode (i != j); the
/// net coefficient of the basis element is the sum over both orders.
struct Q2DiagProjections {
  double v1 = 0.0;                ///< p0 coefficient
  Eigen::VectorXd v_half;         ///< identically zero
  Eigen::VectorXd v_minus_half;   ///< identically zero
  Eigen::MatrixXd pair_coeffs;    ///< -1/2 c_ii c_jj, zero diagonal
  Eigen::VectorXd pure4_coeffs;   ///< -(sqrt 6 / 2) c_ii^2
};
Q2DiagProjections q2_diag_projections(const Eigen::MatrixXd& c);

/// Third Taylor approximation as a pointwise field:
/// -1/2 u^2 + 1/2 u^3 - 2(n-k) Hess u(grad u, grad u).
ScalarField q3_field(const ModeField& u, Dimensions dims);

/// Polynomial part of the projection of Q3 onto the neutral modes, for
/// input a p0 + sum_i c_i p2_ii + sum_{ij} v_ij (p2_ii p2_jj) + sum_i w_i p4_i
/// with v_ii = 0.  Returns the coefficient of p2_ii per i.  Requires
/// |a|, |c_i|, |v_ij|, |w_i| < 1.
Eigen::VectorXd q3_v0_project(double a, const Eigen::VectorXd& c_diag,
                              const Eigen::MatrixXd& v, const Eigen::VectorXd& w,
                              const DerivedConstants& constants);

/// Derive C1, C2, C* by quadrature at orders quad_order and quad_order + 4;
/// throws if the two disagree by more than 1e-6.
DerivedConstants derive_constants(Dimensions dims, int quad_order = 20);

/// Cached per-(n-k) constants (thread-safe).
const DerivedConstants& derived_constants_cached(Dimensions dims);

/// The correction map built from the diagonal Q2 projections: for a diagonal
/// quadratic input U' it returns U' plus the second-order content generated
/// in the other eigenspaces, each divided by minus its L-eigenvalue.
ModeVector quadratic_correction_map(const Eigen::VectorXd& c_diag,
                                    Dimensions dims);

/// Matrix cubic of the neutral-mode model ODE:
/// -sqrt(2) U^2 + 2 tr(U^2) U + C* U^3.
Eigen::MatrixXd barQ(const Eigen::MatrixXd& U, double Cstar);

/// Structured constants file with provenance (name, dims, value, quadrature
/// order, checksum).  Returns the canonical text that was written.
std::string write_constants_file(const std::string& path,
                                 const std::vector<DerivedConstants>& all);
std::vector<DerivedConstants> read_constants_file(const std::string& path);

}  // namespace cylflow
