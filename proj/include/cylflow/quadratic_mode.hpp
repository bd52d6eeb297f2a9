#pragma once

#include <Eigen/Dense>
#include <vector>

#include "cylflow/nonlinear.hpp"

namespace cylflow {

/// Deterministic orthogonal diagonalization: eigenvalues descending,
/// each eigenvector column sign-fixed so its first nonzero component is
/// positive.  Makes every downstream output bit-stable.
struct SpectralDecomposition {
  Eigen::MatrixXd frame;        ///< columns are eigenvectors
  Eigen::VectorXd eigenvalues;  ///< descending
};
SpectralDecomposition spectral_reduce(const Eigen::MatrixXd& U0);

/// Threshold used by the invariant map.  The construction only needs the
/// crossing level to be small enough that the quadratic term dominates, so
/// the guarded form keeps it positive for any sign or size of C*; the value
/// in use is published next to every Q output.
double q_threshold(double Cstar);

/// Immutable handle on a solution of the neutral-mode matrix ODE
///   dU/dtau = -sqrt(2) U^2 + 2 tr(U^2) U + C* U^3,
/// stored as a frozen eigenframe plus anchor spectral values (the ODE
/// preserves the spectral basis).  States at other times are integrated on
/// demand with an embedded RK 4/5 pair.
class BarUTrajectory {
 public:
  BarUTrajectory(Eigen::MatrixXd frame, Eigen::VectorXd lambda0, double tau0,
                 double Cstar);

  /// Handle from a non-positive definite matrix at time tau0.
  static BarUTrajectory from_matrix(const Eigen::MatrixXd& U0, double tau0,
                                    const DerivedConstants& constants);

  const Eigen::MatrixXd& frame() const { return frame_; }
  const Eigen::VectorXd& anchor_lambda() const { return lambda0_; }
  double anchor_tau() const { return tau0_; }
  double Cstar() const { return Cstar_; }
  bool is_zero() const;

  Eigen::VectorXd eigenvalues_at(double tau) const;
  Eigen::MatrixXd matrix_at(double tau) const;

  /// Same solution with its clock shifted: result(tau) = this(tau - dtau).
  BarUTrajectory time_shifted(double dtau) const;

  /// Conjugated solution S^T U S.
  BarUTrajectory conjugated(const Eigen::MatrixXd& S) const;

  /// Zero-padded into k' > k coordinates.
  BarUTrajectory embedded(int k_prime) const;

 private:
  Eigen::MatrixXd frame_;
  Eigen::VectorXd lambda0_;
  double tau0_;
  double Cstar_;
};

/// Sampled run of the matrix ODE on a frozen frame.
struct SpectralTrajectory {
  Eigen::MatrixXd frame;
  std::vector<double> taus;
  std::vector<Eigen::VectorXd> lambdas;
  double Cstar = 0.0;
  bool blew_up = false;
  double end_tau = 0.0;  ///< maximal-interval endpoint actually reached
};

/// Integrate from a non-positive definite U0 at tau_span[0] to tau_span[1].
/// A spectral value escaping below the guard ends the trajectory early with
/// the endpoint reported in end_tau / blew_up.
SpectralTrajectory integrate_barU(const Eigen::MatrixXd& U0, double tau_lo,
                                  double tau_hi,
                                  const DerivedConstants& constants,
                                  double lambda_guard = 1e3);

/// The invariant: locate the unique tau_U where the smallest spectral value
/// crosses -c (extending the integration range as needed; bisection to
/// 1e-10 in tau) and return -c^{-1} e^{-tau_U/2} U(tau_U).  The zero
/// solution maps to zero.  Requires the trajectory to vanish backward in
/// time, which is checked through the sqrt(2) drift of the inverse spectral
/// values.
Eigen::MatrixXd q_invariant(const BarUTrajectory& traj);

struct QInvariantReport {
  Eigen::MatrixXd Q;
  double tau_U = 0.0;
  double threshold_c = 0.0;
};
QInvariantReport q_invariant_report(const BarUTrajectory& traj);

/// Inverse map: the trajectory through U(-2 log a) = -c a^{-1} Q' where a is
/// the largest spectral value of the non-negative definite Q'.
BarUTrajectory q_inverse(const Eigen::MatrixXd& Qp,
                         const DerivedConstants& constants);

/// Zero-padding of a non-negative (or non-positive) definite matrix.
Eigen::MatrixXd embed_matrix(const Eigen::MatrixXd& M, int k_prime);

/// Late-time asymptotics fit on the nonzero eigenspace:
///   U(tau) = (log A + (sqrt(2) tau + C** log(-tau)) I)^(-1) + remainder.
/// Linear least squares in (log a_i, C**) after transforming to inverse
/// spectral values.  Requires samples reaching tau <= -1e3.
struct AsymptoticFit {
  Eigen::MatrixXd A;  ///< same nullspace as the trajectory
  double Cstarstar = 0.0;
  Eigen::VectorXd per_channel_Cstarstar;  ///< consistency diagnostic
  double residual_max = 0.0;
  double decay_exponent = 0.0;  ///< fitted |tau|-power of the residual
};
AsymptoticFit fit_asymptotics(const SpectralTrajectory& traj);

}  // namespace cylflow
