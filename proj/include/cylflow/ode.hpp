#pragma once

#include <Eigen/Dense>
#include <functional>

namespace cylflow {

using OdeRhs = std::function<Eigen::VectorXd(double, const Eigen::VectorXd&)>;

struct OdeOptions {
  double rel_tol = 1e-10;
  double abs_tol = 1e-12;
  double max_step = 0.0;  ///< 0 = unlimited
  long max_steps = 20'000'000;
};

/// Callback invoked after each accepted step; return false to stop early.
using OdeObserver = std::function<bool(double t, const Eigen::VectorXd& y)>;

/// Embedded Dormand-Prince 5(4) with PI step control.  Integrates from t0
/// to t1 (either direction).  Returns the state at the stopping time and
/// stores it in *t_reached (t1, or the observer stop point).
Eigen::VectorXd integrate_rk45(const OdeRhs& f, Eigen::VectorXd y0, double t0,
                               double t1, const OdeOptions& opts,
                               const OdeObserver& observer = nullptr,
                               double* t_reached = nullptr);

/// Classic fixed-step RK4, n_steps equal steps.
Eigen::VectorXd integrate_rk4_fixed(const OdeRhs& f, Eigen::VectorXd y0,
                                    double t0, double t1, long n_steps,
                                    const OdeObserver& observer = nullptr);

}  // namespace cylflow
