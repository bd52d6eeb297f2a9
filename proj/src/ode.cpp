#include "cylflow/ode.hpp"

#include <cmath>
#include <stdexcept>

namespace cylflow {

namespace {

// Dormand-Prince coefficients.
constexpr double a21 = 1.0 / 5;
constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187,
                 a53 = 64448.0 / 6561, a54 = -212.0 / 729;
constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247,
                 a64 = 49.0 / 176, a65 = -5103.0 / 18656;
constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192,
                 b5 = -2187.0 / 6784, b6 = 11.0 / 84;
constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920,
                 e5 = -17253.0 / 339200, e6 = 22.0 / 525, e7 = -1.0 / 40;

}  // namespace

Eigen::VectorXd integrate_rk45(const OdeRhs& f, Eigen::VectorXd y, double t0,
                               double t1, const OdeOptions& opts,
                               const OdeObserver& observer, double* t_reached) {
  const double dir = (t1 >= t0) ? 1.0 : -1.0;
  double t = t0;
  if (t0 == t1) {
    if (t_reached) *t_reached = t;
    return y;
  }

  double h = dir * std::min(std::abs(t1 - t0) / 16.0,
                            opts.max_step > 0 ? opts.max_step : 1.0);
  if (h == 0.0) h = dir * 1e-8;

  Eigen::VectorXd k1 = f(t, y);
  long steps = 0;
  double err_prev = 1.0;

  while (dir * (t1 - t) > 0) {
    if (++steps > opts.max_steps)
      throw std::runtime_error("integrate_rk45: step budget exhausted");
    if (dir * (t + h - t1) > 0) h = t1 - t;

    const Eigen::VectorXd k2 = f(t + 0.2 * h, y + h * (a21 * k1));
    const Eigen::VectorXd k3 = f(t + 0.3 * h, y + h * (a31 * k1 + a32 * k2));
    const Eigen::VectorXd k4 =
        f(t + 0.8 * h, y + h * (a41 * k1 + a42 * k2 + a43 * k3));
    const Eigen::VectorXd k5 = f(
        t + 8.0 / 9 * h, y + h * (a51 * k1 + a52 * k2 + a53 * k3 + a54 * k4));
    const Eigen::VectorXd k6 =
        f(t + h, y + h * (a61 * k1 + a62 * k2 + a63 * k3 + a64 * k4 + a65 * k5));
    const Eigen::VectorXd ynew =
        y + h * (b1 * k1 + b3 * k3 + b4 * k4 + b5 * k5 + b6 * k6);
    const Eigen::VectorXd k7 = f(t + h, ynew);
    const Eigen::VectorXd errv =
        h * (e1 * k1 + e3 * k3 + e4 * k4 + e5 * k5 + e6 * k6 + e7 * k7);

    double err = 0.0;
    for (Eigen::Index i = 0; i < y.size(); ++i) {
      const double scale =
          opts.abs_tol +
          opts.rel_tol * std::max(std::abs(y(i)), std::abs(ynew(i)));
      err = std::max(err, std::abs(errv(i)) / scale);
    }

    if (err <= 1.0 || std::abs(h) <= 1e-14 * std::max(1.0, std::abs(t))) {
      t += h;
      y = ynew;
      k1 = k7;  // FSAL
      if (observer && !observer(t, y)) break;
      const double grow =
          0.9 * std::pow(std::max(err, 1e-10), -0.7 / 5.0) *
          std::pow(std::max(err_prev, 1e-10), 0.4 / 5.0);
      h *= std::min(5.0, std::max(0.2, grow));
      err_prev = std::max(err, 1e-10);
    } else {
      h *= std::max(0.1, 0.9 * std::pow(err, -1.0 / 5.0));
    }
    if (opts.max_step > 0 && std::abs(h) > opts.max_step)
      h = dir * opts.max_step;
  }

  if (t_reached) *t_reached = t;
  return y;
}

Eigen::VectorXd integrate_rk4_fixed(const OdeRhs& f, Eigen::VectorXd y,
                                    double t0, double t1, long n_steps,
                                    const OdeObserver& observer) {
  if (n_steps <= 0) throw std::invalid_argument("integrate_rk4_fixed: n_steps");
  const double h = (t1 - t0) / static_cast<double>(n_steps);
  double t = t0;
  for (long s = 0; s < n_steps; ++s) {
    const Eigen::VectorXd k1 = f(t, y);
    const Eigen::VectorXd k2 = f(t + 0.5 * h, y + 0.5 * h * k1);
    const Eigen::VectorXd k3 = f(t + 0.5 * h, y + 0.5 * h * k2);
    const Eigen::VectorXd k4 = f(t + h, y + h * k3);
    y += h / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    t = t0 + (s + 1) * h;
    if (observer && !observer(t, y)) break;
  }
  return y;
}

}  // namespace cylflow
