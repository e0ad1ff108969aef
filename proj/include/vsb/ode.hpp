#pragma once

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <sstream>

#include "vsb/errors.hpp"

namespace vsb {

// Dormand-Prince 5(4) adaptive step with the classic 4th-order continuous
// extension. Hand-rolled so steps can be forced to land exactly on output /
// coefficient-refresh boundaries and runs stay bit-reproducible.

struct OdeOptions {
  double abs_tol = 1e-8;
  double rel_tol = 1e-8;
  double dt_init = 1e-3;
  double dt_max = 0.05;
  double dt_min = 1e-12;
};

// Dense output over one accepted step [t0, t0+h].
struct DenseStep {
  double t0 = 0.0, h = 0.0;
  Eigen::VectorXd r1, r2, r3, r4, r5;

  Eigen::VectorXd eval(double t) const {
    const double th = (t - t0) / h;
    const double th1 = 1.0 - th;
    return r1 + th * (r2 + th1 * (r3 + th * (r4 + th1 * r5)));
  }
};

// Integrates y' = rhs(t, y) from t0 to t1 (t1 > t0 required, hit exactly).
// After each accepted step, observer(dense, t_new, y_new) runs; use it to
// resample onto a fixed grid. Throws on step-size underflow or NaN.
template <class RhsFn, class Observer>
void dopri5_integrate(RhsFn&& rhs, double t0, Eigen::VectorXd& y, double t1,
                      const OdeOptions& opt, double& dt_carry, Observer&& observer) {
  static constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
  static constexpr double a21 = 1.0 / 5;
  static constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
  static constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
  static constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187,
                          a53 = 64448.0 / 6561, a54 = -212.0 / 729;
  static constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33,
                          a63 = 46732.0 / 5247, a64 = 49.0 / 176,
                          a65 = -5103.0 / 18656;
  static constexpr double a71 = 35.0 / 384, a73 = 500.0 / 1113, a74 = 125.0 / 192,
                          a75 = -2187.0 / 6784, a76 = 11.0 / 84;
  static constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920,
                          e5 = -17253.0 / 339200, e6 = 22.0 / 525, e7 = -1.0 / 40;
  static constexpr double d1 = -12715105075.0 / 11282082432.0,
                          d3 = 87487479700.0 / 32700410799.0,
                          d4 = -10690763975.0 / 1880347072.0,
                          d5 = 701980252875.0 / 199316789632.0,
                          d6 = -1453857185.0 / 822651844.0,
                          d7 = 69997945.0 / 29380423.0;

  const int n = static_cast<int>(y.size());
  Eigen::VectorXd k1(n), k2(n), k3(n), k4(n), k5(n), k6(n), k7(n), ytmp(n), ynew(n),
      yerr(n);
  double t = t0;
  double dt = dt_carry > 0.0 ? dt_carry : opt.dt_init;
  DenseStep dense;

  rhs(t, y, k1);  // k1 is reused across steps (FSAL)
  while (t < t1) {
    dt = std::min({dt, opt.dt_max, t1 - t});
    if (dt < opt.dt_min) {
      std::ostringstream msg;
      msg << "ode: step size underflow at t=" << t;
      throw numeric_error(msg.str());
    }

    ytmp = y + dt * (a21 * k1);
    rhs(t + c2 * dt, ytmp, k2);
    ytmp = y + dt * (a31 * k1 + a32 * k2);
    rhs(t + c3 * dt, ytmp, k3);
    ytmp = y + dt * (a41 * k1 + a42 * k2 + a43 * k3);
    rhs(t + c4 * dt, ytmp, k4);
    ytmp = y + dt * (a51 * k1 + a52 * k2 + a53 * k3 + a54 * k4);
    rhs(t + c5 * dt, ytmp, k5);
    ytmp = y + dt * (a61 * k1 + a62 * k2 + a63 * k3 + a64 * k4 + a65 * k5);
    rhs(t + dt, ytmp, k6);
    ynew = y + dt * (a71 * k1 + a73 * k3 + a74 * k4 + a75 * k5 + a76 * k6);
    rhs(t + dt, ynew, k7);
    yerr = dt * (e1 * k1 + e3 * k3 + e4 * k4 + e5 * k5 + e6 * k6 + e7 * k7);

    if (!ynew.allFinite()) {
      std::ostringstream msg;
      msg << "ode: non-finite state at t=" << t + dt;
      throw numeric_error(msg.str());
    }

    double err = 0.0;
    for (int i = 0; i < n; ++i) {
      const double sc =
          opt.abs_tol + opt.rel_tol * std::max(std::abs(y(i)), std::abs(ynew(i)));
      const double r = yerr(i) / sc;
      err += r * r;
    }
    err = std::sqrt(err / n);

    if (err <= 1.0) {
      dense.t0 = t;
      dense.h = dt;
      dense.r1 = y;
      dense.r2 = ynew - y;
      dense.r3 = dt * k1 - dense.r2;
      dense.r4 = dense.r2 - dt * k7 - dense.r3;
      dense.r5 = dt * (d1 * k1 + d3 * k3 + d4 * k4 + d5 * k5 + d6 * k6 + d7 * k7);
      t += dt;
      y = ynew;
      k1 = k7;
      observer(dense, t, y);
      const double fac =
          err == 0.0 ? 5.0 : std::clamp(0.9 * std::pow(err, -0.2), 0.2, 5.0);
      dt *= fac;
    } else {
      dt *= std::clamp(0.9 * std::pow(err, -0.2), 0.2, 1.0);
    }
  }
  dt_carry = dt;
}

}  // namespace vsb
