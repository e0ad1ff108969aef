#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <vector>

#include "vsb/errors.hpp"

namespace vsb {

struct RegularWave {
  double H = 0.0;      // wave height (m)
  double omega = 0.0;  // frequency (rad/s)
  double amplitude() const { return 0.5 * H; }
  void validate() const {
    if (!(H > 0.0) || !(omega > 0.0))
      throw config_error("regular wave: H and omega must be > 0");
  }
};

// Bretschneider spectral density S(f) in m^2 s; f_p = 1/Tp.
double bretschneider(double f, double Hs, double Tp);

struct IrregularWave {
  double Hs = 0.0;
  double Tp = 0.0;
  std::uint64_t seed = 0;
  std::vector<double> omegas;  // rad/s, equidistant in f
  std::vector<double> amps;    // component amplitude eta_j = sqrt(2 S df) (m)
  std::vector<double> phases;  // [0, 2pi)
  static constexpr const char* kRngName = "mt19937_64";
};

// Superposition components on an equidistant frequency grid spanning
// [omega_min, omega_max]; deterministic under a fixed seed.
IrregularWave synthesize_irregular(double Hs, double Tp, int n_freq,
                                   double omega_min, double omega_max,
                                   std::uint64_t seed);

// Q_ext(t) = Re(Ex eta e^{i omega t}) for a regular wave with the coefficient
// already evaluated at the wave frequency.
Eigen::VectorXd excitation_force(double t, const RegularWave& wave,
                                 const Eigen::VectorXcd& Ex);

// Irregular superposition: Q_ext(t) = sum_j Re(Ex_j eta_j e^{i(omega_j t +
// phase_j)}). Ex_per_freq must align with wave.omegas.
Eigen::VectorXd excitation_force(double t, const IrregularWave& wave,
                                 const std::vector<Eigen::VectorXcd>& Ex_per_freq);

}  // namespace vsb
