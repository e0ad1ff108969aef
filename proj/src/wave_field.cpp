#include "vsb/wave_field.hpp"

#include <cmath>
#include <random>

namespace vsb {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

double bretschneider(double f, double Hs, double Tp) {
  if (!(f > 0.0)) throw config_error("bretschneider: f must be > 0");
  if (!(Hs > 0.0) || !(Tp > 0.0))
    throw config_error("bretschneider: Hs and Tp must be > 0");
  const double fp = 1.0 / Tp;
  const double r4 = std::pow(fp / f, 4);
  return (5.0 / 16.0) * (r4 / f) * Hs * Hs * std::exp(-1.25 * r4);
}

IrregularWave synthesize_irregular(double Hs, double Tp, int n_freq,
                                   double omega_min, double omega_max,
                                   std::uint64_t seed) {
  if (n_freq < 2) throw config_error("synthesize_irregular: n_freq must be >= 2");
  if (!(omega_min > 0.0) || !(omega_max > omega_min))
    throw config_error("synthesize_irregular: need 0 < omega_min < omega_max");
  IrregularWave wave;
  wave.Hs = Hs;
  wave.Tp = Tp;
  wave.seed = seed;
  const double f_min = omega_min / (2.0 * kPi);
  const double f_max = omega_max / (2.0 * kPi);
  const double df = (f_max - f_min) / (n_freq - 1);
  wave.omegas.resize(n_freq);
  wave.amps.resize(n_freq);
  wave.phases.resize(n_freq);
  std::mt19937_64 rng(seed);
  for (int j = 0; j < n_freq; ++j) {
    const double f = f_min + j * df;
    wave.omegas[j] = 2.0 * kPi * f;
    wave.amps[j] = std::sqrt(2.0 * bretschneider(f, Hs, Tp) * df);
    // Implementation-pinned uniform in [0, 2pi): top 53 bits of the draw.
    const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    wave.phases[j] = 2.0 * kPi * u;
  }
  return wave;
}

Eigen::VectorXd excitation_force(double t, const RegularWave& wave,
                                 const Eigen::VectorXcd& Ex) {
  const std::complex<double> carrier =
      wave.amplitude() * std::exp(std::complex<double>(0.0, wave.omega * t));
  return (Ex * carrier).real();
}

Eigen::VectorXd excitation_force(double t, const IrregularWave& wave,
                                 const std::vector<Eigen::VectorXcd>& Ex_per_freq) {
  if (Ex_per_freq.size() != wave.omegas.size())
    throw config_error("excitation_force: coefficient/frequency count mismatch");
  if (Ex_per_freq.empty()) throw config_error("excitation_force: empty wave");
  Eigen::VectorXd q = Eigen::VectorXd::Zero(Ex_per_freq[0].size());
  for (size_t j = 0; j < wave.omegas.size(); ++j) {
    const std::complex<double> carrier =
        wave.amps[j] *
        std::exp(std::complex<double>(0.0, wave.omegas[j] * t + wave.phases[j]));
    q += (Ex_per_freq[j] * carrier).real();
  }
  return q;
}

}  // namespace vsb
