#pragma once

#include <Eigen/Dense>
#include <complex>
#include <memory>
#include <string>
#include <vector>

#include "vsb/panel_geometry.hpp"

namespace vsb {

struct WaterProperties {
  double rho_w = 1000.0;  // kg/m^3
  double g = 9.81;        // m/s^2
};

enum class PressureSource { bem_file, fk_surrogate };

// Per-frequency, per-panel complex pressure coefficients: excitation (Pa per
// metre of wave amplitude) and radiation (Pa per unit heave velocity).
struct PressureSet {
  std::vector<double> omegas;            // strictly increasing (rad/s)
  std::vector<Eigen::VectorXcd> p_ex;    // [freq][panel]
  std::vector<Eigen::VectorXcd> p_rd;    // [freq][panel]
  PressureSource source = PressureSource::fk_surrogate;

  int n_freq() const { return static_cast<int>(omegas.size()); }
  int n_panels() const { return omegas.empty() ? 0 : static_cast<int>(p_ex[0].size()); }
  void validate() const;
};

// Text format: header `VSBPRES v1`, `nfreq <F> npanels <P>`, then F blocks of
// `omega <value>` followed by P lines `panel_index re(p_ex) im(p_ex) re(p_rd)
// im(p_rd)`. 17 significant digits; write-then-read is the identity.
void write_pressure_file(const PressureSet& set, const std::string& path);
PressureSet read_pressure_file(const std::string& path);

struct GeneralizedCoefficients {
  Eigen::MatrixXd M_inf;   // (N+1)^2 generalized added mass (kg)
  Eigen::MatrixXd D_r;     // (N+1)^2 generalized radiation damping (Ns/m)
  Eigen::MatrixXd K_h;     // (N+1)^2 generalized hydrostatic stiffness (N/m)
  Eigen::VectorXcd Ex;     // (N+1) excitation coefficient (N per m amplitude)
  double omega = 0.0;      // frequency this set belongs to (rad/s)
};

// Deep-water Froude-Krylov pressure coefficients for every panel of the
// table: rho_w g exp(k z + i k x), k = omega^2/g, z relative to the
// undisturbed free surface.
Eigen::VectorXcd fk_pressure(const PanelTable& table, double omega,
                             const WaterProperties& water);

// Parametric radiation-pressure fixture (not physics): p_rd =
// rho_w omega (kappa_d + i kappa_a omega) e^{k z} cos(psi). The cos(psi)
// factor makes the wetted-hemisphere assemblies come out with the Cummins
// signs (D_r(1,1) >= 0, M_inf(1,1) >= 0).
struct SurrogateParams {
  double kappa_d = 0.35;
  double kappa_a = 0.35;
};

Eigen::VectorXcd surrogate_radiation_pressure(const PanelTable& table, double omega,
                                              const WaterProperties& water,
                                              const SurrogateParams& params);

// Assemblies. Global sign conventions (calibrated so the N=0 rigid limit
// reproduces the Cummins oracle's signs): excitation and hydrostatic carry
// a leading minus, radiation and added mass do not.
Eigen::VectorXcd excitation_coeff(const PanelTable& table,
                                  const Eigen::VectorXcd& p_ex,
                                  const std::vector<int>& wetted);

Eigen::MatrixXd hydrostatic_matrix(const PanelTable& table,
                                   const std::vector<int>& wetted,
                                   const WaterProperties& water);

// Returns (D_r, M_inf) at omega from Re and Im/omega of the radiation
// pressure coefficients.
std::pair<Eigen::MatrixXd, Eigen::MatrixXd> radiation_matrices(
    const PanelTable& table, const Eigen::VectorXcd& p_rd,
    const std::vector<int>& wetted, double omega);

// All four at once, same conventions.
GeneralizedCoefficients assemble_coefficients(const PanelTable& table,
                                              const Eigen::VectorXcd& p_ex,
                                              const Eigen::VectorXcd& p_rd,
                                              const std::vector<int>& wetted,
                                              double omega,
                                              const WaterProperties& water);

struct RetardationKernel {
  std::vector<double> taus;        // time grid (s), uniform from 0
  std::vector<Eigen::MatrixXd> K;  // kernel matrix per tau
  double omega_max = 0.0;          // truncation frequency of the transform

  double dt() const { return taus.size() > 1 ? taus[1] - taus[0] : 0.0; }
  int size() const { return static_cast<int>(taus.size()); }
};

// K(t) = (2/pi) integral D_r(omega) cos(omega t) domega, trapezoid over the
// supplied grid, entrywise. Errors if dt aliases the grid (dt > pi/omega_max).
RetardationKernel retardation_kernel(const std::vector<double>& omegas,
                                     const std::vector<Eigen::MatrixXd>& D_r,
                                     double t_max, double dt);

// Entrywise time mean of a coefficient series (Reynolds average). The
// shortcut for the one-way scheme -- coefficients of the undeformed shape --
// is the t=0 element of any trajectory started at rest.
GeneralizedCoefficients reynolds_average(
    const std::vector<GeneralizedCoefficients>& series);

// Pressure source used by the simulation engines: pressures for the current
// geometry snapshot at a requested frequency. Pure queries, thread-safe.
class PressureProvider {
 public:
  virtual ~PressureProvider() = default;
  virtual Eigen::VectorXcd excitation(const PanelTable& table, double omega) const = 0;
  virtual Eigen::VectorXcd radiation(const PanelTable& table, double omega) const = 0;
  virtual const std::vector<double>& omega_grid() const = 0;
};

// Froude-Krylov + parametric radiation, recomputed from the instantaneous
// geometry (responds to deformation in two-way runs).
class SurrogateProvider : public PressureProvider {
 public:
  SurrogateProvider(WaterProperties water, SurrogateParams params,
                    std::vector<double> grid);
  Eigen::VectorXcd excitation(const PanelTable& table, double omega) const override;
  Eigen::VectorXcd radiation(const PanelTable& table, double omega) const override;
  const std::vector<double>& omega_grid() const override { return grid_; }

 private:
  WaterProperties water_;
  SurrogateParams params_;
  std::vector<double> grid_;
};

// BEM-file pressures: fixed per panel, piecewise-linear in omega between
// grid points, no extrapolation.
class FileProvider : public PressureProvider {
 public:
  explicit FileProvider(PressureSet set);
  Eigen::VectorXcd excitation(const PanelTable& table, double omega) const override;
  Eigen::VectorXcd radiation(const PanelTable& table, double omega) const override;
  const std::vector<double>& omega_grid() const override { return set_.omegas; }

 private:
  Eigen::VectorXcd interp(const std::vector<Eigen::VectorXcd>& field,
                          double omega) const;
  PressureSet set_;
};

// Materialize surrogate pressures on the undeformed geometry over a grid
// (for pressure-file workflows and the coeffs CLI).
PressureSet surrogate_pressure_set(const PanelTable& table,
                                   const std::vector<double>& grid,
                                   const WaterProperties& water,
                                   const SurrogateParams& params);

}  // namespace vsb
