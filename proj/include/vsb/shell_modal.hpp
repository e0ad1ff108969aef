#pragma once

#include <Eigen/Dense>
#include <utility>
#include <vector>

#include "vsb/errors.hpp"

namespace vsb {

// Geometry and material of the spherical shell plus the modal truncation.
struct ShellProperties {
  double r = 2.0;        // radius (m)
  double h = 0.1;        // thickness (m)
  double E = 2.0e5;      // Young's modulus (Pa)
  double nu = 0.3;       // Poisson ratio
  double rho = 900.0;    // shell density (kg/m^3)
  int N = 4;             // retained membrane modes (n = 0 .. N-1)
  double alpha_d = 0.0;  // Rayleigh mass multiplier (1/s)
  double beta_d = 0.0;   // Rayleigh stiffness multiplier (s)

  double total_mass() const;  // 4 pi r^2 h rho
  void validate() const;      // thin-shell and positivity invariants
};

// Both branches of the dimensionless frequency parameter for mode order n.
// The membrane branch is the minus sign; for n = 1 it is exactly zero.
struct FreqParam {
  double plus;
  double minus;
};

FreqParam freq_param(int n, const ShellProperties& props);

// Diagnostic natural frequency, implemented exactly as the source prints it
// (Omega^2 in the denominator: w^2 = E / (r^2 rho Omega^2)). Standard shell
// references put Omega^2 in the numerator; since this value is never used
// inside the equations of motion, the printed form is kept. Errors on
// Omega^2 <= 0 (rigid mode / lower-branch negative values).
double natural_freq(int n, const ShellProperties& props, double omega_sq);

// Legendre function of the first kind at cos(phi) together with its
// colatitude derivative dP_n(cos phi)/dphi, both by recurrence (no finite
// differences). Total on n >= 0, phi in [0, pi].
std::pair<double, double> legendre_pair(int n, double phi);

// Retained modal basis. Mode k (0-based) is the membrane branch of order
// n = k. Construction rejects property sets that make a radial amplitude
// singular (Omega^2 == 1).
class ModalBasis {
 public:
  ModalBasis(const ShellProperties& props, double A_norm = 1.0);

  const ShellProperties& props() const { return props_; }
  double amplitude() const { return A_; }
  int size() const { return props_.N; }
  // Membrane-branch frequency parameter of mode k.
  double omega_sq(int k) const { return omega_sq_[k]; }
  // Radial amplitude factor (2+nu) Omega^2 / (1 - Omega^2) of mode k.
  double radial_factor(int k) const { return radial_[k]; }

  // Row vectors (Psi^phi, Psi^r) of all retained modes at colatitude phi.
  void eval(double phi, Eigen::RowVectorXd& psi_phi, Eigen::RowVectorXd& psi_r) const;

 private:
  ShellProperties props_;
  double A_;
  std::vector<double> omega_sq_;
  std::vector<double> radial_;
};

struct StructuralMatrices {
  Eigen::MatrixXd M_ee;  // generalized mass (kg)
  Eigen::MatrixXd K_ee;  // generalized stiffness (N/m)
  Eigen::MatrixXd D_ee;  // alpha_d*M + beta_d*K
};

// Gauss-Legendre nodes/weights on [a, b], nodes strictly interior.
void gauss_legendre(int order, double a, double b,
                    std::vector<double>& nodes, std::vector<double>& weights);

// Generalized mass / stiffness / damping by Gauss-Legendre quadrature over
// phi in (0, pi). Symmetrized after assembly; M_ee must come out SPD and
// K_ee PSD or construction throws.
StructuralMatrices assemble_structural(const ModalBasis& basis, int quad_order);
StructuralMatrices assemble_structural(const ModalBasis& basis);  // order 4N+8

}  // namespace vsb
