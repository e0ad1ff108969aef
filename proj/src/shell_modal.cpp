#include "vsb/shell_modal.hpp"

#include <cmath>
#include <sstream>

namespace vsb {

namespace {

constexpr double kPi = 3.14159265358979323846;

// P_n(cos phi) and dP_n(cos phi)/dphi for all n = 0..N-1 in one Bonnet pass.
void legendre_all(int N, double phi, double* P, double* dP) {
  const double x = std::cos(phi);
  const double dx = -std::sin(phi);
  if (N <= 0) return;
  P[0] = 1.0;
  dP[0] = 0.0;
  if (N == 1) return;
  P[1] = x;
  dP[1] = dx;
  for (int k = 1; k + 1 < N; ++k) {
    P[k + 1] = ((2.0 * k + 1.0) * x * P[k] - k * P[k - 1]) / (k + 1.0);
    dP[k + 1] = ((2.0 * k + 1.0) * (dx * P[k] + x * dP[k]) - k * dP[k - 1]) / (k + 1.0);
  }
}

}  // namespace

double ShellProperties::total_mass() const { return 4.0 * kPi * r * r * h * rho; }

void ShellProperties::validate() const {
  std::ostringstream bad;
  if (!(r > 0.0)) bad << "r must be > 0; ";
  if (!(h > 0.0)) bad << "h must be > 0; ";
  if (r > 0.0 && h > 0.0 && !(h / r < 0.2)) bad << "h/r must be < 0.2 (thin shell); ";
  if (!(E > 0.0)) bad << "E must be > 0; ";
  if (!(nu >= 0.0 && nu < 0.5)) bad << "nu must be in [0, 0.5); ";
  if (!(rho > 0.0)) bad << "rho must be > 0; ";
  if (N < 1) bad << "N must be >= 1; ";
  if (alpha_d < 0.0) bad << "alpha_d must be >= 0; ";
  if (beta_d < 0.0) bad << "beta_d must be >= 0; ";
  if (!bad.str().empty()) throw config_error("shell properties: " + bad.str());
}

FreqParam freq_param(int n, const ShellProperties& props) {
  if (n < 0) throw config_error("freq_param: mode order must be >= 0");
  const double nu = props.nu;
  const double hr2 = (props.h / props.r) * (props.h / props.r);
  const double m = static_cast<double>(n) * (n + 1) - 2.0;
  // The 1/12 bending term carries the thin-shell factor (h/r)^2, like the
  // 1/2 term of A-bar does.
  const double Bbar = 1.0 + nu * nu + hr2 / 12.0 * ((m + 1.0) * (m + 1.0) - nu * nu);
  const double Abar = 3.0 * (1.0 + nu) + m + 0.5 * hr2 * (m + 3.0) * (m + 1.0 + nu);
  const double disc = Abar * Abar - 4.0 * m * Bbar;
  if (disc < 0.0) {
    std::ostringstream msg;
    msg << "freq_param: negative discriminant for n=" << n
        << " (invalid property combination)";
    throw numeric_error(msg.str());
  }
  const double root = std::sqrt(disc);
  const double denom = 2.0 * (1.0 - nu * nu);
  FreqParam out;
  out.plus = (Abar + root) / denom;
  // m = 0 for n = 1, so root = |Abar| and the minus branch is exactly zero.
  out.minus = (n == 1) ? 0.0 : (Abar - root) / denom;
  return out;
}

double natural_freq(int n, const ShellProperties& props, double omega_sq) {
  if (omega_sq == 0.0) {
    std::ostringstream msg;
    msg << "natural_freq: rigid mode (Omega^2 = 0) for n=" << n;
    throw numeric_error(msg.str());
  }
  if (omega_sq < 0.0) {
    std::ostringstream msg;
    msg << "natural_freq: negative Omega^2 for n=" << n;
    throw numeric_error(msg.str());
  }
  return std::sqrt(props.E / (props.r * props.r * props.rho * omega_sq));
}

std::pair<double, double> legendre_pair(int n, double phi) {
  if (n < 0) throw config_error("legendre_pair: order must be >= 0");
  std::vector<double> P(n + 1), dP(n + 1);
  legendre_all(n + 1, phi, P.data(), dP.data());
  return {P[n], dP[n]};
}

ModalBasis::ModalBasis(const ShellProperties& props, double A_norm)
    : props_(props), A_(A_norm) {
  props_.validate();
  omega_sq_.reserve(props_.N);
  radial_.reserve(props_.N);
  for (int n = 0; n < props_.N; ++n) {
    const double w2 = freq_param(n, props_).minus;
    if (std::abs(1.0 - w2) < 1e-9) {
      std::ostringstream msg;
      msg << "modal basis: singular radial amplitude (Omega^2 = 1) for mode n=" << n;
      throw numeric_error(msg.str());
    }
    omega_sq_.push_back(w2);
    radial_.push_back((2.0 + props_.nu) * w2 / (1.0 - w2));
  }
}

void ModalBasis::eval(double phi, Eigen::RowVectorXd& psi_phi,
                      Eigen::RowVectorXd& psi_r) const {
  const int N = size();
  psi_phi.resize(N);
  psi_r.resize(N);
  std::vector<double> P(N), dP(N);
  legendre_all(N, phi, P.data(), dP.data());
  for (int k = 0; k < N; ++k) {
    psi_phi(k) = A_ * dP[k];
    psi_r(k) = A_ * radial_[k] * P[k];
  }
}

void gauss_legendre(int order, double a, double b,
                    std::vector<double>& nodes, std::vector<double>& weights) {
  nodes.resize(order);
  weights.resize(order);
  const int mid = (order + 1) / 2;
  for (int i = 0; i < mid; ++i) {
    // Newton iteration from the Chebyshev-like initial guess.
    double x = std::cos(kPi * (i + 0.75) / (order + 0.5));
    double pp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (int k = 1; k < order; ++k) {
        const double p2 = ((2.0 * k + 1.0) * x * p1 - k * p0) / (k + 1.0);
        p0 = p1;
        p1 = p2;
      }
      pp = order * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / pp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    const double w = 2.0 / ((1.0 - x * x) * pp * pp);
    nodes[i] = 0.5 * (a + b) - 0.5 * (b - a) * x;
    nodes[order - 1 - i] = 0.5 * (a + b) + 0.5 * (b - a) * x;
    weights[i] = 0.5 * (b - a) * w;
    weights[order - 1 - i] = 0.5 * (b - a) * w;
  }
}

StructuralMatrices assemble_structural(const ModalBasis& basis, int quad_order) {
  const auto& props = basis.props();
  const int N = basis.size();
  if (quad_order < 2 * N + 2)
    throw config_error("assemble_structural: quad_order must be >= 2N+2");

  std::vector<double> phi, w;
  gauss_legendre(quad_order, 0.0, kPi, phi, w);

  Eigen::MatrixXd M = Eigen::MatrixXd::Zero(N, N);
  Eigen::MatrixXd K = Eigen::MatrixXd::Zero(N, N);
  Eigen::RowVectorXd psi_phi(N), psi_r(N), dpsi_phi(N);
  std::vector<double> P(N), dP(N);

  for (int q = 0; q < quad_order; ++q) {
    const double p = phi[q];
    const double s = std::sin(p);
    const double cot = std::cos(p) / s;  // nodes are strictly interior
    legendre_all(N, p, P.data(), dP.data());
    for (int k = 0; k < N; ++k) {
      psi_phi(k) = basis.amplitude() * dP[k];
      psi_r(k) = basis.amplitude() * basis.radial_factor(k) * P[k];
      // d^2 P/dphi^2 from the Legendre equation P'' + cot P' + n(n+1) P = 0.
      dpsi_phi(k) = basis.amplitude() *
                    (-cot * dP[k] - static_cast<double>(k) * (k + 1) * P[k]);
    }
    const Eigen::RowVectorXd zeta_pp = dpsi_phi + psi_r;
    const Eigen::RowVectorXd zeta_tt = cot * psi_phi + psi_r;

    M += w[q] * s * (psi_phi.transpose() * psi_phi + psi_r.transpose() * psi_r);
    K += w[q] * s *
         (zeta_pp.transpose() * zeta_pp + zeta_tt.transpose() * zeta_tt +
          props.nu * (zeta_pp.transpose() * zeta_tt + zeta_tt.transpose() * zeta_pp));
  }

  M *= 2.0 * kPi * props.rho * props.h * props.r * props.r;
  K *= 2.0 * kPi * props.E * props.h / (1.0 - props.nu * props.nu);

  if (!M.allFinite() || !K.allFinite())
    throw numeric_error("assemble_structural: non-finite matrix entry");

  M = 0.5 * (M + M.transpose()).eval();
  K = 0.5 * (K + K.transpose()).eval();

  Eigen::LLT<Eigen::MatrixXd> llt(M);
  if (llt.info() != Eigen::Success)
    throw numeric_error("assemble_structural: M_ee is not positive definite");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(K);
  const double scale = K.cwiseAbs().maxCoeff();
  if (es.eigenvalues().minCoeff() < -1e-9 * scale)
    throw numeric_error("assemble_structural: K_ee is not positive semidefinite");

  StructuralMatrices out;
  out.M_ee = M;
  out.K_ee = K;
  out.D_ee = props.alpha_d * M + props.beta_d * K;
  return out;
}

StructuralMatrices assemble_structural(const ModalBasis& basis) {
  return assemble_structural(basis, 4 * basis.size() + 8);
}

}  // namespace vsb
