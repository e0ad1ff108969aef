#include "vsb/hydro_coeffs.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace vsb {

namespace {
constexpr double kPi = 3.14159265358979323846;

std::string fmt17(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}
}  // namespace

void PressureSet::validate() const {
  if (omegas.empty()) throw config_error("pressure set: empty frequency grid");
  for (size_t i = 1; i < omegas.size(); ++i)
    if (!(omegas[i] > omegas[i - 1]))
      throw config_error("pressure set: non-monotone frequency grid");
  if (p_ex.size() != omegas.size() || p_rd.size() != omegas.size())
    throw config_error("pressure set: frequency count mismatch");
  const int np = n_panels();
  for (size_t i = 0; i < omegas.size(); ++i)
    if (p_ex[i].size() != np || p_rd[i].size() != np)
      throw config_error("pressure set: panel count mismatch across frequencies");
}

void write_pressure_file(const PressureSet& set, const std::string& path) {
  set.validate();
  std::ofstream out(path);
  if (!out) throw io_error("write_pressure_file: cannot open " + path);
  out << "VSBPRES v1\n";
  out << "nfreq " << set.n_freq() << " npanels " << set.n_panels() << "\n";
  for (int f = 0; f < set.n_freq(); ++f) {
    out << "omega " << fmt17(set.omegas[f]) << "\n";
    for (int p = 0; p < set.n_panels(); ++p) {
      out << p << ' ' << fmt17(set.p_ex[f](p).real()) << ' '
          << fmt17(set.p_ex[f](p).imag()) << ' ' << fmt17(set.p_rd[f](p).real())
          << ' ' << fmt17(set.p_rd[f](p).imag()) << '\n';
    }
  }
}

PressureSet read_pressure_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw io_error("read_pressure_file: cannot open " + path);
  std::string line;
  if (!std::getline(in, line) || line != "VSBPRES v1")
    throw io_error("read_pressure_file: malformed header in " + path);
  int nfreq = 0, npanels = 0;
  {
    std::string kw1, kw2;
    if (!std::getline(in, line)) throw io_error("read_pressure_file: truncated " + path);
    std::istringstream hdr(line);
    if (!(hdr >> kw1 >> nfreq >> kw2 >> npanels) || kw1 != "nfreq" || kw2 != "npanels")
      throw io_error("read_pressure_file: malformed count line in " + path);
  }
  if (nfreq < 1 || npanels < 1)
    throw io_error("read_pressure_file: bad counts in " + path);
  PressureSet set;
  set.source = PressureSource::bem_file;
  set.omegas.reserve(nfreq);
  for (int f = 0; f < nfreq; ++f) {
    if (!std::getline(in, line))
      throw io_error("read_pressure_file: frequency count mismatch in " + path);
    std::istringstream hdr(line);
    std::string kw;
    double omega;
    if (!(hdr >> kw >> omega) || kw != "omega")
      throw io_error("read_pressure_file: malformed omega line in " + path);
    if (!set.omegas.empty() && !(omega > set.omegas.back()))
      throw io_error("read_pressure_file: non-monotone frequency grid in " + path);
    set.omegas.push_back(omega);
    Eigen::VectorXcd ex(npanels), rd(npanels);
    for (int p = 0; p < npanels; ++p) {
      if (!std::getline(in, line))
        throw io_error("read_pressure_file: panel count mismatch in " + path);
      std::istringstream row(line);
      int idx;
      double exr, exi, rdr, rdi;
      if (!(row >> idx >> exr >> exi >> rdr >> rdi) || idx != p)
        throw io_error("read_pressure_file: malformed panel row in " + path);
      ex(p) = {exr, exi};
      rd(p) = {rdr, rdi};
    }
    set.p_ex.push_back(std::move(ex));
    set.p_rd.push_back(std::move(rd));
  }
  set.validate();
  return set;
}

Eigen::VectorXcd fk_pressure(const PanelTable& table, double omega,
                             const WaterProperties& water) {
  const double k = omega * omega / water.g;
  const int m = static_cast<int>(table.area.size());
  Eigen::VectorXcd p(m);
  for (int i = 0; i < m; ++i) {
    const std::complex<double> expo(k * table.z_inertial[i], k * table.x_body[i]);
    p(i) = water.rho_w * water.g * std::exp(expo);
  }
  return p;
}

Eigen::VectorXcd surrogate_radiation_pressure(const PanelTable& table, double omega,
                                              const WaterProperties& water,
                                              const SurrogateParams& params) {
  const double k = omega * omega / water.g;
  const int m = static_cast<int>(table.area.size());
  Eigen::VectorXcd p(m);
  const std::complex<double> coef =
      water.rho_w * omega * std::complex<double>(params.kappa_d, params.kappa_a * omega);
  for (int i = 0; i < m; ++i)
    p(i) = coef * std::exp(k * table.z_inertial[i]) * table.cos_psi[i];
  return p;
}

Eigen::VectorXcd excitation_coeff(const PanelTable& table,
                                  const Eigen::VectorXcd& p_ex,
                                  const std::vector<int>& wetted) {
  if (p_ex.size() != static_cast<int>(table.area.size()))
    throw config_error("excitation_coeff: pressure/panel count mismatch");
  const int dim = static_cast<int>(table.b.empty() ? 0 : table.b[0].size());
  Eigen::VectorXcd ex = Eigen::VectorXcd::Zero(dim);
  for (int i : wetted) ex -= p_ex(i) * table.area[i] * table.b[i];
  return ex;
}

Eigen::MatrixXd hydrostatic_matrix(const PanelTable& table,
                                   const std::vector<int>& wetted,
                                   const WaterProperties& water) {
  if (wetted.empty()) throw config_error("hydrostatic_matrix: empty wetted set");
  const int dim = static_cast<int>(table.b[0].size());
  Eigen::MatrixXd K = Eigen::MatrixXd::Zero(dim, dim);
  for (int i : wetted)
    K -= water.rho_w * water.g * table.area[i] * (table.b[i] * table.zrow[i]);
  return K;
}

std::pair<Eigen::MatrixXd, Eigen::MatrixXd> radiation_matrices(
    const PanelTable& table, const Eigen::VectorXcd& p_rd,
    const std::vector<int>& wetted, double omega) {
  if (omega == 0.0)
    throw numeric_error("radiation_matrices: omega must be nonzero");
  if (p_rd.size() != static_cast<int>(table.area.size()))
    throw config_error("radiation_matrices: pressure/panel count mismatch");
  const int dim = static_cast<int>(table.b[0].size());
  Eigen::MatrixXd D = Eigen::MatrixXd::Zero(dim, dim);
  Eigen::MatrixXd M = Eigen::MatrixXd::Zero(dim, dim);
  for (int i : wetted) {
    const Eigen::MatrixXd outer = table.area[i] * (table.b[i] * table.zrow[i]);
    D += p_rd(i).real() * outer;
    M += p_rd(i).imag() / omega * outer;
  }
  return {D, M};
}

GeneralizedCoefficients assemble_coefficients(const PanelTable& table,
                                              const Eigen::VectorXcd& p_ex,
                                              const Eigen::VectorXcd& p_rd,
                                              const std::vector<int>& wetted,
                                              double omega,
                                              const WaterProperties& water) {
  GeneralizedCoefficients c;
  c.omega = omega;
  c.Ex = excitation_coeff(table, p_ex, wetted);
  c.K_h = hydrostatic_matrix(table, wetted, water);
  auto [D, M] = radiation_matrices(table, p_rd, wetted, omega);
  c.D_r = std::move(D);
  c.M_inf = std::move(M);
  if (!c.M_inf.allFinite() || !c.D_r.allFinite() || !c.K_h.allFinite() ||
      !c.Ex.allFinite())
    throw numeric_error("assemble_coefficients: non-finite entry");
  return c;
}

RetardationKernel retardation_kernel(const std::vector<double>& omegas,
                                     const std::vector<Eigen::MatrixXd>& D_r,
                                     double t_max, double dt) {
  if (omegas.size() < 2 || omegas.size() != D_r.size())
    throw config_error("retardation_kernel: need matching grids with >= 2 points");
  const double omega_max = omegas.back();
  if (dt > kPi / omega_max)
    throw config_error("retardation_kernel: dt aliases the frequency grid");
  if (t_max <= 0.0 || dt <= 0.0)
    throw config_error("retardation_kernel: t_max and dt must be > 0");
  const int nt = static_cast<int>(std::floor(t_max / dt)) + 1;
  const int nw = static_cast<int>(omegas.size());
  const int dim = static_cast<int>(D_r[0].rows());
  RetardationKernel kernel;
  kernel.omega_max = omega_max;
  kernel.taus.resize(nt);
  kernel.K.assign(nt, Eigen::MatrixXd::Zero(dim, dim));
  for (int it = 0; it < nt; ++it) {
    const double t = it * dt;
    kernel.taus[it] = t;
    Eigen::MatrixXd acc = Eigen::MatrixXd::Zero(dim, dim);
    for (int iw = 0; iw + 1 < nw; ++iw) {
      const double dw = omegas[iw + 1] - omegas[iw];
      acc += 0.5 * dw *
             (D_r[iw] * std::cos(omegas[iw] * t) +
              D_r[iw + 1] * std::cos(omegas[iw + 1] * t));
    }
    kernel.K[it] = (2.0 / kPi) * acc;
  }
  return kernel;
}

GeneralizedCoefficients reynolds_average(
    const std::vector<GeneralizedCoefficients>& series) {
  if (series.empty()) throw config_error("reynolds_average: empty series");
  GeneralizedCoefficients avg;
  avg.omega = series.front().omega;
  avg.M_inf = Eigen::MatrixXd::Zero(series[0].M_inf.rows(), series[0].M_inf.cols());
  avg.D_r = avg.M_inf;
  avg.K_h = avg.M_inf;
  avg.Ex = Eigen::VectorXcd::Zero(series[0].Ex.size());
  for (const auto& c : series) {
    avg.M_inf += c.M_inf;
    avg.D_r += c.D_r;
    avg.K_h += c.K_h;
    avg.Ex += c.Ex;
  }
  const double n = static_cast<double>(series.size());
  avg.M_inf /= n;
  avg.D_r /= n;
  avg.K_h /= n;
  avg.Ex /= n;
  return avg;
}

SurrogateProvider::SurrogateProvider(WaterProperties water, SurrogateParams params,
                                     std::vector<double> grid)
    : water_(water), params_(params), grid_(std::move(grid)) {
  if (grid_.size() < 2)
    throw config_error("surrogate provider: omega grid needs >= 2 points");
}

Eigen::VectorXcd SurrogateProvider::excitation(const PanelTable& table,
                                               double omega) const {
  return fk_pressure(table, omega, water_);
}

Eigen::VectorXcd SurrogateProvider::radiation(const PanelTable& table,
                                              double omega) const {
  return surrogate_radiation_pressure(table, omega, water_, params_);
}

FileProvider::FileProvider(PressureSet set) : set_(std::move(set)) {
  set_.validate();
}

Eigen::VectorXcd FileProvider::interp(const std::vector<Eigen::VectorXcd>& field,
                                      double omega) const {
  const auto& w = set_.omegas;
  if (omega < w.front() || omega > w.back()) {
    std::ostringstream msg;
    msg << "pressure interpolation: omega " << omega << " outside grid ["
        << w.front() << ", " << w.back() << "]";
    throw numeric_error(msg.str());
  }
  const auto hi = std::lower_bound(w.begin(), w.end(), omega);
  if (hi == w.begin()) return field.front();
  const size_t i1 = static_cast<size_t>(hi - w.begin());
  if (i1 >= w.size()) return field.back();
  const size_t i0 = i1 - 1;
  const double s = (omega - w[i0]) / (w[i1] - w[i0]);
  return (1.0 - s) * field[i0] + s * field[i1];
}

Eigen::VectorXcd FileProvider::excitation(const PanelTable& table,
                                          double omega) const {
  if (static_cast<int>(table.area.size()) != set_.n_panels())
    throw config_error("pressure file: panel count mismatch with mesh");
  return interp(set_.p_ex, omega);
}

Eigen::VectorXcd FileProvider::radiation(const PanelTable& table,
                                         double omega) const {
  if (static_cast<int>(table.area.size()) != set_.n_panels())
    throw config_error("pressure file: panel count mismatch with mesh");
  return interp(set_.p_rd, omega);
}

PressureSet surrogate_pressure_set(const PanelTable& table,
                                   const std::vector<double>& grid,
                                   const WaterProperties& water,
                                   const SurrogateParams& params) {
  PressureSet set;
  set.source = PressureSource::fk_surrogate;
  set.omegas = grid;
  for (double w : grid) {
    set.p_ex.push_back(fk_pressure(table, w, water));
    set.p_rd.push_back(surrogate_radiation_pressure(table, w, water, params));
  }
  set.validate();
  return set;
}

}  // namespace vsb
