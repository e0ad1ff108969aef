#include "vsb/panel_geometry.hpp"

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

PanelMesh mesh_sphere(double r, int n_phi, int n_theta) {
  if (r <= 0.0) throw config_error("mesh_sphere: r must be > 0");
  if (n_phi < 8 || n_theta < 8)
    throw config_error("mesh_sphere: n_phi and n_theta must be >= 8");
  const double dphi = kPi / n_phi;
  const double dtheta = 2.0 * kPi / n_theta;
  std::vector<Panel> panels;
  panels.reserve(static_cast<size_t>(n_phi) * n_theta);
  for (int i = 0; i < n_phi; ++i) {
    const double phi = (i + 0.5) * dphi;
    const double sp = std::sin(phi);
    const double cp = std::cos(phi);
    const double area = r * r * dphi * dtheta * sp;
    for (int j = 0; j < n_theta; ++j) {
      const double theta = (j + 0.5) * dtheta;
      Panel p;
      p.phi_c = phi;
      p.theta_c = theta;
      p.area = area;
      p.normal = Eigen::Vector3d(sp * std::cos(theta), sp * std::sin(theta), cp);
      p.psi = phi;
      p.z_body = r * cp;
      panels.push_back(p);
    }
  }
  return PanelMesh(r, n_phi, n_theta, std::move(panels));
}

void write_mesh_csv(const PanelMesh& mesh, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw io_error("write_mesh_csv: cannot open " + path);
  out << "index,phi_c,theta_c,area,nx,ny,nz\n";
  for (int i = 0; i < mesh.size(); ++i) {
    const Panel& p = mesh.panel(i);
    out << i << ',' << fmt17(p.phi_c) << ',' << fmt17(p.theta_c) << ','
        << fmt17(p.area) << ',' << fmt17(p.normal.x()) << ','
        << fmt17(p.normal.y()) << ',' << fmt17(p.normal.z()) << '\n';
  }
}

PanelMesh read_mesh_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw io_error("read_mesh_csv: cannot open " + path);
  std::string line;
  if (!std::getline(in, line) || line != "index,phi_c,theta_c,area,nx,ny,nz")
    throw io_error("read_mesh_csv: missing or malformed header in " + path);
  std::vector<Panel> panels;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    for (char& c : line)
      if (c == ',') c = ' ';
    std::istringstream row(line);
    int idx;
    Panel p;
    if (!(row >> idx >> p.phi_c >> p.theta_c >> p.area >> p.normal.x() >>
          p.normal.y() >> p.normal.z()))
      throw io_error("read_mesh_csv: malformed row in " + path);
    p.psi = std::acos(std::clamp(p.normal.z(), -1.0, 1.0));
    p.z_body = 0.0;  // filled from r below
    panels.push_back(p);
  }
  if (panels.empty()) throw io_error("read_mesh_csv: no panels in " + path);
  int n_theta = 0;
  while (n_theta < static_cast<int>(panels.size()) &&
         panels[n_theta].phi_c == panels[0].phi_c)
    ++n_theta;
  if (n_theta == 0 || panels.size() % n_theta != 0)
    throw io_error("read_mesh_csv: panel rows do not form rings in " + path);
  const int n_phi = static_cast<int>(panels.size()) / n_theta;
  const double dphi = kPi / n_phi;
  const double dtheta = 2.0 * kPi / n_theta;
  const double r =
      std::sqrt(panels[0].area / (dphi * dtheta * std::sin(panels[0].phi_c)));
  for (Panel& p : panels) p.z_body = r * std::cos(p.phi_c);
  return PanelMesh(r, n_phi, n_theta, std::move(panels));
}

BasisSamples sample_basis(const PanelMesh& mesh, const ModalBasis& basis) {
  if (std::abs(mesh.r() - basis.props().r) > 1e-12 * basis.props().r)
    throw config_error("sample_basis: mesh and basis radius differ");
  const int N = basis.size();
  const double A = basis.amplitude();
  BasisSamples s;
  s.psi_phi.resize(mesh.size());
  s.psi_r.resize(mesh.size());
  s.dpsi_phi.resize(mesh.size());
  s.dpsi_r.resize(mesh.size());
  for (int i = 0; i < mesh.size(); ++i) {
    const double phi = mesh.panel(i).phi_c;
    Eigen::RowVectorXd pphi, pr;
    basis.eval(phi, pphi, pr);
    s.psi_phi[i] = pphi;
    s.psi_r[i] = pr;
    Eigen::RowVectorXd dphi_row(N), dr_row(N);
    const double cot = std::cos(phi) / std::sin(phi);
    for (int k = 0; k < N; ++k) {
      auto [pk, dpk] = legendre_pair(k, phi);
      dphi_row(k) = A * (-cot * dpk - static_cast<double>(k) * (k + 1) * pk);
      dr_row(k) = A * basis.radial_factor(k) * dpk;
    }
    s.dpsi_phi[i] = dphi_row;
    s.dpsi_r[i] = dr_row;
  }
  return s;
}

std::vector<Eigen::Vector3d> deformed_positions(const PanelMesh& mesh,
                                                const ModalBasis& basis,
                                                const BasisSamples& samples,
                                                const GenCoords& x) {
  if (x.eta.size() != basis.size())
    throw config_error("deformed_positions: eta length does not match basis");
  const double r = mesh.r();
  std::vector<Eigen::Vector3d> pos(mesh.size());
  for (int i = 0; i < mesh.size(); ++i) {
    const Panel& p = mesh.panel(i);
    const double sp = std::sin(p.phi_c), cp = std::cos(p.phi_c);
    const double st = std::sin(p.theta_c), ct = std::cos(p.theta_c);
    const double u = samples.psi_phi[i].dot(x.eta);
    const double v = samples.psi_r[i].dot(x.eta);
    const Eigen::Vector3d e1(cp * ct, cp * st, -sp);
    const Eigen::Vector3d e3(sp * ct, sp * st, cp);
    pos[i] = r * e3 + u * e1 + v * e3 + Eigen::Vector3d(0.0, 0.0, x.heave);
  }
  return pos;
}

std::vector<Eigen::VectorXd> projection_vectors(const PanelMesh& mesh,
                                                const ModalBasis& basis) {
  const BasisSamples samples = sample_basis(mesh, basis);
  const int N = basis.size();
  std::vector<Eigen::VectorXd> b(mesh.size());
  for (int i = 0; i < mesh.size(); ++i) {
    Eigen::VectorXd bi(N + 1);
    bi(0) = std::cos(mesh.panel(i).psi);
    bi.tail(N) = samples.psi_r[i].transpose();
    b[i] = bi;
  }
  return b;
}

PanelTable undeformed_table(const PanelMesh& mesh, const ModalBasis& basis,
                            const BasisSamples& samples) {
  const int N = basis.size();
  const int m = mesh.size();
  PanelTable t;
  t.area.resize(m);
  t.cos_psi.resize(m);
  t.z_inertial.resize(m);
  t.x_body.resize(m);
  t.b.resize(m);
  t.zrow.resize(m);
  for (int i = 0; i < m; ++i) {
    const Panel& p = mesh.panel(i);
    const double sp = std::sin(p.phi_c), cp = std::cos(p.phi_c);
    t.area[i] = p.area;
    t.cos_psi[i] = cp;
    t.z_inertial[i] = p.z_body;
    t.x_body[i] = mesh.r() * sp * std::cos(p.theta_c);
    Eigen::VectorXd bi(N + 1);
    bi(0) = cp;
    bi.tail(N) = samples.psi_r[i].transpose();
    t.b[i] = bi;
    Eigen::RowVectorXd zi(N + 1);
    zi(0) = 1.0;
    zi.tail(N) = cp * samples.psi_r[i] - sp * samples.psi_phi[i];
    t.zrow[i] = zi;
  }
  return t;
}

PanelTable deformed_table(const PanelMesh& mesh, const ModalBasis& basis,
                          const BasisSamples& samples, const GenCoords& x) {
  if (x.eta.size() != basis.size())
    throw config_error("deformed_table: eta length does not match basis");
  const int N = basis.size();
  const int m = mesh.size();
  const double r = mesh.r();
  const double dphi = kPi / mesh.n_phi();
  const double dtheta = 2.0 * kPi / mesh.n_theta();
  PanelTable t;
  t.area.resize(m);
  t.cos_psi.resize(m);
  t.z_inertial.resize(m);
  t.x_body.resize(m);
  t.b.resize(m);
  t.zrow.resize(m);
  for (int i = 0; i < m; ++i) {
    const Panel& p = mesh.panel(i);
    const double sp = std::sin(p.phi_c), cp = std::cos(p.phi_c);
    const double u = samples.psi_phi[i].dot(x.eta);
    const double v = samples.psi_r[i].dot(x.eta);
    const double du = samples.dpsi_phi[i].dot(x.eta);
    const double dv = samples.dpsi_r[i].dot(x.eta);
    // Meridian curve of the deformed surface of revolution and its analytic
    // phi-derivatives.
    const double rho = r * sp + u * cp + v * sp;
    const double drho = r * cp + du * cp - u * sp + dv * sp + v * cp;
    const double zb = r * cp - u * sp + v * cp;
    const double dzb = -r * sp - du * sp - u * cp + dv * cp - v * sp;
    const double len = std::hypot(drho, dzb);
    const double n_cyl = -dzb / len;
    const double n_z = drho / len;
    const double psi = std::atan2(n_cyl, n_z);
    t.area[i] = rho * dtheta * len * dphi;
    t.cos_psi[i] = n_z;
    t.z_inertial[i] = zb + x.heave;
    t.x_body[i] = rho * std::cos(p.theta_c);
    const double spsi = std::sin(psi - p.phi_c);
    const double cpsi = std::cos(psi - p.phi_c);
    Eigen::VectorXd bi(N + 1);
    bi(0) = n_z;
    bi.tail(N) = (spsi * samples.psi_phi[i] + cpsi * samples.psi_r[i]).transpose();
    t.b[i] = bi;
    Eigen::RowVectorXd zi(N + 1);
    zi(0) = 1.0;
    zi.tail(N) = cp * samples.psi_r[i] - sp * samples.psi_phi[i];
    t.zrow[i] = zi;
  }
  return t;
}

std::vector<int> wetted_panels(const PanelTable& table, double free_surface_z) {
  std::vector<int> wet;
  const int m = static_cast<int>(table.z_inertial.size());
  for (int i = 0; i < m; ++i)
    if (table.z_inertial[i] < free_surface_z) wet.push_back(i);
  if (wet.empty()) throw numeric_error("wetted_panels: buoy is fully dry");
  if (static_cast<int>(wet.size()) == m)
    throw numeric_error("wetted_panels: buoy is fully submerged");
  return wet;
}

std::vector<int> wetted_panels(const PanelMesh& mesh, const ModalBasis& basis,
                               const BasisSamples& samples, const GenCoords& x,
                               double free_surface_z) {
  const auto pos = deformed_positions(mesh, basis, samples, x);
  std::vector<int> wet;
  for (int i = 0; i < mesh.size(); ++i)
    if (pos[i].z() < free_surface_z) wet.push_back(i);
  if (wet.empty()) throw numeric_error("wetted_panels: buoy is fully dry");
  if (static_cast<int>(wet.size()) == mesh.size())
    throw numeric_error("wetted_panels: buoy is fully submerged");
  return wet;
}

}  // namespace vsb
