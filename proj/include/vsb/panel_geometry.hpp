#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "vsb/shell_modal.hpp"

namespace vsb {

struct Panel {
  double phi_c;            // centroid colatitude (rad)
  double theta_c;          // centroid azimuth (rad)
  double area;             // m^2
  Eigen::Vector3d normal;  // outward unit normal, body axes
  double psi;              // angle between s3 and the normal (rad)
  double z_body;           // centroid vertical offset from buoy center (m)
};

// Axisymmetric panelization of the sphere: rings at phi midpoints, uniform
// in phi and theta, ordered ring-major. Deterministic for identical inputs.
class PanelMesh {
 public:
  PanelMesh() = default;
  PanelMesh(double r, int n_phi, int n_theta, std::vector<Panel> panels)
      : r_(r), n_phi_(n_phi), n_theta_(n_theta), panels_(std::move(panels)) {}

  double r() const { return r_; }
  int n_phi() const { return n_phi_; }
  int n_theta() const { return n_theta_; }
  int size() const { return static_cast<int>(panels_.size()); }
  const std::vector<Panel>& panels() const { return panels_; }
  const Panel& panel(int i) const { return panels_[i]; }

 private:
  double r_ = 0.0;
  int n_phi_ = 0;
  int n_theta_ = 0;
  std::vector<Panel> panels_;
};

PanelMesh mesh_sphere(double r, int n_phi, int n_theta);

// CSV round trip: header `index,phi_c,theta_c,area,nx,ny,nz`, 17 significant
// digits, byte-stable.
void write_mesh_csv(const PanelMesh& mesh, const std::string& path);
PanelMesh read_mesh_csv(const std::string& path);

// Mode-shape samples at the panel centroids, cached once per (mesh, basis).
struct BasisSamples {
  std::vector<Eigen::RowVectorXd> psi_phi;   // tangential component per panel
  std::vector<Eigen::RowVectorXd> psi_r;     // radial component per panel
  std::vector<Eigen::RowVectorXd> dpsi_phi;  // d(psi_phi)/dphi per panel
  std::vector<Eigen::RowVectorXd> dpsi_r;    // d(psi_r)/dphi per panel
};

BasisSamples sample_basis(const PanelMesh& mesh, const ModalBasis& basis);

// Heave-plus-modal state as used by the geometry queries: x = [r_sa3; eta].
struct GenCoords {
  double heave = 0.0;
  Eigen::VectorXd eta;  // N modal coordinates
};

// Inertial positions of the deformed panel centroids (heave only, no CG
// rotations).
std::vector<Eigen::Vector3d> deformed_positions(const PanelMesh& mesh,
                                                const ModalBasis& basis,
                                                const BasisSamples& samples,
                                                const GenCoords& x);

// Per-panel projection vector b = [cos psi; c3.Phi_e(:,1); ...], plus the
// vertical row [1 | (C_se Phi_e)(3,:)] that every generalized coefficient
// shares. On the undeformed geometry c3 is radial so c3.Phi_e(:,k) =
// Psi_r_k(phi_c).
struct PanelTable {
  // geometry snapshot the vectors were built from
  std::vector<double> area;            // per panel (m^2)
  std::vector<double> cos_psi;         // per panel
  std::vector<double> z_inertial;      // deformed centroid vertical (m)
  std::vector<double> x_body;          // deformed centroid horizontal (m)
  std::vector<Eigen::VectorXd> b;      // (N+1) projection vector
  std::vector<Eigen::RowVectorXd> zrow;  // (N+1) vertical row of Eq. 65_3's form
};

std::vector<Eigen::VectorXd> projection_vectors(const PanelMesh& mesh,
                                                const ModalBasis& basis);

// Undeformed table (radial normals, nominal areas) used by one-way FSI and
// all coefficient assemblies at x = 0.
PanelTable undeformed_table(const PanelMesh& mesh, const ModalBasis& basis,
                            const BasisSamples& samples);

// Two-way table: areas, normals and psi recomputed from the deformed ring
// geometry (analytic meridian derivatives, small-deformation kinematics).
PanelTable deformed_table(const PanelMesh& mesh, const ModalBasis& basis,
                          const BasisSamples& samples, const GenCoords& x);

// Panels whose deformed centroid lies below the free surface. Errors when
// the buoy is fully dry or fully wet (outside the linear regime).
std::vector<int> wetted_panels(const PanelMesh& mesh, const ModalBasis& basis,
                               const BasisSamples& samples, const GenCoords& x,
                               double free_surface_z);
std::vector<int> wetted_panels(const PanelTable& table, double free_surface_z);

}  // namespace vsb
