#pragma once

#include <array>

#include "packetlab/grid.hpp"

namespace packetlab {

// momentum-space spin-zero packet under the invariant measure d^3p / p0,
// p0 = sqrt(p^2 + m0^2).  Values live on a tensor grid (axis-major order:
// index = (ix * ny + iy) * nz + iz).
struct KGPacket {
  std::array<Grid, 3> axes;
  ArrayXc values;
  Real m0 = 1.0;
  bool radial_symmetric = false;  // isotropic fast-path marker

  Index size() const { return values.size(); }
  Index nx() const { return axes[0].size(); }
  Index ny() const { return axes[1].size(); }
  Index nz() const { return axes[2].size(); }
  Index flat(Index ix, Index iy, Index iz) const { return (ix * ny() + iy) * nz() + iz; }

  Real p0(Real px, Real py, Real pz) const {
    return std::sqrt(px * px + py * py + pz * pz + m0 * m0);
  }

  Real norm() const;  // sqrt of int (d^3p / p0) |Phi|^2
};

struct LocalizationReport {
  Vector3r x_nw = Vector3r::Zero();
  Vector3r y_size = Vector3r::Zero();
  Vector3r delta_alpha = Vector3r::Zero();
  Vector3r delta_beta = Vector3r::Zero();
  Matrix3r correlation_lhs = Matrix3r::Zero();
  Matrix3r correlation_rhs = Matrix3r::Zero();
};

struct NWCrossCheck {
  Vector3r bilinear = Vector3r::Zero();     // (i/2) two-sided derivative form
  std::array<Complex, 3> single_op{};       // <i d/dp_j - (i/2) p_j / p0^2>
};

struct EllipsoidCrossCheck {
  Vector3r by_parts = Vector3r::Zero();     // (1/2) <p_j / p0^2>
  Vector3r direct = Vector3r::Zero();       // (i/2) int (d^3p/p0) d_j |Phi|^2  (real part)
};

struct CommutatorCheck {
  Real max_rel_residual = 0.0;
  Complex lhs_expect{};
  Complex rhs_expect{};
};

// normalized Gaussian packet exp(-sum (p-pbar)^2/(4 sigma^2)) exp(-i p.x0)
KGPacket make_kg_gaussian(Real m0, const Vector3r& pbar, const Vector3r& sigma, const Vector3r& x0,
                          const std::array<Grid, 3>& axes);

Vector3r nw_mean_position(const KGPacket& pkt);
NWCrossCheck nw_cross_check(const KGPacket& pkt);

Vector3r ellipsoid_sizes(const KGPacket& pkt);
EllipsoidCrossCheck ellipsoid_cross_check(const KGPacket& pkt);

// lhs(i,j) = dalpha_i dbeta_j; rhs(i,j) = (1/4) |<(1/p0^2)(delta_ij - 2 p_i p_j / p0^2)>|
LocalizationReport uncertainty_correlations(const KGPacket& pkt);

// [x_h,i , beta_j] on the packet via nested differences vs the closed form
CommutatorCheck commutator_check(const KGPacket& pkt, int i, int j);

// <i d/dp> under the invariant measure (complex; real part = NW, imag = sizes)
std::array<Complex, 3> plain_gradient_expectation(const KGPacket& pkt);

}  // namespace packetlab
