#pragma once

#include <functional>
#include <vector>

#include "packetlab/grid.hpp"
#include "packetlab/units.hpp"

namespace packetlab {

// attractive spherical well U(r) = -u0 for r < a; k = sqrt(2mE)/hbar,
// K = sqrt(2m(E+u0))/hbar.  Default units put 2m = 1 (hbar = 1).
struct SphericalWell {
  Real u0 = 2.0;
  Real a = 1.0;
  Real mass = 0.5;
  Real hbar = 1.0;

  Real k_of(Real E) const { return std::sqrt(2.0 * mass * E) / hbar; }
  Real K_of(Real E) const { return std::sqrt(2.0 * mass * (E + u0)) / hbar; }
};

// Lorentzian exploring channel: <k00|phi> ~ sqrt(2b)/(k^2+b^2),
// reduced radial u_phi(r) = sqrt(2b) exp(-b r)
struct ExploringState {
  Real b = 1.0;
};

struct ResonanceSolution {
  Real e_r = 0.0;       // Re(E)
  Real gamma0 = 0.0;    // half-width, > 0 (E = e_r - i gamma0)
  Real b = 0.0;
  Real residual = 0.0;  // |1 + i alpha <phi|(E-H)^-1|phi>|
  int iterations = 0;
};

struct ExploringSolution {
  Real b = 0.0;
  Real e_r = 0.0;
  Real K = 0.0;  // interior wavenumber, K a = (n + 1/2) pi
};

// channel-resolved spectral data of the well (s-wave)
struct WellChannel {
  SphericalWell well;
  ExploringState phi;
  Grid kgrid;               // continuum quadrature axis in k
  std::vector<Real> bound_energies;
  std::vector<Real> bound_overlap2;  // |<phi|u_b>|^2
  ArrayXr rho_k;            // |<phi|u_E>|^2 dE/dk  on kgrid (energy-normalized u_E)

  // G(z) = <phi|(z - H)^{-1}|phi>, first sheet
  Complex green(Complex z) const;
  Complex green_derivative(Complex z) const;
  Real rho_of_e(Real E) const;        // spectral density |<phi|u_E>|^2
  Real re_green_axis(Real E) const;   // Re G(E + i0) with PV subtraction
};

WellChannel make_channel(const SphericalWell& well, const ExploringState& phi, Real k_max = 60.0,
                         Index n_k = 40000, Real r_max_factor = 25.0, Index n_r = 3000);

// s-wave background phase of the full well, continuous in E from threshold
Real phase_shift_l0(const SphericalWell& well, Real E);

// QHQ-projected continuum at energy E: coupling c = <phi|H|chi_E> (chi
// energy-normalized) and the projected background phase
struct QhqContinuum {
  Real coupling = 0.0;     // c; lambda0 = pi c^2
  Real delta_ring = 0.0;   // background phase of QHQ
};
QhqContinuum qhq_continuum(const WellChannel& ch, Real E);

struct ResonanceFactor {
  Complex f0{1.0, 0.0};
  Real lambda0 = 0.0;
  Real e_phi = 0.0;       // E - Re[1/G(E+i0)]
  bool degenerate = false;  // lambda0 = 0 flag
};
ResonanceFactor resonance_factor(const WellChannel& ch, Real E);

// continuous resonant phase arg F0 / 2 = atan2(lambda0, e_phi - E) in (0, pi)
Real resonant_phase(const WellChannel& ch, Real E);

// the low-energy system of Sec. 4.5: bracketing + bisection on the real part
// of the dispersion relation with the free-resolvent channel integral,
// resonance positions pinned by cos(Ka) = 0
ExploringSolution solve_exploring_state(const SphericalWell& well, int n);

// complex eigenvalue of H - i alpha |phi><phi| via damped Newton on the
// dispersion relation; guess in the lower half-plane
ResonanceSolution complex_pole(const WellChannel& ch, Real alpha, Complex guess,
                               Real tol = 1e-10, int max_iter = 200);

// A(t) = int rho(E) exp(-i E t / hbar) dE on [0, e_max]
ArrayXc survival_amplitude(const std::function<Real(Real)>& spectral_density, Real e_max,
                           const Grid& tgrid, Real hbar = 1.0, Index n_e = 40000);

// log-linear fit of |A| over the window |A|/|A(0)| in [hi, lo]; returns decay rate
Real fitted_decay_rate(const Grid& tgrid, const ArrayXc& amplitude, Real hi = 0.9, Real lo = 0.1);

}  // namespace packetlab
