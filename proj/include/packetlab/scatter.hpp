#pragma once

#include <variant>

#include "packetlab/dispersion.hpp"
#include "packetlab/grid.hpp"

namespace packetlab {

struct FreePotential {};

struct RectBarrier1D {
  Real v0 = 0.0;
  Real x_left = 0.0;
  Real x_right = 1.0;
};

struct SphericalWellPotential {
  Real u0 = 1.0;    // depth (> 0), V(r) = -u0 for r < radius
  Real radius = 1.0;
};

// 1D or radial potential description with stationary eigenfunctions
struct ScatterSystem {
  std::variant<FreePotential, RectBarrier1D, SphericalWellPotential> potential;
  UnitSystem units;

  static ScatterSystem free_motion(UnitSystem u = {}) { return {FreePotential{}, u}; }
  static ScatterSystem barrier(Real v0, Real x_left, Real x_right, UnitSystem u = {});

  bool is_free() const { return std::holds_alternative<FreePotential>(potential); }
  const RectBarrier1D* barrier_ptr() const { return std::get_if<RectBarrier1D>(&potential); }
};

// phi(.,E) sampled with its analytic first derivative; for barriers the wave
// is unit-incident-flux normalized and carries the transmission/reflection
// amplitudes
struct StationaryWave {
  ArrayXc value;
  ArrayXc deriv;
  Real energy = 0.0;
  Complex t_amp{1.0, 0.0};
  Complex r_amp{0.0, 0.0};
};

// barrier transmission/reflection amplitudes for unit incident amplitude
struct BarrierAmplitudes {
  Complex t;
  Complex r;
};

BarrierAmplitudes barrier_amplitudes(const ScatterSystem& sys, Real E);

StationaryWave stationary_state(const ScatterSystem& sys, Real E, const Grid& space);

// analytic residual of the stationary equation, piecewise-exact states:
// max over nodes of |-(hbar^2/2mu) phi'' + (V-E) phi| with phi'' taken from
// the closed form (V jumps excluded)
Real stationary_residual(const ScatterSystem& sys, Real E, const Grid& space);

}  // namespace packetlab
