#pragma once

#include <vector>

#include "packetlab/grid.hpp"
#include "packetlab/units.hpp"

namespace packetlab {

struct PoincareCycle {
  Real divisor = 0.0;  // maximum common divisor D of the level spacings
  Real period = 0.0;   // T = 2 pi hbar / D
};

// packet over a discrete spectrum: amplitudes g_n at levels eps_n, with the
// ground-level phase dropped
struct DiscreteSpectrumState {
  ArrayXr levels;
  ArrayXc amplitudes;
  PoincareCycle cycle;
  UnitSystem units;

  Complex psi_t(Real t) const;  // sum g_n exp(-i (eps_n - eps_0) t / hbar)
};

struct SawToothReport {
  Real t_mean = 0.0;
  Real t_var = 0.0;
  Real product = 0.0;    // (dE)^2 (dt)^2
  Real rhs_bound = 0.0;  // hbar^2 [1 - T |psi(T/2+gamma_c)|^2 / int |psi|^2 dt]
  Real gamma_c = 0.0;
};

PoincareCycle poincare_period(const ArrayXr& levels, UnitSystem units = {}, Real eps_d = 1e-9,
                              long denominator_cap = 1000000);

DiscreteSpectrumState make_discrete_state(ArrayXr levels, ArrayXc amplitudes, UnitSystem units = {},
                                          Real eps_d = 1e-9);

// Periodic saw-tooth, period T, equal to t on (-T/2, T/2), jumps of -T at odd
// half-periods.  Evaluated from the literal step sums.
Real sawtooth_eval(Real t, Real period);

SawToothReport discrete_uncertainty(const DiscreteSpectrumState& state, Real gamma_c,
                                    Index n_quad = 20001);

// location of the first |<psi(0)|psi(t)>| = |psi(t)| recurrence peak near the
// candidate period (quasi-cycle diagnostic)
Real autocorrelation_peak(const DiscreteSpectrumState& state, Real t_guess, Real window,
                          Index n_scan = 20001);

}  // namespace packetlab
