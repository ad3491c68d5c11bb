#pragma once

#include "packetlab/dispersion.hpp"
#include "packetlab/grid.hpp"

namespace packetlab {

// complex weight g on an energy or wavenumber grid; defines a packet
struct SpectralAmplitude {
  enum class Rep { Energy, Wavenumber };

  Grid grid;
  ArrayXc values;
  Rep rep = Rep::Wavenumber;
  Dispersion dispersion;

  Real norm() const { return std::sqrt(integrate(grid, values.abs2())); }
};

inline constexpr Real kNormTol = 1e-8;  // eps_norm

// Gaussian family A exp(-a^2 (k - kbar)^2), normalized under the grid
// quadrature.  sigma of |g|^2 is 1/(2a).
SpectralAmplitude make_gaussian_amplitude(Real kbar, Real a, const Grid& kgrid,
                                          Dispersion disp = Dispersion::massive());

// representation change with the Jacobian dE = (hbar^2 k / mu) dk
SpectralAmplitude to_energy_rep(const SpectralAmplitude& g);
SpectralAmplitude to_wavenumber_rep(const SpectralAmplitude& g);

// launch transforms (pure phases)
SpectralAmplitude shift_launch_time(const SpectralAmplitude& g, Real t0);
SpectralAmplitude translate_origin(const SpectralAmplitude& g, Real x0);

}  // namespace packetlab
