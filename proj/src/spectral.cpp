#include "packetlab/spectral.hpp"

#include <cmath>

namespace packetlab {

SpectralAmplitude make_gaussian_amplitude(Real kbar, Real a, const Grid& kgrid, Dispersion disp) {
  if (!(a > 0)) throw DomainError("gaussian width parameter a must be > 0");
  const Real sigma = 1.0 / (2.0 * a);  // std of |g|^2
  const Real left = kbar - kgrid.min();
  const Real right = kgrid.max() - kbar;
  if (left < 4.0 * sigma || right < 4.0 * sigma)
    throw CoverageError("k-grid covers less than 4 sigma around kbar");

  SpectralAmplitude g;
  g.grid = kgrid;
  g.rep = SpectralAmplitude::Rep::Wavenumber;
  g.dispersion = disp;
  g.values = ((kgrid.nodes - kbar).square() * (-a * a)).exp().cast<Complex>();
  g.values /= g.norm();
  return g;
}

SpectralAmplitude to_energy_rep(const SpectralAmplitude& g) {
  if (g.rep == SpectralAmplitude::Rep::Energy) return g;
  const Index n = g.grid.size();
  if (g.grid.min() <= 0) throw DomainError("k-grid must be positive for the energy representation");
  ArrayXr enodes(n);
  ArrayXc values(n);
  for (Index i = 0; i < n; ++i) {
    const Real k = g.grid.nodes(i);
    enodes(i) = g.dispersion.energy_of_k(k);
    values(i) = g.values(i) / std::sqrt(g.dispersion.dE_dk(k));
  }
  SpectralAmplitude out;
  out.grid = Grid::from_nodes(std::move(enodes));
  out.values = std::move(values);
  out.rep = SpectralAmplitude::Rep::Energy;
  out.dispersion = g.dispersion;
  return out;
}

SpectralAmplitude to_wavenumber_rep(const SpectralAmplitude& g) {
  if (g.rep == SpectralAmplitude::Rep::Wavenumber) return g;
  const Index n = g.grid.size();
  ArrayXr knodes(n);
  ArrayXc values(n);
  for (Index i = 0; i < n; ++i) {
    const Real k = g.dispersion.k_of_energy(g.grid.nodes(i));
    knodes(i) = k;
    values(i) = g.values(i) * std::sqrt(g.dispersion.dE_dk(k));
  }
  SpectralAmplitude out;
  out.grid = Grid::from_nodes(std::move(knodes));
  out.values = std::move(values);
  out.rep = SpectralAmplitude::Rep::Wavenumber;
  out.dispersion = g.dispersion;
  return out;
}

SpectralAmplitude shift_launch_time(const SpectralAmplitude& g, Real t0) {
  SpectralAmplitude out = g;
  const Real hbar = g.dispersion.units.hbar;
  for (Index i = 0; i < g.grid.size(); ++i) {
    const Real E = (g.rep == SpectralAmplitude::Rep::Energy)
                       ? g.grid.nodes(i)
                       : g.dispersion.energy_of_k(g.grid.nodes(i));
    out.values(i) *= std::exp(kI * (E * t0 / hbar));
  }
  return out;
}

SpectralAmplitude translate_origin(const SpectralAmplitude& g, Real x0) {
  SpectralAmplitude out = g;
  for (Index i = 0; i < g.grid.size(); ++i) {
    const Real k = (g.rep == SpectralAmplitude::Rep::Wavenumber)
                       ? g.grid.nodes(i)
                       : g.dispersion.k_of_energy(g.grid.nodes(i));
    out.values(i) *= std::exp(-kI * (k * x0));
  }
  return out;
}

}  // namespace packetlab
