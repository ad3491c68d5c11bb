#pragma once

#include "packetlab/scatter.hpp"
#include "packetlab/spectral.hpp"

namespace packetlab {

// sampled complex field on a space-time grid with derived density and flux;
// for the photon mode rho holds the (normalized) energy density S0 and flux
// the energy flux S_x
struct PacketField {
  Grid space;
  Grid time;
  MatrixXc psi;    // n_x rows, n_t columns
  MatrixXr rho;
  MatrixXr flux;
  Dispersion dispersion;

  Index nx() const { return space.size(); }
  Index nt() const { return time.size(); }
};

// Psi(x,t) = int g phi(x,E) exp(-iEt/hbar) over the spectral grid
PacketField synthesize(const SpectralAmplitude& g, const ScatterSystem& sys, const Grid& space,
                       const Grid& time, int threads = 0);

// scalar 1D photon mode: rho = normalized energy density, flux = energy flux
PacketField synthesize_photon(const SpectralAmplitude& chi, const Grid& space, const Grid& time,
                              int threads = 0);

// j(x,t) at a probe (linear interpolation in x)
ArrayXr flux_at(const PacketField& field, Real x);
ArrayXr rho_at(const PacketField& field, Real x);

// sign-split currents j+ >= 0, j- <= 0 with j+ + j- = j at every node
std::pair<ArrayXr, ArrayXr> flux_split(const PacketField& field, Real x);

// max interior node of |d rho/dt + d j/dx| by centered differences
Real continuity_residual(const PacketField& field);

// int rho dx at one time node
Real norm_in_x(const PacketField& field, Index time_index);

int default_thread_count();
void set_default_thread_count(int n);

}  // namespace packetlab
