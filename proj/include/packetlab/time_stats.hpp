#pragma once

#include <vector>

#include "packetlab/propagate.hpp"

namespace packetlab {

enum class FluxSign { Plus, Minus, Total };

// normalized weight over a time grid at fixed probe x; FluxTotal may be
// signed when the current changes direction
struct TimeDistribution {
  enum class Kind { FluxPlus, FluxMinus, FluxTotal, Dwell };

  Grid time;
  ArrayXr weights;
  Kind kind = Kind::FluxPlus;
  Real probe = 0.0;
};

struct MomentReport {
  Real mean = 0.0;
  Real variance = 0.0;
  std::vector<Real> higher;  // <t^n>, n = 1..requested
};

struct DwellTimes {
  Real form_a = 0.0;  // space-time integral of rho
  Real form_b = 0.0;  // flux first-moment difference
};

struct UncertaintyProduct {
  Real delta_e = 0.0;
  Real delta_t = 0.0;
  Real product = 0.0;
};

// diagnostics of the energy-representation mean (symmetrized integrand with
// centered differences; the alternative operator ordering and the imaginary
// residue are reported)
struct ERepMean {
  Real mean = 0.0;
  Real alt_mean = 0.0;
  Real imag_residual = 0.0;
};

struct TqEigenReport {
  Real max_rel_residual = 0.0;
  std::vector<Complex> ratio;  // (T psi / psi)(x) per probe
  std::vector<Real> expected;  // x / v
};

TimeDistribution passage_distribution(const PacketField& field, Real x, FluxSign sign);

MomentReport moments(const TimeDistribution& dist, int nmax = 2);

MomentReport mean_passage_time(const PacketField& field, Real x, FluxSign sign);

Real traversal_time(const PacketField& field, Real x_i, Real x_f);
Real reflection_time(const PacketField& field, Real x_i, Real x_f);

DwellTimes dwell_time(const PacketField& field, Real x_i, Real x_f);

UncertaintyProduct uncertainty_product(const SpectralAmplitude& g, const TimeDistribution& dist);

// energy-representation mean passage time at probe x (free or barrier system)
ERepMean e_rep_mean_time(const SpectralAmplitude& g, const ScatterSystem& sys, Real x);

// mean time from the bilinear (two-sided derivative) form
Real bilinear_mean_time(const SpectralAmplitude& g, const ScatterSystem& sys, Real x);

// hamiltonian-form time operator applied spectrally to a plane wave;
// returns the deviation from (x/v) exp(ikx) at the probes
TqEigenReport tq_eigencheck(Real k, const std::vector<Real>& probes, UnitSystem units = {});

}  // namespace packetlab
