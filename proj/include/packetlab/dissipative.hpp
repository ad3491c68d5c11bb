#pragma once

#include "packetlab/propagate.hpp"

namespace packetlab {

enum class BaseFamily { Traveling, StandingEven };

// the Appendix problem: stationary potential V0, dissipation strength gamma,
// spectral weight g on [0, e_cut], reference energy e_star (snapped to the
// energy grid).  Appendix units hbar = 1, 2m = 1.
struct DissipationScenario {
  ScatterSystem system = ScatterSystem::free_motion(UnitSystem::appendix());
  BaseFamily family = BaseFamily::Traveling;
  Grid egrid;        // nodes in (0, e_cut]
  ArrayXr g;         // real weight, normalized under egrid quadrature
  Grid xgrid;
  Index istar = 0;   // index of e_star in egrid
  Real gamma = 0.0;

  Real e_star() const { return egrid.nodes(istar); }
  Real e_cut() const { return egrid.max(); }
};

// base solutions phi0(E, x) for every energy node (rows = energy nodes)
struct StationaryFamily {
  MatrixXc value;  // n_E x n_x
  MatrixXc deriv;
};

struct AlbrechtTerm {
  Real p_mean = 0.0;
  Real x_mean = 0.0;
  ArrayXr w_a;  // <p> (x - <x>) on the field's space grid
};

struct PerturbedSolution {
  ArrayXc phi0;
  ArrayXc phi1;
  Real residual0 = 0.0;  // analytic residual of the gamma^0 equation
  Real residual1 = 0.0;  // discrete residual of the gamma^1 solve
};

DissipationScenario make_dissipation_scenario(const ScatterSystem& sys, BaseFamily family,
                                              Real e_min, Real e_cut, Index n_e, Index istar,
                                              Real kbar, Real sigma_k, Real x_min, Real x_max,
                                              Index n_x, Real gamma);

StationaryFamily base_family(const DissipationScenario& scn);

// W_A(x) = <p>(x - <x>) from a packet field at one time node
AlbrechtTerm albrecht_term(const PacketField& field, Index time_index = 0);

// the order-gamma^1 source: the sextuple integral of the Albrecht term,
// factorized over (x1, x2) and accumulated over the energy 4-tuples with
// E'' = E* + E1 - E2 + E3 - E4 clamped to the grid support
ArrayXc rhs_order1(const DissipationScenario& scn, const StationaryFamily& base);
ArrayXc rhs_order1_at(const DissipationScenario& scn, const StationaryFamily& base, Index istar);

PerturbedSolution solve_order1(const DissipationScenario& scn, const ArrayXc& rhs);

// residual of the full equation for phi = phi0 + gamma phi1 (all energy
// nodes corrected); exact O(gamma^2) bookkeeping, no finite-difference noise
Real literal_reduction_residual(const DissipationScenario& scn, Real gamma);

// gamma = 0 pipeline must reproduce the stationary equation node-for-node
Real fourier_reduction_residual(const DissipationScenario& scn);

// forward synthesis then inverse transform on the dual time grid recovers
// w_E g(E) phi(E, x)
Real roundtrip_error(const DissipationScenario& scn);

}  // namespace packetlab
