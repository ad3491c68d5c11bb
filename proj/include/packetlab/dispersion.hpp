#pragma once

#include <cmath>

#include "packetlab/errors.hpp"
#include "packetlab/units.hpp"

namespace packetlab {

// E(k), k(E) and the group velocity for the two packet kinds:
//   Massive: E = hbar^2 k^2 / (2 mu),  v = hbar k / mu
//   Photon:  E = hbar c k,             v = c
struct Dispersion {
  enum class Kind { Massive, Photon };

  Kind kind = Kind::Massive;
  UnitSystem units;

  Dispersion() = default;
  Dispersion(Kind k, UnitSystem u) : kind(k), units(u) {}

  static Dispersion massive(UnitSystem u = {}) { return {Kind::Massive, u}; }
  static Dispersion photon(UnitSystem u = {}) { return {Kind::Photon, u}; }

  Real energy_of_k(Real k) const {
    if (kind == Kind::Massive) return units.hbar * units.hbar * k * k / (2.0 * units.mass);
    return units.hbar * units.c * k;
  }

  Real k_of_energy(Real E) const {
    if (E <= 0) throw DomainError("k(E) requires E > 0");
    if (kind == Kind::Massive) return std::sqrt(2.0 * units.mass * E) / units.hbar;
    return E / (units.hbar * units.c);
  }

  Real v_group_of_k(Real k) const {
    if (kind == Kind::Massive) return units.hbar * k / units.mass;
    return units.c;
  }

  Real v_group(Real E) const { return v_group_of_k(k_of_energy(E)); }

  // dE/dk, the Jacobian of the E <-> k representation change
  Real dE_dk(Real k) const {
    if (kind == Kind::Massive) return units.hbar * units.hbar * k / units.mass;
    return units.hbar * units.c;
  }
};

}  // namespace packetlab
