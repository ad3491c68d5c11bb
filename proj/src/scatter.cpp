#include "packetlab/scatter.hpp"

#include <cmath>

namespace packetlab {

ScatterSystem ScatterSystem::barrier(Real v0, Real x_left, Real x_right, UnitSystem u) {
  if (!(x_right > x_left)) throw DomainError("barrier needs x_right > x_left");
  return {RectBarrier1D{v0, x_left, x_right}, u};
}

namespace {

// cos(q xi) and sin(q xi)/q as entire functions of q^2 (q may be imaginary)
Complex cos_q(Complex q, Real xi) { return std::cos(q * xi); }

Complex sinc_q(Complex q, Real xi) {
  const Complex w = q * xi;
  if (std::abs(w) < 1e-6) {
    const Complex w2 = w * w;
    return xi * (1.0 - w2 / 6.0 + w2 * w2 / 120.0);
  }
  return std::sin(w) / q;
}

struct BarrierLocal {
  Complex r, t, c1, c2;
  Real k;
  Complex q;
};

BarrierLocal solve_barrier(const ScatterSystem& sys, Real E) {
  const auto& bar = *sys.barrier_ptr();
  const Real hbar = sys.units.hbar, mu = sys.units.mass;
  const Real k = std::sqrt(2.0 * mu * E) / hbar;
  const Complex q = std::sqrt(Complex(2.0 * mu * (E - bar.v0), 0.0)) / hbar;
  const Real w = bar.x_right - bar.x_left;
  const Complex C = cos_q(q, w);
  const Complex S = sinc_q(q, w);
  const Complex q2 = q * q;
  const Complex ik(0.0, k);
  const Complex r = ((k * k - q2) * S) / (2.0 * ik * C + (k * k + q2) * S);
  const Complex t = (1.0 + r) * C + ik * (1.0 - r) * S;
  BarrierLocal out;
  out.r = r;
  out.t = t;
  out.c1 = 1.0 + r;
  out.c2 = ik * (1.0 - r);
  out.k = k;
  out.q = q;
  return out;
}

// value and analytic derivative at a point, unit incident amplitude,
// global phase convention (incident wave exactly exp(ikx))
void barrier_eval(const ScatterSystem& sys, const BarrierLocal& s, Real x, Complex& val,
                  Complex& der) {
  const auto& bar = *sys.barrier_ptr();
  const Complex ik(0.0, s.k);
  const Complex phase_l = std::exp(ik * bar.x_left);
  if (x < bar.x_left) {
    const Complex inc = std::exp(ik * x);
    const Complex ref = s.r * phase_l * phase_l * std::exp(-ik * x);
    val = inc + ref;
    der = ik * inc - ik * ref;
  } else if (x <= bar.x_right) {
    const Real xi = x - bar.x_left;
    const Complex C = cos_q(s.q, xi), S = sinc_q(s.q, xi);
    val = phase_l * (s.c1 * C + s.c2 * S);
    der = phase_l * (-s.q * s.q * s.c1 * S + s.c2 * C);
  } else {
    const Complex tr = s.t * phase_l * std::exp(ik * (x - bar.x_right));
    val = tr;
    der = ik * tr;
  }
}

}  // namespace

BarrierAmplitudes barrier_amplitudes(const ScatterSystem& sys, Real E) {
  if (E <= 0) throw DomainError("stationary state requires E > 0");
  if (!sys.barrier_ptr()) throw KindError("barrier_amplitudes needs a rectangular barrier");
  const BarrierLocal s = solve_barrier(sys, E);
  const auto& bar = *sys.barrier_ptr();
  return {s.t * std::exp(Complex(0.0, s.k * (bar.x_left - bar.x_right))),
          s.r * std::exp(Complex(0.0, 2.0 * s.k * bar.x_left))};
}

StationaryWave stationary_state(const ScatterSystem& sys, Real E, const Grid& space) {
  if (E <= 0) throw DomainError("stationary state requires E > 0");
  StationaryWave out;
  out.energy = E;
  const Index n = space.size();
  out.value.resize(n);
  out.deriv.resize(n);
  const Real hbar = sys.units.hbar, mu = sys.units.mass;

  if (sys.is_free()) {
    const Real k = std::sqrt(2.0 * mu * E) / hbar;
    for (Index i = 0; i < n; ++i) {
      const Complex e = std::exp(Complex(0.0, k * space.nodes(i)));
      out.value(i) = e;
      out.deriv(i) = Complex(0.0, k) * e;
    }
    return out;
  }
  if (const auto* bar = sys.barrier_ptr()) {
    const BarrierLocal s = solve_barrier(sys, E);
    const Real v = hbar * s.k / mu;
    const Real amp = 1.0 / std::sqrt(v);  // unit incident flux
    for (Index i = 0; i < n; ++i) {
      Complex val, der;
      barrier_eval(sys, s, space.nodes(i), val, der);
      out.value(i) = amp * val;
      out.deriv(i) = amp * der;
    }
    const Complex phl = std::exp(Complex(0.0, s.k * bar->x_left));
    out.t_amp = s.t * std::exp(Complex(0.0, s.k * (bar->x_left - bar->x_right)));
    out.r_amp = s.r * phl * phl;
    return out;
  }
  throw KindError("stationary_state supports free and rectangular-barrier systems");
}

Real stationary_residual(const ScatterSystem& sys, Real E, const Grid& space) {
  if (E <= 0) throw DomainError("stationary state requires E > 0");
  const Real hbar = sys.units.hbar, mu = sys.units.mass;
  const Real h = 5e-4;

  auto value_at = [&](Real x) -> Complex {
    if (sys.is_free()) {
      const Real k = std::sqrt(2.0 * mu * E) / hbar;
      return std::exp(Complex(0.0, k * x));
    }
    const BarrierLocal s = solve_barrier(sys, E);
    Complex val, der;
    barrier_eval(sys, s, x, val, der);
    return val;
  };
  auto v_of = [&](Real x) -> Real {
    if (const auto* bar = sys.barrier_ptr())
      return (x >= bar->x_left && x <= bar->x_right) ? bar->v0 : 0.0;
    return 0.0;
  };

  Real worst = 0.0, scale = 0.0;
  for (Index i = 0; i < space.size(); ++i) {
    const Real x = space.nodes(i);
    if (const auto* bar = sys.barrier_ptr())
      if (std::abs(x - bar->x_left) < 3 * h || std::abs(x - bar->x_right) < 3 * h) continue;
    const Complex f0 = value_at(x);
    // five-point second derivative
    const Complex d2 = (-value_at(x - 2 * h) + 16.0 * value_at(x - h) - 30.0 * f0 +
                        16.0 * value_at(x + h) - value_at(x + 2 * h)) /
                       (12.0 * h * h);
    const Complex res = -hbar * hbar / (2.0 * mu) * d2 + (v_of(x) - E) * f0;
    worst = std::max(worst, std::abs(res));
    scale = std::max(scale, std::abs(f0));
  }
  return scale > 0 ? worst / (scale * std::max(E, 1.0)) : 0.0;
}

}  // namespace packetlab
