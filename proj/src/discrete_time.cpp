#include "packetlab/discrete_time.hpp"

#include <cmath>

namespace packetlab {

namespace {
// real-valued gcd of two positive spacings by continued-fraction reduction
// of their ratio; a candidate divisor is accepted only if both multipliers
// are integral within eps_d
Real gcd2(Real a, Real b, Real eps_d, long cap) {
  const Real hi = std::max(a, b), lo = std::min(a, b);
  const Real r = hi / lo;
  // continued-fraction convergents of r
  Real x = r;
  long h_prev = 1, h = static_cast<long>(std::floor(x));
  long k_prev = 0, k = 1;
  for (int it = 0; it < 64; ++it) {
    const Real err = std::abs(r * static_cast<Real>(k) -
                              std::round(r * static_cast<Real>(k)));
    if (err <= eps_d * static_cast<Real>(std::max<long>(1, 1))) {
      const Real d = lo / static_cast<Real>(k);
      if (std::llround(hi / d) <= cap && std::llround(lo / d) <= cap) return d;
    }
    const Real frac = x - std::floor(x);
    if (frac <= 0) break;
    x = 1.0 / frac;
    const long ai = static_cast<long>(std::floor(x));
    const long h_next = ai * h + h_prev;
    const long k_next = ai * k + k_prev;
    h_prev = h; h = h_next;
    k_prev = k; k = k_next;
    if (k > cap) break;
  }
  throw NoCycleError("level spacings are incommensurate at the requested tolerance");
}
}  // namespace

PoincareCycle poincare_period(const ArrayXr& levels, UnitSystem units, Real eps_d,
                              long denominator_cap) {
  if (levels.size() < 2) throw DomainError("poincare_period needs at least two levels");
  std::vector<Real> spacings;
  for (Index i = 1; i < levels.size(); ++i) {
    const Real d = levels(i) - levels(0);
    if (d < 0) throw DomainError("levels must be sorted ascending");
    if (d > 0) spacings.push_back(d);
  }
  if (spacings.empty()) throw DomainError("all levels coincide; no cycle");

  Real d = spacings[0];
  for (size_t i = 1; i < spacings.size(); ++i) d = gcd2(d, spacings[i], eps_d, denominator_cap);
  // final validation: every spacing an integer multiple of d within eps_d
  for (const Real s : spacings) {
    const Real m = s / d;
    if (std::abs(m - std::round(m)) > eps_d ||
        std::llround(m) > denominator_cap)
      throw NoCycleError("level spacings are incommensurate at the requested tolerance");
  }
  PoincareCycle cyc;
  cyc.divisor = d;
  cyc.period = 2.0 * std::numbers::pi * units.hbar / d;
  return cyc;
}

DiscreteSpectrumState make_discrete_state(ArrayXr levels, ArrayXc amplitudes, UnitSystem units,
                                          Real eps_d) {
  if (levels.size() != amplitudes.size())
    throw ShapeError("levels and amplitudes must have equal length");
  const Real norm2 = amplitudes.abs2().sum();
  if (std::abs(norm2 - 1.0) > 1e-8)
    throw NormalizationError("discrete amplitudes must satisfy sum |g_n|^2 = 1");
  DiscreteSpectrumState st;
  st.cycle = poincare_period(levels, units, eps_d);
  st.levels = std::move(levels);
  st.amplitudes = std::move(amplitudes);
  st.units = units;
  return st;
}

Complex DiscreteSpectrumState::psi_t(Real t) const {
  // the ground-level phase exp(-i eps_0 t / hbar) is dropped
  Complex acc = 0.0;
  for (Index n = 0; n < levels.size(); ++n)
    acc += amplitudes(n) * std::exp(Complex(0.0, -(levels(n) - levels(0)) * t / units.hbar));
  return acc;
}

Real sawtooth_eval(Real t, Real period) {
  if (!(period > 0)) throw DomainError("saw-tooth needs a positive period");
  // closed form of the literal step sums, Theta(0) = 1:
  // number of steps passed on each side of t = 0
  const Real u = t / period;
  const auto steps = [](Real w) {
    const Real m = std::floor(w - 0.5) + 1.0;
    return m > 0 ? m : 0.0;
  };
  return t - period * steps(u) + period * steps(-u);
}

SawToothReport discrete_uncertainty(const DiscreteSpectrumState& state, Real gamma_c,
                                    Index n_quad) {
  const Real T = state.cycle.period;
  if (!(std::abs(gamma_c) < T / 2)) throw DomainError("|gamma_c| must be below T/2");
  const Real hbar = state.units.hbar;

  const Grid tg = Grid::uniform(-T / 2 + gamma_c, T / 2 + gamma_c, n_quad);
  ArrayXr w(n_quad), saw(n_quad);
  for (Index i = 0; i < n_quad; ++i) {
    w(i) = std::norm(state.psi_t(tg.nodes(i)));
    saw(i) = sawtooth_eval(tg.nodes(i), T);
  }
  const Real wtot = integrate(tg, w);
  const Real t_mean = integrate(tg, ArrayXr(saw * w)) / wtot;
  const Real t_var = integrate(tg, ArrayXr((saw - t_mean).square() * w)) / wtot;

  const ArrayXr eps = state.levels - state.levels(0);
  const ArrayXr pop = state.amplitudes.abs2();
  const Real e_mean = (eps * pop).sum();
  const Real e_var = ((eps - e_mean).square() * pop).sum();

  SawToothReport rep;
  rep.gamma_c = gamma_c;
  rep.t_mean = t_mean;
  rep.t_var = t_var;
  rep.product = e_var * t_var;
  rep.rhs_bound = hbar * hbar * (1.0 - T * std::norm(state.psi_t(T / 2 + gamma_c)) / wtot);
  return rep;
}

Real autocorrelation_peak(const DiscreteSpectrumState& state, Real t_guess, Real window,
                          Index n_scan) {
  const Grid tg = Grid::uniform(t_guess - window, t_guess + window, n_scan);
  Index best = 0;
  Real best_v = -1.0;
  for (Index i = 0; i < n_scan; ++i) {
    const Real v = std::abs(state.psi_t(tg.nodes(i)));
    if (v > best_v) { best_v = v; best = i; }
  }
  if (best == 0 || best == n_scan - 1) return tg.nodes(best);
  // parabolic refinement
  const Real vm = std::abs(state.psi_t(tg.nodes(best - 1)));
  const Real vp = std::abs(state.psi_t(tg.nodes(best + 1)));
  const Real h = tg.step();
  const Real denom = vm - 2 * best_v + vp;
  if (denom == 0) return tg.nodes(best);
  return tg.nodes(best) + 0.5 * h * (vm - vp) / denom;
}

}  // namespace packetlab
