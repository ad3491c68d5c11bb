#include "packetlab/time_stats.hpp"

#include <cmath>

namespace packetlab {

namespace {
constexpr Real kFluxFloor = 1e-12;  // relative floor declaring a directed flux empty

ArrayXr directed_flux(const PacketField& field, Real x, FluxSign sign) {
  const ArrayXr j = flux_at(field, x);
  switch (sign) {
    case FluxSign::Plus: return j.max(0.0);
    case FluxSign::Minus: return j.min(0.0);
    case FluxSign::Total: return j;
  }
  return j;
}

TimeDistribution::Kind kind_of(FluxSign sign) {
  switch (sign) {
    case FluxSign::Plus: return TimeDistribution::Kind::FluxPlus;
    case FluxSign::Minus: return TimeDistribution::Kind::FluxMinus;
    case FluxSign::Total: return TimeDistribution::Kind::FluxTotal;
  }
  return TimeDistribution::Kind::FluxTotal;
}
}  // namespace

TimeDistribution passage_distribution(const PacketField& field, Real x, FluxSign sign) {
  const ArrayXr js = directed_flux(field, x, sign);
  const Real total = integrate(field.time, js);
  const Real scale = integrate(field.time, ArrayXr(flux_at(field, x).abs()));
  if (std::abs(total) <= kFluxFloor * std::max(scale, kFluxFloor))
    throw EmptyFluxError("no directed flux at the probe in the requested direction");
  TimeDistribution dist;
  dist.time = field.time;
  dist.weights = js / total;
  dist.kind = kind_of(sign);
  dist.probe = x;
  return dist;
}

MomentReport moments(const TimeDistribution& dist, int nmax) {
  MomentReport rep;
  ArrayXr tn = dist.time.nodes;
  for (int n = 1; n <= std::max(nmax, 2); ++n) {
    const Real mn = integrate(dist.time, ArrayXr(tn * dist.weights));
    if (n <= nmax) rep.higher.push_back(mn);
    if (n == 1) rep.mean = mn;
    if (n == 2) rep.variance = mn - rep.mean * rep.mean;
    tn *= dist.time.nodes;
  }
  return rep;
}

MomentReport mean_passage_time(const PacketField& field, Real x, FluxSign sign) {
  return moments(passage_distribution(field, x, sign), 2);
}

Real traversal_time(const PacketField& field, Real x_i, Real x_f) {
  if (x_i > x_f) throw DomainError("traversal needs x_i <= x_f");
  if (x_i == x_f) return 0.0;
  return mean_passage_time(field, x_f, FluxSign::Plus).mean -
         mean_passage_time(field, x_i, FluxSign::Plus).mean;
}

Real reflection_time(const PacketField& field, Real x_i, Real x_f) {
  if (x_f > x_i) throw DomainError("reflection needs x_f <= x_i");
  return mean_passage_time(field, x_f, FluxSign::Minus).mean -
         mean_passage_time(field, x_i, FluxSign::Plus).mean;
}

DwellTimes dwell_time(const PacketField& field, Real x_i, Real x_f) {
  if (x_i > x_f) throw DomainError("dwell interval needs x_i <= x_f");
  const ArrayXr jplus = directed_flux(field, x_i, FluxSign::Plus);
  const Real incident = integrate(field.time, jplus);
  const Real scale = integrate(field.time, ArrayXr(flux_at(field, x_i).abs()));
  if (std::abs(incident) <= kFluxFloor * std::max(scale, kFluxFloor))
    throw EmptyFluxError("no incident flux at the entry probe");
  if (x_i == x_f) return {0.0, 0.0};

  // restricted x-axis with interpolated endpoints
  std::vector<Real> xs;
  xs.push_back(x_i);
  for (Index i = 0; i < field.space.size(); ++i) {
    const Real x = field.space.nodes(i);
    if (x > x_i && x < x_f) xs.push_back(x);
  }
  xs.push_back(x_f);
  ArrayXr nodes = Eigen::Map<const ArrayXr>(xs.data(), static_cast<Index>(xs.size()));
  const Grid sub = Grid::from_nodes(nodes);

  MatrixXr rho_sub(sub.size(), field.time.size());
  for (Index i = 0; i < sub.size(); ++i)
    rho_sub.row(i) = rho_at(field, sub.nodes(i)).transpose().matrix();

  Real inner = 0.0;
  for (Index m = 0; m < field.time.size(); ++m) {
    const Real slab = integrate(sub, ArrayXr(rho_sub.col(m).array()));
    inner += field.time.weights(m) * slab;
  }
  const Real form_a = inner / incident;

  const ArrayXr jf = flux_at(field, x_f);
  const ArrayXr ji = flux_at(field, x_i);
  const Real mom_f = integrate(field.time, ArrayXr(field.time.nodes * jf));
  const Real mom_i = integrate(field.time, ArrayXr(field.time.nodes * ji));
  const Real form_b = (mom_f - mom_i) / incident;
  return {form_a, form_b};
}

UncertaintyProduct uncertainty_product(const SpectralAmplitude& g, const TimeDistribution& dist) {
  ArrayXr energies(g.grid.size());
  for (Index i = 0; i < g.grid.size(); ++i)
    energies(i) = (g.rep == SpectralAmplitude::Rep::Energy)
                      ? g.grid.nodes(i)
                      : g.dispersion.energy_of_k(g.grid.nodes(i));
  const ArrayXr w = g.values.abs2();
  const Real norm = integrate(g.grid, w);
  const Real e_mean = integrate(g.grid, ArrayXr(energies * w)) / norm;
  const Real e_var = integrate(g.grid, ArrayXr((energies - e_mean).square() * w)) / norm;

  const MomentReport m = moments(dist, 2);
  UncertaintyProduct out;
  out.delta_e = std::sqrt(std::max(e_var, 0.0));
  out.delta_t = std::sqrt(std::max(m.variance, 0.0));
  out.product = out.delta_e * out.delta_t;
  return out;
}

namespace {
// G(x, E) = g_E(E) phi(x, E) on the energy grid of g (converted if needed)
struct EnergyRepData {
  Grid egrid;
  ArrayXc G;
  ArrayXr v;
};

EnergyRepData build_energy_rep(const SpectralAmplitude& g, const ScatterSystem& sys, Real x) {
  const SpectralAmplitude ge =
      (g.rep == SpectralAmplitude::Rep::Energy) ? g : to_energy_rep(g);
  EnergyRepData out;
  out.egrid = ge.grid;
  const Index n = ge.grid.size();
  out.G.resize(n);
  out.v.resize(n);
  ArrayXr probe(3);
  for (Index j = 0; j < n; ++j) {
    const Real E = ge.grid.nodes(j);
    out.v(j) = ge.dispersion.v_group(E);
    if (sys.is_free()) {
      const Real k = ge.dispersion.k_of_energy(E);
      out.G(j) = ge.values(j) * std::exp(Complex(0.0, k * x));
    } else {
      const Real dx = 1e-3;
      probe << x - dx, x, x + dx;
      const StationaryWave st = stationary_state(sys, E, Grid::from_nodes(probe));
      out.G(j) = ge.values(j) * st.value(1);
    }
  }
  return out;
}
}  // namespace

ERepMean e_rep_mean_time(const SpectralAmplitude& g, const ScatterSystem& sys, Real x) {
  const EnergyRepData d = build_energy_rep(g, sys, x);
  const Real hbar = g.dispersion.units.hbar;
  const ArrayXc vG = d.v.cast<Complex>() * d.G;
  const ArrayXc tG = Complex(0.0, -hbar) * grid_derivative(d.egrid, d.G);
  const ArrayXc tvG = Complex(0.0, -hbar) * grid_derivative(d.egrid, vG);

  const Complex num =
      integrate_c(d.egrid, ArrayXc(0.5 * (d.G.conjugate() * tvG +
                                          d.v.cast<Complex>() * d.G.conjugate() * tG)));
  const Complex alt = integrate_c(d.egrid, ArrayXc(d.v.cast<Complex>() * d.G.conjugate() * tG));
  const Real den = integrate(d.egrid, ArrayXr(d.v * d.G.abs2()));
  ERepMean rep;
  rep.mean = num.real() / den;
  rep.alt_mean = alt.real() / den;
  rep.imag_residual = std::abs(num.imag()) / den;
  return rep;
}

Real bilinear_mean_time(const SpectralAmplitude& g, const ScatterSystem& sys, Real x) {
  const EnergyRepData d = build_energy_rep(g, sys, x);
  const Real hbar = g.dispersion.units.hbar;
  const ArrayXc dG = grid_derivative(d.egrid, d.G);
  // (-i hbar/2) [G* dG - (dG)* G] integrated against v; real by construction
  const ArrayXr integrand = hbar * d.v * (d.G.conjugate() * dG).imag();
  const Real den = integrate(d.egrid, ArrayXr(d.v * d.G.abs2()));
  return integrate(d.egrid, integrand) / den;
}

TqEigenReport tq_eigencheck(Real k, const std::vector<Real>& probes, UnitSystem units) {
  if (k == 0.0) throw DomainError("plane-wave eigencheck needs k != 0");
  const Real hbar = units.hbar, mu = units.mass;
  const Real pbar = hbar * k;
  const Real sigma = 3e-5 * std::abs(pbar);
  const Index n = 4001;
  const Grid pgrid = Grid::uniform(pbar - 12 * sigma, pbar + 12 * sigma, n);

  ArrayXc gp(n), tg(n);
  for (Index i = 0; i < n; ++i) {
    const Real p = pgrid.nodes(i);
    const Real g = std::exp(-(p - pbar) * (p - pbar) / (4.0 * sigma * sigma));
    const Real gprime = -(p - pbar) / (2.0 * sigma * sigma) * g;
    gp(i) = g;
    // hamiltonian-form time operator in the momentum representation:
    // T g = i hbar mu d/dp [ g / p ]
    tg(i) = Complex(0.0, hbar * mu) * (gprime / p - g / (p * p));
  }

  TqEigenReport rep;
  const Real v = hbar * k / mu;
  for (Real x : probes) {
    Complex psi = 0.0, tpsi = 0.0;
    for (Index i = 0; i < n; ++i) {
      const Complex e = std::exp(Complex(0.0, pgrid.nodes(i) * x / hbar));
      psi += pgrid.weights(i) * gp(i) * e;
      tpsi += pgrid.weights(i) * tg(i) * e;
    }
    const Real expected = x / v;
    rep.ratio.push_back(tpsi / psi);
    rep.expected.push_back(expected);
    const Real rel = (x == 0.0)
                         ? std::abs(tpsi) / std::abs(psi)
                         : std::abs(tpsi - expected * psi) / (std::abs(psi) * std::abs(expected));
    rep.max_rel_residual = std::max(rep.max_rel_residual, rel);
  }
  return rep;
}

}  // namespace packetlab
