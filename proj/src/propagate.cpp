#include "packetlab/propagate.hpp"

#include <atomic>
#include <cmath>
#include <thread>
#include <vector>

namespace packetlab {

namespace {
std::atomic<int> g_threads{0};

int resolve_threads(int requested) {
  if (requested > 0) return requested;
  const int global = g_threads.load();
  if (global > 0) return global;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(std::min(hw, 4u));
}

// psi = Phi * D computed in column blocks across threads; deterministic
// because every thread owns disjoint output columns
void blocked_product(const MatrixXc& phi, const MatrixXc& dmat, MatrixXc& out, int threads) {
  const Index nt = dmat.cols();
  if (threads <= 1 || nt < 64) {
    out.noalias() = phi * dmat;
    return;
  }
  out.resize(phi.rows(), nt);
  std::vector<std::thread> pool;
  const Index block = (nt + threads - 1) / threads;
  for (int th = 0; th < threads; ++th) {
    const Index begin = th * block;
    if (begin >= nt) break;
    const Index len = std::min(block, nt - begin);
    pool.emplace_back([&, begin, len] {
      out.middleCols(begin, len).noalias() = phi * dmat.middleCols(begin, len);
    });
  }
  for (auto& t : pool) t.join();
}
}  // namespace

int default_thread_count() { return resolve_threads(0); }
void set_default_thread_count(int n) { g_threads.store(n); }

PacketField synthesize(const SpectralAmplitude& g, const ScatterSystem& sys, const Grid& space,
                       const Grid& time, int threads) {
  if (g.grid.size() != g.values.size()) throw ShapeError("amplitude values do not match its grid");
  const Index ne = g.grid.size(), nx = space.size(), nt = time.size();
  const Real hbar = sys.units.hbar, mu = sys.units.mass;
  const bool krep = g.rep == SpectralAmplitude::Rep::Wavenumber;

  MatrixXc phi(nx, ne), phidx(nx, ne);
  ArrayXr energies(ne);
  for (Index j = 0; j < ne; ++j) {
    const Real node = g.grid.nodes(j);
    const Real E = krep ? g.dispersion.energy_of_k(node) : node;
    if (!(E > 0)) throw DomainError("spectral grid must map to E > 0");
    energies(j) = E;
    const Complex w = g.values(j) * g.grid.weights(j);
    if (sys.is_free() && krep) {
      // signed k: leftward components allowed for free motion
      const Real k = node;
      for (Index i = 0; i < nx; ++i) {
        const Complex e = std::exp(Complex(0.0, k * space.nodes(i)));
        phi(i, j) = w * e;
        phidx(i, j) = w * Complex(0.0, k) * e;
      }
    } else {
      if (krep && node <= 0)
        throw DomainError("barrier synthesis needs a positive-k spectral grid");
      const StationaryWave st = stationary_state(sys, E, space);
      phi.col(j) = w * st.value.matrix();
      phidx.col(j) = w * st.deriv.matrix();
    }
  }

  MatrixXc dmat(ne, nt);
  for (Index j = 0; j < ne; ++j)
    for (Index m = 0; m < nt; ++m)
      dmat(j, m) = std::exp(Complex(0.0, -energies(j) * time.nodes(m) / hbar));

  PacketField field;
  field.space = space;
  field.time = time;
  field.dispersion = g.dispersion;
  const int nth = resolve_threads(threads);
  blocked_product(phi, dmat, field.psi, nth);
  MatrixXc psidx;
  blocked_product(phidx, dmat, psidx, nth);

  field.rho = field.psi.array().abs2().matrix();
  field.flux = (hbar / mu) * (field.psi.array().conjugate() * psidx.array()).imag().matrix();
  return field;
}

PacketField synthesize_photon(const SpectralAmplitude& chi, const Grid& space, const Grid& time,
                              int threads) {
  if (chi.dispersion.kind != Dispersion::Kind::Photon)
    throw KindError("synthesize_photon needs a photon-dispersion amplitude");
  if (chi.rep != SpectralAmplitude::Rep::Wavenumber)
    throw KindError("photon amplitudes are wavenumber-representation");
  if (chi.grid.min() <= 0) throw DomainError("photon k-grid must be positive");
  const Index ne = chi.grid.size(), nx = space.size(), nt = time.size();
  const Real c = chi.dispersion.units.c;

  MatrixXc phi(nx, ne);
  for (Index j = 0; j < ne; ++j) {
    const Real k = chi.grid.nodes(j);
    const Complex w = chi.values(j) * chi.grid.weights(j);
    for (Index i = 0; i < nx; ++i)
      phi(i, j) = w * std::exp(Complex(0.0, k * space.nodes(i)));
  }
  MatrixXc dmat(ne, nt);
  for (Index j = 0; j < ne; ++j)
    for (Index m = 0; m < nt; ++m)
      dmat(j, m) = std::exp(Complex(0.0, -c * chi.grid.nodes(j) * time.nodes(m)));

  PacketField field;
  field.space = space;
  field.time = time;
  field.dispersion = chi.dispersion;
  blocked_product(phi, dmat, field.psi, resolve_threads(threads));

  field.rho = field.psi.array().abs2().matrix();
  // normalize the energy-density weight over x at the central time node
  const Index mid = nt / 2;
  const Real total = integrate(field.space, ArrayXr(field.rho.col(mid).array()));
  if (!(total > 0)) throw NormalizationError("photon packet has zero weight in the window");
  field.rho /= total;
  field.flux = c * field.rho;  // rightward 1D vacuum mode: S_x = c S_0
  return field;
}

ArrayXr flux_at(const PacketField& field, Real x) {
  if (!field.space.contains(x)) throw DomainError("probe x outside the space grid");
  const Index n = field.space.size();
  Index i = 0;
  while (i + 2 < n && field.space.nodes(i + 1) < x) ++i;
  const Real t = (x - field.space.nodes(i)) / (field.space.nodes(i + 1) - field.space.nodes(i));
  return ((1.0 - t) * field.flux.row(i) + t * field.flux.row(i + 1)).transpose().array();
}

ArrayXr rho_at(const PacketField& field, Real x) {
  if (!field.space.contains(x)) throw DomainError("probe x outside the space grid");
  const Index n = field.space.size();
  Index i = 0;
  while (i + 2 < n && field.space.nodes(i + 1) < x) ++i;
  const Real t = (x - field.space.nodes(i)) / (field.space.nodes(i + 1) - field.space.nodes(i));
  return ((1.0 - t) * field.rho.row(i) + t * field.rho.row(i + 1)).transpose().array();
}

std::pair<ArrayXr, ArrayXr> flux_split(const PacketField& field, Real x) {
  const ArrayXr j = flux_at(field, x);
  return {j.max(0.0), j.min(0.0)};
}

Real continuity_residual(const PacketField& field) {
  const Index nx = field.space.size(), nt = field.time.size();
  Real worst = 0.0;
  for (Index i = 1; i + 1 < nx; ++i) {
    const Real hx = field.space.nodes(i + 1) - field.space.nodes(i - 1);
    for (Index m = 1; m + 1 < nt; ++m) {
      const Real ht = field.time.nodes(m + 1) - field.time.nodes(m - 1);
      const Real drho_dt = (field.rho(i, m + 1) - field.rho(i, m - 1)) / ht;
      const Real dj_dx = (field.flux(i + 1, m) - field.flux(i - 1, m)) / hx;
      worst = std::max(worst, std::abs(drho_dt + dj_dx));
    }
  }
  return worst;
}

Real norm_in_x(const PacketField& field, Index time_index) {
  return integrate(field.space, ArrayXr(field.rho.col(time_index).array()));
}

}  // namespace packetlab
