#include "packetlab/kg_position.hpp"

#include <cmath>

namespace packetlab {

namespace {

// centered second-order gradient along one axis, one-sided at the edges
ArrayXc gradient_axis(const KGPacket& pkt, int axis) {
  const Index nx = pkt.nx(), ny = pkt.ny(), nz = pkt.nz();
  ArrayXc out(pkt.size());
  const auto& g = pkt.axes[static_cast<size_t>(axis)];
  const Index n_axis = g.size();
  const Real h = g.step();

  auto at = [&](Index ix, Index iy, Index iz) { return pkt.values(pkt.flat(ix, iy, iz)); };
  for (Index ix = 0; ix < nx; ++ix)
    for (Index iy = 0; iy < ny; ++iy)
      for (Index iz = 0; iz < nz; ++iz) {
        Index i = axis == 0 ? ix : (axis == 1 ? iy : iz);
        Complex d;
        auto shifted = [&](Index delta) {
          return axis == 0 ? at(ix + delta, iy, iz)
                 : axis == 1 ? at(ix, iy + delta, iz)
                             : at(ix, iy, iz + delta);
        };
        if (i == 0)
          d = (-3.0 * shifted(0) + 4.0 * shifted(1) - shifted(2)) / (2.0 * h);
        else if (i == n_axis - 1)
          d = (3.0 * shifted(0) - 4.0 * shifted(-1) + shifted(-2)) / (2.0 * h);
        else
          d = (shifted(1) - shifted(-1)) / (2.0 * h);
        out(pkt.flat(ix, iy, iz)) = d;
      }
  return out;
}

// apply a per-node functional over the tensor grid with the invariant weight
template <class Fn>
void for_each_node(const KGPacket& pkt, Fn&& fn) {
  for (Index ix = 0; ix < pkt.nx(); ++ix) {
    const Real px = pkt.axes[0].nodes(ix), wx = pkt.axes[0].weights(ix);
    for (Index iy = 0; iy < pkt.ny(); ++iy) {
      const Real py = pkt.axes[1].nodes(iy), wy = pkt.axes[1].weights(iy);
      for (Index iz = 0; iz < pkt.nz(); ++iz) {
        const Real pz = pkt.axes[2].nodes(iz), wz = pkt.axes[2].weights(iz);
        const Real p0 = pkt.p0(px, py, pz);
        fn(pkt.flat(ix, iy, iz), px, py, pz, p0, wx * wy * wz / p0);
      }
    }
  }
}

Real component(Real px, Real py, Real pz, int j) { return j == 0 ? px : (j == 1 ? py : pz); }

}  // namespace

Real KGPacket::norm() const {
  if (radial_symmetric) {
    // isotropic fast path: integrate 4 pi p^2 |Phi|^2 / p0 along the +x ray
    // through the grid center (falls back if the center node is absent)
    const Index cx = nx() / 2, cy = ny() / 2, cz = nz() / 2;
    if (std::abs(axes[1].nodes(cy)) < 1e-12 && std::abs(axes[2].nodes(cz)) < 1e-12 &&
        std::abs(axes[0].nodes(cx)) < 1e-12) {
      Real acc = 0.0;
      for (Index ix = cx; ix < nx(); ++ix) {
        const Real p = axes[0].nodes(ix);
        Real w = axes[0].weights(ix);
        if (ix == cx) w *= 0.5;  // half cell at p = 0
        const Real p0v = std::sqrt(p * p + m0 * m0);
        acc += 4.0 * std::numbers::pi * w * p * p / p0v * std::norm(values(flat(ix, cy, cz)));
      }
      return std::sqrt(acc);
    }
  }
  Real acc = 0.0;
  for_each_node(*this, [&](Index i, Real, Real, Real, Real, Real w) {
    acc += w * std::norm(values(i));
  });
  return std::sqrt(acc);
}

KGPacket make_kg_gaussian(Real m0, const Vector3r& pbar, const Vector3r& sigma, const Vector3r& x0,
                          const std::array<Grid, 3>& axes) {
  if (!(m0 > 0)) throw DomainError("rest mass must be positive");
  KGPacket pkt;
  pkt.axes = axes;
  pkt.m0 = m0;
  pkt.values.resize(pkt.nx() * pkt.ny() * pkt.nz());
  for (Index ix = 0; ix < pkt.nx(); ++ix)
    for (Index iy = 0; iy < pkt.ny(); ++iy)
      for (Index iz = 0; iz < pkt.nz(); ++iz) {
        const Vector3r p{pkt.axes[0].nodes(ix), pkt.axes[1].nodes(iy), pkt.axes[2].nodes(iz)};
        Real arg = 0.0, phase = 0.0;
        for (int j = 0; j < 3; ++j) {
          const Real d = p(j) - pbar(j);
          arg += d * d / (4.0 * sigma(j) * sigma(j));
          phase += p(j) * x0(j);
        }
        pkt.values(pkt.flat(ix, iy, iz)) = std::exp(Complex(-arg, -phase));
      }
  const Real n = pkt.norm();
  if (!(n > 0)) throw NormalizationError("packet has zero norm on this grid");
  pkt.values /= n;
  return pkt;
}

std::array<Complex, 3> plain_gradient_expectation(const KGPacket& pkt) {
  std::array<Complex, 3> out{};
  for (int j = 0; j < 3; ++j) {
    const ArrayXc dphi = gradient_axis(pkt, j);
    Complex acc = 0.0;
    for_each_node(pkt, [&](Index i, Real, Real, Real, Real, Real w) {
      acc += w * std::conj(pkt.values(i)) * kI * dphi(i);
    });
    out[static_cast<size_t>(j)] = acc;
  }
  return out;
}

NWCrossCheck nw_cross_check(const KGPacket& pkt) {
  NWCrossCheck chk;
  for (int j = 0; j < 3; ++j) {
    const ArrayXc dphi = gradient_axis(pkt, j);
    Real bil = 0.0;
    Complex single = 0.0;
    for_each_node(pkt, [&](Index i, Real px, Real py, Real pz, Real p0, Real w) {
      const Complex grad = dphi(i);
      bil += -w * std::imag(std::conj(pkt.values(i)) * grad);
      const Real pj = component(px, py, pz, j);
      single += w * std::conj(pkt.values(i)) *
                (kI * grad - kI * 0.5 * pj / (p0 * p0) * pkt.values(i));
    });
    chk.bilinear(j) = bil;
    chk.single_op[static_cast<size_t>(j)] = single;
  }
  return chk;
}

Vector3r nw_mean_position(const KGPacket& pkt) {
  const Real drift = std::abs(pkt.norm() - 1.0);
  if (drift > 1e-6) throw NormalizationError("KG packet is not normalized on its grid");
  return nw_cross_check(pkt).bilinear;
}

EllipsoidCrossCheck ellipsoid_cross_check(const KGPacket& pkt) {
  EllipsoidCrossCheck chk;
  // |Phi|^2 as a real packet for the direct-derivative route
  KGPacket density = pkt;
  for (Index i = 0; i < pkt.size(); ++i) density.values(i) = std::norm(pkt.values(i));
  for (int j = 0; j < 3; ++j) {
    Real by_parts = 0.0;
    for_each_node(pkt, [&](Index i, Real px, Real py, Real pz, Real p0, Real w) {
      const Real pj = component(px, py, pz, j);
      by_parts += 0.5 * w * pj / (p0 * p0) * std::norm(pkt.values(i));
    });
    const ArrayXc drho = gradient_axis(density, j);
    Real direct = 0.0;
    for_each_node(pkt, [&](Index i, Real, Real, Real, Real, Real w) {
      direct += 0.5 * w * drho(i).real();
    });
    chk.by_parts(j) = by_parts;
    chk.direct(j) = direct;
  }
  return chk;
}

Vector3r ellipsoid_sizes(const KGPacket& pkt) { return ellipsoid_cross_check(pkt).by_parts; }

LocalizationReport uncertainty_correlations(const KGPacket& pkt) {
  LocalizationReport rep;
  rep.x_nw = nw_mean_position(pkt);
  rep.y_size = ellipsoid_sizes(pkt);

  for (int i = 0; i < 3; ++i) {
    // hermitian part applied spectrally: X Phi = i dPhi - (i/2)(p_i/p0^2) Phi
    const ArrayXc dphi = gradient_axis(pkt, i);
    Real norm2 = 0.0;
    for_each_node(pkt, [&](Index n, Real px, Real py, Real pz, Real p0, Real w) {
      const Real pi = component(px, py, pz, i);
      const Complex xphi = kI * dphi(n) - kI * 0.5 * pi / (p0 * p0) * pkt.values(n);
      norm2 += w * std::norm(xphi);
    });
    rep.delta_alpha(i) = std::sqrt(std::max(norm2 - rep.x_nw(i) * rep.x_nw(i), 0.0));

    Real b_mean = 0.0, b2_mean = 0.0;
    for_each_node(pkt, [&](Index n, Real px, Real py, Real pz, Real p0, Real w) {
      const Real beta = 0.5 * component(px, py, pz, i) / (p0 * p0);
      const Real rho = std::norm(pkt.values(n));
      b_mean += w * beta * rho;
      b2_mean += w * beta * beta * rho;
    });
    rep.delta_beta(i) = std::sqrt(std::max(b2_mean - b_mean * b_mean, 0.0));
  }

  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      Real expect = 0.0;
      for_each_node(pkt, [&](Index n, Real px, Real py, Real pz, Real p0, Real w) {
        const Real pi = component(px, py, pz, i), pj = component(px, py, pz, j);
        const Real kernel = ((i == j ? 1.0 : 0.0) - 2.0 * pi * pj / (p0 * p0)) / (p0 * p0);
        expect += w * kernel * std::norm(pkt.values(n));
      });
      rep.correlation_rhs(i, j) = 0.25 * std::abs(expect);
      rep.correlation_lhs(i, j) = rep.delta_alpha(i) * rep.delta_beta(j);
    }
  return rep;
}

CommutatorCheck commutator_check(const KGPacket& pkt, int i, int j) {
  // B Phi with B = (1/2) p_j / p0^2
  KGPacket bphi = pkt;
  for_each_node(pkt, [&](Index n, Real px, Real py, Real pz, Real p0, Real) {
    bphi.values(n) = 0.5 * component(px, py, pz, j) / (p0 * p0) * pkt.values(n);
  });
  const ArrayXc d_bphi = gradient_axis(bphi, i);
  const ArrayXc d_phi = gradient_axis(pkt, i);

  CommutatorCheck chk;
  Real worst = 0.0, scale = 0.0;
  Complex lhs_expect = 0.0, rhs_expect = 0.0;
  for_each_node(pkt, [&](Index n, Real px, Real py, Real pz, Real p0, Real w) {
    const Real pj = component(px, py, pz, j);
    // X(B Phi) - B(X Phi): the multiplication parts cancel, derivative stays
    const Complex lhs = kI * d_bphi(n) - 0.5 * pj / (p0 * p0) * kI * d_phi(n);
    const Real pi = component(px, py, pz, i);
    const Real kernel = ((i == j ? 1.0 : 0.0) / (p0 * p0) - 2.0 * pi * pj / (p0 * p0 * p0 * p0));
    const Complex rhs = kI * 0.5 * kernel * pkt.values(n);
    worst = std::max(worst, std::abs(lhs - rhs));
    scale = std::max(scale, std::abs(rhs));
    lhs_expect += w * std::conj(pkt.values(n)) * lhs;
    rhs_expect += w * std::conj(pkt.values(n)) * rhs;
  });
  chk.max_rel_residual = scale > 0 ? worst / scale : worst;
  chk.lhs_expect = lhs_expect;
  chk.rhs_expect = rhs_expect;
  return chk;
}

}  // namespace packetlab
