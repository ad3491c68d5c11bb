#pragma once

#include <cmath>
#include <numbers>

#include "packetlab/errors.hpp"
#include "packetlab/types.hpp"

namespace packetlab {

enum class Quadrature { Trapezoid, GaussLegendre };

// One sampling axis: strictly increasing nodes plus quadrature weights.
// Uniform trapezoid is the default; Gauss-Legendre nodes are available per
// scenario.  Non-uniform node sets (e.g. an energy grid induced by a k-grid)
// get trapezoid weights from the local spacing.
template <class Scalar>
struct GridT {
  ArrayX<Scalar> nodes;
  ArrayX<Scalar> weights;

  static GridT uniform(Scalar min, Scalar max, Index n) {
    if (n < 2) throw DomainError("grid needs n >= 2");
    if (!(max > min)) throw DomainError("grid needs max > min");
    GridT g;
    g.nodes = ArrayX<Scalar>::LinSpaced(n, min, max);
    const Scalar h = (max - min) / Scalar(n - 1);
    g.weights = ArrayX<Scalar>::Constant(n, h);
    g.weights(0) *= Scalar(0.5);
    g.weights(n - 1) *= Scalar(0.5);
    return g;
  }

  static GridT gauss_legendre(Scalar min, Scalar max, Index n) {
    if (n < 2) throw DomainError("grid needs n >= 2");
    if (!(max > min)) throw DomainError("grid needs max > min");
    GridT g;
    g.nodes.resize(n);
    g.weights.resize(n);
    // Newton iteration on Legendre P_n, nodes of the reference interval
    for (Index i = 0; i < n; ++i) {
      double x = std::cos(std::numbers::pi * (double(i) + 0.75) / (double(n) + 0.5));
      double pp = 0.0;
      for (int it = 0; it < 100; ++it) {
        double p0 = 1.0, p1 = x;
        for (Index k = 2; k <= n; ++k) {
          const double p2 = ((2.0 * double(k) - 1.0) * x * p1 - (double(k) - 1.0) * p0) / double(k);
          p0 = p1;
          p1 = p2;
        }
        pp = double(n) * (x * p1 - p0) / (x * x - 1.0);
        const double dx = p1 / pp;
        x -= dx;
        if (std::abs(dx) < 1e-15) break;
      }
      const double half = 0.5 * double(max - min);
      g.nodes(n - 1 - i) = Scalar(min) + Scalar(half * (1.0 + x));
      g.weights(n - 1 - i) = Scalar(2.0 * half / ((1.0 - x * x) * pp * pp));
    }
    return g;
  }

  static GridT from_nodes(ArrayX<Scalar> nodes) {
    const Index n = nodes.size();
    if (n < 2) throw DomainError("grid needs n >= 2");
    for (Index i = 0; i + 1 < n; ++i)
      if (!(nodes(i + 1) > nodes(i))) throw DomainError("grid nodes must be strictly increasing");
    GridT g;
    g.weights.resize(n);
    g.weights(0) = (nodes(1) - nodes(0)) / Scalar(2);
    for (Index i = 1; i + 1 < n; ++i) g.weights(i) = (nodes(i + 1) - nodes(i - 1)) / Scalar(2);
    g.weights(n - 1) = (nodes(n - 1) - nodes(n - 2)) / Scalar(2);
    g.nodes = std::move(nodes);
    return g;
  }

  Index size() const { return nodes.size(); }
  Scalar min() const { return nodes(0); }
  Scalar max() const { return nodes(nodes.size() - 1); }
  Scalar step() const { return nodes(1) - nodes(0); }

  bool contains(Scalar x) const { return x >= min() && x <= max(); }

  Index nearest(Scalar x) const {
    Index best = 0;
    Scalar d = std::abs(x - nodes(0));
    for (Index i = 1; i < size(); ++i) {
      const Scalar di = std::abs(x - nodes(i));
      if (di < d) { d = di; best = i; }
    }
    return best;
  }
};

using Grid = GridT<Real>;

template <class Scalar, class Derived>
Scalar integrate(const GridT<Scalar>& g, const Eigen::ArrayBase<Derived>& f) {
  if (f.size() != g.size()) throw ShapeError("integrand length does not match grid");
  return (g.weights.template cast<typename Derived::Scalar>() * f).sum();
}

inline Complex integrate_c(const Grid& g, const ArrayXc& f) {
  if (f.size() != g.size()) throw ShapeError("integrand length does not match grid");
  return (g.weights.cast<Complex>() * f).sum();
}

// derivative of sampled values on (possibly non-uniform) nodes:
// three-point interior stencil, one-sided second-order at the edges
template <class Scalar, class ValueScalar>
ArrayX<ValueScalar> grid_derivative(const GridT<Scalar>& g, const ArrayX<ValueScalar>& f) {
  const Index n = g.size();
  if (f.size() != n) throw ShapeError("values length does not match grid");
  ArrayX<ValueScalar> d(n);
  const auto& x = g.nodes;
  for (Index i = 1; i + 1 < n; ++i) {
    const Scalar hl = x(i) - x(i - 1), hr = x(i + 1) - x(i);
    d(i) = (f(i + 1) * (hl * hl) - f(i - 1) * (hr * hr) + f(i) * (hr * hr - hl * hl)) /
           (hl * hr * (hl + hr));
  }
  {
    const Scalar h0 = x(1) - x(0), h1 = x(2) - x(1);
    d(0) = (f(1) * ((h0 + h1) * (h0 + h1)) - f(2) * (h0 * h0) - f(0) * ((h0 + h1) * (h0 + h1) - h0 * h0)) /
           (h0 * h1 * (h0 + h1));
    const Scalar hn = x(n - 1) - x(n - 2), hm = x(n - 2) - x(n - 3);
    d(n - 1) = (f(n - 3) * (hn * hn) - f(n - 2) * ((hn + hm) * (hn + hm)) +
                f(n - 1) * ((hn + hm) * (hn + hm) - hn * hn)) /
               (hn * hm * (hn + hm));
  }
  return d;
}

// linear interpolation of sampled values at one point
template <class Scalar, class ValueScalar>
ValueScalar interp_linear(const GridT<Scalar>& g, const ArrayX<ValueScalar>& f, Scalar x) {
  if (!g.contains(x)) throw DomainError("interpolation point outside grid");
  const Index n = g.size();
  Index i = 0;
  while (i + 2 < n && g.nodes(i + 1) < x) ++i;
  const Scalar t = (x - g.nodes(i)) / (g.nodes(i + 1) - g.nodes(i));
  return f(i) * (Scalar(1) - t) + f(i + 1) * t;
}

}  // namespace packetlab
