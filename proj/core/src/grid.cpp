#include "airyspectra/grid.hpp"

#include <algorithm>
#include <cmath>

namespace airyspectra {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

// Legendre P_m and P_m' by the three-term recurrence.
void legendre_pd(int m, double x, double& p, double& dp) {
  double p0 = 1.0, p1 = x;
  if (m == 0) {
    p = 1.0;
    dp = 0.0;
    return;
  }
  for (int k = 2; k <= m; ++k) {
    const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
    p0 = p1;
    p1 = p2;
  }
  p = p1;
  dp = m * (x * p1 - p0) / (x * x - 1.0);
}

// Evaluate P_0..P_{lmax} at x.
void legendre_all(int lmax, double x, std::vector<double>& out) {
  out.resize(lmax + 1);
  out[0] = 1.0;
  if (lmax == 0) return;
  out[1] = x;
  for (int l = 2; l <= lmax; ++l) {
    out[l] = ((2.0 * l - 1.0) * x * out[l - 1] - (l - 1.0) * out[l - 2]) / l;
  }
}

// Antiderivative basis: A_0(xi) = xi + 1, A_l(xi) = (P_{l+1} - P_{l-1})/(2l+1).
void antiderivative_all(int lmax, double xi, std::vector<double>& out) {
  std::vector<double> p;
  legendre_all(lmax + 1, xi, p);
  out.resize(lmax + 1);
  out[0] = xi + 1.0;
  for (int l = 1; l <= lmax; ++l) out[l] = (p[l + 1] - p[l - 1]) / (2.0 * l + 1.0);
}

}  // namespace

void gauss_legendre(int m, std::vector<double>& nodes, std::vector<double>& weights) {
  nodes.resize(m);
  weights.resize(m);
  for (int i = 0; i < (m + 1) / 2; ++i) {
    // Chebyshev-based initial guess, then Newton.
    double x = std::cos(kPi * (i + 0.75) / (m + 0.5));
    double p = 0.0, dp = 1.0;
    for (int it = 0; it < 100; ++it) {
      legendre_pd(m, x, p, dp);
      const double step = p / dp;
      x -= step;
      if (std::abs(step) < 1e-15) break;
    }
    legendre_pd(m, x, p, dp);
    nodes[i] = -x;
    nodes[m - 1 - i] = x;
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    weights[i] = w;
    weights[m - 1 - i] = w;
  }
}

Grid Grid::composite_gauss(double x_max, int n_nodes) {
  if (!(x_max > 0.0)) throw InvalidParameter("grid: x_max must be positive");
  if (n_nodes < 4) throw InvalidParameter("grid: need at least 4 nodes");

  const int n_panels = std::max(1, (n_nodes + 11) / 12);
  const int base = n_nodes / n_panels;
  const int rem = n_nodes % n_panels;

  Grid g;
  g.x_max = x_max;
  g.nodes.reserve(n_nodes);
  g.weights.reserve(n_nodes);
  g.panel_offsets.push_back(0);
  g.panel_edges.push_back(0.0);

  std::vector<double> xi, w;
  for (int p = 0; p < n_panels; ++p) {
    const int m = base + (p < rem ? 1 : 0);
    const double a = x_max * p / n_panels;
    const double b = x_max * (p + 1) / n_panels;
    gauss_legendre(m, xi, w);
    const double h2 = 0.5 * (b - a);
    const double mid = 0.5 * (a + b);
    for (int j = 0; j < m; ++j) {
      g.nodes.push_back(mid + h2 * xi[j]);
      g.weights.push_back(h2 * w[j]);
    }
    g.panel_offsets.push_back(static_cast<int>(g.nodes.size()));
    g.panel_edges.push_back(b);
  }
  return g;
}

GridFunction sample(const Grid& grid, const std::function<Complex(double)>& f) {
  GridFunction gf;
  gf.grid = grid;
  gf.values.resize(grid.size());
  for (int i = 0; i < grid.size(); ++i) gf.values[i] = f(grid.nodes[i]);
  return gf;
}

Complex inner_product(const GridFunction& f, const GridFunction& g) {
  if (f.size() != g.size()) throw InvalidParameter("inner_product: size mismatch");
  Complex s{0.0, 0.0};
  for (int i = 0; i < f.size(); ++i) {
    s += f.grid.weights[i] * f.values[i] * std::conj(g.values[i]);
  }
  return s;
}

Complex integral(const GridFunction& f) {
  Complex s{0.0, 0.0};
  for (int i = 0; i < f.size(); ++i) s += f.grid.weights[i] * f.values[i];
  return s;
}

double norm(const GridFunction& f) {
  double s = 0.0;
  for (int i = 0; i < f.size(); ++i) s += f.grid.weights[i] * std::norm(f.values[i]);
  return std::sqrt(s);
}

GridFunction derivative(const GridFunction& f) {
  GridFunction r;
  r.grid = f.grid;
  r.values.assign(f.size(), Complex{0.0, 0.0});

  const Grid& g = f.grid;
  for (int p = 0; p < g.panels(); ++p) {
    const int lo = g.panel_offsets[p];
    const int hi = g.panel_offsets[p + 1];
    const int m = hi - lo;
    // Barycentric weights on the panel nodes.
    std::vector<double> wb(m, 1.0);
    for (int i = 0; i < m; ++i) {
      for (int j = 0; j < m; ++j) {
        if (i != j) wb[i] *= (g.nodes[lo + i] - g.nodes[lo + j]);
      }
      wb[i] = 1.0 / wb[i];
    }
    for (int i = 0; i < m; ++i) {
      Complex acc{0.0, 0.0};
      double diag = 0.0;
      for (int j = 0; j < m; ++j) {
        if (i == j) continue;
        const double dij = (wb[j] / wb[i]) / (g.nodes[lo + i] - g.nodes[lo + j]);
        acc += dij * f.values[lo + j];
        diag -= dij;
      }
      r.values[lo + i] = acc + diag * f.values[lo + i];
    }
  }
  return r;
}

CumulativeIntegral::CumulativeIntegral(const Grid& grid,
                                       std::span<const Complex> mantissas,
                                       std::span<const double> scales)
    : grid_(&grid) {
  if (static_cast<int>(mantissas.size()) != grid.size() ||
      static_cast<int>(scales.size()) != grid.size()) {
    throw InvalidParameter("cumulative integral: integrand size mismatch");
  }

  const int np = grid.panels();
  panels_.resize(np);
  std::vector<double> xi, w, pl;
  for (int p = 0; p < np; ++p) {
    const int lo = grid.panel_offsets[p];
    const int m = grid.panel_offsets[p + 1] - lo;
    Panel& pan = panels_[p];
    pan.a = grid.panel_edges[p];
    pan.b = grid.panel_edges[p + 1];
    pan.scale = scales[lo];
    for (int j = 1; j < m; ++j) pan.scale = std::max(pan.scale, scales[lo + j]);

    gauss_legendre(m, xi, w);
    // Discrete Legendre transform of the rescaled integrand.
    pan.legendre.assign(m, Complex{0.0, 0.0});
    for (int j = 0; j < m; ++j) {
      const Complex gj = mantissas[lo + j] * std::exp(scales[lo + j] - pan.scale);
      legendre_all(m - 1, xi[j], pl);
      for (int l = 0; l < m; ++l) {
        pan.legendre[l] += 0.5 * (2.0 * l + 1.0) * w[j] * pl[l] * gj;
      }
    }
  }

  prefix_.assign(np + 1, ScaledC::zero());
  for (int p = 0; p < np; ++p) {
    // Full panel integral = (b - a) * c_0 at the panel scale.
    const ScaledC full{(panels_[p].b - panels_[p].a) * panels_[p].legendre[0],
                       panels_[p].scale};
    prefix_[p + 1] = scaled_add(prefix_[p], full);
  }
  suffix_.assign(np + 1, ScaledC::zero());
  for (int p = np - 1; p >= 0; --p) {
    const ScaledC full{(panels_[p].b - panels_[p].a) * panels_[p].legendre[0],
                       panels_[p].scale};
    suffix_[p] = scaled_add(suffix_[p + 1], full);
  }
}

ScaledC CumulativeIntegral::panel_prefix(int p, double xi) const {
  const Panel& pan = panels_[p];
  std::vector<double> A;
  antiderivative_all(static_cast<int>(pan.legendre.size()) - 1, xi, A);
  Complex s{0.0, 0.0};
  for (size_t l = 0; l < pan.legendre.size(); ++l) s += pan.legendre[l] * A[l];
  return {0.5 * (pan.b - pan.a) * s, pan.scale};
}

ScaledC CumulativeIntegral::panel_suffix(int p, double xi) const {
  const Panel& pan = panels_[p];
  std::vector<double> A;
  const int lmax = static_cast<int>(pan.legendre.size()) - 1;
  antiderivative_all(lmax, xi, A);
  // ∫_xi^1 A_l' = A_l(1) - A_l(xi); A_l(1) = 0 for l >= 1, A_0(1) = 2.
  Complex s = pan.legendre[0] * (2.0 - A[0]);
  for (int l = 1; l <= lmax; ++l) s -= pan.legendre[l] * A[l];
  return {0.5 * (pan.b - pan.a) * s, pan.scale};
}

int CumulativeIntegral::panel_of(double x) const {
  const auto& edges = grid_->panel_edges;
  int p = static_cast<int>(std::upper_bound(edges.begin(), edges.end(), x) -
                           edges.begin()) - 1;
  return std::clamp(p, 0, grid_->panels() - 1);
}

int CumulativeIntegral::panel_of_node(int i) const {
  const auto& off = grid_->panel_offsets;
  int p = static_cast<int>(std::upper_bound(off.begin(), off.end(), i) - off.begin()) - 1;
  return std::clamp(p, 0, grid_->panels() - 1);
}

ScaledC CumulativeIntegral::prefix_at_node(int i) const {
  const int p = panel_of_node(i);
  const Panel& pan = panels_[p];
  const double xi = 2.0 * (grid_->nodes[i] - pan.a) / (pan.b - pan.a) - 1.0;
  return scaled_add(prefix_[p], panel_prefix(p, xi));
}

ScaledC CumulativeIntegral::suffix_at_node(int i) const {
  const int p = panel_of_node(i);
  const Panel& pan = panels_[p];
  const double xi = 2.0 * (grid_->nodes[i] - pan.a) / (pan.b - pan.a) - 1.0;
  return scaled_add(suffix_[p + 1], panel_suffix(p, xi));
}

ScaledC CumulativeIntegral::prefix_at(double x) const {
  if (x <= 0.0) return ScaledC::zero();
  if (x >= grid_->x_max) return prefix_[grid_->panels()];
  const int p = panel_of(x);
  const Panel& pan = panels_[p];
  const double xi = 2.0 * (x - pan.a) / (pan.b - pan.a) - 1.0;
  return scaled_add(prefix_[p], panel_prefix(p, xi));
}

ScaledC CumulativeIntegral::suffix_at(double x) const {
  if (x <= 0.0) return suffix_[0];
  if (x >= grid_->x_max) return ScaledC::zero();
  const int p = panel_of(x);
  const Panel& pan = panels_[p];
  const double xi = 2.0 * (x - pan.a) / (pan.b - pan.a) - 1.0;
  return scaled_add(suffix_[p + 1], panel_suffix(p, xi));
}

ScaledC CumulativeIntegral::total() const { return prefix_[grid_->panels()]; }

}  // namespace airyspectra
