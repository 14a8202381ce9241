#pragma once

#include <functional>
#include <span>
#include <vector>

#include "airyspectra/types.hpp"

namespace airyspectra {

/// Composite Gauss-Legendre rule on [0, x_max]. Nodes are strictly increasing,
/// weights positive; panel_offsets delimits the per-panel node ranges so that
/// interpolation-grade operations (cumulative integrals, differentiation) can
/// work panel by panel at the order of the rule.
struct Grid {
  double x_max = 0.0;
  std::vector<double> nodes;
  std::vector<double> weights;
  std::vector<int> panel_offsets;   // size = panel count + 1
  std::vector<double> panel_edges;  // size = panel count + 1, edges in [0, x_max]

  static Grid composite_gauss(double x_max, int n_nodes);

  int size() const { return static_cast<int>(nodes.size()); }
  int panels() const { return static_cast<int>(panel_offsets.size()) - 1; }
};

/// Gauss-Legendre nodes/weights on [-1, 1].
void gauss_legendre(int m, std::vector<double>& nodes, std::vector<double>& weights);

/// Sampled function on a grid.
struct GridFunction {
  Grid grid;
  std::vector<Complex> values;

  int size() const { return static_cast<int>(values.size()); }
};

GridFunction sample(const Grid& grid, const std::function<Complex(double)>& f);

/// Quadrature inner product (f, g) = ∫ f ḡ dx.
Complex inner_product(const GridFunction& f, const GridFunction& g);
Complex integral(const GridFunction& f);
double norm(const GridFunction& f);

/// Per-panel spectral differentiation of the Lagrange interpolant.
GridFunction derivative(const GridFunction& f);

/// Cumulative integrals of a scaled integrand m_j e^{s_j} sampled on a grid:
/// prefix(x) = ∫_0^x, suffix(x) = ∫_x^{x_max}, both with spectral accuracy in
/// each panel and exponent bookkeeping that never forms e^{s_j} directly.
/// Suffix values are accumulated backward (not as total - prefix) so tails of
/// decaying integrands keep absolute accuracy at the panel scale.
class CumulativeIntegral {
 public:
  CumulativeIntegral(const Grid& grid, std::span<const Complex> mantissas,
                     std::span<const double> scales);

  ScaledC prefix_at_node(int i) const;
  ScaledC suffix_at_node(int i) const;
  ScaledC prefix_at(double x) const;
  ScaledC suffix_at(double x) const;
  ScaledC total() const;

 private:
  struct Panel {
    std::vector<Complex> legendre;  // coefficients of the integrand interpolant
    double scale = 0.0;             // shared exponent for this panel
    double a = 0.0, b = 0.0;        // physical edges
  };

  ScaledC panel_prefix(int p, double xi) const;  // ∫_{a_p}^{x(xi)} scaled
  ScaledC panel_suffix(int p, double xi) const;  // ∫_{x(xi)}^{b_p} scaled
  int panel_of(double x) const;
  int panel_of_node(int i) const;

  const Grid* grid_;
  std::vector<Panel> panels_;
  std::vector<ScaledC> prefix_;  // at panel starts
  std::vector<ScaledC> suffix_;  // at panel ends
};

}  // namespace airyspectra
