#include "airyspectra/completeness.hpp"

#include <algorithm>
#include <cmath>

#include "airyspectra/airy.hpp"
#include "airyspectra/numfmt.hpp"

namespace airyspectra {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;
const double kTwoThirdsPi = 2.0 * kPi / 3.0;
const double kThreshold = 5.0 * kPi / 6.0;

// Eigenfunctions y_1..y_n sampled on f's grid, with their quadrature
// biorthogonality constants c_k = ∫ y_k² dx. Shared by expand/abel/F0.
struct EigenBasis {
  std::vector<std::vector<Complex>> y;  // y[k][node]
  std::vector<Complex> c;
};

EigenBasis eigen_basis(const AiryOperator& op, const Grid& grid, int n_terms) {
  EigenBasis b;
  b.y.resize(n_terms);
  b.c.resize(n_terms);
  for (int k = 0; k < n_terms; ++k) {
    const double tk = airy_zero(k + 1);
    auto& yk = b.y[k];
    yk.resize(grid.size());
    Complex ck{0.0, 0.0};
    double peak = 0.0;
    for (int i = 0; i < grid.size(); ++i) {
      yk[i] = ai(Complex(-tk, 0.0) + grid.nodes[i] * op.c_cbrt()).value;
      const Complex sq = yk[i] * yk[i];
      ck += grid.weights[i] * sq;
      peak = std::max(peak, std::abs(sq));
    }
    if (std::abs(yk.back() * yk.back()) > 1e-12 * peak) {
      throw TruncationInsufficient(
          "expansion: eigenfunction " + std::to_string(k + 1) +
          " has not decayed by x_max; enlarge the grid");
    }
    b.c[k] = ck;
  }
  return b;
}

}  // namespace

double eta(double gamma, double alpha) {
  if (!(gamma > 0.0 && gamma < kPi)) {
    throw InvalidParameter("eta: gamma must lie in (0, pi)");
  }
  if (!(alpha >= 0.0 && alpha <= gamma / 3.0)) {
    throw InvalidParameter("eta: alpha must lie in [0, gamma/3]");
  }
  const double s = std::sin(gamma / 3.0 - alpha);
  return s * std::sqrt(s / std::sin(gamma)) - std::sin(1.5 * alpha);
}

double alpha0(double gamma) {
  if (!(gamma >= kTwoThirdsPi && gamma < kPi)) {
    throw InvalidParameter("alpha0: gamma must lie in [2*pi/3, pi)");
  }
  double lo = 0.0, hi = gamma / 3.0;  // η(lo) > 0 > η(hi)
  while (hi - lo > 1e-12) {
    const double mid = 0.5 * (lo + hi);
    if (eta(gamma, mid) > 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

SectorGeometry completeness_verdict(double gamma) {
  const double g = std::abs(gamma);
  if (!(g < kPi)) throw InvalidParameter("completeness_verdict: |gamma| must be < pi");

  SectorGeometry r;
  r.gamma = g;
  r.threshold_ok = g < kThreshold;
  if (g > 0.0) {
    r.eta_at_zero = eta(g, 0.0);
    r.eta_at_third = eta(g, g / 3.0);
  }
  if (g >= kTwoThirdsPi) r.alpha0 = alpha0(g);
  return r;
}

std::string sector_report_json(const SectorGeometry& g) {
  std::string s = "{\"gamma\":" + format_double(g.gamma) + ",\"alpha0\":";
  s += g.alpha0 ? format_double(*g.alpha0) : std::string("null");
  s += ",\"threshold_ok\":";
  s += g.threshold_ok ? "true" : "false";
  s += ",\"eta_at_endpoints\":[" + format_double(g.eta_at_zero) + ',' +
       format_double(g.eta_at_third) + "]}";
  return s;
}

ExpansionCoefficients expand(const AiryOperator& op, const GridFunction& f,
                             int n_terms) {
  if (n_terms < 1) throw InvalidParameter("expand: n_terms must be >= 1");
  const EigenBasis b = eigen_basis(op, f.grid, n_terms);
  ExpansionCoefficients r;
  r.coeffs.resize(n_terms);
  for (int k = 0; k < n_terms; ++k) {
    // (f, z_k) = ∫ f conj(z_k) = ∫ f y_k for real nodes.
    Complex fz{0.0, 0.0};
    for (int i = 0; i < f.size(); ++i) {
      fz += f.grid.weights[i] * f.values[i] * b.y[k][i];
    }
    r.coeffs[k] = fz / b.c[k];
  }
  return r;
}

std::vector<Complex> abel_exponents(const AiryOperator& op, double beta, int n_terms) {
  const double g = op.gamma();
  const double ag = std::abs(g);
  if (ag >= kTwoThirdsPi) {
    throw WindowEmpty("abel_sum: beta window (3/2, pi/|gamma|) is empty for |gamma| >= 2*pi/3");
  }
  const double upper = ag > 0.0 ? kPi / ag : std::numeric_limits<double>::infinity();
  if (!(beta > 1.5 && beta < upper)) {
    throw InvalidParameter("abel_sum: beta outside the admissible window (3/2, pi/|gamma|)");
  }
  const Complex rot = std::polar(1.0, -g / 2.0);
  std::vector<Complex> xi(n_terms);
  for (int k = 0; k < n_terms; ++k) {
    const Complex mu = rot * airy_zero(k + 1) * op.c_pow23();  // arg = γ/6
    xi[k] = -std::pow(mu, beta);
  }
  return xi;
}

GridFunction abel_sum(const AiryOperator& op, const GridFunction& f, double t,
                      double beta, int n_terms) {
  if (n_terms < 1) throw InvalidParameter("abel_sum: n_terms must be >= 1");
  if (!(t > 0.0)) throw InvalidParameter("abel_sum: t must be positive");
  const std::vector<Complex> xi = abel_exponents(op, beta, n_terms);
  const ExpansionCoefficients a = expand(op, f, n_terms);
  const EigenBasis b = eigen_basis(op, f.grid, n_terms);

  GridFunction s;
  s.grid = f.grid;
  s.values.assign(f.size(), Complex{0.0, 0.0});
  for (int k = 0; k < n_terms; ++k) {
    const Complex d = std::exp(xi[k] * t) * a.coeffs[k];
    for (int i = 0; i < f.size(); ++i) s.values[i] += d * b.y[k][i];
  }
  return s;
}

Complex eval_F0(const AiryOperator& op, const GridFunction& f, Complex w) {
  Complex acc{0.0, 0.0};
  double peak = 0.0;
  double tail = 0.0;
  for (int i = 0; i < f.size(); ++i) {
    const Complex a = ai(w + f.grid.nodes[i] * op.c_cbrt()).value;
    acc += f.grid.weights[i] * a * f.values[i];
    peak = std::max(peak, std::abs(a));
    if (i == f.size() - 1) tail = std::abs(a);
  }
  if (tail > 1e-10 * peak) {
    throw TruncationInsufficient("eval_F0: Ai factor has not decayed by x_max");
  }
  return acc;
}

double partial_sum_error(const AiryOperator& op, const GridFunction& f, int n_terms) {
  const ExpansionCoefficients a = expand(op, f, n_terms);
  const EigenBasis b = eigen_basis(op, f.grid, n_terms);
  const double nf = norm(f);
  if (!(nf > 0.0)) throw InvalidParameter("partial_sum_error: zero-norm input");

  double acc = 0.0;
  for (int i = 0; i < f.size(); ++i) {
    Complex r = f.values[i];
    for (int k = 0; k < n_terms; ++k) r -= a.coeffs[k] * b.y[k][i];
    acc += f.grid.weights[i] * std::norm(r);
  }
  return std::sqrt(acc) / nf;
}

}  // namespace airyspectra
