#include "airyspectra/operator.hpp"

#include <algorithm>
#include <cmath>

#include "airyspectra/airy.hpp"

namespace airyspectra {

namespace {
constexpr double kPi = 3.141592653589793238462643383279502884;
}

AiryOperator::AiryOperator(Complex c) : c_(c) {
  if (c == Complex(0.0, 0.0) || (c.imag() == 0.0 && c.real() <= 0.0)) {
    throw InvalidParameter("operator: c must lie off the ray (-inf, 0]");
  }
  gamma_ = std::arg(c);
  const double r = std::cbrt(std::abs(c));
  c_cbrt_ = std::polar(r, gamma_ / 3.0);
  c_pow23_ = c_cbrt_ * c_cbrt_;
}

Complex eigenvalue(const AiryOperator& op, int n) {
  if (n < 1) throw InvalidParameter("eigenvalue: n must be >= 1");
  return airy_zero(n) * op.c_pow23();
}

SpectrumSlice spectrum(const AiryOperator& op, int count) {
  if (count < 1) throw InvalidParameter("spectrum: count must be >= 1");
  SpectrumSlice s;
  s.t.reserve(count);
  s.lambda.reserve(count);
  for (int n = 1; n <= count; ++n) {
    s.t.push_back(airy_zero(n));
    s.lambda.push_back(s.t.back() * op.c_pow23());
  }
  return s;
}

Complex eigenfunction(const AiryOperator& op, int n, double x) {
  if (n < 1) throw InvalidParameter("eigenfunction: n must be >= 1");
  if (x < 0.0) throw InvalidParameter("eigenfunction: x must be >= 0");
  const double tn = airy_zero(n);
  return ai(Complex(-tn, 0.0) + x * op.c_cbrt()).value;
}

Complex adjoint_eigenfunction(const AiryOperator& op, int n, double x) {
  if (n < 1) throw InvalidParameter("adjoint_eigenfunction: n must be >= 1");
  if (x < 0.0) throw InvalidParameter("adjoint_eigenfunction: x must be >= 0");
  const double tn = airy_zero(n);
  return ai(Complex(-tn, 0.0) + x * std::conj(op.c_cbrt())).value;
}

Complex biorth_constant(const AiryOperator& op, int n, const Grid& grid) {
  if (n < 1) throw InvalidParameter("biorth_constant: n must be >= 1");
  const double tn = airy_zero(n);
  const Complex a = op.c_cbrt();

  Complex acc{0.0, 0.0};
  double peak = 0.0;
  double tail = 0.0;
  for (int i = 0; i < grid.size(); ++i) {
    const Complex y = ai(Complex(-tn, 0.0) + grid.nodes[i] * a).value;
    const Complex integrand = y * y;  // y_n * conj(z_n) = y_n² for real x
    acc += grid.weights[i] * integrand;
    peak = std::max(peak, std::abs(integrand));
    if (i == grid.size() - 1) tail = std::abs(integrand);
  }
  if (tail > 1e-12 * peak) {
    throw TruncationInsufficient("biorth_constant: integrand tail " +
                                 std::to_string(tail) + " exceeds 1e-12 of peak");
  }
  return acc;
}

bool Sector::contains(Complex z, double angular_tol) const {
  if (z == Complex(0.0, 0.0)) return true;
  const double a = std::arg(z);
  return a >= lower_arg - angular_tol && a <= upper_arg + angular_tol;
}

double Sector::distance(Complex z) const {
  if (contains(z)) return 0.0;
  auto ray_distance = [&](double theta) {
    // Distance from z to the ray { r e^{iθ} : r >= 0 }.
    const Complex w = z * std::polar(1.0, -theta);
    if (w.real() >= 0.0) return std::abs(w.imag());
    return std::abs(w);
  };
  return std::min(ray_distance(lower_arg), ray_distance(upper_arg));
}

Sector numerical_range_sector(const AiryOperator& op) {
  const double g = op.gamma();
  if (g >= 0.0) return {0.0, g};
  return {g, 0.0};
}

Complex rayleigh_quotient(const AiryOperator& op, const GridFunction& y) {
  const double n2 = norm(y);
  if (!(n2 > 0.0)) throw InvalidParameter("rayleigh_quotient: zero-norm input");

  const GridFunction dy = derivative(y);
  double kinetic = 0.0;    // ∫ |y'|²
  double potential = 0.0;  // ∫ x |y|²
  for (int i = 0; i < y.size(); ++i) {
    kinetic += y.grid.weights[i] * std::norm(dy.values[i]);
    potential += y.grid.weights[i] * y.grid.nodes[i] * std::norm(y.values[i]);
  }
  return (kinetic + op.c() * potential) / (n2 * n2);
}

Grid default_grid(const AiryOperator& op, int max_index, int n_nodes) {
  if (max_index < 1) throw InvalidParameter("default_grid: max_index must be >= 1");
  const double tN = airy_zero(max_index);
  const double ac = std::cbrt(std::abs(op.c()));
  const double x_max = (tN + 15.0) / (ac * std::cos(op.gamma() / 3.0));
  if (n_nodes <= 0) {
    // Resolve the fastest oscillation (local frequency |c|^{1/3} sqrt(t_N))
    // with ~10 nodes per wavelength, with a generous floor.
    const double waves = x_max * ac * std::sqrt(tN) / (2.0 * kPi);
    n_nodes = std::max(256, static_cast<int>(10.0 * waves) + 64);
  }
  return Grid::composite_gauss(x_max, n_nodes);
}

}  // namespace airyspectra
