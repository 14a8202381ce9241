#pragma once

#include <vector>

#include "airyspectra/grid.hpp"
#include "airyspectra/types.hpp"

namespace airyspectra {

/// The operator -d²/dx² + c x on [0, ∞) with Dirichlet condition at 0.
/// Caches the principal fractional powers of c; requires c off (-∞, 0].
class AiryOperator {
 public:
  explicit AiryOperator(Complex c);

  Complex c() const { return c_; }
  double gamma() const { return gamma_; }          // arg c in (-π, π)
  Complex c_cbrt() const { return c_cbrt_; }       // principal c^{1/3}
  Complex c_pow23() const { return c_pow23_; }     // c^{2/3} = (c^{1/3})²

 private:
  Complex c_;
  double gamma_;
  Complex c_cbrt_;
  Complex c_pow23_;
};

/// First N Airy zeros with the eigenvalues λ_n = t_n c^{2/3} they induce.
struct SpectrumSlice {
  std::vector<double> t;
  std::vector<Complex> lambda;
};

/// Sector between the rays arg λ = 0 and arg λ = γ that contains the
/// numerical range of the operator.
struct Sector {
  double lower_arg = 0.0;
  double upper_arg = 0.0;

  bool contains(Complex z, double angular_tol = 0.0) const;
  /// Euclidean distance from z to the closed sector.
  double distance(Complex z) const;
};

Complex eigenvalue(const AiryOperator& op, int n);
SpectrumSlice spectrum(const AiryOperator& op, int count);

/// y_n(x) = Ai(-t_n + x c^{1/3}).
Complex eigenfunction(const AiryOperator& op, int n, double x);

/// Eigenfunction of the adjoint (= the operator with c̄): z_n(x) = Ai(-t_n + x c̄^{1/3}).
/// For real x this equals the pointwise conjugate of eigenfunction().
Complex adjoint_eigenfunction(const AiryOperator& op, int n, double x);

/// c_n = ∫ y_n conj(z_n) dx = ∫ y_n² dx by quadrature on the given grid.
/// Throws TruncationInsufficient when the integrand has not decayed at x_max.
Complex biorth_constant(const AiryOperator& op, int n, const Grid& grid);

Sector numerical_range_sector(const AiryOperator& op);

/// (∫|y'|² + c ∫ x |y|²) / ∫|y|² with the derivative taken spectrally per panel.
Complex rayleigh_quotient(const AiryOperator& op, const GridFunction& y);

/// Grid with x_max = (t_N + 15)/(|c|^{1/3} cos(γ/3)) so the turning point of the
/// N-th eigenfunction plus a 15-unit decay buffer is inside the domain, and a node
/// count that resolves the oscillation scale (overridable via n_nodes > 0).
Grid default_grid(const AiryOperator& op, int max_index, int n_nodes = 0);

}  // namespace airyspectra
