#pragma once

#include <optional>
#include <string>
#include <vector>

#include "airyspectra/grid.hpp"
#include "airyspectra/operator.hpp"
#include "airyspectra/types.hpp"

namespace airyspectra {

/// η(α) = sin^{3/2}(γ/3 - α) sin^{-1/2}(γ) - sin(3α/2) for γ in (0, π),
/// α in [0, γ/3]. Strictly decreasing in α with η(0) > 0 and η(γ/3) < 0.
double eta(double gamma, double alpha);

/// Unique root of η(α) = 0 in (0, γ/3), bisected to 1e-12 absolute.
/// Defined for γ in [2π/3, π); at γ = 5π/6 the root is exactly π/9.
double alpha0(double gamma);

/// Sector geometry behind the 5π/6 completeness threshold: for γ >= 2π/3 the
/// certificate estimate holds down to the ray -π + α₀, and the remaining gap
/// α₀ + 2γ/3 must stay below 2π/3, which happens exactly when γ < 5π/6.
struct SectorGeometry {
  double gamma = 0.0;
  std::optional<double> alpha0;  // absent when γ < 2π/3 (no extra ray needed)
  bool threshold_ok = false;     // γ < 5π/6
  double eta_at_zero = 0.0;      // η(0)
  double eta_at_third = 0.0;     // η(γ/3)
};

/// Verdict for |γ| (negative γ by reflection symmetry); |γ| must be < π.
SectorGeometry completeness_verdict(double gamma);

/// {"gamma":..., "alpha0":...|null, "threshold_ok":..., "eta_at_endpoints":[...]}
std::string sector_report_json(const SectorGeometry& g);

/// Biorthogonal coefficients a_k = (f, z_k)/c_k, k = 1..n_terms.
struct ExpansionCoefficients {
  std::vector<Complex> coeffs;

  int size() const { return static_cast<int>(coeffs.size()); }
};

ExpansionCoefficients expand(const AiryOperator& op, const GridFunction& f,
                             int n_terms);

/// Abel-regularized partial sum
///   S(t, f) = Σ_{k<=n} exp{-(e^{-iγ/2} λ_k)^β t} a_k y_k
/// on f's grid. The rotated eigenvalues e^{-iγ/2} λ_k sit on the ray arg = γ/6,
/// so every damping exponent has negative real part throughout the admissible
/// window β in (3/2, π/|γ|); the window is empty for |γ| >= 2π/3 (WindowEmpty).
GridFunction abel_sum(const AiryOperator& op, const GridFunction& f, double t,
                      double beta, int n_terms);

/// Damping exponents ξ_k = -(e^{-iγ/2} λ_k)^β for k = 1..n_terms.
std::vector<Complex> abel_exponents(const AiryOperator& op, double beta, int n_terms);

/// Completeness certificate F₀(w) = ∫ Ai(w + x c^{1/3}) f(x) dx; equals
/// (f, z_k) at w = -t_k, so it vanishes at the Airy zeros when f ⊥ z_k.
Complex eval_F0(const AiryOperator& op, const GridFunction& f, Complex w);

/// ‖f - Σ_{k<=n} a_k y_k‖₂ / ‖f‖₂. Diagnostic only: the eigenfunctions form a
/// complete minimal system but not a basis, so no decay rate is asserted.
double partial_sum_error(const AiryOperator& op, const GridFunction& f, int n_terms);

}  // namespace airyspectra
