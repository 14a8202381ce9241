#pragma once

#include <iosfwd>
#include <optional>
#include <vector>

#include "airyspectra/grid.hpp"
#include "airyspectra/operator.hpp"
#include "airyspectra/types.hpp"

namespace airyspectra {

/// (L_c - λ)^{-1} f for one fixed right-hand side, evaluable anywhere in
/// [0, x_max]. Built from the Dirichlet Green kernel
///   G_λ(x, t) = π c^{-1/3} ψ(min(x,t)) Ai(c^{1/3} max(x,t) + μ) / Ai(μ),
///   ψ(s) = U(c^{1/3}s + μ) Ai(μ) - Ai(c^{1/3}s + μ) U(μ),   μ = -λ c^{-2/3},
/// which solves -y'' + cxy - λy = f with y(0) = 0 and the decaying branch at
/// +∞; at λ = 0 it reduces to the plain π c^{-1/3} U(min) Ai(max) kernel.
/// All Ai/U factors are handled in scaled form so the growth and decay
/// exponents cancel before anything is exponentiated.
class GreenSolution {
 public:
  GreenSolution(const AiryOperator& op, const GridFunction& f, Complex lambda);

  Complex value(double x) const;
  Complex derivative(double x) const;
  GridFunction values_on_grid() const;
  GridFunction derivatives_on_grid() const;

  /// λ lies within 1e-6 of an eigenvalue: the result is returned but the
  /// kernel condition number makes it meaningless at double precision.
  bool near_eigenvalue() const { return near_eigenvalue_; }

 private:
  struct NodeData {
    ScaledC chi, chi_d;  // Ai(A), Ai'(A)
    ScaledC psi, psi_d;  // Dirichlet combination and its ds-derivative
  };
  NodeData at_point(double x) const;

  AiryOperator op_;
  Complex lambda_;
  Complex mu_;
  ScaledC ai_mu_, u_mu_;
  Grid grid_;
  std::vector<NodeData> nodes_;
  ScaledC prefactor_;  // π c^{-1/3} / Ai(μ)
  std::optional<CumulativeIntegral> i1_;  // ∫ ψ f
  std::optional<CumulativeIntegral> i2_;  // ∫ Ai f
  bool near_eigenvalue_ = false;
};

struct GreenResult {
  GridFunction y;
  GridFunction dy;
  bool near_eigenvalue = false;
};

/// y = L_c^{-1} f on f's grid, with the derivative from the differentiated kernel.
GreenResult green_apply(const AiryOperator& op, const GridFunction& f);

/// y = (L_c - λ)^{-1} f. Flags (but still returns) results within 1e-6 of an
/// eigenvalue; throws TruncationInsufficient when the kernel has not decayed
/// by x_max.
GreenResult green_apply_shifted(const AiryOperator& op, const GridFunction& f,
                                Complex lambda);

/// Quadrature-symmetrized Nyström matrix K_ij = w_i^{1/2} G_λ(x_i, x_j) w_j^{1/2};
/// its largest singular value estimates the L² resolvent norm.
struct KernelMatrix {
  int n = 0;
  std::vector<Complex> entries;  // row-major, finite by the scaled-product contract
  Grid grid;

  Complex at(int i, int j) const { return entries[static_cast<size_t>(i) * n + j]; }
};

KernelMatrix kernel_matrix(const AiryOperator& op, Complex lambda, const Grid& grid);

/// Largest singular value of K by power iteration on K*K, relative
/// convergence 1e-6, at most 1e4 iterations (ConvergenceFailure beyond).
double largest_singular_value(const KernelMatrix& k);

/// ‖(L_c - λ)^{-1}‖ estimate on a default grid with n_nodes quadrature nodes
/// (n_nodes >= 64) or on a caller-provided grid.
double resolvent_norm(const AiryOperator& op, Complex lambda, int n_nodes);
double resolvent_norm(const AiryOperator& op, Complex lambda, const Grid& grid);

/// Distance from λ to the nearest eigenvalue (with its index).
struct EigenvalueDistance {
  int n = 0;
  Complex lambda_n;
  double distance = 0.0;
};
EigenvalueDistance nearest_eigenvalue(const AiryOperator& op, Complex lambda);

struct Region {
  double re0 = 0.0, re1 = 0.0, im0 = 0.0, im1 = 0.0;
};

/// 1/‖R_c(λ)‖ sampled on an nx × ny grid over the region (endpoints included).
/// Grid points within 1e-8 of an eigenvalue report exactly 0; points whose
/// norm estimate fails are recorded as NaN instead of aborting the sweep.
/// Points are independent and evaluated on n_threads workers (0 = hardware).
struct PseudospectrumResult {
  Region region;
  int nx = 0, ny = 0;
  std::vector<double> values;  // row-major, iy outer, ix inner

  double at(int ix, int iy) const { return values[static_cast<size_t>(iy) * nx + ix]; }
};

PseudospectrumResult pseudospectrum_grid(const AiryOperator& op, const Region& region,
                                         int nx, int ny, int n_nodes,
                                         int n_threads = 0);

/// CSV with header `re,im,inv_resolvent_norm`, shortest round-trip decimals.
void write_csv(std::ostream& os, const PseudospectrumResult& r);

}  // namespace airyspectra
