#pragma once

#include <vector>

#include "airyspectra/types.hpp"

namespace airyspectra {

/// Airy function of the first kind: (Ai(z), Ai'(z)).
/// Maclaurin series (double-double accumulation) for |z| <= airy_detail::kSeriesRadius,
/// asymptotic expansion beyond, rotated through e^{±2πi/3} when |arg z| > 2π/3.
/// Throws OverflowError when the result exceeds the double exponent range
/// (use ai_scaled in that regime).
FunctionValue ai(Complex z);

/// Second kernel solution U = Vi - sqrt(3)*Ai, fixed by U(0) = 0,
/// U'(0) = 2*3^{1/6}/Gamma(1/3); Wronskian Ai*U' - Ai'*U = 1/pi.
FunctionValue u(Complex z);

/// Scaled variants: value = mantissa * e^{log_scale}, one exponent per pair.
ScaledFunctionValue ai_scaled(Complex z);
ScaledFunctionValue u_scaled(Complex z);

/// Ai(z) U'(z) - Ai'(z) U(z), identically 1/pi. Evaluated with double-double
/// products for |z| <= 12 where both factors can be exponentially large and a
/// plain double product would drown the constant in rounding noise.
Complex wronskian_ai_u(Complex z);

/// k-th zero of Ai on the negative axis: returns t_k > 0 with Ai(-t_k) = 0,
/// seeded by [(3π/2)(k - 1/4)]^{2/3} and polished by Newton.
/// Converges to |Ai(-t_k)| <= 1e-12 |Ai'(-t_k)|; throws ConvergenceFailure otherwise.
double airy_zero(int k);

/// Integer-coefficient pair with Ai^{(n)}(t) = P_n(t) Ai(t) + Q_n(t) Ai'(t).
/// Coefficients ascending in degree; the zero polynomial is an empty vector.
struct PolyPair {
  std::vector<long long> p;
  std::vector<long long> q;
};

/// P_n, Q_n from P_n = P'_{n-1} + t Q_{n-1}, Q_n = P_{n-1} + Q'_{n-1}.
PolyPair derivative_polynomials(int n);

/// Evaluate an integer-coefficient polynomial at a complex point.
Complex poly_eval(const std::vector<long long>& coeffs, Complex t);

namespace airy_detail {

/// Crossover radius between the Maclaurin series and the asymptotic expansion.
inline constexpr double kSeriesRadius = 8.0;

/// Individual branches, exposed for the cross-validation tests.
ScaledFunctionValue ai_series(Complex z);       // any z, accuracy degrades past ~12
ScaledFunctionValue u_series(Complex z);
ScaledFunctionValue ai_asymptotic(Complex z);   // |z| large, |arg z| <= 2π/3

}  // namespace airy_detail

}  // namespace airyspectra
