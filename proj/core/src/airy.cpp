#include "airyspectra/airy.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace airyspectra {

namespace {

// ---------------------------------------------------------------------------
// Double-double arithmetic for the Maclaurin series. The series at |z| near
// the crossover radius cancels ~12 decimal digits on the positive axis, so a
// plain double accumulation cannot reach the 1e-10 contract; ~32 working
// digits leave plenty.
// ---------------------------------------------------------------------------

struct dd {
  double hi = 0.0;
  double lo = 0.0;
};

inline dd two_sum(double a, double b) {
  const double s = a + b;
  const double bb = s - a;
  return {s, (a - (s - bb)) + (b - bb)};
}

inline dd quick_two_sum(double a, double b) {
  const double s = a + b;
  return {s, b - (s - a)};
}

inline void split(double a, double& hi, double& lo) {
  const double t = 134217729.0 * a;  // 2^27 + 1
  hi = t - (t - a);
  lo = a - hi;
}

inline dd two_prod(double a, double b) {
  const double p = a * b;
  double ah, al, bh, bl;
  split(a, ah, al);
  split(b, bh, bl);
  return {p, ((ah * bh - p) + ah * bl + al * bh) + al * bl};
}

inline dd dd_add(const dd& a, const dd& b) {
  dd s = two_sum(a.hi, b.hi);
  const dd t = two_sum(a.lo, b.lo);
  s.lo += t.hi;
  s = quick_two_sum(s.hi, s.lo);
  s.lo += t.lo;
  return quick_two_sum(s.hi, s.lo);
}

inline dd dd_sub(const dd& a, const dd& b) { return dd_add(a, {-b.hi, -b.lo}); }

inline dd dd_mul(const dd& a, const dd& b) {
  dd p = two_prod(a.hi, b.hi);
  p.lo += a.hi * b.lo + a.lo * b.hi;
  return quick_two_sum(p.hi, p.lo);
}

inline dd dd_div_d(const dd& a, double b) {
  const double q1 = a.hi / b;
  const dd p = two_prod(q1, b);
  const double q2 = (((a.hi - p.hi) - p.lo) + a.lo) / b;
  return quick_two_sum(q1, q2);
}

inline double dd_to_double(const dd& a) { return a.hi + a.lo; }

struct ddc {
  dd re, im;
};

inline ddc ddc_from(Complex z) { return {{z.real(), 0.0}, {z.imag(), 0.0}}; }

inline ddc ddc_add(const ddc& a, const ddc& b) {
  return {dd_add(a.re, b.re), dd_add(a.im, b.im)};
}

inline ddc ddc_sub(const ddc& a, const ddc& b) {
  return {dd_sub(a.re, b.re), dd_sub(a.im, b.im)};
}

inline ddc ddc_mul(const ddc& a, const ddc& b) {
  return {dd_sub(dd_mul(a.re, b.re), dd_mul(a.im, b.im)),
          dd_add(dd_mul(a.re, b.im), dd_mul(a.im, b.re))};
}

inline ddc ddc_mul_dd(const ddc& a, const dd& b) {
  return {dd_mul(a.re, b), dd_mul(a.im, b)};
}

inline ddc ddc_div_d(const ddc& a, double b) {
  return {dd_div_d(a.re, b), dd_div_d(a.im, b)};
}

inline double ddc_mag(const ddc& a) {
  return std::abs(a.re.hi) + std::abs(a.im.hi);
}

inline Complex ddc_to_complex(const ddc& a) {
  return {dd_to_double(a.re), dd_to_double(a.im)};
}

// Initial values to double-double precision:
//   Ai(0)  = 1/(3^{2/3} Gamma(2/3)),  Ai'(0) = -1/(3^{1/3} Gamma(1/3)),
//   U'(0)  = 2*3^{1/6}/Gamma(1/3).
const dd kAi0{0.3550280538878172, 2.05233632436212e-17};
const dd kAip0{-0.2588194037928068, 2.522243111610832e-17};
const dd kUp0{0.8965767147076528, -5.072647554883461e-17};

constexpr double kPi = 3.141592653589793238462643383279502884;

// Principal z^{1/2} and z^{3/2} via std::sqrt (cut on the negative axis).
inline Complex half_power(Complex z) { return std::sqrt(z); }
inline Complex three_half_power(Complex z) { return z * std::sqrt(z); }
inline Complex quarter_power(Complex z) { return std::sqrt(std::sqrt(z)); }

// ---------------------------------------------------------------------------
// Maclaurin series from y'' = z y: with f, g the solutions fixed by
// f(0)=1, f'(0)=0 and g(0)=0, g'(0)=1, the coefficients obey
// c_{n+3} = c_n / ((n+3)(n+2)), and
//   Ai = Ai(0) f + Ai'(0) g,   U = U'(0) g.
// ---------------------------------------------------------------------------

struct SeriesSums {
  ddc f, fp, g, gp;
};

SeriesSums series_fg(Complex z) {
  const ddc zc = ddc_from(z);
  const ddc z2 = ddc_mul(zc, zc);
  const ddc z3 = ddc_mul(z2, zc);

  // Running terms: tf_k = c_{3k} z^{3k}, tg_k = c_{3k+1} z^{3k+1},
  // tfp_k = 3k c_{3k} z^{3k-1}, tgp_k = (3k+1) c_{3k+1} z^{3k}.
  ddc tf{{1.0, 0.0}, {0.0, 0.0}};
  ddc tg = zc;
  ddc tfp = ddc_div_d(z2, 2.0);  // first f' term, added at k = 1
  ddc tgp{{1.0, 0.0}, {0.0, 0.0}};

  SeriesSums s{tf, {{0.0, 0.0}, {0.0, 0.0}}, tg, tgp};

  constexpr double kEps = 1e-34;
  constexpr int kMaxK = 400;
  for (int k = 1; k < kMaxK; ++k) {
    const double a3k = 3.0 * k;
    tf = ddc_div_d(ddc_mul(tf, z3), a3k * (a3k - 1.0));
    tg = ddc_div_d(ddc_mul(tg, z3), (a3k + 1.0) * a3k);
    if (k > 1) tfp = ddc_div_d(ddc_mul(tfp, z3), (a3k - 1.0) * (a3k - 3.0));
    tgp = ddc_div_d(ddc_mul(tgp, z3), a3k * (a3k - 2.0));

    s.f = ddc_add(s.f, tf);
    s.g = ddc_add(s.g, tg);
    s.fp = ddc_add(s.fp, tfp);
    s.gp = ddc_add(s.gp, tgp);

    const double tol_f = kEps * (ddc_mag(s.f) + ddc_mag(s.g));
    const double tol_p = kEps * (ddc_mag(s.fp) + ddc_mag(s.gp));
    if (ddc_mag(tf) < tol_f && ddc_mag(tg) < tol_f &&
        ddc_mag(tfp) < tol_p && ddc_mag(tgp) < tol_p) {
      break;
    }
  }
  return s;
}

// ---------------------------------------------------------------------------
// Asymptotic expansion (valid |arg z| <= 2π/3 at the accuracies used here):
//   Ai(z)  =  z^{-1/4}/(2 sqrt(pi)) e^{-ζ} Σ (-1)^k u_k ζ^{-k},
//   Ai'(z) = -z^{+1/4}/(2 sqrt(pi)) e^{-ζ} Σ (-1)^k v_k ζ^{-k},
// ζ = (2/3) z^{3/2}, u_0 = v_0 = 1,
// u_k = u_{k-1} (6k-5)(6k-3)(6k-1) / (216 k (2k-1)), v_k = u_k (6k+1)/(1-6k).
// Terms added until < 1e-16 of the partial sum, capped at 15.
// ---------------------------------------------------------------------------

ScaledFunctionValue ai_asym(Complex z) {
  const Complex zeta = (2.0 / 3.0) * three_half_power(z);
  const Complex zinv = 1.0 / zeta;

  Complex s{1.0, 0.0};
  Complex sp{1.0, 0.0};
  Complex zpow{1.0, 0.0};
  double uk = 1.0;
  for (int k = 1; k <= 15; ++k) {
    uk *= (6.0 * k - 5.0) * (6.0 * k - 3.0) * (6.0 * k - 1.0) /
          (216.0 * k * (2.0 * k - 1.0));
    const double vk = uk * (6.0 * k + 1.0) / (1.0 - 6.0 * k);
    zpow *= -zinv;
    const Complex term = uk * zpow;
    const Complex termp = vk * zpow;
    s += term;
    sp += termp;
    if (std::abs(term) < 1e-16 * std::abs(s) &&
        std::abs(termp) < 1e-16 * std::abs(sp)) {
      break;
    }
  }

  const Complex z14 = quarter_power(z);
  const double c = 0.5 / std::sqrt(kPi);
  // e^{-ζ} split into magnitude (the scale) and phase (kept in the mantissa).
  const Complex phase{std::cos(-zeta.imag()), std::sin(-zeta.imag())};
  ScaledFunctionValue r;
  r.value = c / z14 * s * phase;
  r.derivative = -c * z14 * sp * phase;
  r.log_scale = -zeta.real();
  return r;
}

constexpr double kTwoThirdsPi = 2.0 * kPi / 3.0;
const Complex kOmega{-0.5, 0.8660254037844386467637231707529362};    // e^{+2πi/3}
const Complex kOmegaBar{-0.5, -0.8660254037844386467637231707529362};

bool finite(Complex z) {
  return std::isfinite(z.real()) && std::isfinite(z.imag());
}

ScaledFunctionValue ai_impl(Complex z);

// Connection across the cut sector: Ai(z) = -[ω̄ Ai(ω̄ z) + ω Ai(ω z)],
// Ai'(z) = -[ω Ai'(ω̄ z) + ω̄ Ai'(ω z)], with ω = e^{2πi/3}. Both rotated
// arguments land in |arg| <= 2π/3 where the direct expansion applies.
ScaledFunctionValue ai_rotated(Complex z) {
  const ScaledFunctionValue a1 = ai_impl(kOmegaBar * z);
  const ScaledFunctionValue a2 = ai_impl(kOmega * z);
  const double s = std::max(a1.log_scale, a2.log_scale);
  const double e1 = std::exp(a1.log_scale - s);
  const double e2 = std::exp(a2.log_scale - s);
  ScaledFunctionValue r;
  r.value = -(kOmegaBar * a1.value * e1 + kOmega * a2.value * e2);
  r.derivative = -(kOmega * a1.derivative * e1 + kOmegaBar * a2.derivative * e2);
  r.log_scale = s;
  return r;
}

ScaledFunctionValue ai_impl(Complex z) {
  if (std::abs(z) <= airy_detail::kSeriesRadius) {
    return airy_detail::ai_series(z);
  }
  if (std::abs(std::arg(z)) <= kTwoThirdsPi + 1e-12) {
    return ai_asym(z);
  }
  return ai_rotated(z);
}

// U(z) = 2i [Ai(zω) - Ai(zω̄)], U'(z) = 2i [ω Ai'(zω) - ω̄ Ai'(zω̄)].
// Reproduces U(0) = 0, U'(0) = 2*3^{1/6}/Γ(1/3) and Eq.-(7)-type growth in
// |arg z| < π/3; the leading rotated terms differ in phase by π/3, so the
// difference never cancels below the natural magnitude of U.
ScaledFunctionValue u_impl_large(Complex z) {
  const ScaledFunctionValue a1 = ai_impl(kOmega * z);
  const ScaledFunctionValue a2 = ai_impl(kOmegaBar * z);
  const double s = std::max(a1.log_scale, a2.log_scale);
  const double e1 = std::exp(a1.log_scale - s);
  const double e2 = std::exp(a2.log_scale - s);
  const Complex two_i{0.0, 2.0};
  ScaledFunctionValue r;
  r.value = two_i * (a1.value * e1 - a2.value * e2);
  r.derivative = two_i * (kOmega * a1.derivative * e1 - kOmegaBar * a2.derivative * e2);
  r.log_scale = s;
  return r;
}

}  // namespace

namespace airy_detail {

ScaledFunctionValue ai_series(Complex z) {
  const SeriesSums s = series_fg(z);
  ScaledFunctionValue r;
  r.value = ddc_to_complex(ddc_add(ddc_mul_dd(s.f, kAi0), ddc_mul_dd(s.g, kAip0)));
  r.derivative = ddc_to_complex(ddc_add(ddc_mul_dd(s.fp, kAi0), ddc_mul_dd(s.gp, kAip0)));
  r.log_scale = 0.0;
  return r;
}

ScaledFunctionValue u_series(Complex z) {
  const SeriesSums s = series_fg(z);
  ScaledFunctionValue r;
  r.value = ddc_to_complex(ddc_mul_dd(s.g, kUp0));
  r.derivative = ddc_to_complex(ddc_mul_dd(s.gp, kUp0));
  r.log_scale = 0.0;
  return r;
}

ScaledFunctionValue ai_asymptotic(Complex z) { return ai_asym(z); }

}  // namespace airy_detail

ScaledFunctionValue ai_scaled(Complex z) {
  if (!finite(z)) throw InvalidParameter("ai: argument must be finite");
  return ai_impl(z);
}

ScaledFunctionValue u_scaled(Complex z) {
  if (!finite(z)) throw InvalidParameter("u: argument must be finite");
  if (std::abs(z) <= airy_detail::kSeriesRadius) {
    return airy_detail::u_series(z);
  }
  return u_impl_large(z);
}

FunctionValue ai(Complex z) { return ai_scaled(z).unscale(); }

FunctionValue u(Complex z) { return u_scaled(z).unscale(); }

Complex wronskian_ai_u(Complex z) {
  if (std::abs(z) <= 12.0) {
    const SeriesSums s = series_fg(z);
    const ddc aiv = ddc_add(ddc_mul_dd(s.f, kAi0), ddc_mul_dd(s.g, kAip0));
    const ddc aid = ddc_add(ddc_mul_dd(s.fp, kAi0), ddc_mul_dd(s.gp, kAip0));
    const ddc uv = ddc_mul_dd(s.g, kUp0);
    const ddc ud = ddc_mul_dd(s.gp, kUp0);
    const ddc w = ddc_sub(ddc_mul(aiv, ud), ddc_mul(aid, uv));
    return ddc_to_complex(w);
  }
  const ScaledFunctionValue a = ai_scaled(z);
  const ScaledFunctionValue b = u_scaled(z);
  const double e = a.log_scale + b.log_scale;  // cancels up to rounding
  return (a.value * b.derivative - a.derivative * b.value) * std::exp(e);
}

double airy_zero(int k) {
  if (k < 1) throw InvalidParameter("airy_zero: k must be >= 1");
  double t = std::pow(1.5 * kPi * (k - 0.25), 2.0 / 3.0);
  double f = 0.0, fp = 1.0;
  for (int iter = 0; iter < 50; ++iter) {
    const FunctionValue v = ai(Complex(-t, 0.0));
    f = v.value.real();
    fp = v.derivative.real();
    // h(t) = Ai(-t), h'(t) = -Ai'(-t)
    const double step = f / fp;
    t += step;
    if (std::abs(step) < 1e-15 * t) break;
  }
  const FunctionValue v = ai(Complex(-t, 0.0));
  if (!(std::abs(v.value) <= 1e-12 * std::abs(v.derivative))) {
    throw ConvergenceFailure("airy_zero: Newton did not converge for k=" + std::to_string(k));
  }
  return t;
}

PolyPair derivative_polynomials(int n) {
  if (n < 0) throw InvalidParameter("derivative_polynomials: n must be >= 0");
  auto deriv = [](const std::vector<long long>& p) {
    std::vector<long long> r;
    for (size_t i = 1; i < p.size(); ++i) r.push_back(static_cast<long long>(i) * p[i]);
    return r;
  };
  auto shift = [](const std::vector<long long>& p) {  // multiply by t
    if (p.empty()) return p;
    std::vector<long long> r(p.size() + 1, 0);
    std::copy(p.begin(), p.end(), r.begin() + 1);
    return r;
  };
  auto add = [](std::vector<long long> a, const std::vector<long long>& b) {
    if (a.size() < b.size()) a.resize(b.size(), 0);
    for (size_t i = 0; i < b.size(); ++i) a[i] += b[i];
    while (!a.empty() && a.back() == 0) a.pop_back();
    return a;
  };

  std::vector<long long> p{1};
  std::vector<long long> q;
  for (int j = 1; j <= n; ++j) {
    std::vector<long long> pn = add(deriv(p), shift(q));
    std::vector<long long> qn = add(p, deriv(q));
    p = std::move(pn);
    q = std::move(qn);
  }
  return {p, q};
}

Complex poly_eval(const std::vector<long long>& coeffs, Complex t) {
  Complex r{0.0, 0.0};
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
    r = r * t + static_cast<double>(*it);
  }
  return r;
}

}  // namespace airyspectra
