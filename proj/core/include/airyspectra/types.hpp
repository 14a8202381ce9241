#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>

namespace airyspectra {

using Complex = std::complex<double>;

/// Base class for all numeric failures raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition on the arguments was violated (bad c, out-of-range gamma, ...).
class InvalidParameter : public Error {
 public:
  using Error::Error;
};

/// An unscaled result would exceed the double exponent range.
class OverflowError : public Error {
 public:
  using Error::Error;
};

/// The truncation point x_max is too small for the requested tolerance.
class TruncationInsufficient : public Error {
 public:
  using Error::Error;
};

/// An iteration failed to converge within its budget.
class ConvergenceFailure : public Error {
 public:
  using Error::Error;
};

/// The admissible beta window for Abel summation is empty.
class WindowEmpty : public Error {
 public:
  using Error::Error;
};

/// Value/derivative pair of a special function at one point.
struct FunctionValue {
  Complex value;
  Complex derivative;
};

/// Value/derivative pair with a shared exponent: true pair = mantissa * e^{log_scale}.
/// Keeps exponentially growing and decaying factors representable; products combine
/// by adding log_scale fields so the exponents cancel analytically.
struct ScaledFunctionValue {
  Complex value;
  Complex derivative;
  double log_scale = 0.0;

  /// Fold the scale back in. Throws OverflowError if e^{log_scale} cannot be
  /// represented; underflow flushes to zero.
  FunctionValue unscale() const {
    const double m = std::max(std::abs(value), std::abs(derivative));
    if (log_scale + std::log(m > 0 ? m : 1.0) > 700.0) {
      throw OverflowError("airy value overflows double range; use the scaled interface");
    }
    const double s = std::exp(log_scale);
    return {value * s, derivative * s};
  }
};

/// One complex number in scaled form m * e^{s}.
struct ScaledC {
  Complex m{0.0, 0.0};
  double s = 0.0;

  static ScaledC zero() { return {Complex(0.0, 0.0), 0.0}; }

  bool is_zero() const { return m == Complex(0.0, 0.0); }

  void renormalize() {
    const double a = std::abs(m);
    if (a > 0.0 && (a > 1e120 || a < 1e-120)) {
      const double k = std::log(a);
      s += k;
      m *= std::exp(-k);
    }
  }

  Complex unscale() const {
    if (is_zero()) return {0.0, 0.0};
    const double t = s + std::log(std::abs(m));
    if (t > 700.0) throw OverflowError("scaled value overflows double range");
    return m * std::exp(s);
  }

  double log_abs() const {
    if (is_zero()) return -std::numeric_limits<double>::infinity();
    return s + std::log(std::abs(m));
  }
};

inline ScaledC scaled_mul(const ScaledC& a, const ScaledC& b) {
  ScaledC r{a.m * b.m, a.s + b.s};
  r.renormalize();
  return r;
}

inline ScaledC scaled_add(const ScaledC& a, const ScaledC& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  const double s = std::max(a.s, b.s);
  ScaledC r{a.m * std::exp(a.s - s) + b.m * std::exp(b.s - s), s};
  r.renormalize();
  return r;
}

inline ScaledC scaled_sub(const ScaledC& a, const ScaledC& b) {
  return scaled_add(a, ScaledC{-b.m, b.s});
}

}  // namespace airyspectra
