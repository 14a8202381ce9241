// Acceptance suite: runs every contract criterion at its stated tolerance and
// prints one [PASS]/[FAIL] line per criterion. Exit code 0 only if all pass.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "airyspectra/airy.hpp"
#include "airyspectra/completeness.hpp"
#include "airyspectra/operator.hpp"
#include "airyspectra/resolvent.hpp"
#include "oracle.hpp"

using namespace airyspectra;

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

struct CriterionFailure {
  std::string what;
};

void require(bool ok, const std::string& msg) {
  if (!ok) throw CriterionFailure{msg};
}

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

// ---------------------------------------------------------------------------
// 1. Airy golden values against the extended-precision Gamma oracle.
// ---------------------------------------------------------------------------
void criterion_1() {
  double ai0, aip0, up0;
  oracle::initial_values(ai0, aip0, up0);
  const FunctionValue a = ai({0.0, 0.0});
  const FunctionValue b = u({0.0, 0.0});
  require(std::abs(a.value.real() - ai0) <= 1e-12 * std::abs(ai0),
          "Ai(0) off by " + fmt(std::abs(a.value.real() - ai0)));
  require(std::abs(a.derivative.real() - aip0) <= 1e-12 * std::abs(aip0),
          "Ai'(0) off by " + fmt(std::abs(a.derivative.real() - aip0)));
  require(std::abs(b.derivative.real() - up0) <= 1e-12 * std::abs(up0),
          "U'(0) off by " + fmt(std::abs(b.derivative.real() - up0)));
  require(b.value == Complex{0.0, 0.0}, "U(0) != 0");
}

// ---------------------------------------------------------------------------
// 2. Wronskian Ai U' - Ai' U = 1/pi at 200 random points in |z| <= 10.
// ---------------------------------------------------------------------------
void criterion_2() {
  std::mt19937 rng(424242);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const Complex inv_pi{1.0 / kPi, 0.0};
  double worst = 0.0;
  for (int i = 0; i < 200; ++i) {
    const double r = 10.0 * std::sqrt(unit(rng));
    const double th = 2.0 * kPi * unit(rng) - kPi;
    const Complex z = std::polar(r, th);
    worst = std::max(worst, std::abs(wronskian_ai_u(z) - inv_pi));
  }
  require(worst <= 1e-10, "worst |W - 1/pi| = " + fmt(worst));
}

// ---------------------------------------------------------------------------
// 3. Zero asymptotics: Newton zeros vs the seed law and the bisection oracle.
// ---------------------------------------------------------------------------
void criterion_3() {
  for (int k = 1; k <= 50; ++k) {
    const double tk = airy_zero(k);
    const double seed = std::pow(1.5 * kPi * (k - 0.25), 2.0 / 3.0);
    require(std::abs(tk - seed) <= 0.5 * std::pow(k, -4.0 / 3.0),
            "zero " + std::to_string(k) + " drifts " + fmt(std::abs(tk - seed)) +
                " from its seed");
  }
  const double t1 = airy_zero(1);
  require(std::abs(t1 - oracle::first_zero()) <= 1e-8,
          "t1 vs bisection oracle: " + fmt(std::abs(t1 - oracle::first_zero())));
  require(std::abs(t1 - 2.338107410459767) <= 1e-8, "t1 vs frozen value");
}

// ---------------------------------------------------------------------------
// 4. Green identity: finite differences recover f after applying the inverse.
// ---------------------------------------------------------------------------
void criterion_4() {
  std::mt19937 rng(77);
  std::uniform_real_distribution<double> amp(-1.0, 1.0), wid(0.4, 1.5), cen(1.0, 5.0);
  const Complex cs[] = {{1.0, 0.0}, {0.0, 1.0}, std::polar(1.0, 2.0 * kPi / 5.0)};

  for (int trial = 0; trial < 10; ++trial) {
    const double a1 = amp(rng), a2 = amp(rng), b1 = wid(rng), b2 = wid(rng);
    const double m1 = cen(rng), m2 = cen(rng);
    auto fx = [&](double x) {
      return Complex{a1 * x * std::exp(-b1 * (x - m1) * (x - m1)),
                     a2 * x * std::exp(-b2 * (x - m2) * (x - m2))};
    };
    for (const Complex c : cs) {
      const AiryOperator op(c);
      const Grid g =
          Grid::composite_gauss(20.0 / std::cos(op.gamma() / 3.0), 2000);
      const GridFunction f = sample(g, fx);
      const GreenSolution sol(op, f, {0.0, 0.0});

      const double h = 5e-3;
      double num = 0.0, den = 0.0;
      for (double x = 0.2; x <= 12.0; x += 0.03) {
        const Complex ypp = (-sol.value(x + 2 * h) + 16.0 * sol.value(x + h) -
                             30.0 * sol.value(x) + 16.0 * sol.value(x - h) -
                             sol.value(x - 2 * h)) /
                            (12.0 * h * h);
        const Complex res = -ypp + c * x * sol.value(x) - fx(x);
        num += std::norm(res);
        den += std::norm(fx(x));
      }
      const double rel = std::sqrt(num / den);
      require(rel <= 1e-4, "round-trip residual " + fmt(rel) + " for trial " +
                               std::to_string(trial));

      // Boundary and decay checks.
      const GridFunction y = sol.values_on_grid();
      double sup = 0.0;
      for (const Complex& v : y.values) sup = std::max(sup, std::abs(v));
      const double nf = norm(f);
      require(std::abs(sol.value(0.0)) <= 1e-10 * sup, "y(0) not Dirichlet-small");
      require(std::sqrt(g.x_max) * std::abs(sol.value(g.x_max)) <= 1e-6 * nf,
              "x^{1/2} y at x_max too large");
      require(std::abs(sol.derivative(g.x_max)) <= 1e-6 * nf, "y' at x_max too large");
    }
  }
}

// ---------------------------------------------------------------------------
// 5. Eigen-residuals, biorthogonality and c_1 at c = i.
// ---------------------------------------------------------------------------
void criterion_5() {
  const AiryOperator op({0.0, 1.0});
  const double h = 1e-3;
  for (int n = 1; n <= 8; ++n) {
    const Complex lam = eigenvalue(op, n);
    const double x_hi = (airy_zero(n) + 10.0) / std::cos(op.gamma() / 3.0);
    double num = 0.0, den = 0.0;
    for (double x = 2 * h; x <= x_hi; x += 0.05) {
      auto y = [&](double xx) { return eigenfunction(op, n, xx); };
      const Complex ypp = (-y(x + 2 * h) + 16.0 * y(x + h) - 30.0 * y(x) +
                           16.0 * y(x - h) - y(x - 2 * h)) /
                          (12.0 * h * h);
      num += std::norm(-ypp + op.c() * x * y(x) - lam * y(x));
      den += std::norm(y(x));
    }
    const double rel = std::sqrt(num / den);
    require(rel <= 1e-5, "residual " + fmt(rel) + " for n = " + std::to_string(n));
  }

  const Grid g = default_grid(op, 8, 2000);
  std::vector<GridFunction> y(8), z(8);
  std::vector<Complex> cs(8);
  for (int n = 0; n < 8; ++n) {
    y[n] = sample(g, [&](double x) { return eigenfunction(op, n + 1, x); });
    z[n] = sample(g, [&](double x) { return adjoint_eigenfunction(op, n + 1, x); });
    cs[n] = biorth_constant(op, n + 1, g);
  }
  for (int n = 0; n < 8; ++n) {
    for (int k = 0; k < 8; ++k) {
      if (n == k) continue;
      const double off = std::abs(inner_product(y[n], z[k]));
      require(off <= 1e-8 * std::max(std::abs(cs[n]), std::abs(cs[k])),
              "off-diagonal (y_" + std::to_string(n + 1) + ", z_" +
                  std::to_string(k + 1) + ") = " + fmt(off));
    }
  }

  const double t1 = airy_zero(1);
  const oracle::AiryValues at_t1 = oracle::airy({-t1, 0.0});
  const Complex formula = at_t1.aip * at_t1.aip / op.c_cbrt();
  require(std::abs(cs[0] - formula) <= 1e-6 * std::abs(formula),
          "c_1 vs derived oracle: " + fmt(std::abs(cs[0] - formula)));
}

// ---------------------------------------------------------------------------
// 6. Resolvent bound outside the sector and the self-adjoint cross-check.
// ---------------------------------------------------------------------------
void criterion_6() {
  const AiryOperator opi({0.0, 1.0});
  const Sector sec = numerical_range_sector(opi);
  const double radii[] = {2.0, 3.0, 4.5, 6.0, 8.0};
  const double angles[] = {0.75 * kPi, 0.95 * kPi, -0.9 * kPi, -0.5 * kPi, -0.1 * kPi};
  int checked = 0;
  for (double r : radii) {
    for (double th : angles) {
      const Complex lam = std::polar(r, th);
      const double dist = sec.distance(lam);
      require(dist >= 0.5, "test point too close to the sector");
      const double n = resolvent_norm(opi, lam, 512);
      require(n * dist <= 1.05,
              "norm*dist = " + fmt(n * dist) + " at lambda = " + fmt(lam.real()) +
                  "+" + fmt(lam.imag()) + "i");
      ++checked;
    }
  }
  require(checked == 25, "expected 25 sample points");

  const AiryOperator op1({1.0, 0.0});
  const double want = 1.0 / (airy_zero(1) + 1.0);
  const double got = resolvent_norm(op1, {-1.0, 0.0}, 512);
  require(std::abs(got - want) <= 0.01 * want,
          "self-adjoint norm " + fmt(got) + " vs 1/(t1+1) = " + fmt(want));
}

// ---------------------------------------------------------------------------
// 7. Sector geometry: eta signs/monotonicity, alpha0(5pi/6), threshold chain.
// ---------------------------------------------------------------------------
void criterion_7() {
  for (int i = 0; i < 50; ++i) {
    const double g = 2.0 * kPi / 3.0 + (i + 0.5) / 50.0 * (kPi / 3.0);
    require(eta(g, 0.0) > 0.0, "eta(0) sign");
    require(eta(g, g / 3.0) < 0.0, "eta(gamma/3) sign");
    double prev = eta(g, 0.0);
    for (int j = 1; j <= 100; ++j) {
      const double a = j / 100.0 * (g / 3.0);
      const double v = eta(g, a);
      require(v < prev, "eta not strictly decreasing");
      prev = v;
    }
  }

  require(std::abs(alpha0(5.0 * kPi / 6.0) - kPi / 9.0) <= 1e-8,
          "alpha0(5pi/6) vs pi/9");

  for (int i = 0; i < 200; ++i) {
    const double g = 2.0 * kPi / 3.0 + (i + 0.5) / 200.0 * (kPi / 3.0);
    const bool threshold = g < 5.0 * kPi / 6.0;
    const bool geometric = alpha0(g) + 2.0 * g / 3.0 < 2.0 * kPi / 3.0;
    require(geometric == threshold, "geometric chain mismatch at gamma = " + fmt(g));
    require(completeness_verdict(g).threshold_ok == threshold,
            "verdict mismatch at gamma = " + fmt(g));
  }
}

// ---------------------------------------------------------------------------
// 8. Eigenvalue growth law at n = 50.
// ---------------------------------------------------------------------------
void criterion_8() {
  const double ratio =
      airy_zero(50) * std::pow(50.0, -2.0 / 3.0) / std::pow(1.5 * kPi, 2.0 / 3.0);
  require(std::abs(ratio - 1.0) <= 0.01, "growth ratio " + fmt(ratio));
}

// ---------------------------------------------------------------------------
// 9. Expansion recovery, Abel damping signs, and the t -> 0+ limit on spans.
// ---------------------------------------------------------------------------
void criterion_9() {
  const Complex coef[5] = {{1.0, 0.0}, {0.7, 0.0}, {0.0, 0.5}, {-0.4, 0.0}, {0.3, 0.0}};
  for (const double g : {kPi / 3.0, kPi / 2.0}) {
    const AiryOperator op(std::polar(1.0, g));
    const Grid grid = default_grid(op, 6, 1600);
    GridFunction f;
    f.grid = grid;
    f.values.assign(grid.size(), Complex{0.0, 0.0});
    for (int k = 0; k < 5; ++k) {
      for (int i = 0; i < grid.size(); ++i) {
        f.values[i] += coef[k] * eigenfunction(op, k + 1, grid.nodes[i]);
      }
    }

    const ExpansionCoefficients a = expand(op, f, 5);
    for (int k = 0; k < 5; ++k) {
      require(std::abs(a.coeffs[k] - coef[k]) <= 1e-6,
              "coefficient " + std::to_string(k + 1) + " off by " +
                  fmt(std::abs(a.coeffs[k] - coef[k])));
    }

    // Damping exponents at mid-window beta have negative real parts.
    const double beta_mid = 0.5 * (1.5 + kPi / g);
    for (const Complex xi : abel_exponents(op, beta_mid, 50)) {
      require(xi.real() < 0.0, "non-damping Abel exponent");
    }

    // Strong limit on the finite span at t = 1e-6 (beta = 1.6, valid in both windows).
    const GridFunction s = abel_sum(op, f, 1e-6, 1.6, 5);
    double e = 0.0;
    for (int i = 0; i < grid.size(); ++i) {
      e += grid.weights[i] * std::norm(s.values[i] - f.values[i]);
    }
    const double rel = std::sqrt(e) / norm(f);
    require(rel <= 1e-4, "||S(t,f) - f||/||f|| = " + fmt(rel));
  }
}

// ---------------------------------------------------------------------------
// 10. Certificate: F0 vanishes at -t_1..-t_6 for f orthogonal to z_1..z_6.
// ---------------------------------------------------------------------------
void criterion_10() {
  const AiryOperator op({0.0, 1.0});
  const Grid g = default_grid(op, 8, 2400);

  std::mt19937 rng(1009);
  std::uniform_real_distribution<double> amp(-1.0, 1.0), wid(0.3, 1.2), cen(1.0, 8.0);
  GridFunction f = sample(g, [&](double x) {
    double re = 0.0, im = 0.0;
    for (int m = 0; m < 3; ++m) {
      re += amp(rng) * x * std::exp(-wid(rng) * (x - cen(rng)) * (x - cen(rng)));
      im += 0.5 * amp(rng) * x * std::exp(-wid(rng) * (x - cen(rng)) * (x - cen(rng)));
    }
    return Complex{re, im};
  });

  for (int pass = 0; pass < 2; ++pass) {
    const ExpansionCoefficients a = expand(op, f, 6);
    for (int k = 0; k < 6; ++k) {
      for (int i = 0; i < g.size(); ++i) {
        f.values[i] -= a.coeffs[k] * eigenfunction(op, k + 1, g.nodes[i]);
      }
    }
  }

  const double nf = norm(f);
  require(nf > 0.0, "orthogonalized f vanished");
  for (int k = 1; k <= 6; ++k) {
    const double v = std::abs(eval_F0(op, f, {-airy_zero(k), 0.0}));
    require(v <= 1e-6 * nf,
            "|F0(-t_" + std::to_string(k) + ")| = " + fmt(v) + " vs " + fmt(1e-6 * nf));
  }
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    double time_limit_s;
    std::function<void()> run;
  };
  const std::vector<Criterion> criteria = {
      {"1 airy golden values (Gamma oracle, rel 1e-12)", 1.0, criterion_1},
      {"2 wronskian 1/pi at 200 points in |z|<=10 (abs 1e-10)", 1.0, criterion_2},
      {"3 zero asymptotics k<=50 and t1 oracle (1e-8)", 5.0, criterion_3},
      {"4 green identity round trip (rel 1e-4, 2000 nodes)", 60.0, criterion_4},
      {"5 eigen-residuals 1e-5, biorthogonality 1e-8, c1 1e-6", 30.0, criterion_5},
      {"6 resolvent bound norm*dist<=1.05 at 512 nodes", 120.0, criterion_6},
      {"7 sector geometry: eta, alpha0(5pi/6)=pi/9, 5pi/6 chain", 1.0, criterion_7},
      {"8 growth law |t50 ratio - 1| <= 0.01", 1.0, criterion_8},
      {"9 expansion recovery, abel damping, strong limit", 60.0, criterion_9},
      {"10 certificate F0(-t_k) <= 1e-6 ||f||", 30.0, criterion_10},
  };

  int failures = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    std::string error;
    try {
      c.run();
    } catch (const CriterionFailure& f) {
      error = f.what;
    } catch (const std::exception& e) {
      error = std::string("exception: ") + e.what();
    }
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (error.empty() && elapsed > c.time_limit_s) {
      error = "time limit exceeded: " + fmt(elapsed) + " s > " + fmt(c.time_limit_s) + " s";
    }
    if (error.empty()) {
      std::printf("[PASS] criterion %s (%.2f s)\n", c.name, elapsed);
    } else {
      std::printf("[FAIL] criterion %s (%.2f s): %s\n", c.name, elapsed, error.c_str());
      ++failures;
    }
  }
  return failures == 0 ? 0 : 1;
}
