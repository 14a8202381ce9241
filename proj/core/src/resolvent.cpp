#include "airyspectra/resolvent.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <thread>

#include "airyspectra/airy.hpp"
#include "airyspectra/numfmt.hpp"

namespace airyspectra {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;
constexpr double kNearEigenvalue = 1e-6;

ScaledC val_of(const ScaledFunctionValue& v) { return {v.value, v.log_scale}; }
ScaledC der_of(const ScaledFunctionValue& v) { return {v.derivative, v.log_scale}; }

}  // namespace

EigenvalueDistance nearest_eigenvalue(const AiryOperator& op, Complex lambda) {
  const double c23 = std::pow(std::abs(op.c()), 2.0 / 3.0);
  const double tau = std::abs(lambda) / c23;
  // Index window around the inverted zero asymptote.
  const int guess = static_cast<int>(std::pow(tau, 1.5) / (1.5 * kPi) + 0.25);
  const int lo = std::max(1, guess - 2);
  const int hi = guess + 3;
  EigenvalueDistance best;
  best.distance = std::numeric_limits<double>::infinity();
  for (int n = lo; n <= hi; ++n) {
    const Complex ln = airy_zero(n) * op.c_pow23();
    const double d = std::abs(lambda - ln);
    if (d < best.distance) best = {n, ln, d};
  }
  return best;
}

GreenSolution::GreenSolution(const AiryOperator& op, const GridFunction& f,
                             Complex lambda)
    : op_(op), lambda_(lambda), grid_(f.grid) {
  mu_ = -lambda / op.c_pow23();
  near_eigenvalue_ = nearest_eigenvalue(op, lambda).distance < kNearEigenvalue;

  ai_mu_ = val_of(ai_scaled(mu_));
  u_mu_ = val_of(u_scaled(mu_));
  const ScaledC ai_mu = ai_mu_;
  const ScaledC u_mu = u_mu_;

  const int n = grid_.size();
  nodes_.resize(n);
  std::vector<Complex> g1(n), g2(n);
  std::vector<double> s1(n), s2(n);
  double max_log_chi = -std::numeric_limits<double>::infinity();
  for (int i = 0; i < n; ++i) {
    const Complex A = op.c_cbrt() * grid_.nodes[i] + mu_;
    const ScaledFunctionValue av = ai_scaled(A);
    const ScaledFunctionValue uv = u_scaled(A);
    NodeData& nd = nodes_[i];
    nd.chi = val_of(av);
    nd.chi_d = der_of(av);
    nd.psi = scaled_sub(scaled_mul(val_of(uv), ai_mu), scaled_mul(val_of(av), u_mu));
    nd.psi_d = scaled_sub(scaled_mul(der_of(uv), ai_mu), scaled_mul(der_of(av), u_mu));
    max_log_chi = std::max(max_log_chi, nd.chi.log_abs());

    const ScaledC i1 = scaled_mul(nd.psi, {f.values[i], 0.0});
    const ScaledC i2 = scaled_mul(nd.chi, {f.values[i], 0.0});
    g1[i] = i1.m;
    s1[i] = i1.s;
    g2[i] = i2.m;
    s2[i] = i2.s;
  }

  if (nodes_.back().chi.log_abs() > max_log_chi + std::log(1e-10)) {
    throw TruncationInsufficient(
        "green kernel: Ai factor has not decayed by x_max; enlarge the grid");
  }

  prefactor_ = ScaledC{kPi / (op.c_cbrt() * ai_mu.m), -ai_mu.s};
  prefactor_.renormalize();

  i1_.emplace(grid_, std::span<const Complex>(g1), std::span<const double>(s1));
  i2_.emplace(grid_, std::span<const Complex>(g2), std::span<const double>(s2));
}

GreenSolution::NodeData GreenSolution::at_point(double x) const {
  const Complex A = op_.c_cbrt() * x + mu_;
  const ScaledFunctionValue av = ai_scaled(A);
  const ScaledFunctionValue uv = u_scaled(A);
  NodeData nd;
  nd.chi = val_of(av);
  nd.chi_d = der_of(av);
  nd.psi = scaled_sub(scaled_mul(val_of(uv), ai_mu_), scaled_mul(val_of(av), u_mu_));
  nd.psi_d = scaled_sub(scaled_mul(der_of(uv), ai_mu_), scaled_mul(der_of(av), u_mu_));
  return nd;
}

Complex GreenSolution::value(double x) const {
  const NodeData nd = at_point(x);
  const ScaledC s = scaled_add(scaled_mul(nd.chi, i1_->prefix_at(x)),
                               scaled_mul(nd.psi, i2_->suffix_at(x)));
  return scaled_mul(prefactor_, s).unscale();
}

Complex GreenSolution::derivative(double x) const {
  const NodeData nd = at_point(x);
  const ScaledC s = scaled_add(scaled_mul(nd.chi_d, i1_->prefix_at(x)),
                               scaled_mul(nd.psi_d, i2_->suffix_at(x)));
  return scaled_mul(prefactor_, s).unscale() * op_.c_cbrt();
}

GridFunction GreenSolution::values_on_grid() const {
  GridFunction y;
  y.grid = grid_;
  y.values.resize(grid_.size());
  for (int i = 0; i < grid_.size(); ++i) {
    const ScaledC s = scaled_add(scaled_mul(nodes_[i].chi, i1_->prefix_at_node(i)),
                                 scaled_mul(nodes_[i].psi, i2_->suffix_at_node(i)));
    y.values[i] = scaled_mul(prefactor_, s).unscale();
  }
  return y;
}

GridFunction GreenSolution::derivatives_on_grid() const {
  GridFunction dy;
  dy.grid = grid_;
  dy.values.resize(grid_.size());
  for (int i = 0; i < grid_.size(); ++i) {
    const ScaledC s = scaled_add(scaled_mul(nodes_[i].chi_d, i1_->prefix_at_node(i)),
                                 scaled_mul(nodes_[i].psi_d, i2_->suffix_at_node(i)));
    dy.values[i] = scaled_mul(prefactor_, s).unscale() * op_.c_cbrt();
  }
  return dy;
}

GreenResult green_apply(const AiryOperator& op, const GridFunction& f) {
  return green_apply_shifted(op, f, Complex{0.0, 0.0});
}

GreenResult green_apply_shifted(const AiryOperator& op, const GridFunction& f,
                                Complex lambda) {
  const GreenSolution sol(op, f, lambda);
  return {sol.values_on_grid(), sol.derivatives_on_grid(), sol.near_eigenvalue()};
}

KernelMatrix kernel_matrix(const AiryOperator& op, Complex lambda, const Grid& grid) {
  const Complex mu = -lambda / op.c_pow23();
  const ScaledFunctionValue am = ai_scaled(mu);
  const ScaledFunctionValue um = u_scaled(mu);

  const int n = grid.size();
  std::vector<ScaledC> chi(n), psi(n);
  for (int i = 0; i < n; ++i) {
    const Complex A = op.c_cbrt() * grid.nodes[i] + mu;
    const ScaledFunctionValue av = ai_scaled(A);
    const ScaledFunctionValue uv = u_scaled(A);
    chi[i] = val_of(av);
    psi[i] = scaled_sub(scaled_mul(val_of(uv), val_of(am)),
                        scaled_mul(val_of(av), val_of(um)));
    const double sw = std::sqrt(grid.weights[i]);
    chi[i].m *= sw;
    psi[i].m *= sw;
  }

  ScaledC pre{kPi / (op.c_cbrt() * am.value), -am.log_scale};
  pre.renormalize();

  KernelMatrix k;
  k.n = n;
  k.grid = grid;
  k.entries.resize(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j <= i; ++j) {
      // min(x_i, x_j) = x_j, max = x_i for j <= i on the sorted nodes.
      const Complex m = psi[j].m * chi[i].m * pre.m;
      const double e = psi[j].s + chi[i].s + pre.s;
      if (e > 700.0) {
        throw OverflowError("kernel entry exponent out of range; lambda too close to spectrum?");
      }
      const Complex v = m * std::exp(e);
      k.entries[static_cast<size_t>(i) * n + j] = v;
      k.entries[static_cast<size_t>(j) * n + i] = v;
    }
  }
  return k;
}

double largest_singular_value(const KernelMatrix& k) {
  const int n = k.n;
  if (n == 0) return 0.0;
  std::vector<Complex> v(n), w(n), t(n);
  for (int i = 0; i < n; ++i) v[i] = 1.0 + 0.25 * std::sin(1.0 + i);
  auto normalize = [](std::vector<Complex>& x) {
    double s = 0.0;
    for (const Complex& xi : x) s += std::norm(xi);
    s = std::sqrt(s);
    if (s > 0.0) {
      for (Complex& xi : x) xi /= s;
    }
    return s;
  };
  normalize(v);

  auto matvec = [&](const std::vector<Complex>& x, std::vector<Complex>& out) {
    for (int i = 0; i < n; ++i) {
      Complex acc{0.0, 0.0};
      const Complex* row = &k.entries[static_cast<size_t>(i) * n];
      for (int j = 0; j < n; ++j) acc += row[j] * x[j];
      out[i] = acc;
    }
  };

  double sigma = 0.0;
  for (int it = 0; it < 10000; ++it) {
    matvec(v, w);
    const double s = normalize(w);  // ‖K v‖
    // K* w = conj(K conj(w)) since K is complex symmetric.
    for (int i = 0; i < n; ++i) w[i] = std::conj(w[i]);
    matvec(w, t);
    for (int i = 0; i < n; ++i) v[i] = std::conj(t[i]);
    normalize(v);
    if (s == 0.0) return 0.0;
    if (std::abs(s - sigma) <= 1e-6 * s) return s;
    sigma = s;
  }
  throw ConvergenceFailure("largest_singular_value: power iteration did not converge");
}

namespace {

Grid resolvent_grid(const AiryOperator& op, double mu_abs, int n_nodes) {
  const double ac = std::cbrt(std::abs(op.c()));
  const double t1 = airy_zero(1);
  const double x_max = (std::max(t1, mu_abs) + 15.0) / (ac * std::cos(op.gamma() / 3.0));
  return Grid::composite_gauss(x_max, n_nodes);
}

}  // namespace

double resolvent_norm(const AiryOperator& op, Complex lambda, const Grid& grid) {
  return largest_singular_value(kernel_matrix(op, lambda, grid));
}

double resolvent_norm(const AiryOperator& op, Complex lambda, int n_nodes) {
  if (n_nodes < 64) throw InvalidParameter("resolvent_norm: need n_nodes >= 64");
  const double mu_abs = std::abs(lambda) / std::pow(std::abs(op.c()), 2.0 / 3.0);
  return resolvent_norm(op, lambda, resolvent_grid(op, mu_abs, n_nodes));
}

PseudospectrumResult pseudospectrum_grid(const AiryOperator& op, const Region& region,
                                         int nx, int ny, int n_nodes, int n_threads) {
  if (nx < 2 || ny < 2) throw InvalidParameter("pseudospectrum: resolution must be >= 2x2");
  if (!(region.re0 <= region.re1) || !(region.im0 <= region.im1) ||
      !std::isfinite(region.re0) || !std::isfinite(region.re1) ||
      !std::isfinite(region.im0) || !std::isfinite(region.im1)) {
    throw InvalidParameter("pseudospectrum: region must be a bounded rectangle");
  }
  if (n_nodes < 64) throw InvalidParameter("pseudospectrum: need n_nodes >= 64");

  // One quadrature grid serves every point of the sweep.
  const double corner = std::max(std::hypot(region.re0, region.im0),
                                 std::max(std::hypot(region.re0, region.im1),
                                          std::max(std::hypot(region.re1, region.im0),
                                                   std::hypot(region.re1, region.im1))));
  const double mu_abs = corner / std::pow(std::abs(op.c()), 2.0 / 3.0);
  const Grid grid = resolvent_grid(op, mu_abs, n_nodes);

  PseudospectrumResult r;
  r.region = region;
  r.nx = nx;
  r.ny = ny;
  r.values.assign(static_cast<size_t>(nx) * ny, 0.0);

  const double dre = (region.re1 - region.re0) / (nx - 1);
  const double dim = (region.im1 - region.im0) / (ny - 1);

  auto point_value = [&](int idx) {
    const int ix = idx % nx;
    const int iy = idx / nx;
    const Complex lambda{region.re0 + ix * dre, region.im0 + iy * dim};
    if (nearest_eigenvalue(op, lambda).distance < 1e-8) return 0.0;
    try {
      return 1.0 / resolvent_norm(op, lambda, grid);
    } catch (const Error&) {
      return std::numeric_limits<double>::quiet_NaN();
    }
  };

  const int total = nx * ny;
  int workers = n_threads > 0 ? n_threads
                              : static_cast<int>(std::thread::hardware_concurrency());
  workers = std::clamp(workers, 1, total);

  if (workers == 1) {
    for (int idx = 0; idx < total; ++idx) r.values[idx] = point_value(idx);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) {
      pool.emplace_back([&, w]() {
        for (int idx = w; idx < total; idx += workers) r.values[idx] = point_value(idx);
      });
    }
    for (auto& th : pool) th.join();
  }
  return r;
}

void write_csv(std::ostream& os, const PseudospectrumResult& r) {
  os << "re,im,inv_resolvent_norm\n";
  const double dre = (r.region.re1 - r.region.re0) / (r.nx - 1);
  const double dim = (r.region.im1 - r.region.im0) / (r.ny - 1);
  for (int iy = 0; iy < r.ny; ++iy) {
    for (int ix = 0; ix < r.nx; ++ix) {
      os << format_double(r.region.re0 + ix * dre) << ','
         << format_double(r.region.im0 + iy * dim) << ','
         << format_double(r.at(ix, iy)) << '\n';
    }
  }
}

}  // namespace airyspectra
