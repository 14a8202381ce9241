// Command-line front end: spectra, pseudospectra, sector reports, expansions
// and Abel-regularized sums of the complex Airy operator -d²/dx² + cx on
// [0, ∞), emitted as deterministic CSV/JSON.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "airyspectra/airy.hpp"
#include "airyspectra/completeness.hpp"
#include "airyspectra/numfmt.hpp"
#include "airyspectra/operator.hpp"
#include "airyspectra/resolvent.hpp"

namespace {

using airyspectra::Complex;

// One run's resolved configuration; identical configs produce byte-identical
// output files (all formatting is shortest-round-trip, ordering fixed).
struct RunConfig {
  Complex c{1.0, 0.0};
  double x_max = 0.0;   // 0 = derive from the operator
  int n_nodes = 0;      // 0 = derive from the grid builder
  std::string output_path;
  unsigned seed = 12345;
};

// Complex numbers on the command line as `re`, `imi`, or `re+imi` (e.g. 0+1i).
std::optional<Complex> parse_complex(const std::string& s) {
  if (s.empty()) return std::nullopt;
  auto parse_real = [](const std::string& t) -> std::optional<double> {
    if (t.empty()) return std::nullopt;
    try {
      size_t pos = 0;
      const double v = std::stod(t, &pos);
      if (pos != t.size()) return std::nullopt;
      return v;
    } catch (...) {
      return std::nullopt;
    }
  };

  if (s.back() != 'i') {
    const auto re = parse_real(s);
    if (!re) return std::nullopt;
    return Complex{*re, 0.0};
  }

  const std::string body = s.substr(0, s.size() - 1);
  // Split at the last sign that is not an exponent sign and not leading.
  size_t split = std::string::npos;
  for (size_t k = body.size(); k-- > 1;) {
    if ((body[k] == '+' || body[k] == '-') &&
        body[k - 1] != 'e' && body[k - 1] != 'E') {
      split = k;
      break;
    }
  }
  if (split == std::string::npos) {
    const auto im = parse_real(body);
    if (!im) return std::nullopt;
    return Complex{0.0, *im};
  }
  const auto re = parse_real(body.substr(0, split));
  const auto im = parse_real(body.substr(split));
  if (!re || !im) return std::nullopt;
  return Complex{*re, *im};
}

std::string format_complex(Complex z) {
  using airyspectra::format_double;
  if (z.imag() == 0.0) return format_double(z.real());
  std::string s = format_double(z.real());
  if (z.imag() >= 0.0) s += '+';
  return s + format_double(z.imag()) + 'i';
}

std::vector<double> parse_csv_doubles(const std::string& s, size_t count) {
  std::vector<double> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      size_t pos = 0;
      out.push_back(std::stod(item, &pos));
      if (pos != item.size()) return {};
    } catch (...) {
      return {};
    }
  }
  if (out.size() != count) return {};
  return out;
}

int env_threads() {
  const char* v = std::getenv("AIRY_SPECTRA_THREADS");
  if (!v) return 0;
  try {
    return std::max(0, std::stoi(v));
  } catch (...) {
    return 0;
  }
}

std::ostream& open_output(const std::string& path, std::ofstream& file) {
  if (path.empty()) return std::cout;
  file.open(path, std::ios::binary);  // "\n" line ends on every platform
  if (!file) throw airyspectra::Error("cannot open output file: " + path);
  return file;
}

// Built-in test-function families for expand/abel.
airyspectra::GridFunction make_test_function(const airyspectra::AiryOperator& op,
                                             const airyspectra::Grid& grid,
                                             const std::string& spec,
                                             unsigned seed) {
  using airyspectra::GridFunction;
  if (spec == "xexp") {
    return airyspectra::sample(grid, [](double x) { return Complex{x * std::exp(-x), 0.0}; });
  }
  if (spec == "gauss") {
    return airyspectra::sample(grid, [](double x) { return Complex{x * std::exp(-x * x), 0.0}; });
  }
  if (spec.rfind("eig:", 0) == 0) {
    const int k = std::stoi(spec.substr(4));
    if (k < 1) throw airyspectra::InvalidParameter("eig:k needs k >= 1");
    return airyspectra::sample(grid, [&](double x) { return eigenfunction(op, k, x); });
  }
  if (spec == "rand") {
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> amp(-1.0, 1.0);
    std::uniform_real_distribution<double> width(0.5, 2.0);
    std::uniform_real_distribution<double> center(0.5, grid.x_max / 3.0);
    double a[3], b[3], c[3];
    for (int m = 0; m < 3; ++m) {
      a[m] = amp(rng);
      b[m] = width(rng);
      c[m] = center(rng);
    }
    return airyspectra::sample(grid, [&](double x) {
      double v = 0.0;
      for (int m = 0; m < 3; ++m) v += a[m] * x * std::exp(-b[m] * (x - c[m]) * (x - c[m]));
      return Complex{v, 0.0};
    });
  }
  // Otherwise a CSV file of samples `x,re[,im]`, linearly interpolated.
  std::ifstream in(spec);
  if (!in) throw airyspectra::InvalidParameter("unknown f-spec or unreadable file: " + spec);
  std::vector<double> xs;
  std::vector<Complex> vs;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::stringstream ss(line);
    std::string cell;
    std::vector<double> row;
    while (std::getline(ss, cell, ',')) row.push_back(std::stod(cell));
    if (row.size() < 2) throw airyspectra::InvalidParameter("sample file rows need x,re[,im]");
    xs.push_back(row[0]);
    vs.push_back(Complex{row[1], row.size() > 2 ? row[2] : 0.0});
  }
  if (xs.size() < 2) throw airyspectra::InvalidParameter("sample file needs at least two rows");
  return airyspectra::sample(grid, [&](double x) -> Complex {
    if (x <= xs.front() || x >= xs.back()) return {0.0, 0.0};
    const auto it = std::upper_bound(xs.begin(), xs.end(), x);
    const size_t j = static_cast<size_t>(it - xs.begin());
    const double w = (x - xs[j - 1]) / (xs[j] - xs[j - 1]);
    return vs[j - 1] * (1.0 - w) + vs[j] * w;
  });
}

airyspectra::Grid grid_for(const airyspectra::AiryOperator& op, int max_index,
                           int nodes, double xmax) {
  if (xmax > 0.0) {
    return airyspectra::Grid::composite_gauss(xmax, nodes > 0 ? nodes : 2000);
  }
  return airyspectra::default_grid(op, max_index, nodes);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"spectral toolkit for the complex Airy operator -y'' + cxy on the half-line"};
  app.require_subcommand(1);

  std::string c_str = "1";
  std::string z_str, fn = "ai", region_str, res_str = "32,32", f_spec = "xexp", out_path;
  int n = 8, nodes = 0, n_terms = 8;
  double xmax = 0.0, beta = 1.6, t_abel = 1e-3, gamma = 0.0;
  unsigned seed = 12345;

  auto* cmd_airy = app.add_subcommand("airy", "evaluate Ai or U at a point");
  cmd_airy->add_option("--z", z_str, "evaluation point, re+imi")->required();
  cmd_airy->add_option("--fn", fn, "ai|u")->check(CLI::IsMember({"ai", "u"}));

  auto* cmd_spectrum = app.add_subcommand("spectrum", "first n Airy zeros and eigenvalues");
  cmd_spectrum->add_option("--c", c_str, "operator constant c, re+imi");
  cmd_spectrum->add_option("--n", n, "eigenvalue count")->check(CLI::PositiveNumber);
  cmd_spectrum->add_option("--out", out_path, "output file (default stdout)");

  auto* cmd_pseudo = app.add_subcommand("pseudospectrum", "1/||resolvent|| on a grid");
  cmd_pseudo->add_option("--c", c_str, "operator constant c, re+imi");
  cmd_pseudo->add_option("--region", region_str, "re0,re1,im0,im1")->required();
  cmd_pseudo->add_option("--res", res_str, "nx,ny (default 32,32)");
  cmd_pseudo->add_option("--nodes", nodes, "quadrature nodes (default 256)");
  cmd_pseudo->add_option("--out", out_path, "output file (default stdout)");

  auto* cmd_sector = app.add_subcommand("sector", "completeness sector geometry report");
  cmd_sector->add_option("--gamma", gamma, "arg c in radians, |gamma| < pi")->required();

  auto* cmd_expand = app.add_subcommand("expand", "biorthogonal expansion coefficients");
  cmd_expand->add_option("--c", c_str, "operator constant c, re+imi");
  cmd_expand->add_option("--f", f_spec, "xexp|gauss|eig:k|rand|<csv file>");
  cmd_expand->add_option("--n", n_terms, "number of terms")->check(CLI::PositiveNumber);
  cmd_expand->add_option("--nodes", nodes, "quadrature nodes (default auto)");
  cmd_expand->add_option("--xmax", xmax, "truncation override");
  cmd_expand->add_option("--seed", seed, "seed for rand f-spec");
  cmd_expand->add_option("--out", out_path, "output file (default stdout)");

  auto* cmd_abel = app.add_subcommand("abel", "Abel-regularized eigenfunction sum S(t, f)");
  cmd_abel->add_option("--c", c_str, "operator constant c, re+imi");
  cmd_abel->add_option("--f", f_spec, "xexp|gauss|eig:k|rand|<csv file>");
  cmd_abel->add_option("--n", n_terms, "number of terms")->check(CLI::PositiveNumber);
  cmd_abel->add_option("--beta", beta, "Abel order, in (3/2, pi/|gamma|)");
  cmd_abel->add_option("--t", t_abel, "regularization time t > 0");
  cmd_abel->add_option("--nodes", nodes, "quadrature nodes (default auto)");
  cmd_abel->add_option("--xmax", xmax, "truncation override");
  cmd_abel->add_option("--seed", seed, "seed for rand f-spec");
  cmd_abel->add_option("--out", out_path, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (nodes != 0 && nodes < 16) {
    std::cerr << "airyspectra: --nodes must be at least 16\n";
    return 2;
  }

  using namespace airyspectra;
  try {
    if (*cmd_airy) {
      const auto z = parse_complex(z_str);
      if (!z) {
        std::cerr << "airyspectra: cannot parse --z '" << z_str << "'\n";
        return 2;
      }
      const FunctionValue v = fn == "ai" ? ai(*z) : u(*z);
      std::cout << format_complex(v.value) << ',' << format_complex(v.derivative) << '\n';
      return 0;
    }

    const auto c = parse_complex(c_str);
    if (!c && !*cmd_sector) {
      std::cerr << "airyspectra: cannot parse --c '" << c_str << "'\n";
      return 2;
    }

    if (*cmd_spectrum) {
      const AiryOperator op(*c);
      const SpectrumSlice s = spectrum(op, n);
      std::ofstream file;
      std::ostream& os = open_output(out_path, file);
      os << "n,t_n,re_lambda,im_lambda\n";
      for (int k = 0; k < n; ++k) {
        os << (k + 1) << ',' << format_double(s.t[k]) << ','
           << format_double(s.lambda[k].real()) << ','
           << format_double(s.lambda[k].imag()) << '\n';
      }
      return 0;
    }

    if (*cmd_pseudo) {
      const auto r = parse_csv_doubles(region_str, 4);
      const auto res = parse_csv_doubles(res_str, 2);
      if (r.empty() || res.empty() || res[0] < 2 || res[1] < 2 ||
          res[0] != std::floor(res[0]) || res[1] != std::floor(res[1])) {
        std::cerr << "airyspectra: malformed --region or --res\n";
        return 2;
      }
      const AiryOperator op(*c);
      const Region region{r[0], r[1], r[2], r[3]};
      const auto grid = pseudospectrum_grid(op, region, static_cast<int>(res[0]),
                                            static_cast<int>(res[1]),
                                            nodes > 0 ? nodes : 256, env_threads());
      std::ofstream file;
      std::ostream& os = open_output(out_path, file);
      write_csv(os, grid);
      return 0;
    }

    if (*cmd_sector) {
      if (!std::isfinite(gamma) || std::abs(gamma) >= 3.141592653589793) {
        std::cerr << "airyspectra: --gamma must satisfy |gamma| < pi\n";
        return 2;
      }
      std::cout << sector_report_json(completeness_verdict(gamma)) << '\n';
      return 0;
    }

    if (*cmd_expand) {
      const RunConfig cfg{*c, xmax, nodes, out_path, seed};
      const AiryOperator op(cfg.c);
      const Grid grid = grid_for(op, n_terms, cfg.n_nodes, cfg.x_max);
      const GridFunction f = make_test_function(op, grid, f_spec, cfg.seed);
      const ExpansionCoefficients a = expand(op, f, n_terms);
      std::ofstream file;
      std::ostream& os = open_output(out_path, file);
      os << "k,re_a,im_a,residual\n";
      for (int k = 1; k <= n_terms; ++k) {
        os << k << ',' << format_double(a.coeffs[k - 1].real()) << ','
           << format_double(a.coeffs[k - 1].imag()) << ','
           << format_double(partial_sum_error(op, f, k)) << '\n';
      }
      return 0;
    }

    if (*cmd_abel) {
      const RunConfig cfg{*c, xmax, nodes, out_path, seed};
      const AiryOperator op(cfg.c);
      const Grid grid = grid_for(op, n_terms, cfg.n_nodes, cfg.x_max);
      const GridFunction f = make_test_function(op, grid, f_spec, cfg.seed);
      const GridFunction s = abel_sum(op, f, t_abel, beta, n_terms);
      std::ofstream file;
      std::ostream& os = open_output(out_path, file);
      os << "x,re_s,im_s\n";
      for (int i = 0; i < s.size(); ++i) {
        os << format_double(s.grid.nodes[i]) << ','
           << format_double(s.values[i].real()) << ','
           << format_double(s.values[i].imag()) << '\n';
      }
      return 0;
    }
  } catch (const Error& e) {
    std::cerr << "airyspectra: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "airyspectra: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
