// Command-line front end: validate distribution specs, compute Gross maps and
// their energies, emit figure data, run exit-law simulations, and check the
// energy dominance of a domain against its rebuilt counterpart.
//
// Exit codes: 0 success, 1 I/O failure, 2 invalid spec or failed check,
// 3 divergent energy.

#include "CLI11.hpp"

#include <complex>
#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include "skorokhod/conformal.hpp"
#include "skorokhod/distribution.hpp"
#include "skorokhod/errors.hpp"
#include "skorokhod/fourier.hpp"
#include "skorokhod/io.hpp"
#include "skorokhod/montecarlo.hpp"

using namespace skorokhod;

namespace {

struct Options {
  std::string spec_path, map_path, batch_path, ref_path, out_path, map_out;
  std::string format = "csv", method = "series", target;
  std::size_t terms = 4096, grid = 65536, samples = 100000;
  std::uint64_t seed = 0;
  double tol = 0.0, step = 0.0, square = 1.0;
  bool have_square = false;
};

void emit(const std::string& text, const std::string& out_path) {
  std::cout << text;
  if (!out_path.empty()) write_text_file(out_path, text);
}

std::string bool_name(bool b) { return b ? "true" : "false"; }

int cmd_validate(const Options& o) {
  const DistributionSpec spec = read_spec_file(o.spec_path);
  const ValidationReport r = validate(spec);
  std::string text = "kind = " + kind_name(spec) + "\n";
  text += "mean = " + format_full(r.mean) + "\n";
  text += "variance = " + format_full(r.variance) + "\n";
  text += "support = [" + format_full(r.support.lo) + ", " +
          format_full(r.support.hi) + "]\n";
  text += "bounded = " + bool_name(r.bounded) + "\n";
  text += "pass = " + bool_name(r.pass) + "\n";
  if (!r.pass) text += "reason = " + r.reason + "\n";
  emit(text, o.out_path);
  return r.pass ? 0 : 2;
}

PowerSeriesMap map_of_series(const FourierSeries& s) {
  PowerSeriesMap m;
  m.coeff.resize(s.order());
  for (std::size_t k = 0; k < s.order(); ++k) m.coeff[k] = {s.a[k], -s.b[k]};
  return m;
}

int cmd_energy(const Options& o) {
  const DistributionSpec spec = read_spec_file(o.spec_path);
  const ValidationReport vr = validate(spec);
  if (!vr.pass) {
    std::cout << "invalid spec: " << vr.reason << "\n";
    return 2;
  }
  std::string text = "kind = " + kind_name(spec) + "\n";
  int code = 0;
  double series_value = 0.0, integral_value = 0.0;
  bool have_both = false;

  if (o.method == "series" || o.method == "both") {
    const FourierSeries s = gross_coefficients(quantile(spec), o.terms);
    if (!o.map_out.empty()) write_map_csv(o.map_out, map_of_series(s));
    series_value = kinetic_energy(s);
    text += "terms = " + std::to_string(o.terms) + "\n";
    text += "lambda_series = " + format_full(series_value) + "\n";
    if (o.terms >= 64) {
      const ConvergenceDiagnostic diag = energy_convergence_diagnostic(s);
      text += std::string("verdict = ") + verdict_name(diag.verdict) + "\n";
      text += "tail_exponent = " + format_full(diag.tail_exponent) + "\n";
      text += "tail_bound = " + format_full(diag.tail_bound) + "\n";
      if (diag.verdict == Verdict::divergent) {
        text += "partial_sums:\nterms,partial_sum\n";
        double acc = 0.0;
        std::size_t mark = 8;
        for (std::size_t n = 1; n <= s.order(); ++n) {
          const double dn = static_cast<double>(n);
          acc += 0.25 * dn * dn * (s.a[n - 1] * s.a[n - 1] + s.b[n - 1] * s.b[n - 1]);
          if (n == mark || n == s.order()) {
            text += std::to_string(n) + "," + format_full(acc) + "\n";
            while (mark <= n) mark *= 2;
          }
        }
        emit(text, o.out_path);
        return 3;
      }
    }
  }

  if (o.method == "integral" || o.method == "both") {
    integral_value = closed_form_energy(spec);
    text += "lambda_integral = " + format_full(integral_value) + "\n";
    have_both = o.method == "both";
  }
  if (have_both)
    text += "gap = " + format_full(std::abs(series_value - integral_value)) + "\n";
  emit(text, o.out_path);
  return code;
}

std::vector<std::complex<double>> cdf_polyline(const DistributionSpec& spec,
                                               std::size_t grid) {
  std::vector<std::complex<double>> pts;
  const QuantileFn q = quantile(spec);
  if (q.has_segments()) {
    for (const QuantileSegment& s : q.segments()) {
      pts.emplace_back(s.x_lo, s.u_lo);
      pts.emplace_back(s.x_hi, s.u_hi);
    }
    return pts;
  }
  const Interval sup = support(spec);
  const double margin = 0.05 * (sup.hi - sup.lo);
  const double lo = sup.lo - margin, hi = sup.hi + margin;
  for (std::size_t j = 0; j <= grid; ++j) {
    const double x =
        lo + (hi - lo) * static_cast<double>(j) / static_cast<double>(grid);
    pts.emplace_back(x, cdf(spec, x));
  }
  return pts;
}

std::vector<std::complex<double>> batch_staircase(const ExitBatch& batch) {
  std::vector<double> xs = batch.values;
  std::sort(xs.begin(), xs.end());
  std::vector<std::complex<double>> pts;
  const double n = static_cast<double>(xs.size());
  std::size_t i = 0;
  double level = 0.0;
  while (i < xs.size()) {
    std::size_t j = i;
    while (j < xs.size() && xs[j] == xs[i]) ++j;
    pts.emplace_back(xs[i], level);
    level = static_cast<double>(j) / n;
    pts.emplace_back(xs[i], level);
    i = j;
  }
  return pts;
}

int cmd_plot(const Options& o) {
  if (o.target == "domain") {
    PowerSeriesMap m;
    if (!o.map_path.empty())
      m = read_map_csv(o.map_path);
    else if (!o.spec_path.empty())
      m = gross_map(read_spec_file(o.spec_path), o.terms);
    else
      throw spec_error("plot domain needs --map or --spec");
    const std::vector<std::complex<double>> pts = boundary_trace(m, o.grid);
    if (o.format == "svg") {
      emit(svg_path_document(pts, true), o.out_path);
      return 0;
    }
    const std::vector<double> theta = PeriodicSamples::grid(o.grid);
    std::string text = "theta,re,im\n";
    for (std::size_t j = 0; j < pts.size(); ++j)
      text += format_full(theta[j]) + "," + format_full(pts[j].real()) + "," +
              format_full(pts[j].imag()) + "\n";
    emit(text, o.out_path);
    return 0;
  }
  if (o.target != "cdf") throw spec_error("plot target must be domain or cdf");

  std::vector<std::complex<double>> pts;
  if (!o.batch_path.empty())
    pts = batch_staircase(read_batch(o.batch_path));
  else if (!o.spec_path.empty())
    pts = cdf_polyline(read_spec_file(o.spec_path), o.grid);
  else
    throw spec_error("plot cdf needs --batch or --spec");
  if (o.format == "svg") {
    emit(svg_path_document(pts, false), o.out_path);
    return 0;
  }
  std::string text = "x,F\n";
  for (const auto& p : pts)
    text += format_full(p.real()) + "," + format_full(p.imag()) + "\n";
  emit(text, o.out_path);
  return 0;
}

int cmd_verify(const Options& o) {
  const PowerSeriesMap m = read_map_csv(o.map_path);
  const double tol = o.tol > 0.0 ? o.tol : 1e-3;
  const DominanceReport r = verify_energy_dominance(m, o.terms, o.grid, tol);
  std::string text = "lambda_u = " + format_full(r.lambda_u) + "\n";
  text += "lambda_g = " + format_full(r.lambda_g) + "\n";
  text += "excess = " + format_full(r.lambda_g - r.lambda_u) + "\n";
  text += "tol = " + format_full(tol) + "\n";
  text += "pass = " + bool_name(r.pass) + "\n";
  emit(text, o.out_path);
  return r.pass ? 0 : 2;
}

int cmd_simulate(const Options& o) {
  ExitBatch batch;
  if (o.have_square) {
    batch = simulate_square_exit(SquareDomain{o.square}, o.samples, o.seed, o.step);
  } else if (!o.map_path.empty()) {
    batch = sample_exit_conformal(read_map_csv(o.map_path), o.samples, o.seed);
  } else if (!o.spec_path.empty()) {
    batch = sample_exit_conformal(gross_map(read_spec_file(o.spec_path), o.terms),
                                  o.samples, o.seed);
  } else {
    throw spec_error("simulate needs --square, --map, or --spec");
  }

  std::string summary = "method = " + batch.method + "\n";
  summary += "n = " + std::to_string(batch.values.size()) + "\n";
  summary += "seed = " + std::to_string(batch.seed) + "\n";
  if (batch.discarded > 0)
    summary += "discarded = " + std::to_string(batch.discarded) + "\n";

  std::vector<std::string> extra;
  if (!o.ref_path.empty()) {
    const KsReport ks = ks_distance(batch, read_spec_file(o.ref_path));
    extra.push_back("ks_statistic=" + format_full(ks.statistic) +
                    " ks_threshold=" + format_full(ks.threshold) +
                    " ks_pass=" + bool_name(ks.pass));
    summary += "ks_statistic = " + format_full(ks.statistic) + "\n";
    summary += "ks_threshold = " + format_full(ks.threshold) + "\n";
    summary += "ks_pass = " + bool_name(ks.pass) + "\n";
  }
  write_batch(o.out_path, batch, extra);
  summary += "out = " + o.out_path + "\n";
  std::cout << summary;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Gross solutions of the planar Skorokhod embedding problem"};
  app.require_subcommand(1);
  Options o;

  CLI::App* validate_cmd =
      app.add_subcommand("validate", "check a distribution spec file");
  validate_cmd->add_option("--spec", o.spec_path, "distribution spec file")
      ->required();
  validate_cmd->add_option("--out", o.out_path, "also write the report here");

  CLI::App* energy_cmd = app.add_subcommand(
      "energy", "Skorokhod energy of the Gross solution of a target law");
  energy_cmd->add_option("--spec", o.spec_path, "distribution spec file")
      ->required();
  energy_cmd->add_option("--terms", o.terms, "series truncation (default 4096)");
  energy_cmd->add_option("--method", o.method, "series | integral | both")
      ->check(CLI::IsMember({"series", "integral", "both"}));
  energy_cmd->add_option("--out", o.out_path, "also write the report here");
  energy_cmd->add_option("--map-out", o.map_out,
                         "write the Gross map coefficients to this CSV");

  CLI::App* plot_cmd =
      app.add_subcommand("plot", "emit figure data: domain boundary or CDF");
  plot_cmd->add_option("target", o.target, "domain | cdf")
      ->required()
      ->check(CLI::IsMember({"domain", "cdf"}));
  plot_cmd->add_option("--spec", o.spec_path, "distribution spec file");
  plot_cmd->add_option("--map", o.map_path, "map coefficient CSV");
  plot_cmd->add_option("--batch", o.batch_path, "exit batch file (cdf target)");
  plot_cmd->add_option("--terms", o.terms, "series truncation for --spec");
  plot_cmd->add_option("--grid", o.grid, "points on the curve (default 65536)");
  plot_cmd->add_option("--format", o.format, "csv | svg")
      ->check(CLI::IsMember({"csv", "svg"}));
  plot_cmd->add_option("--out", o.out_path, "output file")->required();

  CLI::App* verify_cmd = app.add_subcommand(
      "verify", "check the rebuilt-energy dominance for a coefficient CSV");
  verify_cmd->add_option("--map", o.map_path, "map coefficient CSV")->required();
  verify_cmd->add_option("--terms", o.terms, "rebuilt series length");
  verify_cmd->add_option("--grid", o.grid, "boundary grid (default 65536)");
  verify_cmd->add_option("--tol", o.tol, "dominance tolerance (default 1e-3)");
  verify_cmd->add_option("--out", o.out_path, "also write the report here");

  CLI::App* simulate_cmd =
      app.add_subcommand("simulate", "sample Brownian exit laws");
  simulate_cmd->add_option("--spec", o.spec_path,
                           "sample the Gross domain of this law");
  simulate_cmd->add_option("--map", o.map_path, "sample the image of this map");
  auto* square_opt = simulate_cmd->add_option(
      "--square", o.square, "walk on spheres in the square of this half side");
  simulate_cmd->add_option("--samples", o.samples, "sample count (default 100000)");
  simulate_cmd->add_option("--seed", o.seed, "RNG seed (default 0)");
  simulate_cmd->add_option("--step", o.step,
                           "absorption distance for the square walk");
  simulate_cmd->add_option("--terms", o.terms, "series truncation for --spec");
  simulate_cmd->add_option("--ref", o.ref_path,
                           "reference spec file for a KS report");
  simulate_cmd->add_option("--out", o.out_path, "batch output file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  o.have_square = square_opt->count() > 0;

  try {
    if (*validate_cmd) return cmd_validate(o);
    if (*energy_cmd) return cmd_energy(o);
    if (*plot_cmd) return cmd_plot(o);
    if (*verify_cmd) return cmd_verify(o);
    if (*simulate_cmd) return cmd_simulate(o);
  } catch (const io_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const divergence_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const spec_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
