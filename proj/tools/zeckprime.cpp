// Command line front end: every experiment is reproducible from its full
// parameter set and seed, and emits machine-readable CSV or JSON.
//
// Exit codes: 0 success, 1 usage error, 2 property/tolerance violation,
// 3 resource limit.

#include <chrono>
#include <functional>
#include <complex>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "zeck/detection.hpp"
#include "zeck/errors.hpp"
#include "zeck/golden.hpp"
#include "zeck/harmonic.hpp"
#include "zeck/markov.hpp"
#include "zeck/numeration.hpp"
#include "zeck/prime_lab.hpp"
#include "zeck/report.hpp"
#include "zeck/sieve.hpp"
#include "zeck/stepfn.hpp"

namespace {

using zeck::Complex;
using zeck::ExperimentReport;

struct GlobalOpts {
  std::string format = "csv";
  std::string output;
  std::string config_path;
  std::uint64_t seed = 1;
  int threads = 1;
};

class ToleranceViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

zeck::Config load_config(const GlobalOpts& g) {
  if (!g.config_path.empty()) return zeck::Config::from_file(g.config_path);
  return zeck::Config::from_env();
}

// Footprint of a sieve run: per-worker segment bitset and prime buffer plus
// the base primes.  Constant in x apart from the sqrt(x) base table.
void check_memory_budget(const zeck::Config& cfg, std::uint64_t x, int threads) {
  const double budget_mb =
      cfg.get("memory_budget_mb", zeck::defaults::kMemoryBudgetMb);
  const double root = std::sqrt(static_cast<double>(x));
  const double base_bytes = root / std::max(1.0, std::log(root)) * 4.0;
  const double per_worker = (1 << 20) + 10.0e6;  // bitset + prime buffer
  const double total_mb = (base_bytes + per_worker * threads) / 1.0e6;
  if (total_mb > budget_mb)
    throw zeck::ResourceLimitError("sieve run needs ~" + std::to_string(total_mb) +
                                   " MB, over the configured budget of " +
                                   std::to_string(budget_mb) + " MB");
}

void emit(const GlobalOpts& g, const ExperimentReport& report) {
  std::ostream* os = &std::cout;
  std::ofstream file;
  if (!g.output.empty()) {
    file.open(g.output);
    if (!file) throw std::runtime_error("cannot open output file: " + g.output);
    os = &file;
  }
  if (g.format == "json") {
    report.write_json(*os);
  } else {
    report.write_csv(*os);
  }
}

class Timer {
 public:
  Timer() : start_(std::chrono::steady_clock::now()) {}
  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

std::vector<int> parse_int_list(const std::string& csv) {
  std::vector<int> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(std::stoi(item));
  }
  return out;
}

// ---------------------------------------------------------------------------

int run_expand(std::uint64_t n) {
  const auto d = zeck::zeck_expand(n);
  for (std::size_t i = 0; i < d.ones.size(); ++i)
    std::cout << (i ? " " : "") << d.ones[i];
  std::cout << "\n";
  return 0;
}

int run_detect(const GlobalOpts& g, std::uint64_t n, int lambda, const std::string& method) {
  Timer timer;
  ExperimentReport rep("detect", g.seed);
  rep.param("n", n);
  rep.param("lambda", static_cast<std::uint64_t>(lambda));
  rep.param("method", method);
  rep.columns({"n", "lambda", "result"});
  std::uint64_t result;
  if (method == "interval") {
    result = zeck::detect_lowdigits(n, lambda);
  } else if (method == "parallelogram") {
    result = zeck::detect_via_B(n, lambda);
  } else {
    const zeck::GoldenInt nn(static_cast<long long>(n));
    result = static_cast<std::uint64_t>(zeck::tiling_classify(
        nn * zeck::phi_pow(-lambda), nn * zeck::phi_pow(-lambda - 1)));
  }
  rep.row({std::to_string(n), std::to_string(lambda), std::to_string(result)});
  if (method != "tiling")
    rep.summary("matches_v", result == zeck::zeck_v(n, lambda) ? "true" : "false");
  rep.set_wall_ms(timer.ms());
  emit(g, rep);
  std::cout.flush();
  return 0;
}

int run_markov_pgf(const GlobalOpts& g, int n, int grid) {
  Timer timer;
  ExperimentReport rep("markov-pgf", g.seed);
  rep.param("n", static_cast<std::uint64_t>(n));
  rep.param("grid", static_cast<std::uint64_t>(grid));
  rep.columns({"j", "v_re", "v_im", "pgf_re", "pgf_im"});
  for (int j = 0; j < grid; ++j) {
    const double ang = 2.0 * 3.14159265358979323846 * j / grid;
    const Complex v(std::cos(ang), std::sin(ang));
    const Complex p = zeck::markov::pgf_Sn(v, n);
    rep.row_values({static_cast<double>(j), v.real(), v.imag(), p.real(), p.imag()});
  }
  rep.summary("mean", zeck::markov::mean_var_Sn(n).first);
  rep.summary("variance", zeck::markov::mean_var_Sn(n).second);
  rep.set_wall_ms(timer.ms());
  emit(g, rep);
  return 0;
}

int run_markov_joint(const GlobalOpts& g, const std::string& positions,
                     const std::string& values) {
  Timer timer;
  const auto pos = parse_int_list(positions);
  const auto val = parse_int_list(values);
  ExperimentReport rep("markov-joint", g.seed);
  rep.param("positions", positions);
  rep.param("values", values);
  rep.columns({"probability"});
  const double p = zeck::markov::joint_prob(pos, val);
  rep.row_values({p});
  rep.set_wall_ms(timer.ms());
  emit(g, rep);
  return 0;
}

int run_markov_empirical(const GlobalOpts& g, std::uint64_t x, const std::string& positions,
                         const std::string& values, bool primes, double tol) {
  Timer timer;
  const auto pos = parse_int_list(positions);
  const auto val = parse_int_list(values);
  ExperimentReport rep("markov-empirical", g.seed);
  rep.param("x", x);
  rep.param("positions", positions);
  rep.param("values", values);
  rep.param("over", primes ? "primes" : "integers");
  rep.param("tolerance", tol);
  const double freq = primes ? zeck::markov::empirical_joint_primes(x, pos, val)
                             : zeck::markov::empirical_joint_integers(x, pos, val);
  const double model = zeck::markov::joint_prob(pos, val);
  rep.columns({"empirical", "model", "abs_diff"});
  rep.row_values({freq, model, std::abs(freq - model)});
  const bool ok = std::abs(freq - model) <= tol;
  rep.summary("within_tolerance", ok ? "true" : "false");
  rep.set_wall_ms(timer.ms());
  emit(g, rep);
  if (!ok) throw ToleranceViolation("empirical digit frequency deviates beyond tolerance");
  return 0;
}

int run_fourier_gtilde(const GlobalOpts& g, int lambda, double theta, double beta) {
  Timer timer;
  ExperimentReport rep("fourier-gtilde", g.seed);
  rep.param("lambda", static_cast<std::uint64_t>(lambda));
  rep.param("theta", theta);
  rep.param("beta", beta);
  const Complex m = zeck::fourier_Gtilde_matrix(lambda, theta, beta);
  rep.columns({"matrix_re", "matrix_im", "direct_re", "direct_im", "abs_diff"});
  if (lambda <= 30) {
    const Complex d = zeck::fourier_Gtilde_direct(lambda, theta, beta);
    rep.row_values({m.real(), m.imag(), d.real(), d.imag(), std::abs(m - d)});
  } else {
    rep.row_values({m.real(), m.imag(), 0.0, 0.0, -1.0});
  }
  rep.set_wall_ms(timer.ms());
  emit(g, rep);
  return 0;
}

int run_fourier_G(const GlobalOpts& g, int lambda, double theta, long long h) {
  Timer timer;
  ExperimentReport rep("fourier-G", g.seed);
  rep.param("lambda", static_cast<std::uint64_t>(lambda));
  rep.param("theta", theta);
  rep.param("h", static_cast<std::uint64_t>(h));
  const Complex v = zeck::fourier_G(lambda, theta, h);
  rep.columns({"re", "im", "abs"});
  rep.row_values({v.real(), v.imag(), std::abs(v)});
  rep.set_wall_ms(timer.ms());
  emit(g, rep);
  return 0;
}

int run_fourier_omega(const GlobalOpts& g, double theta, std::uint64_t t, std::uint64_t n,
                      int lambda) {
  Timer timer;
  ExperimentReport rep("fourier-omega", g.seed);
  rep.param("theta", theta);
  rep.param("t", t);
  rep.param("N", n);
  rep.param("lambda", static_cast<std::uint64_t>(lambda));
  const Complex v = zeck::omega_correlation(theta, t, n, lambda);
  rep.columns({"re", "im", "abs"});
  rep.row_values({v.real(), v.imag(), std::abs(v)});
  rep.set_wall_ms(timer.ms());
  emit(g, rep);
  return 0;
}

int run_gowers_u2(const GlobalOpts& g, int lambda, double theta) {
  Timer timer;
  ExperimentReport rep("gowers-u2", g.seed);
  rep.param("lambda", static_cast<std::uint64_t>(lambda));
  rep.param("theta", theta);
  const auto gl = zeck::build_g_lambda(lambda);
  const double u2 = zeck::gowers_u2_exact(zeck::StepFn::modulate(gl, theta));
  rep.columns({"u2"});
  rep.row_values({u2});
  if (theta == 0.5)
    rep.summary("u2_exact_parity",
                std::pow(zeck::gowers_u2_pow4_parity(gl).to_double(), 0.25));
  rep.set_wall_ms(timer.ms());
  emit(g, rep);
  return 0;
}

int run_gowers_u3(const GlobalOpts& g, int lambda, double theta, int samples) {
  Timer timer;
  ExperimentReport rep("gowers-u3", g.seed);
  rep.param("lambda", static_cast<std::uint64_t>(lambda));
  rep.param("theta", theta);
  rep.param("samples", static_cast<std::uint64_t>(samples));
  const auto gl = zeck::build_g_lambda(lambda);
  const zeck::U3Estimate est =
      theta == 0.5 ? zeck::gowers_u3_estimate_parity(gl, samples, g.seed)
                   : zeck::gowers_u3_estimate(zeck::StepFn::modulate(gl, theta), samples, g.seed);
  rep.columns({"estimate", "std_error"});
  rep.row_values({est.estimate, est.std_error});
  rep.set_wall_ms(timer.ms());
  emit(g, rep);
  return 0;
}

int run_gowers_decay(const GlobalOpts& g, int lambda_min, int lambda_max, double theta) {
  Timer timer;
  ExperimentReport rep("gowers-decay", g.seed);
  rep.param("lambda_min", static_cast<std::uint64_t>(lambda_min));
  rep.param("lambda_max", static_cast<std::uint64_t>(lambda_max));
  rep.param("theta", theta);
  rep.columns({"lambda", "u2"});
  std::vector<double> logs;
  bool decreasing = true;
  double prev = 2.0;
  for (int lam = lambda_min; lam <= lambda_max; ++lam) {
    const double u2 = zeck::gowers_u2_exact(
        zeck::StepFn::modulate(zeck::build_g_lambda(lam), theta));
    rep.row_values({static_cast<double>(lam), u2});
    if (u2 >= prev) decreasing = false;
    prev = u2;
    logs.push_back(std::log(u2));
  }
  // least squares slope of log u2 against lambda
  const auto n = static_cast<double>(logs.size());
  double sx = 0, sy = 0, sxy = 0, sxx = 0;
  for (std::size_t i = 0; i < logs.size(); ++i) {
    const double xv = lambda_min + static_cast<double>(i);
    sx += xv;
    sy += logs[i];
    sxy += xv * logs[i];
    sxx += xv * xv;
  }
  rep.summary("log_slope", (n * sxy - sx * sy) / (n * sxx - sx * sx));
  rep.summary("strictly_decreasing", decreasing ? "true" : "false");
  rep.set_wall_ms(timer.ms());
  emit(g, rep);
  return 0;
}

int run_discrepancy(const GlobalOpts& g, std::uint64_t n) {
  Timer timer;
  ExperimentReport rep("discrepancy", g.seed);
  rep.param("N", n);
  const double dext = zeck::discrepancy_nalpha(n, false);
  const double dstar = zeck::discrepancy_nalpha(n, true);
  const double bound =
      3.0 + (1.0 / 1.6180339887498949 + 1.0 / std::log(2.0)) * std::log(static_cast<double>(n));
  rep.columns({"N", "N_DN_extreme", "N_DN_star", "bound"});
  rep.row_values({static_cast<double>(n), n * dext, n * dstar, bound});
  rep.summary("within_bound", n * dext <= bound ? "true" : "false");
  rep.set_wall_ms(timer.ms());
  emit(g, rep);
  if (n * dext > bound) throw ToleranceViolation("three-distance discrepancy bound violated");
  return 0;
}

int run_vaaler(const GlobalOpts& g, double a, double len, int H, int grid) {
  Timer timer;
  ExperimentReport rep("vaaler", g.seed);
  rep.param("a", a);
  rep.param("len", len);
  rep.param("H", static_cast<std::uint64_t>(H));
  rep.param("grid", static_cast<std::uint64_t>(grid));
  const auto [A, B] = zeck::vaaler(a, len, H);
  int violations = 0;
  double worst = 0.0;
  for (int i = 0; i < grid; ++i) {
    const double x = (i + 0.5) / grid;
    double frac = x - a - std::floor(x - a);
    const double chi = frac < len ? 1.0 : 0.0;
    const double lhs = std::abs(chi - A.eval(x).real());
    const double rhs = B.eval(x).real();
    worst = std::max(worst, lhs - rhs);
    if (lhs > rhs + 1e-9) ++violations;
  }
  rep.columns({"violations", "worst_gap", "a0", "b0"});
  rep.row_values({static_cast<double>(violations), worst, A.at(0).real(), B.at(0).real()});
  rep.set_wall_ms(timer.ms());
  emit(g, rep);
  if (violations > 0) throw ToleranceViolation("vaaler envelope violated on grid");
  return 0;
}

int run_primes_hist(const GlobalOpts& g, std::uint64_t x) {
  Timer timer;
  std::cerr << "zeckprime: sieving to " << x << "...\n";
  ExperimentReport rep("primes-hist", g.seed);
  rep.param("x", x);
  rep.param("threads", static_cast<std::uint64_t>(g.threads));
  const auto hist = zeck::sz_histogram_primes(x, g.threads);
  std::uint64_t total = 0;
  rep.columns({"k", "count"});
  for (const auto& [k, c] : hist) {
    rep.row({std::to_string(k), std::to_string(c)});
    total += c;
  }
  rep.summary("pi_x", static_cast<double>(total));
  rep.set_wall_ms(timer.ms());
  emit(g, rep);
  return 0;
}

int run_primes_local_clt(const GlobalOpts& g, std::uint64_t x, double sup_tol,
                         double modal_tol) {
  Timer timer;
  std::cerr << "zeckprime: sieving to " << x << "...\n";
  const auto result = zeck::local_clt_table(x, g.threads);
  ExperimentReport rep("primes-local-clt", g.seed);
  rep.param("x", x);
  rep.param("threads", static_cast<std::uint64_t>(g.threads));
  rep.param("sup_tolerance", sup_tol);
  rep.param("modal_tolerance", modal_tol);
  rep.columns({"k", "observed", "predicted", "abs_err"});
  for (const auto& row : result.rows)
    rep.row({std::to_string(row.k), std::to_string(row.observed),
             ExperimentReport::fmt(row.predicted), ExperimentReport::fmt(row.abs_err)});
  rep.summary("pi_x", static_cast<double>(result.pi_x));
  rep.summary("sup_rel_err", result.sup_rel_err);
  rep.summary("modal_rel_err", result.modal_rel_err);
  const bool ok = result.sup_rel_err <= sup_tol && result.modal_rel_err <= modal_tol;
  rep.summary("within_tolerance", ok ? "true" : "false");
  rep.set_wall_ms(timer.ms());
  emit(g, rep);
  if (!ok) throw ToleranceViolation("local CLT deviation beyond tolerance");
  return 0;
}

int run_primes_residue(const GlobalOpts& g, std::uint64_t x, int m, double tol) {
  Timer timer;
  std::cerr << "zeckprime: sieving to " << x << "...\n";
  const auto counts = zeck::residue_counts(x, m, g.threads);
  ExperimentReport rep("primes-residue", g.seed);
  rep.param("x", x);
  rep.param("m", static_cast<std::uint64_t>(m));
  rep.param("threads", static_cast<std::uint64_t>(g.threads));
  rep.param("tolerance", tol);
  rep.columns({"class", "count"});
  std::uint64_t total = 0;
  for (std::size_t a = 0; a < counts.size(); ++a) {
    rep.row({std::to_string(a), std::to_string(counts[a])});
    total += counts[a];
  }
  double dev = 0.0;
  for (auto c : counts)
    dev = std::max(dev, std::abs(static_cast<double>(c) / static_cast<double>(total) - 1.0 / m));
  rep.summary("pi_x", static_cast<double>(total));
  rep.summary("deviation", dev);
  rep.summary("within_tolerance", dev <= tol ? "true" : "false");
  rep.set_wall_ms(timer.ms());
  emit(g, rep);
  if (dev > tol) throw ToleranceViolation("residue deviation beyond tolerance");
  return 0;
}

int run_primes_min_sz(const GlobalOpts& g, int kmax) {
  Timer timer;
  ExperimentReport rep("primes-min-sz", g.seed);
  rep.param("k_max", static_cast<std::uint64_t>(kmax));
  rep.columns({"k", "prime", "verified"});
  bool all_found = true;
  for (int k = 1; k <= kmax; ++k) {
    const auto p = zeck::smallest_prime_with_sz(k, 2 * k + 10);
    if (p) {
      rep.row({std::to_string(k), std::to_string(*p),
               zeck::verify_prime_slow(*p) ? "true" : "false"});
    } else {
      rep.row({std::to_string(k), "none", "false"});
      all_found = false;
    }
  }
  rep.summary("all_found", all_found ? "true" : "false");
  rep.set_wall_ms(timer.ms());
  emit(g, rep);
  if (!all_found) throw ToleranceViolation("no prime found for some digit sum");
  return 0;
}

int run_primes_fib_scan(const GlobalOpts& g, int max_index) {
  Timer timer;
  ExperimentReport rep("primes-fib-scan", g.seed);
  rep.param("max_index", static_cast<std::uint64_t>(max_index));
  rep.columns({"index", "probable"});
  for (const auto& r : zeck::fibonacci_prime_scan(max_index))
    rep.row({std::to_string(r.index), r.probable ? "true" : "false"});
  rep.set_wall_ms(timer.ms());
  emit(g, rep);
  return 0;
}

int run_primes_expsum(const GlobalOpts& g, std::uint64_t x, double theta,
                      const std::string& kind) {
  Timer timer;
  std::cerr << "zeckprime: sieving to " << x << "...\n";
  Complex v;
  if (kind == "linear") {
    v = zeck::exp_sum_primes(theta, x, g.threads);
  } else if (kind == "sz") {
    v = zeck::exp_sum_sz_primes(theta, x, g.threads);
  } else {
    v = zeck::exp_sum_sz_mangoldt(theta, x, g.threads);
  }
  ExperimentReport rep("primes-expsum", g.seed);
  rep.param("x", x);
  rep.param("theta", theta);
  rep.param("kind", kind);
  rep.param("threads", static_cast<std::uint64_t>(g.threads));
  rep.columns({"re", "im", "abs"});
  rep.row_values({v.real(), v.imag(), std::abs(v)});
  rep.set_wall_ms(timer.ms());
  emit(g, rep);
  return 0;
}

int run_primes_charfn(const GlobalOpts& g, std::uint64_t x, double t, const std::string& mode,
                      double nu) {
  Timer timer;
  std::cerr << "zeckprime: sieving to " << x << "...\n";
  const auto m = mode == "truncated" ? zeck::CharFnMode::kTruncated : zeck::CharFnMode::kFull;
  const Complex v = zeck::char_fn_primes(t, x, m, nu, g.threads);
  ExperimentReport rep("primes-charfn", g.seed);
  rep.param("x", x);
  rep.param("t", t);
  rep.param("mode", mode);
  rep.param("nu", nu);
  rep.param("threads", static_cast<std::uint64_t>(g.threads));
  rep.columns({"re", "im", "abs"});
  rep.row_values({v.real(), v.imag(), std::abs(v)});
  rep.set_wall_ms(timer.ms());
  emit(g, rep);
  return 0;
}

int run_lod(const GlobalOpts& g, std::uint64_t x, double eps, double theta) {
  Timer timer;
  const double stat = zeck::lod_statistic(x, eps, theta);
  ExperimentReport rep("lod", g.seed);
  rep.param("x", x);
  rep.param("eps", eps);
  rep.param("theta", theta);
  const double scale =
      static_cast<double>(x) * std::pow(std::log(static_cast<double>(x)), 11.0 / 4.0);
  rep.columns({"statistic", "x_log_scale", "ratio"});
  rep.row_values({stat, scale, stat / scale});
  rep.set_wall_ms(timer.ms());
  emit(g, rep);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Zeckendorf prime statistics laboratory"};
  app.require_subcommand(1);
  GlobalOpts g;
  app.add_option("--format", g.format, "Output format: csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--output", g.output, "Output file (default stdout)");
  app.add_option("--seed", g.seed, "Random seed recorded in every report");
  app.add_option("--threads", g.threads, "Worker threads for sieve experiments")
      ->check(CLI::PositiveNumber);
  app.add_option("--config", g.config_path,
                 "Config file path (overrides ZECKPRIME_CONFIG)");

  // expand / sz
  std::uint64_t arg_n = 0;
  auto* c_expand = app.add_subcommand("expand", "Zeckendorf expansion of n (digit indices)");
  c_expand->add_option("n", arg_n, "nonnegative integer")->required();
  auto* c_sz = app.add_subcommand("sz", "Zeckendorf sum of digits of n");
  c_sz->add_option("n", arg_n, "nonnegative integer")->required();

  // detect
  std::uint64_t det_n = 0;
  int det_lambda = 2;
  std::string det_method = "interval";
  auto* c_detect = app.add_subcommand("detect", "digit detection from torus position");
  c_detect->add_option("--n", det_n)->required();
  c_detect->add_option("--lambda", det_lambda)->required();
  c_detect->add_option("--method", det_method)
      ->check(CLI::IsMember({"interval", "parallelogram", "tiling"}));

  // markov
  auto* c_markov = app.add_subcommand("markov", "two-state digit chain");
  c_markov->require_subcommand(1);
  int mk_n = 8, mk_grid = 16;
  auto* c_mk_pgf = c_markov->add_subcommand("pgf", "generating function on a |v|=1 grid");
  c_mk_pgf->add_option("--n", mk_n);
  c_mk_pgf->add_option("--grid", mk_grid);
  std::string mk_positions, mk_values;
  auto* c_mk_joint = c_markov->add_subcommand("joint", "exact joint digit probability");
  c_mk_joint->add_option("--positions", mk_positions)->required();
  c_mk_joint->add_option("--values", mk_values)->required();
  std::uint64_t mk_x = 1000000;
  bool mk_primes = false;
  double mk_tol = zeck::defaults::kDigitStatsTol;
  auto* c_mk_emp = c_markov->add_subcommand("empirical", "empirical pattern frequency");
  c_mk_emp->add_option("--x", mk_x);
  c_mk_emp->add_option("--positions", mk_positions)->required();
  c_mk_emp->add_option("--values", mk_values)->required();
  c_mk_emp->add_flag("--primes", mk_primes, "count over primes instead of integers");
  c_mk_emp->add_option("--tol", mk_tol);

  // fourier
  auto* c_fourier = app.add_subcommand("fourier", "Zeckendorf Fourier terms");
  c_fourier->require_subcommand(1);
  int fo_lambda = 10;
  double fo_theta = 0.5, fo_beta = 0.0;
  auto* c_fo_gtilde = c_fourier->add_subcommand("gtilde", "G~ by matrix recursion and direct sum");
  c_fo_gtilde->add_option("--lambda", fo_lambda);
  c_fo_gtilde->add_option("--theta", fo_theta);
  c_fo_gtilde->add_option("--beta", fo_beta);
  long long fo_h = 0;
  auto* c_fo_G = c_fourier->add_subcommand("G", "digit-system Fourier coefficient");
  c_fo_G->add_option("--lambda", fo_lambda);
  c_fo_G->add_option("--theta", fo_theta);
  c_fo_G->add_option("--freq", fo_h, "frequency index h in [0, F_lambda)");
  std::uint64_t fo_t = 1, fo_N = 100000;
  auto* c_fo_omega = c_fourier->add_subcommand("omega", "truncated correlation average");
  c_fo_omega->add_option("--theta", fo_theta);
  c_fo_omega->add_option("--t", fo_t);
  c_fo_omega->add_option("--n", fo_N);
  c_fo_omega->add_option("--lambda", fo_lambda);

  // gowers
  auto* c_gowers = app.add_subcommand("gowers", "uniformity norms of e(theta g_lambda)");
  c_gowers->require_subcommand(1);
  int go_lambda = 8, go_samples = 256, go_min = 4, go_max = 12;
  double go_theta = 0.5;
  auto* c_go_u2 = c_gowers->add_subcommand("u2", "exact U^2 norm");
  c_go_u2->add_option("--lambda", go_lambda);
  c_go_u2->add_option("--theta", go_theta);
  auto* c_go_u3 = c_gowers->add_subcommand("u3", "U^3 quasi-Monte Carlo estimate");
  c_go_u3->add_option("--lambda", go_lambda);
  c_go_u3->add_option("--theta", go_theta);
  c_go_u3->add_option("--samples", go_samples);
  auto* c_go_decay = c_gowers->add_subcommand("decay", "U^2 decay across lambda");
  c_go_decay->add_option("--lambda-min", go_min);
  c_go_decay->add_option("--lambda-max", go_max);
  c_go_decay->add_option("--theta", go_theta);

  // discrepancy
  std::uint64_t di_n = 100000;
  auto* c_disc = app.add_subcommand("discrepancy", "N*D_N of the golden rotation");
  c_disc->add_option("--n", di_n);

  // vaaler
  double va_a = 0.3, va_len = 0.25;
  int va_H = 32, va_grid = 10000;
  auto* c_vaaler = app.add_subcommand("vaaler", "interval approximation pair check");
  c_vaaler->add_option("--a", va_a);
  c_vaaler->add_option("--len", va_len);
  c_vaaler->add_option("--H", va_H);
  c_vaaler->add_option("--grid", va_grid);

  // primes
  auto* c_primes = app.add_subcommand("primes", "prime statistics experiments");
  c_primes->require_subcommand(1);
  std::uint64_t pr_x = 10000000;
  auto* c_pr_hist = c_primes->add_subcommand("hist", "digit-sum histogram over primes");
  c_pr_hist->add_option("--x", pr_x);
  double pr_sup_tol = -1.0, pr_modal_tol = -1.0, pr_tol = -1.0;
  auto* c_pr_clt = c_primes->add_subcommand("local-clt", "Gaussian comparison");
  c_pr_clt->add_option("--x", pr_x);
  c_pr_clt->add_option("--sup-tol", pr_sup_tol);
  c_pr_clt->add_option("--modal-tol", pr_modal_tol);
  int pr_m = 2;
  auto* c_pr_res = c_primes->add_subcommand("residue", "sz(p) mod m class counts");
  c_pr_res->add_option("--x", pr_x);
  c_pr_res->add_option("--m", pr_m);
  c_pr_res->add_option("--tol", pr_tol);
  int pr_kmax = 15;
  auto* c_pr_minsz = c_primes->add_subcommand("min-sz", "smallest prime per digit sum");
  c_pr_minsz->add_option("--k-max", pr_kmax);
  int pr_maxidx = 450;
  auto* c_pr_fib = c_primes->add_subcommand("fib-scan", "Fibonacci (probable) prime indices");
  c_pr_fib->add_option("--max-index", pr_maxidx);
  double pr_theta = 0.5;
  std::string pr_kind = "sz";
  auto* c_pr_exp = c_primes->add_subcommand("expsum", "exponential sums over primes");
  c_pr_exp->add_option("--x", pr_x);
  c_pr_exp->add_option("--theta", pr_theta);
  c_pr_exp->add_option("--kind", pr_kind)->check(CLI::IsMember({"linear", "sz", "mangoldt"}));
  double pr_t = 1.0, pr_nu = 0.25;
  std::string pr_mode = "full";
  auto* c_pr_chf = c_primes->add_subcommand("charfn", "normalized characteristic function");
  c_pr_chf->add_option("--x", pr_x);
  c_pr_chf->add_option("--t", pr_t);
  c_pr_chf->add_option("--mode", pr_mode)->check(CLI::IsMember({"full", "truncated"}));
  c_pr_chf->add_option("--nu", pr_nu);

  // lod
  std::uint64_t lo_x = 10000;
  double lo_eps = 1.0 / 3.0, lo_theta = 0.5;
  auto* c_lod = app.add_subcommand("lod", "level-of-distribution statistic");
  c_lod->add_option("--x", lo_x);
  c_lod->add_option("--eps", lo_eps);
  c_lod->add_option("--theta", lo_theta);

  // Let global flags (--format, --output, ...) appear after subcommands.
  std::function<void(CLI::App*)> allow_fallthrough = [&](CLI::App* cmd) {
    for (auto* sub : cmd->get_subcommands({})) {
      sub->fallthrough();
      allow_fallthrough(sub);
    }
  };
  allow_fallthrough(&app);

  CLI11_PARSE(app, argc, argv);

  try {
    const zeck::Config cfg = load_config(g);
    if (*c_expand) return run_expand(arg_n);
    if (*c_sz) {
      std::cout << zeck::sz(arg_n) << "\n";
      return 0;
    }
    if (*c_detect) return run_detect(g, det_n, det_lambda, det_method);
    if (*c_mk_pgf) return run_markov_pgf(g, mk_n, mk_grid);
    if (*c_mk_joint) return run_markov_joint(g, mk_positions, mk_values);
    if (*c_mk_emp) {
      const double tol = c_mk_emp->count("--tol") ? mk_tol
                          : cfg.get("digit_stats_tol", zeck::defaults::kDigitStatsTol);
      return run_markov_empirical(g, mk_x, mk_positions, mk_values, mk_primes, tol);
    }
    if (*c_fo_gtilde) return run_fourier_gtilde(g, fo_lambda, fo_theta, fo_beta);
    if (*c_fo_G) return run_fourier_G(g, fo_lambda, fo_theta, fo_h);
    if (*c_fo_omega) return run_fourier_omega(g, fo_theta, fo_t, fo_N, fo_lambda);
    if (*c_go_u2) return run_gowers_u2(g, go_lambda, go_theta);
    if (*c_go_u3) return run_gowers_u3(g, go_lambda, go_theta, go_samples);
    if (*c_go_decay) return run_gowers_decay(g, go_min, go_max, go_theta);
    if (*c_disc) return run_discrepancy(g, di_n);
    if (*c_vaaler) return run_vaaler(g, va_a, va_len, va_H, va_grid);
    if (*c_primes) check_memory_budget(cfg, pr_x, g.threads);
    if (*c_pr_hist) return run_primes_hist(g, pr_x);
    if (*c_pr_clt) {
      const double st = pr_sup_tol >= 0 ? pr_sup_tol
                         : cfg.get("clt_sup_tol", zeck::defaults::kCltSupTol);
      const double mt = pr_modal_tol >= 0 ? pr_modal_tol
                         : cfg.get("clt_modal_tol", zeck::defaults::kCltModalTol);
      return run_primes_local_clt(g, pr_x, st, mt);
    }
    if (*c_pr_res) {
      const double tol =
          pr_tol >= 0 ? pr_tol : cfg.get("residue_tol", zeck::defaults::kResidueTol);
      return run_primes_residue(g, pr_x, pr_m, tol);
    }
    if (*c_pr_minsz) return run_primes_min_sz(g, pr_kmax);
    if (*c_pr_fib) return run_primes_fib_scan(g, pr_maxidx);
    if (*c_pr_exp) return run_primes_expsum(g, pr_x, pr_theta, pr_kind);
    if (*c_pr_chf) return run_primes_charfn(g, pr_x, pr_t, pr_mode, pr_nu);
    if (*c_lod) return run_lod(g, lo_x, lo_eps, lo_theta);
    std::cerr << "zeckprime: no subcommand dispatched\n";
    return 1;
  } catch (const ToleranceViolation& e) {
    std::cerr << "zeckprime: tolerance violation: " << e.what() << "\n";
    return 2;
  } catch (const zeck::ResourceLimitError& e) {
    std::cerr << "zeckprime: resource limit: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "zeckprime: usage error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "zeckprime: error: " << e.what() << "\n";
    return 1;
  }
}
