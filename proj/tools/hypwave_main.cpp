// Command-line front end: single evaluations (eval), dispersive sweeps with
// CSV/JSON artifacts (sweep), and the full bound-verification suite (verify).
//
// Exit codes: 0 success, 1 verification bound failure, 2 argument/config
// error, 3 domain or convergence error from the numerics.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdio>
#include <cstdlib>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "hypwave/bessel.hpp"
#include "hypwave/errors.hpp"
#include "hypwave/gamma.hpp"
#include "hypwave/kernel.hpp"
#include "hypwave/potential.hpp"
#include "hypwave/verify.hpp"

namespace {

namespace fs = std::filesystem;
using nlohmann::ordered_json;
using namespace hypwave;

// Argument-level problems (exit 2), as opposed to numerical domain errors.
struct ArgError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string fmt17(double v) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string fmt6(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

std::string iso_timestamp() {
  const std::time_t now = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

// Optional defaults file pointed at by HYPWAVE_CONFIG. Precedence is
// flag > config file > built-in default.
class ConfigLayer {
 public:
  static ConfigLayer from_env() {
    ConfigLayer c;
    const char* path = std::getenv("HYPWAVE_CONFIG");
    if (path == nullptr || *path == '\0') return c;
    std::ifstream in(path);
    if (!in) throw ArgError(std::string("HYPWAVE_CONFIG not readable: ") + path);
    try {
      in >> c.data_;
    } catch (const nlohmann::json::exception& e) {
      throw ArgError(std::string("HYPWAVE_CONFIG parse error: ") + e.what());
    }
    if (!c.data_.is_object())
      throw ArgError("HYPWAVE_CONFIG must contain a JSON object");
    return c;
  }

  bool has(const char* key) const { return data_.contains(key); }

  double number(const char* key) const {
    if (!data_.at(key).is_number())
      throw ArgError(std::string("config key must be numeric: ") + key);
    return data_.at(key).get<double>();
  }

  int integer(const char* key) const {
    if (!data_.at(key).is_number_integer())
      throw ArgError(std::string("config key must be an integer: ") + key);
    return data_.at(key).get<int>();
  }

  std::string str(const char* key) const {
    if (!data_.at(key).is_string())
      throw ArgError(std::string("config key must be a string: ") + key);
    return data_.at(key).get<std::string>();
  }

  std::vector<std::string> str_list(const char* key) const {
    const nlohmann::json& v = data_.at(key);
    if (v.is_string()) return {v.get<std::string>()};
    if (!v.is_array())
      throw ArgError(std::string("config key must be a string array: ") + key);
    return v.get<std::vector<std::string>>();
  }

  std::vector<int> int_list(const char* key) const {
    const nlohmann::json& v = data_.at(key);
    if (v.is_number_integer()) return {v.get<int>()};
    if (!v.is_array())
      throw ArgError(std::string("config key must be an integer array: ") + key);
    return v.get<std::vector<int>>();
  }

 private:
  nlohmann::json data_ = nlohmann::json::object();
};

double pick_num(const CLI::Option* opt, double flag_val, const ConfigLayer& cfg,
                const char* key) {
  if (opt->count() > 0) return flag_val;
  if (cfg.has(key)) return cfg.number(key);
  return flag_val;
}

int pick_int(const CLI::Option* opt, int flag_val, const ConfigLayer& cfg,
             const char* key) {
  if (opt->count() > 0) return flag_val;
  if (cfg.has(key)) return cfg.integer(key);
  return flag_val;
}

std::string pick_str(const CLI::Option* opt, const std::string& flag_val,
                     const ConfigLayer& cfg, const char* key,
                     const std::string& fallback) {
  if (opt->count() > 0) return flag_val;
  if (cfg.has(key)) return cfg.str(key);
  return fallback;
}

Kind parse_kind(const std::string& name) {
  if (name == "sine") return Kind::sine;
  if (name == "cosine") return Kind::cosine;
  throw ArgError("--kind must be sine or cosine");
}

void require_beta_hypothesis(int n, double beta) {
  if (n < 2 || n > 5) throw ArgError("dimension must lie in [2, 5]");
  const double rho = 0.5 * (n - 1);
  if (n == 3 ? beta < rho : beta <= rho)
    throw ArgError("beta=" + fmt6(beta) + " violates the spectral-shift " +
                   "hypothesis for n=" + std::to_string(n) +
                   " (needs beta " + (n == 3 ? ">=" : ">") + " " + fmt6(rho) +
                   ")");
}

// Writes to <path>.tmp and renames on commit; the temp file is removed if
// anything fails in between, so no partial artifact is left behind.
class FileWriter {
 public:
  explicit FileWriter(const fs::path& final_path)
      : final_(final_path),
        tmp_(final_path.string() + ".tmp"),
        out_(tmp_, std::ios::binary) {
    if (!out_) throw DomainError("cannot open output file: " + tmp_.string());
  }

  FileWriter(const FileWriter&) = delete;
  FileWriter& operator=(const FileWriter&) = delete;

  std::ostream& stream() { return out_; }

  void commit() {
    out_.flush();
    if (!out_) {
      cleanup();
      throw DomainError("failed writing output file: " + tmp_.string());
    }
    out_.close();
    std::error_code ec;
    fs::rename(tmp_, final_, ec);
    if (ec) {
      cleanup();
      throw DomainError("failed moving output into place: " + final_.string());
    }
    committed_ = true;
  }

  ~FileWriter() {
    if (!committed_) cleanup();
  }

 private:
  void cleanup() {
    if (out_.is_open()) out_.close();
    std::error_code ec;
    fs::remove(tmp_, ec);
  }

  fs::path final_;
  fs::path tmp_;
  std::ofstream out_;
  bool committed_ = false;
};

GridSpec load_grid_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ArgError("grid file not readable: " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ArgError("grid file parse error: " + std::string(e.what()));
  }
  GridSpec g;
  try {
    g.r_points = j.at("r").get<std::vector<double>>();
    g.t_points = j.at("t").get<std::vector<double>>();
    g.s_points = j.at("s").get<std::vector<double>>();
  } catch (const nlohmann::json::exception& e) {
    throw ArgError("grid file needs numeric arrays r, t, s: " +
                   std::string(e.what()));
  }
  return g;
}

void print_eval_record(ordered_json inputs, Complex value, double err,
                       const std::string& method) {
  ordered_json rec;
  rec["inputs"] = std::move(inputs);
  rec["value_re"] = value.real();
  rec["value_im"] = value.imag();
  rec["abs_error_estimate"] = err;
  rec["method"] = method;
  std::cout << rec.dump() << "\n";
}

ordered_json arg_sup_json(const BoundReport& rep) {
  ordered_json arg = ordered_json::object();
  for (const auto& kv : rep.arg_sup) arg[kv.first] = kv.second;
  return arg;
}

ordered_json bound_json(const BoundReport& rep) {
  ordered_json b;
  b["bound_id"] = rep.bound_id;
  b["pass"] = rep.pass;
  b["sup_ratio"] = rep.sup_ratio;
  b["ceiling"] = rep.ceiling;  // +inf serializes as null: no ceiling pinned
  b["refinement_delta"] = rep.refinement_delta;
  b["cells_total"] = rep.cells_total;
  b["cells_failed"] = rep.cells_failed;
  b["arg_sup"] = arg_sup_json(rep);
  b["notes"] = rep.notes;
  return b;
}

int cmd_sweep(int n, double beta, const GridSpec& grid, const fs::path& outdir,
              int workers) {
  require_beta_hypothesis(n, beta);
  const BoundReport rep = sweep_dispersive(n, beta, grid,
                                           /*with_refinement=*/false, workers);

  fs::create_directories(outdir);
  const fs::path csv_path = outdir / ("sweep_n" + std::to_string(n) + ".csv");
  const fs::path sum_path =
      outdir / ("sweep_n" + std::to_string(n) + ".summary.json");

  std::size_t rows = 0;
  {
    FileWriter w(csv_path);
    w.stream() << "n,beta,kind,r,t,s,value_abs,weight,ratio,err_est\n";
    for (const SweepCell& c : rep.cells) {
      if (c.failed) continue;
      w.stream() << n << ',' << fmt17(beta) << ',' << c.kind << ','
                 << fmt17(c.r) << ',' << fmt17(c.t) << ',' << fmt17(c.s) << ','
                 << fmt17(c.value_abs) << ',' << fmt17(c.weight) << ','
                 << fmt17(c.ratio) << ',' << fmt17(c.err_est) << '\n';
      ++rows;
    }
    w.commit();
  }

  ordered_json sum;
  sum["generated_at"] = iso_timestamp();
  sum["command"] = "sweep";
  sum["n"] = n;
  sum["beta"] = beta;
  sum["bound_id"] = rep.bound_id;
  sum["sup_ratio"] = rep.sup_ratio;
  sum["arg_sup"] = arg_sup_json(rep);
  sum["cells_total"] = rep.cells_total;
  sum["cells_failed"] = rep.cells_failed;
  sum["rows_written"] = rows;
  ordered_json gridj;
  gridj["r"] = grid.r_points.size();
  gridj["t"] = grid.t_points.size();
  gridj["s"] = grid.s_points.size();
  sum["grid"] = gridj;
  sum["notes"] = rep.notes;
  {
    FileWriter w(sum_path);
    w.stream() << sum.dump(2) << "\n";
    w.commit();
  }

  std::cout << "wrote " << csv_path.string() << " rows=" << rows
            << " sup_ratio=" << fmt17(rep.sup_ratio) << "\n";
  return 0;
}

int cmd_verify(const SuiteConfig& base_config, const fs::path& baseline_path,
               const fs::path& outdir) {
  SuiteConfig config = base_config;
  const bool have_baseline = fs::exists(baseline_path);
  if (have_baseline) config.ceilings = load_baseline(baseline_path.string());

  std::vector<BoundReport> reports = run_all(config);

  bool baseline_created = false;
  if (!have_baseline) {
    fs::create_directories(baseline_path.parent_path().empty()
                               ? fs::path(".")
                               : baseline_path.parent_path());
    save_baseline(baseline_path.string(), reports);
    baseline_created = true;
  }

  fs::create_directories(outdir / "bounds");
  for (const BoundReport& rep : reports) {
    FileWriter w(outdir / "bounds" / (rep.bound_id + ".json"));
    w.stream() << bound_json(rep).dump(2) << "\n";
    w.commit();
  }

  std::size_t passed = 0;
  for (const BoundReport& rep : reports)
    if (rep.pass) ++passed;

  std::ostringstream body;
  for (const BoundReport& rep : reports) {
    body << (rep.pass ? "[PASS] " : "[FAIL] ") << rep.bound_id
         << " sup=" << fmt6(rep.sup_ratio) << " ceiling="
         << (std::isinf(rep.ceiling) ? std::string("inf") : fmt6(rep.ceiling))
         << " delta="
         << (std::isnan(rep.refinement_delta) ? std::string("n/a")
                                              : fmt6(rep.refinement_delta))
         << " cells=" << rep.cells_total << " failed=" << rep.cells_failed;
    for (const std::string& note : rep.notes) body << " | " << note;
    body << "\n";
  }
  body << "\n" << passed << "/" << reports.size() << " bounds passed\n";
  if (baseline_created)
    body << "baseline created: " << baseline_path.string() << "\n";

  {
    FileWriter w(outdir / "verify_summary.txt");
    w.stream() << "hypwave verification summary (" << iso_timestamp() << ")\n\n"
               << body.str();
    w.commit();
  }
  std::cout << body.str();
  return passed == reports.size() ? 0 : 1;
}

int run_cli(int argc, char** argv) {
  const ConfigLayer cfg = ConfigLayer::from_env();

  CLI::App app{"hyperbolic-space dispersive decay toolkit"};
  app.require_subcommand(1);

  // ---- eval ----
  CLI::App* eval = app.add_subcommand("eval", "Evaluate a single quantity");
  eval->require_subcommand(1);

  double eg_zre = 1.0, eg_zim = 0.0;
  CLI::App* eval_gamma =
      eval->add_subcommand("gamma", "Complex gamma function");
  CLI::Option* eg_ore = eval_gamma->add_option("--z-re", eg_zre, "Re z");
  CLI::Option* eg_oim = eval_gamma->add_option("--z-im", eg_zim, "Im z");

  double eb_nre = 0.0, eb_nim = 1.0, eb_x = 1.0;
  CLI::App* eval_bessel =
      eval->add_subcommand("bessel", "Modified Bessel K_nu(x)");
  CLI::Option* eb_ore = eval_bessel->add_option("--nu-re", eb_nre, "Re nu");
  CLI::Option* eb_oim = eval_bessel->add_option("--nu-im", eb_nim, "Im nu");
  CLI::Option* eb_ox = eval_bessel->add_option("--x", eb_x, "Argument x > 0");

  double ep_zre = -2.0, ep_zim = 0.0, ep_x = 1.0;
  CLI::App* eval_pot =
      eval->add_subcommand("potential", "Bessel potential kernel F_z(x)");
  CLI::Option* ep_ore = eval_pot->add_option("--z-re", ep_zre, "Re z");
  CLI::Option* ep_oim = eval_pot->add_option("--z-im", ep_zim, "Im z");
  CLI::Option* ep_ox = eval_pot->add_option("--x", ep_x, "Argument x != 0");

  int ek_n = 3;
  double ek_beta = std::nan(""), ek_t = 1.0, ek_r = 0.0, ek_s = 1.0;
  std::string ek_kind = "sine";
  CLI::App* eval_kernel =
      eval->add_subcommand("kernel", "Weighted wave kernel cell");
  CLI::Option* ek_on = eval_kernel->add_option("--n", ek_n, "Dimension 2..5");
  CLI::Option* ek_ob =
      eval_kernel->add_option("--beta", ek_beta, "Spectral shift");
  CLI::Option* ek_ot = eval_kernel->add_option("--t", ek_t, "Time t > 0");
  CLI::Option* ek_or = eval_kernel->add_option("--r", ek_r, "Radius r >= 0");
  CLI::Option* ek_os = eval_kernel->add_option("--s", ek_s, "Spectral s");
  CLI::Option* ek_ok =
      eval_kernel->add_option("--kind", ek_kind, "sine or cosine");

  int em_n = 3;
  double em_zre = 1.0, em_s = 1.0, em_t = 1.0, em_beta = 1.0;
  std::string em_kind = "sine";
  CLI::App* eval_mult = eval->add_subcommand(
      "multiplier", "Sup of the spectral L2 multiplier over lambda");
  CLI::Option* em_on = eval_mult->add_option("--n", em_n, "Dimension 2..5");
  CLI::Option* em_ore = eval_mult->add_option("--z-re", em_zre, "Re z");
  CLI::Option* em_os = eval_mult->add_option("--s", em_s, "Spectral s");
  CLI::Option* em_ot = eval_mult->add_option("--t", em_t, "Time t > 0");
  CLI::Option* em_ob =
      eval_mult->add_option("--beta", em_beta, "Spectral shift");
  CLI::Option* em_ok =
      eval_mult->add_option("--kind", em_kind, "sine or cosine");

  // ---- sweep ----
  int sw_n = 3, sw_workers = 0;
  double sw_beta = std::nan("");
  std::string sw_grid_file, sw_outdir = ".";
  CLI::App* sweep =
      app.add_subcommand("sweep", "Dispersive sweep to CSV + summary JSON");
  CLI::Option* sw_on = sweep->add_option("--n", sw_n, "Dimension 2..5");
  CLI::Option* sw_ob = sweep->add_option("--beta", sw_beta, "Spectral shift");
  CLI::Option* sw_og =
      sweep->add_option("--grid-file", sw_grid_file, "JSON grid file");
  CLI::Option* sw_oo =
      sweep->add_option("--output-dir", sw_outdir, "Output directory");
  CLI::Option* sw_ow =
      sweep->add_option("--workers", sw_workers, "Worker threads (0 = auto)");

  // ---- verify ----
  std::vector<std::string> vf_suites;
  std::vector<int> vf_dims;
  int vf_workers = 0;
  double vf_beta = std::nan("");
  std::string vf_grid_file, vf_outdir = ".", vf_baseline;
  CLI::App* verify =
      app.add_subcommand("verify", "Run the bound-verification suites");
  CLI::Option* vf_os =
      verify->add_option("--suite", vf_suites, "Suite name (repeatable)");
  CLI::Option* vf_on =
      verify->add_option("--n", vf_dims, "Sweep dimension (repeatable)");
  CLI::Option* vf_ob =
      verify->add_option("--beta", vf_beta, "Spectral shift override");
  CLI::Option* vf_og =
      verify->add_option("--grid-file", vf_grid_file, "JSON grid file");
  CLI::Option* vf_obl =
      verify->add_option("--baseline", vf_baseline, "Baseline ceilings file");
  CLI::Option* vf_oo =
      verify->add_option("--output-dir", vf_outdir, "Output directory");
  CLI::Option* vf_ow =
      verify->add_option("--workers", vf_workers, "Worker threads (0 = auto)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (eval_gamma->parsed()) {
    const Complex z(pick_num(eg_ore, eg_zre, cfg, "z_re"),
                    pick_num(eg_oim, eg_zim, cfg, "z_im"));
    const Complex v = gamma(z);
    ordered_json in;
    in["z_re"] = z.real();
    in["z_im"] = z.imag();
    print_eval_record(std::move(in), v, 1e-12 * std::abs(v),
                      "lanczos_reflection");
    return 0;
  }

  if (eval_bessel->parsed()) {
    const BesselOrder nu{pick_num(eb_ore, eb_nre, cfg, "nu_re"),
                         pick_num(eb_oim, eb_nim, cfg, "nu_im")};
    const double x = pick_num(eb_ox, eb_x, cfg, "x");
    const Complex v = k_eval(nu, x);
    ordered_json in;
    in["nu_re"] = nu.mu;
    in["nu_im"] = nu.s_part;
    in["x"] = x;
    print_eval_record(std::move(in), v, 1e-8 * (1.0 + std::abs(v)),
                      "integral_series_dispatch");
    return 0;
  }

  if (eval_pot->parsed()) {
    const Complex z(pick_num(ep_ore, ep_zre, cfg, "z_re"),
                    pick_num(ep_oim, ep_zim, cfg, "z_im"));
    const double x = pick_num(ep_ox, ep_x, cfg, "x");
    const PotentialParam p(z);
    const Complex v = f_z(p, x);
    ordered_json in;
    in["z_re"] = z.real();
    in["z_im"] = z.imag();
    in["x"] = x;
    print_eval_record(std::move(in), v, 1e-8 * (1.0 + std::abs(v)),
                      "bessel_k_closed_form");
    return 0;
  }

  if (eval_kernel->parsed()) {
    KernelQuery q;
    q.n = pick_int(ek_on, ek_n, cfg, "n");
    q.beta = pick_num(ek_ob, ek_beta, cfg, "beta");
    if (std::isnan(q.beta)) q.beta = default_beta(q.n);
    q.t = pick_num(ek_ot, ek_t, cfg, "t");
    q.r = pick_num(ek_or, ek_r, cfg, "r");
    q.s = pick_num(ek_os, ek_s, cfg, "s");
    q.kind = parse_kind(pick_str(ek_ok, ek_kind, cfg, "kind", ek_kind));
    const EvalResult e = kernel_eval(q);
    ordered_json in;
    in["n"] = q.n;
    in["beta"] = q.beta;
    in["t"] = q.t;
    in["r"] = q.r;
    in["s"] = q.s;
    in["kind"] = q.kind == Kind::sine ? "sine" : "cosine";
    const char* method = e.method == EvalMethod::jet_closed_form
                             ? "jet_closed_form"
                             : (e.method == EvalMethod::finite_difference
                                    ? "finite_difference"
                                    : "spectral_quadrature");
    print_eval_record(std::move(in), e.value, e.abs_error_estimate, method);
    return 0;
  }

  if (eval_mult->parsed()) {
    const int n = pick_int(em_on, em_n, cfg, "n");
    if (n < 2 || n > 5) throw ArgError("--n must lie in [2, 5]");
    const double rho = 0.5 * (n - 1);
    const double z_re = pick_num(em_ore, em_zre, cfg, "z_re");
    const double s = pick_num(em_os, em_s, cfg, "s");
    const double t = pick_num(em_ot, em_t, cfg, "t");
    const double beta = pick_num(em_ob, em_beta, cfg, "beta");
    const Kind kind = parse_kind(pick_str(em_ok, em_kind, cfg, "kind", em_kind));
    const double lmax = std::max(10.0 / t, 10.0);
    const double v = l2_multiplier_sup(kind, z_re, s, t, beta, rho, lmax);
    ordered_json in;
    in["n"] = n;
    in["z_re"] = z_re;
    in["s"] = s;
    in["t"] = t;
    in["beta"] = beta;
    in["kind"] = kind == Kind::sine ? "sine" : "cosine";
    in["lambda_max"] = lmax;
    print_eval_record(std::move(in), Complex(v, 0.0), 2e-7 * (1.0 + v),
                      "oscillatory_quadrature");
    return 0;
  }

  if (sweep->parsed()) {
    const int n = pick_int(sw_on, sw_n, cfg, "n");
    double beta = pick_num(sw_ob, sw_beta, cfg, "beta");
    if (n < 2 || n > 5) throw ArgError("--n must lie in [2, 5]");
    if (std::isnan(beta)) beta = default_beta(n);
    const std::string grid_file =
        pick_str(sw_og, sw_grid_file, cfg, "grid_file", "");
    const GridSpec grid =
        grid_file.empty() ? GridSpec::dispersive_default()
                          : load_grid_file(grid_file);
    const fs::path outdir = pick_str(sw_oo, sw_outdir, cfg, "output_dir", ".");
    const int workers = pick_int(sw_ow, sw_workers, cfg, "workers");
    return cmd_sweep(n, beta, grid, outdir, workers);
  }

  if (verify->parsed()) {
    SuiteConfig config;
    config.suites = vf_os->count() > 0
                        ? vf_suites
                        : (cfg.has("suite") ? cfg.str_list("suite")
                                            : suite_names());
    for (const std::string& s : config.suites) {
      const auto& canon = suite_names();
      if (std::find(canon.begin(), canon.end(), s) == canon.end())
        throw ArgError("unknown suite: " + s);
    }
    if (vf_on->count() > 0)
      config.dimensions = vf_dims;
    else if (cfg.has("dimensions"))
      config.dimensions = cfg.int_list("dimensions");
    for (int n : config.dimensions)
      if (n < 2 || n > 5) throw ArgError("--n must lie in [2, 5]");

    const double beta = pick_num(vf_ob, vf_beta, cfg, "beta");
    if (!std::isnan(beta)) {
      if (config.dimensions.size() != 1)
        throw ArgError("--beta needs exactly one --n to apply to");
      require_beta_hypothesis(config.dimensions.front(), beta);
      config.beta_overrides[config.dimensions.front()] = beta;
    }

    const std::string grid_file =
        pick_str(vf_og, vf_grid_file, cfg, "grid_file", "");
    if (!grid_file.empty()) config.grid = load_grid_file(grid_file);
    config.workers = pick_int(vf_ow, vf_workers, cfg, "workers");

    const fs::path outdir = pick_str(vf_oo, vf_outdir, cfg, "output_dir", ".");
    fs::create_directories(outdir);
    const fs::path baseline =
        pick_str(vf_obl, vf_baseline, cfg, "baseline",
                 (outdir / "baseline.txt").string());
    return cmd_verify(config, baseline, outdir);
  }

  return 2;
}

const char* error_name(const Error& e) {
  if (dynamic_cast<const PoleError*>(&e)) return "PoleError";
  if (dynamic_cast<const DomainError*>(&e)) return "DomainError";
  if (dynamic_cast<const ConvergenceError*>(&e)) return "ConvergenceError";
  if (dynamic_cast<const SingularityError*>(&e)) return "SingularityError";
  if (dynamic_cast<const TailError*>(&e)) return "TailError";
  if (dynamic_cast<const GridError*>(&e)) return "GridError";
  if (dynamic_cast<const StaleReportError*>(&e)) return "StaleReportError";
  return "Error";
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run_cli(argc, argv);
  } catch (const ArgError& e) {
    std::cerr << "ArgumentError: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << error_name(e) << ": " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "Error: " << e.what() << "\n";
    return 3;
  }
}
