// fuzzy_sphere: spectra, spectral distances, rho_N sweeps and verification
// suites from the command line.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error.

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "fuzzy/fuzzy.hpp"

namespace {

using nlohmann::json;
using namespace fuzzy;

constexpr int kSchemaVersion = 1;
constexpr int kNumericCap = 24;
constexpr int kFullSpectrumCap = 64;

constexpr int kExitOk = 0;
constexpr int kExitVerify = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::uint64_t default_seed() {
  if (const char* env = std::getenv("FUZZY_SEED")) return std::strtoull(env, nullptr, 10);
  return 0;
}

/// Finite doubles as numbers; anything else becomes null and is reported in
/// the "failures" array.
json number(double v, const std::string& field, json& failures) {
  if (std::isfinite(v)) return v;
  failures.push_back(field + ": non-finite value");
  return nullptr;
}

std::vector<double> parse_list(const std::string& s, std::size_t expected, const char* flag) {
  std::vector<double> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UsageError(std::string(flag) + ": cannot parse '" + item + "' as a number");
    }
  }
  if (expected != 0 && out.size() != expected)
    throw UsageError(std::string(flag) + ": expected " + std::to_string(expected) + " comma-separated numbers");
  return out;
}

std::vector<int> parse_levels(const std::string& s) {
  std::vector<int> out;
  for (double v : parse_list(s, 0, "--N-list")) {
    if (v < 1 || v != std::floor(v)) throw UsageError("--N-list: levels must be positive integers");
    out.push_back(static_cast<int>(v));
  }
  if (out.empty()) throw UsageError("--N-list: empty list");
  return out;
}

HalfInt parse_half(const std::string& s, const char* flag) {
  double v = 0.0;
  try {
    const auto slash = s.find('/');
    std::size_t used = 0;
    if (slash == std::string::npos) {
      v = std::stod(s, &used);
      if (used != s.size()) throw std::invalid_argument(s);
    } else {
      const std::string num = s.substr(0, slash), den = s.substr(slash + 1);
      v = std::stod(num, &used);
      if (used != num.size() || den != "2") throw std::invalid_argument(s);
      v /= 2.0;
    }
    return HalfInt::from_double(v);
  } catch (const std::exception&) {
    throw UsageError(std::string(flag) + ": '" + s + "' is not an integer or half-integer");
  }
}

BlochPoint parse_point(const std::string& s, bool degrees, const char* flag) {
  std::vector<double> v = parse_list(s, 2, flag);
  if (degrees)
    for (double& x : v) x *= std::numbers::pi / 180.0;
  if (v[1] < 0.0 || v[1] > std::numbers::pi + 1e-12) throw UsageError(std::string(flag) + ": theta must lie in [0, pi]");
  return BlochPoint::normalized(v[0], std::min(v[1], std::numbers::pi));
}

Eigen::Vector3d parse_vector(const std::string& s, const char* flag) {
  const std::vector<double> v = parse_list(s, 3, flag);
  return {v[0], v[1], v[2]};
}

struct Context {
  std::vector<std::string> args;
  std::string format = "json";

  json manifest(const json& config, std::optional<std::uint64_t> seed) const {
    json m;
    m["command_line"] = args;
    m["config"] = config;
    m["version"] = kVersion;
    if (seed) m["seed"] = *seed;
    else m["seed"] = nullptr;
    return m;
  }
};

void emit(const json& j) { std::cout << j.dump(2) << '\n'; }

// ---------------------------------------------------------------- spectrum

struct SpectrumOpts {
  std::string triple = "irreducible";
  int N = 1;
};

int cmd_spectrum(const Context& ctx, const SpectrumOpts& o) {
  const SpinLabel spin(o.N);
  const DiracKind kind = o.triple == "full" ? DiracKind::full : DiracKind::irreducible;
  RealVector ev;
  if (kind == DiracKind::full) {
    if (o.N > kFullSpectrumCap) {
      const long long n = o.N + 1;
      throw UsageError("spectrum: the full triple at N = " + std::to_string(o.N) + " acts on dimension " +
                       std::to_string(2 * n * n) + "; the limit is N <= " + std::to_string(kFullSpectrumCap));
    }
    ev = full_spectrum_by_sectors(spin);
  } else {
    ev = build_irreducible(spin).eigen().eigenvalues;
  }
  const auto predicted = predicted_spectrum(kind, spin);
  const auto binned = bin_spectrum(ev);
  const double dev = spectrum_deviation(ev, predicted);
  const bool ok = dev <= Tolerances::spectrum_bin && binned.size() == predicted.size();

  if (ctx.format == "csv") {
    std::cout << "eigenvalue,multiplicity\n";
    for (const auto& e : binned) std::cout << fmt17(e.value) << ',' << e.multiplicity << '\n';
  } else {
    json failures = json::array();
    json rows = json::array();
    for (const auto& e : binned) rows.push_back({{"eigenvalue", e.value}, {"multiplicity", e.multiplicity}});
    json out{{"schema_version", kSchemaVersion},
             {"command", "spectrum"},
             {"triple", to_string(kind)},
             {"N", o.N},
             {"dimension", ev.size()},
             {"spectrum", rows},
             {"matches_prediction", ok}};
    out["max_deviation"] = number(dev, "max_deviation", failures);
    out["failures"] = failures;
    out["manifest"] = ctx.manifest({{"triple", o.triple}, {"N", o.N}}, std::nullopt);
    emit(out);
  }
  return ok ? kExitOk : kExitVerify;
}

// ---------------------------------------------------------------- distance

struct DistanceOpts {
  std::string kind;
  int N = 1;
  std::string m, n, p, q, x, y;
  std::string method;
  std::uint64_t seed = 0;
  bool force = false;
  bool degrees = false;
};

int cmd_distance(const Context& ctx, const DistanceOpts& o) {
  SolverConfig cfg;
  cfg.seed = o.seed;
  const std::string method = o.method.empty() ? (o.kind == "coherent" ? "bounds" : "closed") : o.method;
  const bool numeric = method == "numeric";
  if (numeric && o.N > kNumericCap && !o.force)
    throw UsageError("distance: numeric method at N = " + std::to_string(o.N) +
                     " needs many dense eigensolves of size " + std::to_string(2 * (o.N + 1)) +
                     "; use --method bounds, or pass --force to run it anyway (limit without --force: N <= " +
                     std::to_string(kNumericCap) + ")");

  DistanceResult r;
  json config{{"kind", o.kind}, {"method", method}};
  if (o.kind == "basis") {
    if (o.m.empty() || o.n.empty()) throw UsageError("distance basis: --m and --n are required");
    const SpinLabel spin(o.N);
    const HalfInt m = parse_half(o.m, "--m"), n = parse_half(o.n, "--n");
    config["N"] = o.N;
    config["m"] = to_string(m);
    config["n"] = to_string(n);
    if (method == "closed") r = basis_chain(spin, m, n);
    else if (numeric) r = connes_numeric(spin, basis_state(spin, m), basis_state(spin, n), cfg);
    else throw UsageError("distance basis: --method must be closed or numeric");
  } else if (o.kind == "coherent") {
    if (o.p.empty() || o.q.empty()) throw UsageError("distance coherent: --p and --q are required");
    const SpinLabel spin(o.N);
    const BlochPoint p = parse_point(o.p, o.degrees, "--p"), q = parse_point(o.q, o.degrees, "--q");
    config["N"] = o.N;
    config["p"] = {p.phi, p.theta};
    config["q"] = {q.phi, q.theta};
    const CoherentMethod cm = method == "closed" ? CoherentMethod::closed
                              : numeric         ? CoherentMethod::numeric
                                                : CoherentMethod::bounds;
    try {
      r = coherent_distance(spin, p, q, cm, cfg);
    } catch (const ContractViolation& e) {
      throw UsageError(e.what());
    }
  } else {
    if (o.x.empty() || o.y.empty()) throw UsageError("distance ball: --x and --y are required");
    const Eigen::Vector3d x = parse_vector(o.x, "--x"), y = parse_vector(o.y, "--y");
    config["x"] = {x.x(), x.y(), x.z()};
    config["y"] = {y.x(), y.y(), y.z()};
    if (method == "closed") r = d1_ball(x, y);
    else if (numeric) r = connes_numeric(SpinLabel(1), ball_state(x), ball_state(y), cfg);
    else throw UsageError("distance ball: --method must be closed or numeric");
  }

  std::optional<double> residual;
  if (r.diagnostics) residual = r.diagnostics->certificate_residual;
  if (ctx.format == "csv") {
    auto opt = [](const std::optional<double>& v) { return v ? fmt17(*v) : std::string(); };
    std::cout << "value,method,lower,upper,certificate_norm_residual,seed\n"
              << fmt17(r.value) << ',' << to_string(r.method) << ',' << opt(r.lower) << ',' << opt(r.upper) << ','
              << opt(residual) << ',' << o.seed << '\n';
    return kExitOk;
  }
  json failures = json::array();
  json out{{"schema_version", kSchemaVersion}, {"command", "distance"}, {"method", to_string(r.method)}};
  out["value"] = number(r.value, "value", failures);
  if (r.lower) out["lower"] = number(*r.lower, "lower", failures);
  if (r.upper) out["upper"] = number(*r.upper, "upper", failures);
  if (residual) out["certificate_norm_residual"] = number(*residual, "certificate_norm_residual", failures);
  if (r.diagnostics) {
    const SolverDiagnostics& d = *r.diagnostics;
    out["diagnostics"] = {{"converged", d.converged},           {"restarts", d.restarts},
                          {"converged_restarts", d.converged_restarts}, {"best_restart", d.best_restart},
                          {"iterations", d.iterations}};
    out["diagnostics"]["achieved_tolerance"] = number(d.achieved_tolerance, "achieved_tolerance", failures);
  }
  out["seed"] = o.seed;
  out["failures"] = failures;
  out["manifest"] = ctx.manifest(config, o.seed);
  emit(out);
  return kExitOk;
}

// ---------------------------------------------------------------- rho

struct RhoOpts {
  int N = 1;
  std::optional<double> theta;
  std::optional<int> sweep;
  bool degrees = false;
};

void write_rows_csv(std::ostream& os, const std::vector<SweepRow>& rows) {
  os << "N,theta,theta_over_pi,rho,deficit\n";
  for (const auto& r : rows)
    os << r.N << ',' << fmt17(r.theta) << ',' << fmt17(r.theta_over_pi) << ',' << fmt17(r.rho) << ','
       << fmt17(r.deficit) << '\n';
}

json rows_json(const std::vector<SweepRow>& rows) {
  json out = json::array();
  for (const auto& r : rows)
    out.push_back({{"N", r.N}, {"theta", r.theta}, {"theta_over_pi", r.theta_over_pi}, {"rho", r.rho},
                   {"deficit", r.deficit}});
  return out;
}

int cmd_rho(const Context& ctx, const RhoOpts& o) {
  const SpinLabel spin(o.N);
  if (o.theta.has_value() == o.sweep.has_value()) throw UsageError("rho: give exactly one of --theta or --sweep");
  if (o.sweep) {
    const auto rows = rho_sweep({{o.N}, *o.sweep});
    if (ctx.format == "csv") {
      write_rows_csv(std::cout, rows);
    } else {
      emit({{"schema_version", kSchemaVersion}, {"command", "rho"}, {"rows", rows_json(rows)},
            {"manifest", ctx.manifest({{"N", o.N}, {"sweep", *o.sweep}}, std::nullopt)}});
    }
    return kExitOk;
  }
  double theta = *o.theta;
  if (o.degrees) theta *= std::numbers::pi / 180.0;
  if (theta < 0.0 || theta > std::numbers::pi + 1e-12) throw UsageError("rho: theta must lie in [0, pi]");
  theta = std::min(theta, std::numbers::pi);
  const double rho = rho_closed(spin, theta).value;
  const double deriv = rho_derivative(spin, theta);
  if (ctx.format == "csv") {
    std::cout << "N,theta,rho,derivative\n" << o.N << ',' << fmt17(theta) << ',' << fmt17(rho) << ',' << fmt17(deriv) << '\n';
  } else {
    emit({{"schema_version", kSchemaVersion}, {"command", "rho"}, {"N", o.N}, {"theta", theta},
          {"value", rho}, {"method", "closed_form"}, {"derivative", deriv},
          {"manifest", ctx.manifest({{"N", o.N}, {"theta", theta}}, std::nullopt)}});
  }
  return kExitOk;
}

// ---------------------------------------------------------------- figure

struct FigureOpts {
  std::string name;
  std::string levels;
  int samples = 201;
  std::string out;
};

struct FigureChecks {
  double above_diagonal = 0.0;   // max(rho - theta)
  double non_monotone_n = 0.0;   // max(rho_{N_a} - rho_{N_b}) for N_a < N_b
  double deficit_not_at_pi = 0.0;
  bool ok() const { return above_diagonal <= 0.0 && non_monotone_n <= 0.0 && deficit_not_at_pi <= 0.0; }
};

FigureChecks check_figure(const std::vector<SweepRow>& rows, int samples) {
  FigureChecks c;
  const std::size_t per = static_cast<std::size_t>(samples);
  for (std::size_t b = 0; b < rows.size(); b += per) {
    double best = -1.0;
    for (std::size_t i = b; i < b + per; ++i) {
      c.above_diagonal = std::max(c.above_diagonal, rows[i].rho - rows[i].theta);
      best = std::max(best, rows[i].deficit);
      if (b >= per) c.non_monotone_n = std::max(c.non_monotone_n, rows[i - per].rho - rows[i].rho);
    }
    c.deficit_not_at_pi = std::max(c.deficit_not_at_pi, best - rows[b + per - 1].deficit);
  }
  return c;
}

std::string plot_script(const std::string& name, const std::filesystem::path& csv, const std::vector<int>& levels) {
  std::ostringstream gp;
  const bool asymp = name == "rho-asymp";
  gp << "# gnuplot script; reads " << csv.filename().string() << " only\n"
     << "set datafile separator ','\n"
     << "set key autotitle columnhead\n"
     << "set xlabel 'theta / pi'\n"
     << "set ylabel '" << (asymp ? "rho_N(theta)" : "theta - rho_N(theta)") << "'\n"
     << "plot ";
  if (asymp)
    gp << "'" << csv.filename().string() << "' using 3:($1 == " << levels.front()
       << " ? $2 : 1/0) with lines title 'theta', \\\n     ";
  for (std::size_t i = 0; i < levels.size(); ++i) {
    gp << "'" << csv.filename().string() << "' using 3:($1 == " << levels[i] << " ? $" << (asymp ? 4 : 5)
       << " : 1/0) with lines title 'N = " << levels[i] << "'";
    gp << (i + 1 < levels.size() ? ", \\\n     " : "\n");
  }
  return gp.str();
}

int cmd_figure(const Context& ctx, const FigureOpts& o) {
  const auto start = std::chrono::steady_clock::now();
  std::vector<int> levels;
  if (!o.levels.empty()) levels = parse_levels(o.levels);
  else if (o.name == "rho-asymp") levels = {10, 30, 500};
  else levels = {5, 10, 20, 30};
  std::sort(levels.begin(), levels.end());
  levels.erase(std::unique(levels.begin(), levels.end()), levels.end());

  const auto rows = rho_sweep({levels, o.samples});
  const FigureChecks checks = check_figure(rows, o.samples);

  const std::filesystem::path csv = o.out.empty() ? std::filesystem::path(o.name + ".csv") : std::filesystem::path(o.out);
  std::filesystem::path script = csv, sidecar = csv;
  script.replace_extension(".gp");
  sidecar.replace_extension(".manifest.json");

  std::ofstream f(csv, std::ios::binary);
  if (!f) throw UsageError("figure: cannot write " + csv.string());
  write_rows_csv(f, rows);
  f.close();
  if (!f) throw UsageError("figure: failed writing " + csv.string());
  std::ofstream(script, std::ios::binary) << plot_script(o.name, csv, levels);

  const json config{{"name", o.name}, {"levels", levels}, {"samples", o.samples}};
  json m = ctx.manifest(config, std::nullopt);
  json check_list = json::array();
  check_list.push_back({{"name", "rho_N <= theta"}, {"residual", checks.above_diagonal}, {"passed", checks.above_diagonal <= 0.0}});
  check_list.push_back({{"name", "rho monotone in N"}, {"residual", checks.non_monotone_n}, {"passed", checks.non_monotone_n <= 0.0}});
  check_list.push_back({{"name", "deficit maximal at pi"}, {"residual", checks.deficit_not_at_pi}, {"passed", checks.deficit_not_at_pi <= 0.0}});
  m["checks"] = check_list;
  json side = m;
  side["wall_clock_seconds"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::ofstream(sidecar, std::ios::binary) << side.dump(2) << '\n';

  if (ctx.format == "csv") {
    write_rows_csv(std::cout, rows);
  } else {
    emit({{"schema_version", kSchemaVersion}, {"command", "figure"}, {"csv", csv.string()},
          {"script", script.string()}, {"manifest_file", sidecar.string()}, {"rows", rows.size()},
          {"passed", checks.ok()}, {"manifest", m}});
  }
  return checks.ok() ? kExitOk : kExitVerify;
}

// ---------------------------------------------------------------- verify

struct VerifyOpts {
  std::string suite = "all";
  int max_N = 8;
  std::uint64_t seed = 0;
};

int cmd_verify(const Context& ctx, const VerifyOpts& o) {
  const auto reports = run_suite(o.suite, o.max_N, o.seed);
  bool ok = true;
  for (const auto& r : reports) ok = ok && r.passed();
  if (ctx.format == "csv") {
    std::cout << "suite,check,N,residual,tolerance,informational,passed\n";
    for (const auto& r : reports)
      for (const auto& c : r.checks)
        std::cout << c.suite << ",\"" << c.name << "\"," << c.N << ',' << fmt17(c.residual) << ',' << fmt17(c.tolerance)
                  << ',' << (c.informational ? "true" : "false") << ',' << (c.passed() ? "true" : "false") << '\n';
    return ok ? kExitOk : kExitVerify;
  }
  json failures = json::array();
  json suites = json::array();
  for (const auto& r : reports) {
    json checks = json::array();
    for (const auto& c : r.checks) {
      json cj{{"name", c.name}, {"N", c.N}, {"tolerance", c.tolerance}, {"informational", c.informational},
              {"passed", c.passed()}};
      cj["residual"] = number(c.residual, r.suite + "/" + c.name, failures);
      checks.push_back(cj);
    }
    suites.push_back({{"suite", r.suite}, {"passed", r.passed()}, {"failures", r.failures()}, {"checks", checks}});
  }
  emit({{"schema_version", kSchemaVersion}, {"command", "verify"}, {"passed", ok}, {"suites", suites},
        {"failures", failures}, {"seed", o.seed},
        {"manifest", ctx.manifest({{"suite", o.suite}, {"max_N", o.max_N}}, o.seed)}});
  return ok ? kExitOk : kExitVerify;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spectral triples and Connes distances on the fuzzy sphere"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);

  Context ctx;
  ctx.args.push_back(std::filesystem::path(argv[0]).filename().string());
  for (int i = 1; i < argc; ++i) ctx.args.emplace_back(argv[i]);

  const std::vector<std::string> formats{"json", "csv"};
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", ctx.format, "Output format")->check(CLI::IsMember(formats))->capture_default_str();
  };

  SpectrumOpts so;
  auto* spectrum = app.add_subcommand("spectrum", "Dirac spectrum with multiplicities");
  spectrum->add_option("--triple", so.triple, "irreducible or full")
      ->check(CLI::IsMember({"irreducible", "full"}))
      ->capture_default_str();
  spectrum->add_option("--N", so.N, "Level N = 2j >= 1")->required()->check(CLI::PositiveNumber);
  add_format(spectrum);

  DistanceOpts dopt;
  dopt.seed = default_seed();
  auto* distance = app.add_subcommand("distance", "Spectral distance between two states");
  distance->require_subcommand(1);
  auto add_common = [&](CLI::App* sub, bool with_level) {
    if (with_level) sub->add_option("--N", dopt.N, "Level N = 2j >= 1")->required()->check(CLI::PositiveNumber);
    sub->add_option("--method", dopt.method, "closed, numeric or bounds")
        ->check(CLI::IsMember({"closed", "numeric", "bounds"}));
    sub->add_option("--seed", dopt.seed, "Solver seed (default $FUZZY_SEED or 0)");
    sub->add_flag("--force", dopt.force, "Allow the numeric method above N = 24");
    add_format(sub);
  };
  auto* basis = distance->add_subcommand("basis", "Basis states |j,m> and |j,n>");
  add_common(basis, true);
  basis->add_option("--m", dopt.m, "m, integer or half-integer such as -1/2")->required();
  basis->add_option("--n", dopt.n, "n, integer or half-integer")->required();
  auto* coherent = distance->add_subcommand("coherent", "Coherent states at two Bloch points");
  add_common(coherent, true);
  coherent->add_option("--p", dopt.p, "phi,theta")->required()->allow_extra_args(false);
  coherent->add_option("--q", dopt.q, "phi,theta")->required()->allow_extra_args(false);
  coherent->add_flag("--degrees", dopt.degrees, "Angles are in degrees");
  auto* ball = distance->add_subcommand("ball", "Bloch-ball states of M_2(C)");
  add_common(ball, false);
  ball->add_option("--x", dopt.x, "x1,x2,x3 with |x| <= 1")->required();
  ball->add_option("--y", dopt.y, "y1,y2,y3 with |y| <= 1")->required();

  RhoOpts ro;
  auto* rho = app.add_subcommand("rho", "rho_N(theta) in closed form");
  rho->add_option("--N", ro.N, "Level N >= 1")->required()->check(CLI::PositiveNumber);
  rho->add_option("--theta", ro.theta, "Angle in [0, pi]");
  rho->add_option("--sweep", ro.sweep, "Number of theta samples on [0, pi]")->check(CLI::Range(2, 1000000));
  rho->add_flag("--degrees", ro.degrees, "--theta is in degrees");
  add_format(rho);

  FigureOpts fo;
  auto* figure = app.add_subcommand("figure", "Write a rho_N sweep CSV with a plot script and manifest");
  figure->add_option("--name", fo.name, "rho-asymp or rho-drop")->required()->check(CLI::IsMember({"rho-asymp", "rho-drop"}));
  figure->add_option("--N-list", fo.levels, "Comma-separated levels");
  figure->add_option("--samples", fo.samples, "Theta samples on [0, pi]")->check(CLI::Range(2, 1000000))->capture_default_str();
  figure->add_option("--out", fo.out, "CSV path (default <name>.csv)");
  add_format(figure);

  VerifyOpts vo;
  vo.seed = default_seed();
  auto* verify = app.add_subcommand("verify", "Run property suites");
  std::vector<std::string> suites = suite_names();
  suites.push_back("all");
  verify->add_option("--suite", vo.suite, "Suite name")->check(CLI::IsMember(suites))->capture_default_str();
  verify->add_option("--max-N", vo.max_N, "Largest level")->check(CLI::PositiveNumber)->capture_default_str();
  verify->add_option("--seed", vo.seed, "Seed (default $FUZZY_SEED or 0)");
  add_format(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*spectrum) return cmd_spectrum(ctx, so);
    if (*distance) {
      dopt.kind = *basis ? "basis" : *coherent ? "coherent" : "ball";
      return cmd_distance(ctx, dopt);
    }
    if (*rho) return cmd_rho(ctx, ro);
    if (*figure) return cmd_figure(ctx, fo);
    if (*verify) return cmd_verify(ctx, vo);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
