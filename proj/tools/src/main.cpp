// slgeo: command-line front end for the sublorentz library.
//
// Exit codes: 0 success, 2 parse or validation error, 3 indeterminate
// classification, 4 validation suite failure.

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <optional>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include "CLI11.hpp"
#include "io.hpp"
#include "sublorentz/sublorentzian.hpp"
#include "validation.hpp"

using namespace sublorentz;
using slio::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitIndeterminate = 3;
constexpr int kExitSuite = 4;

struct Globals {
  double tol = 1e-7;
  std::uint64_t seed = 1;
  double step = 1e-3;
  std::string format;  // empty: per-command default
  std::string out;     // empty: stdout
};

/// Writes to --out when given, else stdout.
class Sink {
 public:
  explicit Sink(const std::string& path) {
    if (!path.empty()) {
      file_ = std::make_unique<std::ofstream>(path);
      if (!*file_) throw GeometryError(ErrorCode::kInvalidArgument, "cannot open output file " + path);
    }
  }
  std::ostream& os() { return file_ ? *file_ : std::cout; }

 private:
  std::unique_ptr<std::ofstream> file_;
};

Vec3 vec3_arg(const std::string& text, const std::string& what) {
  const auto v = slio::parse_list(text, what);
  if (v.size() != 3) throw GeometryError(ErrorCode::kParse, what + ": expected 3 values, got " + std::to_string(v.size()));
  return {v[0], v[1], v[2]};
}

Mat2C matrix_arg(const std::string& inline_json, const std::string& path) {
  std::string text = inline_json;
  if (text.empty()) {
    if (path.empty()) throw GeometryError(ErrorCode::kParse, "give the matrix with --matrix or --input");
    std::ifstream in(path);
    if (!in) throw GeometryError(ErrorCode::kParse, "cannot read " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw GeometryError(ErrorCode::kParse, std::string("matrix JSON: ") + e.what());
  }
  // Also accept the full output of `exp`, whose matrix sits under result.
  if (j.is_object() && !j.contains("m") && j.contains("result") && j["result"].contains("matrix"))
    return slio::matrix_from_json(j["result"]["matrix"]);
  return slio::matrix_from_json(j);
}

json base_config(const Globals& g, const std::string& command) {
  return json{{"command", command}, {"tol", g.tol}, {"seed", g.seed}, {"step", g.step},
              {"format", g.format}, {"out", g.out}};
}

void emit_json(const Globals& g, const json& config, const json& result) {
  Sink sink(g.out);
  sink.os() << json{{"config", config}, {"result", result}}.dump(2) << '\n';
}

std::vector<std::string> csv_header(const json& config) { return {"config " + config.dump()}; }

void emit_path(const Globals& g, const json& config, const PathSample& p, const slio::ExtraColumns& extra = {},
               const json& extra_header = nullptr) {
  Sink sink(g.out);
  if (g.format == "json") {
    json rows = json::array();
    for (std::size_t i = 0; i < p.size(); ++i) {
      json row{{"t", p.times[i]}, {"g", slio::to_json(p.points[i])}, {"u", p.controls[i].u}};
      if (p.covectors.size() == p.size()) row["psi"] = p.covectors[i].psi;
      rows.push_back(row);
    }
    json result{{"samples", rows}};
    if (!extra_header.is_null()) result["report"] = extra_header;
    sink.os() << json{{"config", config}, {"result", result}}.dump(2) << '\n';
    return;
  }
  auto header = csv_header(config);
  if (!extra_header.is_null()) header.push_back("report " + extra_header.dump());
  slio::write_path_csv(sink.os(), p, header, extra);
}

// --------------------------------------------------------------------------

int cmd_exp(const Globals& g, const std::string& coeffs, double t) {
  const auto c = slio::parse_list(coeffs, "--coeffs");
  AlgCoords u;
  if (c.size() == 4 || c.size() == 7) {
    for (std::size_t i = 0; i < c.size(); ++i) u[static_cast<int>(i)] = c[i];
  } else if (c.size() == 8) {
    for (int i = 0; i < 8; ++i) u[i] = c[static_cast<std::size_t>(i)];
  } else {
    throw GeometryError(ErrorCode::kParse, "--coeffs: expected 4, 7 or 8 values, got " + std::to_string(c.size()));
  }
  const ComplexAlgVec a = ComplexAlgVec::from_coords(u);
  const Mat2C m = exp_closed(a, t);
  const double residual = max_abs_diff(m, exp_series(cplx{t, 0.0} * a.matrix()));

  json config = base_config(g, "exp");
  config["coeffs"] = c;
  config["t"] = t;
  if (g.format == "csv") {
    Sink sink(g.out);
    sink.os() << "# config " << config.dump() << "\n# series_residual " << slio::format_double(residual)
              << "\nentry,re,im\n";
    const char* names[4] = {"g11", "g12", "g21", "g22"};
    for (int i = 0; i < 4; ++i) {
      sink.os() << names[i] << ',' << slio::format_double(m.entries()[i].real()) << ','
                << slio::format_double(m.entries()[i].imag()) << '\n';
    }
    return kExitOk;
  }
  emit_json(g, config, json{{"matrix", slio::to_json(m)}, {"series_residual", residual}});
  return kExitOk;
}

struct GeodesicArgs {
  std::string kind = "sr";
  std::string alpha;
  std::string beta = "0,0,0";
  double alpha0 = NAN;
  bool normalize = false;
  double t0 = 0.0;
  double t1 = 1.0;
  int samples = 100;
};

int cmd_geodesic(const Globals& g, const GeodesicArgs& a) {
  if (a.samples < 0) throw GeometryError(ErrorCode::kInvalidArgument, "--samples must be non-negative");
  const Vec3 alpha = vec3_arg(a.alpha, "--alpha");
  const Vec3 beta = vec3_arg(a.beta, "--beta");

  std::function<Mat2C(double)> point;
  std::function<AlgCoords(double)> control;
  std::function<double(const AlgCoords&)> norm_residual;
  json resolved;
  if (a.kind == "sr") {
    const SRGeodesicParams p = a.normalize ? SRGeodesicParams::normalized(alpha, beta) : SRGeodesicParams(alpha, beta);
    point = [p](double t) { return sr_geodesic(p, t); };
    control = [p](double t) { return sr_control(p, t); };
    norm_residual = [](const AlgCoords& u) { return std::abs(riem_product(u, u, 1e-9) - 1.0); };
    resolved = {{"alpha", p.alpha()}, {"beta", p.beta()}};
  } else if (a.kind == "timelike" || a.kind == "isotropic") {
    const Regime regime = a.kind == "timelike" ? Regime::kTimelike : Regime::kIsotropic;
    std::optional<ExtremalParams> p;
    if (a.normalize) {
      p = regime == Regime::kTimelike ? ExtremalParams::timelike(alpha, beta) : ExtremalParams::isotropic(alpha, beta);
    } else {
      if (std::isnan(a.alpha0)) {
        throw GeometryError(ErrorCode::kBadNormalization, "--alpha0 is required unless --normalize is given");
      }
      p.emplace(std::array<double, 7>{a.alpha0, alpha[0], alpha[1], alpha[2], beta[0], beta[1], beta[2]}, regime);
    }
    const ExtremalParams params = *p;
    point = [params](double t) { return normal_extremal(params, t); };
    control = [params](double t) { return normal_extremal_control(params, t); };
    const double target = regime == Regime::kTimelike ? 1.0 : 0.0;
    norm_residual = [target](const AlgCoords& u) { return std::abs(herm_form(u, 1e-9) - target); };
    resolved = {{"alpha", params.alpha()}, {"regime", to_string(regime)}};
  } else {
    throw GeometryError(ErrorCode::kInvalidArgument, "--kind must be sr, timelike or isotropic");
  }

  PathSample path;
  slio::ExtraColumns extra;
  extra.det = true;
  for (int i = 0; i < a.samples; ++i) {
    const double t = a.samples == 1 ? a.t0 : (i + 1 == a.samples ? a.t1 : a.t0 + (a.t1 - a.t0) * i / (a.samples - 1));
    path.times.push_back(t);
    path.points.push_back(point(t));
    path.controls.push_back(control(t));
    extra.norm_residual.push_back(norm_residual(path.controls.back()));
  }
  json config = base_config(g, "geodesic");
  config.update({{"kind", a.kind}, {"params", resolved}, {"normalize", a.normalize},
                 {"t0", a.t0}, {"t1", a.t1}, {"samples", a.samples}});
  if (path.size() == 0) extra.norm_residual.clear();
  emit_path(g, config, path, extra);
  return kExitOk;
}

ShootOptions shoot_options(const Globals& g, int budget) {
  ShootOptions o;
  o.tol = g.tol;
  o.seed = g.seed;
  o.budget = budget;
  return o;
}

int cmd_classify(const Globals& g, const std::string& matrix, const std::string& input, int budget) {
  const Mat2C m = matrix_arg(matrix, input);
  const CausalReport r = causal_classify(m, shoot_options(g, budget));
  json config = base_config(g, "classify");
  config.update({{"matrix", slio::to_json(m)}, {"budget", budget}});
  emit_json(g, config, slio::to_json(r));
  return r.cls == CausalClass::kIndeterminate ? kExitIndeterminate : kExitOk;
}

int cmd_distance(const Globals& g, const std::string& matrix, const std::string& input, int budget) {
  const Mat2C m = matrix_arg(matrix, input);
  const DistanceBracket b = distance_shoot(m, shoot_options(g, budget));
  json config = base_config(g, "distance");
  config.update({{"matrix", slio::to_json(m)}, {"budget", budget}});
  emit_json(g, config, slio::to_json(b));
  return kExitOk;
}

int cmd_longest_arc(const Globals& g, const std::string& matrix, const std::string& input, int samples, int budget) {
  const Mat2C m = matrix_arg(matrix, input);
  json config = base_config(g, "longest-arc");
  config.update({{"matrix", slio::to_json(m)}, {"samples", samples}, {"budget", budget}});
  try {
    const LongestArc arc = longest_arc(m, samples, shoot_options(g, budget));
    json info = slio::to_json(arc.report);
    info["duration"] = arc.duration;
    info["endpoint_residual"] = arc.endpoint_residual;
    emit_path(g, config, arc.path, {}, info);
  } catch (const NotReachableError& e) {
    std::cerr << e.what() << '\n' << slio::to_json(e.report()).dump(2) << '\n';
    return e.report().cls == CausalClass::kIndeterminate ? kExitIndeterminate : kExitInput;
  }
  return kExitOk;
}

Regime regime_arg(const std::string& s) {
  if (s == "timelike") return Regime::kTimelike;
  if (s == "isotropic") return Regime::kIsotropic;
  throw GeometryError(ErrorCode::kInvalidArgument, "--regime must be timelike or isotropic");
}

int steps_for(double T, double step) {
  if (!(step > 0.0) || !(T > 0.0)) throw GeometryError(ErrorCode::kInvalidArgument, "T and --step must be positive");
  return std::max(1, static_cast<int>(std::lround(T / step)));
}

int cmd_pontryagin(const Globals& g, const std::string& psi, const std::string& regime, double T) {
  const auto v = slio::parse_list(psi, "--psi");
  if (v.size() != 7) throw GeometryError(ErrorCode::kParse, "--psi: expected 7 values");
  CovectorState c;
  std::copy(v.begin(), v.end(), c.psi.begin());
  const int steps = steps_for(T, g.step);
  const PontryaginResult res = pontryagin_integrate(c, regime_arg(regime), T, steps);
  json config = base_config(g, "extremal pontryagin");
  config.update({{"psi", v}, {"regime", regime}, {"T", T}, {"steps", steps}});
  emit_path(g, config, res.path, {}, json{{"hamiltonian_drift", res.hamiltonian_drift}});
  return kExitOk;
}

KappaSamples kappa_arg(const std::string& kappa_text, const std::string& file, double T, int steps) {
  if (!file.empty()) {
    std::ifstream in(file);
    if (!in) throw GeometryError(ErrorCode::kParse, "cannot read " + file);
    KappaSamples k;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      if (line.empty() || line[0] == '#' || std::isalpha(static_cast<unsigned char>(line[0]))) continue;
      const auto v = slio::parse_list(line, file + ":" + std::to_string(lineno));
      if (v.size() != 2) throw GeometryError(ErrorCode::kParse, file + ":" + std::to_string(lineno) + ": expected t,value");
      k.times.push_back(v[0]);
      k.values.push_back(v[1]);
    }
    return k;
  }
  const auto colon = kappa_text.find(':');
  const std::string kind = kappa_text.substr(0, colon);
  const auto p = colon == std::string::npos ? std::vector<double>{} : slio::parse_list(kappa_text.substr(colon + 1), "--kappa");
  std::function<double(double)> f;
  if (kind == "const" && p.size() == 1) {
    f = [c = p[0]](double) { return c; };
  } else if (kind == "linear" && p.size() == 2) {
    f = [a = p[0], b = p[1]](double t) { return a + b * t; };
  } else if (kind == "exp" && p.size() == 2) {
    f = [a = p[0], b = p[1]](double t) { return a * std::exp(b * t); };
  } else {
    throw GeometryError(ErrorCode::kParse, "--kappa: expected const:c, linear:a,b or exp:a,b");
  }
  // Nodes at half steps so every RK4 stage lands on a node.
  return KappaSamples::from_function(f, T, 2 * steps);
}

int cmd_abnormal(const Globals& g, const std::string& kappa, const std::string& kappa_file, const std::string& beta,
                 const std::string& regime, double T) {
  const int steps = steps_for(T, g.step);
  const KappaSamples k = kappa_arg(kappa, kappa_file, T, steps);
  const AbnormalResult res = abnormal_extremal(k, vec3_arg(beta, "--beta-dir"), regime_arg(regime), steps);
  json config = base_config(g, "extremal abnormal");
  config.update({{"kappa", kappa}, {"kappa_file", kappa_file}, {"beta_dir", beta}, {"regime", regime}, {"T", T},
                 {"steps", steps}});
  emit_path(g, config, res.path, {}, json{{"covector_residual", res.covector_residual}});
  return kExitOk;
}

int cmd_check(const Globals& g, const std::string& input) {
  std::ifstream in(input);
  if (!in) throw GeometryError(ErrorCode::kParse, "cannot read " + input);
  const PathSample p = slio::read_path_csv(in);
  const NonstrictReport r = nonstrict_abnormal_check(p);
  json config = base_config(g, "extremal check");
  config["input"] = input;
  emit_json(g, config, slio::to_json(r));
  return kExitOk;
}

int cmd_hermitian(const Globals& g, const std::string& alpha, const std::string& beta) {
  const Vec3 a = vec3_arg(alpha, "--alpha");
  const Vec3 b = vec3_arg(beta, "--beta");
  const HermiticityReport r = hermitian_endpoint_check(a, b);
  json config = base_config(g, "hermitian-check");
  config.update({{"alpha", a}, {"beta", b}, {"case_tolerance", 1e-9}});
  emit_json(g, config, slio::to_json(r));
  return kExitOk;
}

int cmd_validate(const Globals& g, const std::vector<std::string>& only) {
  slval::SuiteOptions opts;
  opts.seed = g.seed;
  opts.only = only;
  for (const std::string& o : only) {
    const auto& names = slval::group_names();
    if (std::find(names.begin(), names.end(), o) == names.end()) {
      throw GeometryError(ErrorCode::kInvalidArgument, "--only: unknown group " + o);
    }
  }
  const auto results = slval::run_suite(opts);
  for (const auto& r : results) std::cerr << slval::summary_line(r) << '\n';
  const json report = slval::to_json(results, opts);
  Sink sink(g.out);
  sink.os() << report.dump(2) << '\n';
  return report.at("all_pass").get<bool>() ? kExitOk : kExitSuite;
}

int cmd_plot_script(const Globals& g, const std::string& csv, const std::vector<std::string>& columns,
                    const std::string& xcol) {
  std::ifstream in(csv);
  if (!in) throw GeometryError(ErrorCode::kParse, "cannot read " + csv);
  std::string line;
  std::vector<std::string> header;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) header.push_back(cell);
    break;
  }
  auto index_of = [&](const std::string& name) {
    const auto it = std::find(header.begin(), header.end(), name);
    if (it == header.end()) throw GeometryError(ErrorCode::kParse, "column " + name + " not in " + csv);
    return static_cast<int>(it - header.begin()) + 1;
  };
  Sink sink(g.out);
  std::ostream& os = sink.os();
  os << "# gnuplot script for " << csv << "\nset datafile separator ','\nset datafile commentschars '#'\n"
     << "set key autotitle columnhead\nset xlabel '" << xcol << "'\nplot ";
  const int xi = index_of(xcol);
  for (std::size_t i = 0; i < columns.size(); ++i) {
    os << (i ? ", \\\n     " : "") << "'" << csv << "' using " << xi << ':' << index_of(columns[i])
       << " with lines title '" << columns[i] << "'";
  }
  os << '\n';
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sub-Riemannian and sub-Lorentzian geometry on GL+(2,C)", "slgeo"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--tol", g.tol, "Shooting residual / classification tolerance")->capture_default_str();
  app.add_option("--seed", g.seed, "Seed for multi-start shooting and validation draws")->capture_default_str();
  app.add_option("--step", g.step, "Integration step")->capture_default_str();
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--out", g.out, "Output file (default: stdout)");

  std::function<int()> action;

  auto* exp_cmd = app.add_subcommand("exp", "exp(t A) from the closed form, with a series cross-check");
  std::string coeffs;
  double t = 1.0;
  exp_cmd->add_option("--coeffs", coeffs, "a0,a1,a2,a3 | a0..a6 | u0..u7")->required();
  exp_cmd->add_option("--t", t)->capture_default_str();
  exp_cmd->callback([&] { action = [&] { return cmd_exp(g, coeffs, t); }; });

  auto* geo_cmd = app.add_subcommand("geodesic", "Sample a sub-Riemannian geodesic or a normal extremal");
  GeodesicArgs ga;
  geo_cmd->add_option("--kind", ga.kind)->check(CLI::IsMember({"sr", "timelike", "isotropic"}))->capture_default_str();
  geo_cmd->add_option("--alpha", ga.alpha, "alpha1,alpha2,alpha3")->required();
  geo_cmd->add_option("--beta", ga.beta, "alpha4,alpha5,alpha6")->capture_default_str();
  geo_cmd->add_option("--alpha0", ga.alpha0, "alpha0 for normal extremals");
  geo_cmd->add_flag("--normalize", ga.normalize, "Fill in alpha0 / rescale alpha to the regime normalization");
  geo_cmd->add_option("--t0", ga.t0)->capture_default_str();
  geo_cmd->add_option("--t1", ga.t1)->capture_default_str();
  geo_cmd->add_option("--samples", ga.samples)->capture_default_str();
  geo_cmd->callback([&] { action = [&] { return cmd_geodesic(g, ga); }; });

  std::string matrix, input;
  int budget = ShootOptions{}.budget;
  int samples = 100;
  auto add_matrix = [&](CLI::App* c) {
    c->add_option("--matrix", matrix, R"(JSON {"m": [[[re,im],[re,im]],[[re,im],[re,im]]]})");
    c->add_option("--input", input, "File holding the matrix JSON");
    c->add_option("--budget", budget, "Maximum local solves")->capture_default_str();
  };
  auto* cls_cmd = app.add_subcommand("classify", "Causal class and sub-Lorentzian distance from the identity");
  add_matrix(cls_cmd);
  cls_cmd->callback([&] { action = [&] { return cmd_classify(g, matrix, input, budget); }; });
  auto* dist_cmd = app.add_subcommand("distance", "Bracket the sub-Riemannian distance on SL(2,C)");
  add_matrix(dist_cmd);
  dist_cmd->callback([&] { action = [&] { return cmd_distance(g, matrix, input, budget); }; });
  auto* arc_cmd = app.add_subcommand("longest-arc", "Sample a longest arc from the identity");
  add_matrix(arc_cmd);
  arc_cmd->add_option("--samples", samples)->capture_default_str();
  arc_cmd->callback([&] { action = [&] { return cmd_longest_arc(g, matrix, input, samples, budget); }; });

  auto* ext_cmd = app.add_subcommand("extremal", "Integrate or test extremals");
  ext_cmd->require_subcommand(1);
  std::string psi, regime = "timelike", kappa, kappa_file, beta_dir = "0,0,1", path_in;
  double T = 1.0;
  auto* pon_cmd = ext_cmd->add_subcommand("pontryagin", "Integrate the covector system from psi(0)");
  pon_cmd->add_option("--psi", psi, "psi0..psi6")->required();
  pon_cmd->add_option("--regime", regime)->capture_default_str();
  pon_cmd->add_option("--T", T)->capture_default_str();
  pon_cmd->callback([&] { action = [&] { return cmd_pontryagin(g, psi, regime, T); }; });
  auto* abn_cmd = ext_cmd->add_subcommand("abnormal", "Integrate an abnormal extremal for a given kappa");
  auto* kopt = abn_cmd->add_option("--kappa", kappa, "const:c | linear:a,b | exp:a,b");
  auto* kfile = abn_cmd->add_option("--kappa-file", kappa_file, "CSV of t,kappa samples");
  kopt->excludes(kfile);
  abn_cmd->add_option("--beta-dir", beta_dir)->capture_default_str();
  abn_cmd->add_option("--regime", regime)->capture_default_str();
  abn_cmd->add_option("--T", T)->capture_default_str();
  abn_cmd->callback([&] {
    action = [&] {
      if (kappa.empty() && kappa_file.empty()) throw GeometryError(ErrorCode::kParse, "give --kappa or --kappa-file");
      return cmd_abnormal(g, kappa, kappa_file, beta_dir, regime, T);
    };
  });
  auto* chk_cmd = ext_cmd->add_subcommand("check", "Test a sampled path for a one-parameter subgroup");
  chk_cmd->add_option("--input", path_in, "Path CSV")->required();
  chk_cmd->callback([&] { action = [&] { return cmd_check(g, path_in); }; });

  auto* her_cmd = app.add_subcommand("hermitian-check", "Is exp(a+b)exp(-b) Hermitian?");
  std::string halpha, hbeta;
  her_cmd->add_option("--alpha", halpha)->required();
  her_cmd->add_option("--beta", hbeta)->required();
  her_cmd->callback([&] { action = [&] { return cmd_hermitian(g, halpha, hbeta); }; });

  auto* val_cmd = app.add_subcommand("validate", "Run the acceptance criteria");
  std::vector<std::string> only;
  val_cmd->add_option("--only", only, "Restrict to groups");
  val_cmd->callback([&] { action = [&] { return cmd_validate(g, only); }; });

  auto* plot_cmd = app.add_subcommand("plot-script", "Emit a gnuplot script for a path CSV");
  std::string plot_csv, xcol = "t";
  std::vector<std::string> ycols{"g11_re", "g22_re"};
  plot_cmd->add_option("--csv", plot_csv)->required();
  plot_cmd->add_option("--x", xcol)->capture_default_str();
  plot_cmd->add_option("--y", ycols)->capture_default_str();
  plot_cmd->callback([&] { action = [&] { return cmd_plot_script(g, plot_csv, ycols, xcol); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitInput;
  }
  // Path-producing commands default to CSV, everything else to JSON.
  if (g.format.empty()) {
    g.format = geo_cmd->parsed() || arc_cmd->parsed() || pon_cmd->parsed() || abn_cmd->parsed() ? "csv" : "json";
  }
  try {
    return action();
  } catch (const GeometryError& e) {
    std::cerr << "error [" << to_string(e.code()) << "]: " << e.what() << '\n';
    return kExitInput;
  } catch (const json::exception& e) {
    std::cerr << "error [parse]: " << e.what() << '\n';
    return kExitInput;
  }
}
