// rmtspacing: tables, samples and verification reports for the transitional
// spacing distributions.
//
// Exit codes: 0 success, 1 usage error, 2 numeric failure, 3 verification failure.

#if __has_include(<CLI11.hpp>)
#include <CLI11.hpp>
#else
#include <CLI/CLI.hpp>
#endif

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "rmtspacing/analysis.hpp"
#include "rmtspacing/chebfit.hpp"
#include "rmtspacing/ensemble.hpp"
#include "rmtspacing/errors.hpp"
#include "rmtspacing/io.hpp"
#include "rmtspacing/oracle.hpp"
#include "rmtspacing/surmise.hpp"
#include "rmtspacing/transition.hpp"
#include "rmtspacing/types.hpp"
#include "rmtspacing/verify.hpp"

namespace {

using namespace rmtspacing;
using io::Json;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitNumeric = 2;
constexpr int kExitVerification = 3;

constexpr const char* kSeedEnv = "RMTSPACING_SEED";
constexpr std::uint64_t kDefaultSeed = 1;

// ---------------------------------------------------------------------------
// parsing helpers

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  for (std::string part; std::getline(ss, part, sep);) out.push_back(part);
  if (!text.empty() && text.back() == sep) out.emplace_back();
  return out;
}

double parse_number(const std::string& text, const std::string& what) {
  try {
    return io::parse_double(text);
  } catch (const UsageError&) {
    throw UsageError(what + ": '" + text + "' is not a number");
  }
}

transition::Grid parse_grid(const std::string& text) {
  const auto parts = split(text, ':');
  if (parts.size() != 3) throw UsageError("--grid must be start:stop:step, got '" + text + "'");
  transition::Grid g{parse_number(parts[0], "--grid"), parse_number(parts[1], "--grid"),
                     parse_number(parts[2], "--grid")};
  g.validate();
  return g;
}

std::vector<double> parse_list(const std::string& text, const std::string& what) {
  std::vector<double> out;
  for (const auto& p : split(text, ',')) out.push_back(parse_number(p, what));
  if (out.empty()) throw UsageError(what + " is empty");
  return out;
}

TransitionKind parse_kind(const std::string& name) {
  if (auto k = parse_transition(name)) return *k;
  throw UsageError("unknown transition '" + name + "' (expected gue-ginibre, ginibre-gse or goe-ginibre)");
}

Alpha make_alpha(double a) {
  try {
    return Alpha(a);
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }
}

AlphaVec parse_alpha_vec(const std::string& text) {
  const auto v = parse_list(text, "--alpha-vec");
  if (v.size() != 3) throw UsageError("--alpha-vec needs three comma-separated values");
  try {
    return AlphaVec(v[0], v[1], v[2]);
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }
}

transition::ZMode parse_z_mode(const std::string& name) {
  if (name == "exact" || name == "exact-quadrature") return transition::ZMode::ExactQuadrature;
  if (name == "cheb" || name == "cheb-approx") return transition::ZMode::ChebApprox;
  throw UsageError("unknown --z-mode '" + name + "'");
}

transition::Scale parse_scale(const std::string& name) {
  if (name == "raw-s" || name == "raw") return transition::Scale::RawS;
  if (name == "unit-mean") return transition::Scale::UnitMeanR;
  throw UsageError("unknown --scale '" + name + "'");
}

ensemble::Method parse_method(const std::string& name) {
  if (name == "formula") return ensemble::Method::Formula;
  if (name == "matrix") return ensemble::Method::Matrix;
  throw UsageError("unknown --method '" + name + "'");
}

analysis::MeanSource parse_mean_source(const std::string& name) {
  if (name == "analytic") return analysis::MeanSource::Analytic;
  if (name == "empirical") return analysis::MeanSource::Empirical;
  throw UsageError("unknown --mean-source '" + name + "'");
}

std::uint64_t resolve_seed(const std::optional<std::uint64_t>& flag) {
  if (flag) return *flag;
  if (const char* env = std::getenv(kSeedEnv); env != nullptr && *env != '\0') {
    try {
      std::size_t pos = 0;
      const auto v = std::stoull(env, &pos);
      if (pos == std::string(env).size()) return v;
    } catch (const std::exception&) {
    }
    throw UsageError(std::string(kSeedEnv) + " must be an unsigned integer");
  }
  return kDefaultSeed;
}

/// The transition whose α-vector equals `v`, if any.
std::optional<std::pair<TransitionKind, Alpha>> match_transition(const AlphaVec& v) {
  if (v.a1() == 1.0 && v.a3() == 0.0) return {{TransitionKind::GueToGinibre, Alpha(v.a2())}};
  if (v.a1() == 1.0 && v.a2() == 1.0) return {{TransitionKind::GinibreToGse, Alpha(v.a3())}};
  if (v.a1() == v.a2() && v.a3() == 0.0) return {{TransitionKind::GoeToGinibre, Alpha(v.a1())}};
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// output

class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty() && path != "-") {
      file_.open(path, std::ios::binary);
      if (!file_) throw UsageError("cannot open output file '" + path + "'");
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

void write_json(const std::string& path, const Json& j) {
  Output out(path);
  out.stream() << j.dump(2) << '\n';
}

io::Provenance provenance(const std::string& command, int argc, char** argv) {
  io::Provenance p;
  p.command = command;
  std::string line;
  for (int i = 1; i < argc; ++i) {
    if (i > 1) line += ' ';
    line += argv[i];
  }
  p.set("argv", line);
  return p;
}

// ---------------------------------------------------------------------------
// commands

struct PdfArgs {
  std::string transition;
  std::optional<int> surmise;
  std::optional<double> alpha;
  std::string alphas;
  std::string grid = "0:5:0.01";
  std::string scale = "unit-mean";
  std::string z_mode = "exact";
  bool renormalize = false;
  std::string cheb_coeffs;
  std::string format = "csv";
  std::string output;
};

Json table_json(const transition::PdfTable& t, const io::Provenance& prov) {
  Json j;
  j["provenance"] = io::to_json(prov);
  j["kind"] = io::source_name(t.source);
  j["alpha"] = t.alpha ? Json(t.alpha->value()) : Json(nullptr);
  j["scale"] = to_string(t.scale);
  j["mean_s"] = t.mean_s;
  j["z_mode"] = t.z_mode ? Json(to_string(*t.z_mode)) : Json(nullptr);
  j["renormalized"] = t.renormalized;
  j["norm_factor"] = t.norm_factor;
  Json xs = Json::array(), ys = Json::array();
  for (const auto& r : t.rows) {
    xs.push_back(r.x);
    ys.push_back(r.density);
  }
  j["x"] = xs;
  j["density"] = ys;
  return j;
}

int cmd_pdf(const PdfArgs& a, io::Provenance prov) {
  if (a.transition.empty() == !a.surmise) {
    throw UsageError("pdf: give exactly one of --transition or --surmise");
  }
  if (a.format != "csv" && a.format != "json") throw UsageError("--format must be csv or json");
  const auto grid = parse_grid(a.grid);
  transition::TableOptions opt;
  opt.pdf.z_mode = parse_z_mode(a.z_mode);
  opt.renormalize = a.renormalize;
  if (!a.cheb_coeffs.empty()) opt.pdf.coeffs = io::read_coefficients(a.cheb_coeffs);
  const auto scale = parse_scale(a.scale);

  prov.set("grid", a.grid).set("scale", std::string(to_string(scale)));
  prov.set("z_mode", std::string(to_string(opt.pdf.z_mode)));
  prov.set("renormalize", a.renormalize ? "true" : "false");
  if (!a.cheb_coeffs.empty()) prov.set("cheb_coeffs", a.cheb_coeffs);

  auto emit = [&](const transition::PdfTable& t, const std::string& path, io::Provenance p) {
    Output out(path);
    if (a.format == "json") {
      out.stream() << table_json(t, p).dump(2) << '\n';
    } else {
      io::write_pdf_csv(out.stream(), t, p);
    }
  };

  if (a.surmise) {
    if (a.alpha || !a.alphas.empty()) throw UsageError("pdf: --surmise takes no alpha");
    surmise::SurmiseBeta beta(1);
    try {
      beta = surmise::SurmiseBeta(*a.surmise);
    } catch (const DomainError& e) {
      throw UsageError(e.what());
    }
    prov.set("surmise", std::to_string(beta.value()));
    emit(transition::pdf_table(beta, std::nullopt, grid, transition::Scale::UnitMeanR, opt),
         a.output, prov);
    return kExitOk;
  }

  const auto kind = parse_kind(a.transition);
  prov.set("transition", a.transition);
  if (a.alpha.has_value() == !a.alphas.empty()) {
    throw UsageError("pdf: give exactly one of --alpha or --alphas");
  }
  if (a.alpha) {
    const auto alpha = make_alpha(*a.alpha);
    prov.set("alpha", alpha.value());
    emit(transition::pdf_table(kind, alpha, grid, scale, opt), a.output, prov);
    return kExitOk;
  }
  const auto alphas = parse_list(a.alphas, "--alphas");
  const auto slot = a.output.find("{alpha}");
  if (slot == std::string::npos) {
    throw UsageError("pdf: --alphas needs --output containing '{alpha}', e.g. fig_{alpha}.csv");
  }
  for (double v : alphas) make_alpha(v);
  for (double v : alphas) {
    const auto alpha = make_alpha(v);
    auto p = prov;
    p.set("alpha", alpha.value());
    std::string path = a.output;
    path.replace(slot, 7, io::format_double(v));
    emit(transition::pdf_table(kind, alpha, grid, scale, opt), path, p);
  }
  return kExitOk;
}

struct MeanArgs {
  std::string transition;
  std::optional<double> alpha;
  std::string output;
};

int cmd_mean(const MeanArgs& a, io::Provenance prov) {
  const auto kind = parse_kind(a.transition);
  if (!a.alpha) throw UsageError("mean: --alpha is required");
  const auto alpha = make_alpha(*a.alpha);
  prov.set("transition", a.transition).set("alpha", alpha.value());
  const double closed = transition::mean_closed_form(kind, alpha);
  const bool interior = alpha.value() > 0.0 && alpha.value() < 1.0;
  const double quad = interior ? oracle::mean_numeric(kind, alpha)
                               : oracle::mean_numeric(alpha_vec_for(kind, alpha));
  Json j;
  j["provenance"] = io::to_json(prov);
  j["kind"] = to_string(kind);
  j["alpha"] = alpha.value();
  j["mean_closed_form"] = closed;
  j["mean_quadrature"] = quad;
  j["abs_diff"] = std::abs(closed - quad);
  write_json(a.output, j);
  return kExitOk;
}

struct SampleArgs {
  std::string alpha_vec;
  std::string transition;
  std::optional<double> alpha;
  std::size_t n = 0;
  std::optional<std::uint64_t> seed;
  std::string method = "formula";
  unsigned workers = 0;
  std::string output;
  std::string summary;
  std::string histogram;
  int bins = 100;
  std::string range = "0:5";
};

int cmd_sample(const SampleArgs& a, io::Provenance prov) {
  if (a.n < 1) throw UsageError("sample: --n must be >= 1");
  AlphaVec vec(0.0, 0.0, 0.0);
  if (!a.alpha_vec.empty()) {
    if (!a.transition.empty() || a.alpha) {
      throw UsageError("sample: --alpha-vec excludes --transition/--alpha");
    }
    vec = parse_alpha_vec(a.alpha_vec);
  } else {
    if (a.transition.empty() || !a.alpha) {
      throw UsageError("sample: give --alpha-vec or both --transition and --alpha");
    }
    vec = alpha_vec_for(parse_kind(a.transition), make_alpha(*a.alpha));
  }
  const auto method = parse_method(a.method);
  const auto seed = resolve_seed(a.seed);
  prov.seed = seed;
  prov.set("alpha_vec", io::format_double(vec.a1()) + "," + io::format_double(vec.a2()) + "," +
                            io::format_double(vec.a3()));
  prov.set("n", std::to_string(a.n)).set("method", std::string(to_string(method)));

  const auto set = ensemble::run_ensemble(vec, a.n, seed, method, a.workers);
  if (!a.output.empty()) {
    Output out(a.output);
    io::write_spacings_csv(out.stream(), set, prov);
  }

  Json j;
  j["provenance"] = io::to_json(prov);
  j["n"] = set.count();
  j["empirical_mean"] = analysis::sample_mean(set.spacings);
  j["empirical_stddev"] = analysis::sample_stddev(set.spacings);
  const auto match = match_transition(vec);
  double mean = 0.0;
  if (match) {
    mean = transition::mean_closed_form(match->first, match->second);
    j["transition"] = to_string(match->first);
    j["transition_alpha"] = match->second.value();
  } else {
    mean = oracle::mean_numeric(vec);
  }
  j["analytic_mean"] = mean;
  j["mean_source"] = to_string(analysis::MeanSource::Analytic);
  if (match) {
    const auto [kind, alpha] = *match;
    const auto cdf = analysis::cdf_from_pdf(
        [kind, alpha](double r) { return transition::pdf_normalized(kind, r, alpha); });
    const auto scaled =
        analysis::unit_mean_scaled(set.spacings, analysis::MeanSource::Analytic, mean);
    j["ks"] = io::to_json(analysis::ks_statistic(scaled, std::cref(cdf)));
  } else {
    j["ks"] = nullptr;
  }
  if (!a.histogram.empty()) {
    const auto r = split(a.range, ':');
    if (r.size() != 2) throw UsageError("--range must be lo:hi");
    const auto scaled =
        analysis::unit_mean_scaled(set.spacings, analysis::MeanSource::Analytic, mean);
    const auto h = analysis::histogram(scaled, a.bins, parse_number(r[0], "--range"),
                                       parse_number(r[1], "--range"));
    auto p = prov;
    p.set("bins", std::to_string(a.bins)).set("range", a.range).set("scale", "unit-mean");
    Output out(a.histogram);
    io::write_provenance_header(out.stream(), p);
    out.stream() << "#below=" << h.below << "\n#above=" << h.above << "\nx,density\n";
    for (std::size_t i = 0; i < h.counts.size(); ++i) {
      out.stream() << io::format_double(0.5 * (h.edges[i] + h.edges[i + 1])) << ','
                   << io::format_double(h.density[i]) << '\n';
    }
  }
  write_json(a.summary, j);
  return kExitOk;
}

struct CompareArgs {
  std::string transition;
  std::optional<double> alpha;
  std::string against;
  std::optional<double> against_alpha;
  std::size_t n = 1'000'000;
  std::optional<std::uint64_t> seed;
  std::string method = "formula";
  std::string mean_source = "analytic";
  std::optional<double> threshold;
  unsigned workers = 0;
  std::string output;
};

int cmd_compare(const CompareArgs& a, io::Provenance prov) {
  if (a.transition.empty()) throw UsageError("compare: --transition is required");
  if (!a.alpha) throw UsageError("compare: --alpha is required");
  if (a.n < 1) throw UsageError("compare: --n must be >= 1");
  const auto kind = parse_kind(a.transition);
  const auto alpha = make_alpha(*a.alpha);
  const auto ref_kind = a.against.empty() ? kind : parse_kind(a.against);
  const auto ref_alpha = a.against_alpha ? make_alpha(*a.against_alpha) : alpha;
  const auto method = parse_method(a.method);
  const auto source = parse_mean_source(a.mean_source);
  const auto seed = resolve_seed(a.seed);
  if (a.threshold && !(*a.threshold > 0.0)) throw UsageError("--ks-threshold must be > 0");
  prov.seed = seed;
  prov.set("transition", a.transition).set("alpha", alpha.value());
  prov.set("against", std::string(to_string(ref_kind))).set("against_alpha", ref_alpha.value());
  prov.set("n", std::to_string(a.n)).set("method", std::string(to_string(method)));
  prov.set("mean_source", std::string(to_string(source)));

  const auto set = ensemble::run_ensemble(alpha_vec_for(kind, alpha), a.n, seed, method, a.workers);
  const double mean = transition::mean_closed_form(kind, alpha);
  const auto scaled = analysis::unit_mean_scaled(set.spacings, source, mean);
  const auto cdf = analysis::cdf_from_pdf(
      [ref_kind, ref_alpha](double r) { return transition::pdf_normalized(ref_kind, r, ref_alpha); });
  const auto ks = analysis::ks_statistic(scaled, std::cref(cdf), a.threshold.value_or(0.0));

  Json j = io::to_json(ks);
  j["provenance"] = io::to_json(prov);
  j["sample_kind"] = to_string(kind);
  j["sample_alpha"] = alpha.value();
  j["reference_kind"] = to_string(ref_kind);
  j["reference_alpha"] = ref_alpha.value();
  j["mean_source"] = to_string(source);
  j["scale_mean"] = source == analysis::MeanSource::Analytic ? mean
                                                              : analysis::sample_mean(set.spacings);
  write_json(a.output, j);
  return ks.pass ? kExitOk : kExitVerification;
}

struct FitArgs {
  int order = 6;
  int points = 512;
  std::string convention = "direct-y";
  std::string output;
};

int cmd_fit(const FitArgs& a, io::Provenance prov) {
  const auto conv = io::parse_convention(a.convention);
  prov.set("order", std::to_string(a.order)).set("points", std::to_string(a.points));
  prov.set("convention", a.convention);
  const auto fit = chebfit::refit(a.order, a.points, {}, conv);
  const auto arb = chebfit::arbitrate_convention(chebfit::published_coefficients().a);
  Json j = io::to_json(fit);
  j["provenance"] = io::to_json(prov);
  Json published;
  published["coefficients"] = chebfit::published_coefficients().a;
  published["winner"] = to_string(arb.winner);
  published["claim_holds"] = arb.claim_holds;
  published["direct-y"] = io::to_json(arb.direct);
  published["remapped-y"] = io::to_json(arb.remapped);
  j["published"] = published;
  write_json(a.output, j);
  return kExitOk;
}

struct CheckArgs {
  std::string suite = "all";
  std::size_t n = 1'000'000;
  std::optional<std::uint64_t> seed;
  unsigned workers = 0;
  std::string output;
};

int cmd_check(const CheckArgs& a, io::Provenance prov) {
  if (!verify::is_suite_name(a.suite)) throw UsageError("unknown --suite '" + a.suite + "'");
  if (a.n < 1) throw UsageError("check: --n must be >= 1");
  verify::SuiteOptions opt;
  opt.mc_samples = a.n;
  opt.workers = a.workers;
  if (a.seed || std::getenv(kSeedEnv) != nullptr) opt.seed = resolve_seed(a.seed);
  prov.seed = opt.seed;
  prov.set("suite", a.suite).set("n", std::to_string(a.n));

  const auto checks = verify::run_suite(a.suite, opt);
  Json list = Json::array();
  for (const auto& c : checks) {
    list.push_back({{"suite", c.suite},
                    {"name", c.name},
                    {"pass", c.pass},
                    {"measured", c.measured},
                    {"bound", c.bound},
                    {"detail", c.detail}});
  }
  const bool ok = verify::all_pass(checks);
  Json j;
  j["provenance"] = io::to_json(prov);
  j["suite"] = a.suite;
  j["pass"] = ok;
  j["checks"] = list;
  write_json(a.output, j);
  if (!ok) {
    for (const auto& c : checks) {
      if (!c.pass) std::cerr << "FAILED [" << c.suite << "] " << c.name << ": " << c.detail << '\n';
    }
  }
  return ok ? kExitOk : kExitVerification;
}

// ---------------------------------------------------------------------------

int run(int argc, char** argv) {
  CLI::App app{"Transitional level-spacing distributions of a 4x4 random matrix model"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);

  PdfArgs pdf;
  auto* c_pdf = app.add_subcommand("pdf", "Tabulate a transitional or surmise density as CSV");
  c_pdf->add_option("--transition", pdf.transition, "gue-ginibre | ginibre-gse | goe-ginibre");
  c_pdf->add_option("--surmise", pdf.surmise, "Wigner surmise beta (1-4)");
  c_pdf->add_option("--alpha", pdf.alpha, "Transition parameter in [0, 1]");
  c_pdf->add_option("--alphas", pdf.alphas, "Comma-separated alphas, one file each");
  c_pdf->add_option("--grid", pdf.grid, "start:stop:step")->capture_default_str();
  c_pdf->add_option("--scale", pdf.scale, "unit-mean | raw-s")->capture_default_str();
  c_pdf->add_option("--z-mode", pdf.z_mode, "exact | cheb (goe-ginibre only)")->capture_default_str();
  c_pdf->add_flag("--renormalize", pdf.renormalize, "Renormalize cheb-mode densities numerically");
  c_pdf->add_option("--cheb-coeffs", pdf.cheb_coeffs, "JSON coefficient file for cheb mode");
  c_pdf->add_option("--format", pdf.format, "csv | json")->capture_default_str();
  c_pdf->add_option("-o,--output", pdf.output, "Output path (default stdout)");

  MeanArgs mean;
  auto* c_mean = app.add_subcommand("mean", "Closed-form and quadrature mean spacing");
  c_mean->add_option("--transition", mean.transition)->required();
  c_mean->add_option("--alpha", mean.alpha);
  c_mean->add_option("-o,--output", mean.output);

  SampleArgs sample;
  auto* c_sample = app.add_subcommand("sample", "Monte Carlo spacings of the 4x4 model");
  c_sample->add_option("--alpha-vec", sample.alpha_vec, "a1,a2,a3");
  c_sample->add_option("--transition", sample.transition);
  c_sample->add_option("--alpha", sample.alpha);
  c_sample->add_option("--n", sample.n, "Number of draws")->required();
  c_sample->add_option("--seed", sample.seed, "Seed (default $RMTSPACING_SEED or 1)");
  c_sample->add_option("--method", sample.method, "formula | matrix")->capture_default_str();
  c_sample->add_option("--workers", sample.workers, "Threads (0 = all cores)");
  c_sample->add_option("-o,--output", sample.output, "Spacing CSV path");
  c_sample->add_option("--summary", sample.summary, "Summary JSON path (default stdout)");
  c_sample->add_option("--histogram", sample.histogram, "Unit-mean histogram CSV path");
  c_sample->add_option("--bins", sample.bins)->capture_default_str();
  c_sample->add_option("--range", sample.range, "lo:hi")->capture_default_str();

  CompareArgs cmp;
  auto* c_cmp = app.add_subcommand("compare", "KS test of samples against a closed-form cdf");
  c_cmp->add_option("--transition", cmp.transition);
  c_cmp->add_option("--alpha", cmp.alpha);
  c_cmp->add_option("--against", cmp.against, "Reference transition (default: same)");
  c_cmp->add_option("--against-alpha", cmp.against_alpha, "Reference alpha (default: same)");
  c_cmp->add_option("--n", cmp.n)->capture_default_str();
  c_cmp->add_option("--seed", cmp.seed);
  c_cmp->add_option("--method", cmp.method)->capture_default_str();
  c_cmp->add_option("--mean-source", cmp.mean_source, "analytic | empirical")->capture_default_str();
  c_cmp->add_option("--ks-threshold", cmp.threshold, "Default 3 x 1.6276/sqrt(n)");
  c_cmp->add_option("--workers", cmp.workers);
  c_cmp->add_option("-o,--output", cmp.output);

  FitArgs fit;
  auto* c_fit = app.add_subcommand("fit", "Least-squares Chebyshev refit of Z");
  c_fit->add_option("--order", fit.order)->capture_default_str();
  c_fit->add_option("--points", fit.points)->capture_default_str();
  c_fit->add_option("--convention", fit.convention, "direct-y | remapped-y")->capture_default_str();
  c_fit->add_option("-o,--output", fit.output);

  CheckArgs check;
  auto* c_check = app.add_subcommand("check", "Run verification suites");
  c_check->add_option("--suite", check.suite,
                      "all | specfun | oracle | means | endpoints | chebyshev | montecarlo | peak | small-s")
      ->capture_default_str();
  c_check->add_option("--n", check.n, "Monte Carlo samples per cell")->capture_default_str();
  c_check->add_option("--seed", check.seed);
  c_check->add_option("--workers", check.workers);
  c_check->add_option("-o,--output", check.output);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  const auto prov = [&](const char* name) { return provenance(name, argc, argv); };
  if (*c_pdf) return cmd_pdf(pdf, prov("pdf"));
  if (*c_mean) return cmd_mean(mean, prov("mean"));
  if (*c_sample) return cmd_sample(sample, prov("sample"));
  if (*c_cmp) return cmd_compare(cmp, prov("compare"));
  if (*c_fit) return cmd_fit(fit, prov("fit"));
  if (*c_check) return cmd_check(check, prov("check"));
  return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DomainError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const NumericFailure& e) {
    std::cerr << "numeric failure: " << e.what() << '\n';
    return kExitNumeric;
  } catch (const IntegrityError& e) {
    std::cerr << "numeric failure: " << e.what() << '\n';
    return kExitNumeric;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitNumeric;
  }
}
