// Copyright 2026 The frameforge Authors.
// SPDX-License-Identifier: Apache-2.0

#include "cli.hpp"

#include <fmt/format.h>
#include <fmt/ostream.h>

#include <CLI11.hpp>
#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <json.hpp>
#include <memory>
#include <optional>
#include <ostream>

#include "frameforge/coherence.hpp"
#include "frameforge/constructions.hpp"
#include "frameforge/design.hpp"
#include "frameforge/error.hpp"
#include "frameforge/fingerprint.hpp"
#include "frameforge/flip.hpp"
#include "frameforge/frame.hpp"
#include "frameforge/ost.hpp"
#include "frameforge/parallel.hpp"
#include "frameforge/phase.hpp"
#include "frameforge/rip.hpp"
#include "frameforge/rng.hpp"
#include "frameforge/spark.hpp"

namespace frameforge::cli {
namespace {

using Json = nlohmann::ordered_json;

std::string join(const IndexList& xs) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i > 0) s += ',';
    s += std::to_string(xs[i]);
  }
  return s;
}

// One JSON object per line, written only when --out is given.
class RecordSink {
 public:
  explicit RecordSink(const std::string& path) {
    if (path.empty()) return;
    file_ = std::make_unique<std::ofstream>(path, std::ios::trunc);
    require(static_cast<bool>(*file_), ErrorCode::kIo, "cannot open " + path + " for writing");
  }
  void emit(const Json& record) {
    if (file_) *file_ << record.dump() << '\n';
  }
  void emit_raw(const std::string& line) {
    if (file_) *file_ << line << '\n';
  }

 private:
  std::unique_ptr<std::ofstream> file_;
};

struct Common {
  std::string out_path;
  unsigned threads = 0;
};

struct SeedOption {
  std::uint64_t value = 0;
  CLI::Option* option = nullptr;

  void add(CLI::App* app) {
    option = app->add_option("--seed", value, "RNG seed (default 0)");
  }
  std::uint64_t resolve(std::ostream& err) const {
    if (option->count() == 0) err << "note: --seed not given; using seed 0\n";
    return value;
  }
};

// build ---------------------------------------------------------------------

struct BuildArgs {
  std::string family;
  std::string design = "2-blocks";
  int v = 0;
  int q = 0;
  int dim = 0;
  std::string hadamard = "real";
  IndexList rows;
  long long p = 0;
  Index m = 0;
  Index n = 0;
  int t = 1;
  std::string shift = "modulate";
  bool raw = false;
  bool real = false;
  std::string output;
  SeedOption seed;
};

GaborShift parse_shift(const std::string& s) {
  if (s == "modulate" || s == "mt") return GaborShift::kModulateThenTranslate;
  if (s == "translate" || s == "tm") return GaborShift::kTranslateThenModulate;
  fail(ErrorCode::kInvalidArgument, "unknown Gabor shift order '" + s + "'");
}

Frame build_frame(const BuildArgs& a, std::ostream& err) {
  const std::string& f = a.family;
  if (f == "steiner") {
    const auto family = parse_steiner_family(a.design);
    require(family.has_value(), ErrorCode::kInvalidArgument, "unknown design family '" + a.design + "'");
    const auto kind = parse_hadamard_kind(a.hadamard);
    require(kind.has_value(), ErrorCode::kInvalidArgument, "unknown Hadamard kind '" + a.hadamard + "'");
    const DesignIncidence design = steiner_system({*family, a.v, a.q, a.dim});
    return build_steiner_etf(design, *kind, a.rows);
  }
  if (f == "paley") return build_paley_etf(a.p);
  if (f == "harmonic") return build_harmonic(a.n, a.rows, !a.raw);
  if (f == "vandermonde") {
    const auto bases = unit_circle_bases(a.n);
    return build_vandermonde(bases, a.m);
  }
  if (f == "simplex") return build_simplex(a.m);
  if (f == "alltop") return build_alltop_gabor(a.m, parse_shift(a.shift));
  if (f == "chirp") return build_chirp(a.m);
  if (f == "spherical") return build_spherical_2design(a.n, a.rows);
  if (f == "code") return build_code_frame(static_cast<int>(a.m), a.t);
  if (f == "identity") return build_identity(a.m);
  if (f == "identity-dft") return build_identity_plus_dft(a.m);
  if (f == "planar") return build_planar(a.n);

  Rng rng(a.seed.resolve(err));
  if (f == "steinhaus") return build_steinhaus_gabor(a.m, rng, parse_shift(a.shift));
  if (f == "gaussian") return build_normalized_gaussian(a.m, a.n, rng);
  if (f == "random-harmonic") return build_random_harmonic(a.m, a.n, rng);
  if (f == "random-sign") return build_random_sign(a.m, a.n, rng);
  fail(ErrorCode::kInvalidArgument, "unknown frame family '" + f + "'");
}

void setup_build(CLI::App& app, BuildArgs& a) {
  auto* sub = app.add_subcommand("build", "Construct a frame and write it to a frame file");
  sub->add_option("construction", a.family,
                  "steiner, paley, harmonic, vandermonde, simplex, alltop, steinhaus, chirp, "
                  "spherical, code, gaussian, random-harmonic, random-sign, identity, "
                  "identity-dft, planar")
      ->required()
      ->check(CLI::IsMember({"steiner", "paley", "harmonic", "vandermonde", "simplex", "alltop",
                             "steinhaus", "chirp", "spherical", "code", "gaussian", "random-harmonic",
                             "random-sign", "identity", "identity-dft", "planar"}));
  sub->add_option("--family", a.design, "Steiner design family: 2-blocks, triples, affine, projective")
      ->check(CLI::Validator(
          [](std::string& text) {
            return parse_steiner_family(text) ? std::string() : "unknown design family " + text;
          },
          "FAMILY"));
  sub->add_option("--v", a.v, "design point count (2-blocks, triples)");
  sub->add_option("--q", a.q, "field order (affine, projective; code frames use --m)");
  sub->add_option("--dim", a.dim, "geometry dimension (affine, projective)");
  sub->add_option("--hadamard", a.hadamard, "Hadamard kind for Steiner frames: real or complex")
      ->check(CLI::Validator(
          [](std::string& text) {
            return parse_hadamard_kind(text) ? std::string() : "unknown Hadamard kind " + text;
          },
          "KIND"));
  sub->add_option("--rows", a.rows, "row indices (Steiner row choice, harmonic or spherical rows)")
      ->delimiter(',');
  sub->add_option("--p", a.p, "prime for Paley frames");
  sub->add_option("--m", a.m, "row count, or field order for code frames");
  sub->add_option("--n", a.n, "column count, or transform size for harmonic frames");
  sub->add_option("--t", a.t, "code frame extension parameter");
  sub->add_option("--shift", a.shift, "Gabor shift order: modulate or translate")
      ->check(CLI::IsMember({"modulate", "translate", "mt", "tm"}));
  sub->add_flag("--raw", a.raw, "harmonic frames: skip column normalization");
  sub->add_flag("--real", a.real, "convert to an equivalent real frame");
  sub->add_option("-o,--output", a.output, "frame file to write (stdout when absent)");
  a.seed.add(sub);
}

int cmd_build(const BuildArgs& a, RecordSink& sink, std::ostream& out, std::ostream& err) {
  Frame frame = build_frame(a, err);
  if (a.real) frame = real_form(frame);
  if (a.output.empty()) {
    write_frame(out, frame);
  } else {
    save_frame(a.output, frame);
    fmt::print(out, "wrote {} x {} {} frame to {}\n", frame.rows(), frame.cols(), frame.tags().family,
               a.output);
  }
  Json j;
  j["record"] = "frame";
  j["family"] = frame.tags().family;
  j["params"] = frame.tags().params;
  j["M"] = frame.rows();
  j["N"] = frame.cols();
  j["unit_norm"] = frame.tags().unit_norm;
  j["tight"] = frame.tags().tight;
  j["equiangular"] = frame.tags().equiangular;
  j["real"] = frame.tags().real;
  sink.emit(j);
  return kExitOk;
}

// analyze -------------------------------------------------------------------

struct AnalyzeArgs {
  std::string path;
  bool json = false;
};

void setup_analyze(CLI::App& app, AnalyzeArgs& a) {
  auto* sub = app.add_subcommand(
      "analyze",
      "Coherence report: mu, nu, spectral norm, Welch bound and the strong coherence property "
      "(scp1 tests mu <= 1/(164 ln N) with the natural logarithm)");
  sub->add_option("file", a.path, "frame file")->required();
  sub->add_flag("--json", a.json, "print the JSON record instead of key=value lines");
}

int cmd_analyze(const AnalyzeArgs& a, RecordSink& sink, std::ostream& out) {
  const Frame frame = load_frame(a.path);
  const CoherenceReport report = coherence_report(frame);
  if (a.json) {
    out << to_json(report) << '\n';
  } else {
    out << to_key_value(report);
    const NuConditions c = check_nu_sufficient_conditions(frame);
    fmt::print(out, "nu_conditions={},{},{}\n", c.cond_i, c.cond_ii, c.cond_iii);
  }
  sink.emit_raw(to_json(report));
  return kExitOk;
}

// rip -----------------------------------------------------------------------

struct RipArgs {
  std::string path;
  Index k = 2;
  std::string method = "all";
  std::vector<int> powers{1, 2, 4};
  std::uint64_t budget = kDefaultBudget;
  bool timing = false;
};

void setup_rip(CLI::App& app, RipArgs& a) {
  auto* sub = app.add_subcommand("rip", "Restricted isometry constants and their bounds");
  sub->add_option("file", a.path, "frame file")->required();
  sub->add_option("--k", a.k, "sparsity level");
  sub->add_option("--method", a.method, "exact, power, gershgorin, ro, flat-ro or all")
      ->check(CLI::IsMember({"exact", "power", "gershgorin", "ro", "flat-ro", "all"}));
  sub->add_option("--q", a.powers, "power indices for the power method")->delimiter(',');
  sub->add_option("--budget", a.budget, "maximum number of column subsets to visit");
  sub->add_flag("--timing", a.timing, "include wall-clock times (output is then not reproducible)");
}

int cmd_rip(const RipArgs& a, RecordSink& sink, std::ostream& out) {
  const Frame frame = load_frame(a.path);
  const bool all = a.method == "all";
  const std::vector<std::string> known{"all", "exact", "power", "gershgorin", "ro", "flat-ro"};
  require(std::find(known.begin(), known.end(), a.method) != known.end(),
          ErrorCode::kInvalidArgument, "unknown RIP method '" + a.method + "'");

  fmt::print(out, "{:<12} {:>3} {:>3} {:>22}  {}\n", "method", "K", "q", "value", "witness");
  auto row = [&](const RipReport& r) {
    fmt::print(out, "{:<12} {:>3} {:>3} {:>22}  {}", to_string(r.method), r.k,
               r.method == RipMethod::kPower ? std::to_string(r.q) : "-", format_real(r.delta),
               r.witness ? join(*r.witness) : "-");
    if (a.timing) fmt::print(out, "  {:.3f} ms", r.runtime_ms);
    out << '\n';
    Json j;
    j["record"] = "rip";
    j["method"] = to_string(r.method);
    j["K"] = r.k;
    if (r.method == RipMethod::kPower) j["q"] = r.q;
    j["delta"] = r.delta;
    if (r.witness) j["witness"] = *r.witness;
    sink.emit(j);
  };
  if (all || a.method == "exact") row(exact_delta(frame, a.k, a.budget));
  if (all || a.method == "power") {
    for (int q : a.powers) row(power_delta(frame, a.k, q, a.budget));
  }
  if (all || a.method == "gershgorin") row(gershgorin_delta(frame, a.k));
  if (all || a.method == "ro") {
    const RoResult ro = restricted_orthogonality(frame, a.k, a.budget);
    const double d1 = delta_one(frame);
    fmt::print(out, "{:<12} {:>3} {:>3} {:>22}  {}|{}\n", "theta", a.k, "-", format_real(ro.theta),
               join(ro.left), join(ro.right));
    fmt::print(out, "{:<12} {:>3} {:>3} {:>22}  -\n", "ro_bridge", 2 * a.k, "-",
               format_real(ro_to_rip(ro.theta, d1)));
    Json j;
    j["record"] = "ro";
    j["K"] = a.k;
    j["theta"] = ro.theta;
    j["delta_1"] = d1;
    j["delta_2k_upper"] = ro_to_rip(ro.theta, d1);
    sink.emit(j);
  }
  if (all || a.method == "flat-ro") {
    const FlatRoResult fr = flat_ro(frame, a.k, a.budget);
    fmt::print(out, "{:<12} {:>3} {:>3} {:>22}  -\n", "theta_hat", a.k, "-", format_real(fr.theta_hat));
    fmt::print(out, "{:<12} {:>3} {:>3} {:>22}  -\n", "theta_upper", a.k, "-", format_real(fr.ro_upper));
    Json j;
    j["record"] = "flat_ro";
    j["K"] = a.k;
    j["theta_hat"] = fr.theta_hat;
    j["theta_upper"] = fr.ro_upper;
    j["theta_upper_proof_constant"] = fr.ro_upper_proof;
    sink.emit(j);
  }
  return kExitOk;
}

// spark ---------------------------------------------------------------------

struct SparkArgs {
  std::string path;
  Index dft = 0;
  IndexList rows;
  bool no_brute = false;
  std::uint64_t budget = kDefaultBudget;
};

void setup_spark(CLI::App& app, SparkArgs& a) {
  auto* sub = app.add_subcommand("spark", "Spark of a frame file, or full-spark test for DFT rows");
  sub->add_option("file", a.path, "frame file");
  sub->add_option("--dft", a.dft, "DFT size N; test the rows given by --rows");
  sub->add_option("--rows", a.rows, "DFT row indices")->delimiter(',');
  sub->add_flag("--no-brute", a.no_brute, "skip the determinant fallback");
  sub->add_option("--budget", a.budget, "maximum number of column subsets to visit");
}

int cmd_spark(const SparkArgs& a, RecordSink& sink, std::ostream& out) {
  require(a.path.empty() != (a.dft == 0), ErrorCode::kInvalidArgument,
          "give either a frame file or --dft N --rows ...");
  if (a.dft > 0) {
    const DftSparkResult r = dft_full_spark_test(a.dft, a.rows, !a.no_brute);
    out << describe(r) << '\n';
    Json j;
    j["record"] = "dft_spark";
    j["N"] = a.dft;
    j["rows"] = a.rows;
    j["verdict"] = to_string(r.verdict);
    j["method"] = r.method;
    j["uniform"] = r.uniform;
    if (r.failing_divisor) j["failing_divisor"] = *r.failing_divisor;
    if (r.witness) j["witness"] = *r.witness;
    sink.emit(j);
    return kExitOk;
  }
  const Frame frame = load_frame(a.path);
  const SparkReport r = spark(frame, a.budget);
  fmt::print(out, "{:<10} {}\n", "M x N", fmt::format("{} x {}", frame.rows(), frame.cols()));
  fmt::print(out, "{:<10} {}\n", "spark", r.spark);
  fmt::print(out, "{:<10} {}\n", "full", r.full_spark ? "yes" : "no");
  fmt::print(out, "{:<10} {}\n", "witness", r.witness ? join(*r.witness) : "-");
  Json j;
  j["record"] = "spark";
  j["spark"] = r.spark;
  j["full_spark"] = r.full_spark;
  if (r.witness) j["witness"] = *r.witness;
  j["method"] = to_string(r.method);
  sink.emit(j);
  return kExitOk;
}

// ost -----------------------------------------------------------------------

struct OstArgs {
  std::string path;
  OstExperiment setup;
  SeedOption seed;
};

void setup_ost(CLI::App& app, OstArgs& a) {
  auto* sub = app.add_subcommand("ost", "Seeded one-step thresholding experiment");
  sub->add_option("file", a.path, "frame file")->required();
  sub->add_option("--k", a.setup.k, "sparsity");
  sub->add_option("--magnitude", a.setup.magnitude, "magnitude of every nonzero entry");
  sub->add_option("--sigma", a.setup.sigma, "noise standard deviation");
  sub->add_option("--t", a.setup.t, "threshold trade-off parameter in (0, 1)");
  sub->add_option("--trials", a.setup.trials, "number of trials");
  a.seed.add(sub);
}

int cmd_ost(OstArgs& a, RecordSink& sink, std::ostream& out, std::ostream& err) {
  const Frame frame = load_frame(a.path);
  a.setup.seed = a.seed.resolve(err);
  const std::vector<OstTrial> trials = run_ost_experiment(frame, a.setup);
  Index exact = 0;
  Index within = 0;
  for (const OstTrial& t : trials) {
    exact += t.exact_support ? 1 : 0;
    within += t.within_bound ? 1 : 0;
    Json j;
    j["record"] = "ost_trial";
    j["seed"] = t.seed;
    j["K"] = t.k;
    j["lambda"] = t.lambda;
    j["exact_support"] = t.exact_support;
    j["subset_of_true"] = t.subset_of_true;
    j["contains_t"] = t.contains_t;
    j["l2_error"] = t.l2_error;
    j["bound"] = t.bound;
    sink.emit(j);
  }
  const double n = static_cast<double>(trials.size());
  fmt::print(out, "{:<16} {}\n", "trials", trials.size());
  fmt::print(out, "{:<16} {}\n", "lambda", trials.empty() ? "-" : format_real(trials.front().lambda));
  fmt::print(out, "{:<16} {}\n", "exact_support", format_real(static_cast<double>(exact) / n));
  fmt::print(out, "{:<16} {}\n", "within_bound", format_real(static_cast<double>(within) / n));
  fmt::print(out, "{:<16} {}\n", "sparsity_limit", format_real(ost_sparsity_limit(frame)));
  return kExitOk;
}

// flip ----------------------------------------------------------------------

struct FlipArgs {
  std::string path;
  bool exhaustive = false;
  std::string output;
};

void setup_flip(CLI::App& app, FlipArgs& a) {
  auto* sub = app.add_subcommand("flip", "Sign flipping to lower average coherence");
  sub->add_option("file", a.path, "frame file")->required();
  sub->add_flag("--exhaustive", a.exhaustive, "search every sign pattern (N <= 22)");
  sub->add_option("-o,--output", a.output, "write the flipped frame here");
}

int cmd_flip(const FlipArgs& a, RecordSink& sink, std::ostream& out) {
  const Frame frame = load_frame(a.path);
  const CoherenceReport before = coherence_report(frame);
  const FlipResult greedy = linear_time_flip(frame);
  const double nu_after = average_coherence(greedy.frame);
  const double target = before.mu / std::sqrt(static_cast<double>(frame.rows()));
  fmt::print(out, "{:<14} {}\n", "mu", format_real(before.mu));
  fmt::print(out, "{:<14} {}\n", "mu/sqrt(M)", format_real(target));
  fmt::print(out, "{:<14} {}\n", "nu_before", format_real(before.nu));
  fmt::print(out, "{:<14} {}\n", "pattern", greedy.pattern.str());
  fmt::print(out, "{:<14} {}\n", "nu_after", format_real(nu_after));
  Json j;
  j["record"] = "flip";
  j["mu"] = before.mu;
  j["nu_before"] = before.nu;
  j["pattern"] = greedy.pattern.str();
  j["nu_after"] = nu_after;
  j["meets_target"] = nu_after <= target;
  if (a.exhaustive) {
    const ExhaustiveFlipResult best = exhaustive_flip(frame);
    fmt::print(out, "{:<14} {}\n", "best_pattern", best.pattern.str());
    fmt::print(out, "{:<14} {}\n", "best_nu", format_real(best.nu));
    j["best_pattern"] = best.pattern.str();
    j["best_nu"] = best.nu;
  }
  sink.emit(j);
  if (!a.output.empty()) save_frame(a.output, greedy.frame);
  return kExitOk;
}

// phase ---------------------------------------------------------------------

struct PhaseArgs {
  std::string path;
  std::string graph = "complete";
  Index degree = 3;
  Index signals = 10;
  SeedOption seed;
};

void setup_phase(CLI::App& app, PhaseArgs& a) {
  auto* sub = app.add_subcommand("phase", "Phase retrieval from polarization measurements");
  sub->add_option("file", a.path, "vertex frame file (full spark)")->required();
  sub->add_option("--graph", a.graph, "complete, star, cycle or regular")
      ->check(CLI::IsMember({"complete", "star", "cycle", "regular"}));
  sub->add_option("--degree", a.degree, "degree for random regular graphs");
  sub->add_option("--signals", a.signals, "number of random test signals");
  a.seed.add(sub);
}

int cmd_phase(const PhaseArgs& a, RecordSink& sink, std::ostream& out, std::ostream& err) {
  const Frame frame = load_frame(a.path);
  const Index v = frame.cols();
  Rng rng(a.seed.resolve(err));
  const MeasurementGraph graph = [&] {
    if (a.graph == "complete") return complete_graph(v);
    if (a.graph == "star") return star_graph(v);
    if (a.graph == "cycle") return cycle_graph(v);
    if (a.graph == "regular") return random_regular_graph(v, a.degree, rng);
    fail(ErrorCode::kInvalidArgument, "unknown graph '" + a.graph + "'");
  }();
  const PolarizationDesign design = build_design(frame, graph);
  fmt::print(out, "{:<14} {}\n", "vertices", v);
  fmt::print(out, "{:<14} {}\n", "edges", graph.edges().size());
  fmt::print(out, "{:<14} {}\n", "measurements", design.measurement_count());
  if (graph.expansion()) fmt::print(out, "{:<14} {}\n", "expansion", format_real(*graph.expansion()));

  double worst = 0.0;
  Index failures = 0;
  for (Index s = 0; s < a.signals; ++s) {
    Vector x(frame.rows());
    for (Index i = 0; i < x.size(); ++i) x(i) = rng.complex_normal(1.0);
    Json j;
    j["record"] = "phase_trial";
    j["signal"] = s;
    try {
      const PhaseRecovery r = recover(design, phaseless_measure(design, x));
      const double rel = phase_error(x, r.estimate) / x.norm();
      worst = std::max(worst, rel);
      j["relative_error"] = rel;
      j["component_size"] = r.component.size();
    } catch (const Error& e) {
      ++failures;
      j["error"] = to_string(e.code());
    }
    sink.emit(j);
  }
  fmt::print(out, "{:<14} {}\n", "signals", a.signals);
  fmt::print(out, "{:<14} {}\n", "failures", failures);
  fmt::print(out, "{:<14} {}\n", "max_rel_error", format_real(worst));
  return kExitOk;
}

// fingerprint ---------------------------------------------------------------

struct FingerprintArgs {
  std::string path;
  IndexList coalition{0, 1};
  std::vector<double> weights;
  double gamma = 10.0;
  double sigma = 1.0;
  double tau = 0.5;
  Index trials = 10000;
  Index guilt = 0;
  SeedOption seed;
};

void setup_fingerprint(CLI::App& app, FingerprintArgs& a) {
  auto* sub = app.add_subcommand("fingerprint", "Collusion detection: empirical rates against bounds");
  sub->add_option("file", a.path, "fingerprint frame file")->required();
  sub->add_option("--coalition", a.coalition, "colluding users")->delimiter(',');
  sub->add_option("--weights", a.weights, "collusion weights (default equal)")->delimiter(',');
  sub->add_option("--gamma", a.gamma, "fingerprint strength");
  sub->add_option("--sigma", a.sigma, "noise standard deviation");
  sub->add_option("--tau", a.tau, "detection threshold");
  sub->add_option("--trials", a.trials, "Monte Carlo trials");
  sub->add_option("--guilt", a.guilt, "also report the guilt distance for coalitions up to this size");
  a.seed.add(sub);
}

int cmd_fingerprint(const FingerprintArgs& a, RecordSink& sink, std::ostream& out,
                    std::ostream& err) {
  CollusionScenario s{load_frame(a.path), a.gamma, a.coalition,
                      a.weights.empty() ? equal_weights(static_cast<Index>(a.coalition.size()))
                                        : a.weights,
                      a.sigma, a.tau, std::nullopt};
  const std::uint64_t seed = a.seed.resolve(err);
  std::optional<double> guilt;
  if (a.guilt > 0) {
    guilt = std::numeric_limits<double>::infinity();
    for (Index n = 0; n < s.frame.cols(); ++n) guilt = std::min(*guilt, guilt_distance(s.frame, a.guilt, n));
  }
  const DetectionBounds b = theoretical_bounds(s);
  const DetectionRates r = simulate_detection(s, a.trials, seed);
  fmt::print(out, "{:<6} {:>24} {:>24}\n", "error", "empirical", "bound");
  fmt::print(out, "{:<6} {:>24} {:>24}\n", "P_I", format_real(r.pi), format_real(b.pi_bound));
  fmt::print(out, "{:<6} {:>24} {:>24}\n", "P_II", format_real(r.pii), format_real(b.pii_bound));
  Json j;
  j["record"] = "fingerprint";
  j["coalition"] = a.coalition;
  j["gamma"] = a.gamma;
  j["sigma"] = a.sigma;
  j["tau"] = a.tau;
  j["mu"] = b.mu;
  j["trials"] = a.trials;
  j["p_i"] = r.pi;
  j["p_i_bound"] = b.pi_bound;
  j["p_ii"] = r.pii;
  j["p_ii_bound"] = b.pii_bound;
  if (guilt) {
    fmt::print(out, "{:<6} {:>24}\n", "guilt", format_real(*guilt));
    j["guilt_distance"] = *guilt;
  }
  sink.emit(j);
  return kExitOk;
}

// bounds --------------------------------------------------------------------

struct BoundsArgs {
  Index m = 0;
  Index n = 0;
};

void setup_bounds(CLI::App& app, BoundsArgs& a) {
  auto* sub = app.add_subcommand("bounds", "Coherence lower bounds and Steiner parameters for M x N");
  sub->add_option("--m", a.m, "row count")->required();
  sub->add_option("--n", a.n, "column count")->required();
}

int cmd_bounds(const BoundsArgs& a, RecordSink& sink, std::ostream& out) {
  require(a.m >= 1 && a.n >= a.m, ErrorCode::kInvalidArgument, "need 1 <= M <= N");
  Json j;
  j["record"] = "bounds";
  j["M"] = a.m;
  j["N"] = a.n;
  const double welch = welch_lower_bound(a.m, a.n);
  fmt::print(out, "{:<14} {}\n", "welch", format_real(welch));
  j["welch"] = welch;
  if (a.m >= 2) {
    const AsymptoticBounds ab = asymptotic_lower_bounds(a.m, a.n);
    fmt::print(out, "{:<14} {}\n", "complex", format_real(ab.complex_bound));
    fmt::print(out, "{:<14} {}\n", "real", format_real(ab.real_bound));
    j["complex"] = ab.complex_bound;
    j["real"] = ab.real_bound;
    if (ab.dim3_bound) {
      fmt::print(out, "{:<14} {}\n", "real_dim3", format_real(*ab.dim3_bound));
      j["real_dim3"] = *ab.dim3_bound;
    }
  }
  if (a.n > a.m) {
    const SteinerParameterSolution s = steiner_parameter_solver(a.m, a.n);
    fmt::print(out, "{:<14} {}\n", "steiner_r^2", s.r_squared.str());
    if (s.r && s.v && s.k) {
      fmt::print(out, "{:<14} r={} v={} k={}\n", "steiner", s.r->str(), s.v->str(), s.k->str());
    }
    fmt::print(out, "{:<14} {}\n", "existence", to_string(s.existence));
    j["steiner_existence"] = to_string(s.existence);
  }
  sink.emit(j);
  return kExitOk;
}

void apply_threads(unsigned requested) {
  if (requested == 0) {
    if (const char* env = std::getenv("FRAMEFORGE_THREADS")) {
      const long parsed = std::strtol(env, nullptr, 10);
      if (parsed > 0) requested = static_cast<unsigned>(parsed);
    }
  }
  set_thread_count(requested);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"frameforge: frame construction, coherence and sparse-recovery toolkit", "frameforge"};
  app.require_subcommand(1);
  app.fallthrough();
  Common common;
  app.add_option("--out", common.out_path, "write one JSON record per line to this file");
  app.add_option("--threads", common.threads, "worker threads (default FRAMEFORGE_THREADS or all cores)");

  BuildArgs build;
  AnalyzeArgs analyze;
  RipArgs rip;
  SparkArgs spark_args;
  OstArgs ost_args;
  FlipArgs flip;
  PhaseArgs phase;
  FingerprintArgs fingerprint;
  BoundsArgs bounds;
  setup_build(app, build);
  setup_analyze(app, analyze);
  setup_rip(app, rip);
  setup_spark(app, spark_args);
  setup_ost(app, ost_args);
  setup_flip(app, flip);
  setup_phase(app, phase);
  setup_fingerprint(app, fingerprint);
  setup_bounds(app, bounds);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    const auto subs = app.get_subcommands();
    out << (subs.empty() ? app.help() : subs.front()->help());
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kExitOk;
    }
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    apply_threads(common.threads);
    RecordSink sink(common.out_path);
    const std::string name = app.get_subcommands().front()->get_name();
    if (name == "build") return cmd_build(build, sink, out, err);
    if (name == "analyze") return cmd_analyze(analyze, sink, out);
    if (name == "rip") return cmd_rip(rip, sink, out);
    if (name == "spark") return cmd_spark(spark_args, sink, out);
    if (name == "ost") return cmd_ost(ost_args, sink, out, err);
    if (name == "flip") return cmd_flip(flip, sink, out);
    if (name == "phase") return cmd_phase(phase, sink, out, err);
    if (name == "fingerprint") return cmd_fingerprint(fingerprint, sink, out, err);
    if (name == "bounds") return cmd_bounds(bounds, sink, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomainError;
  }
  return kExitUsage;
}

}  // namespace frameforge::cli
