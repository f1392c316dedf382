// Copyright 2026 The frameforge Authors.
// SPDX-License-Identifier: Apache-2.0

// End-to-end acceptance checks. Prints one PASS/FAIL line per criterion and
// exits nonzero when any criterion outside kKnownRed fails.

#include <fmt/format.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <functional>
#include <iostream>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "frameforge/coherence.hpp"
#include "frameforge/constructions.hpp"
#include "frameforge/design.hpp"
#include "frameforge/error.hpp"
#include "frameforge/fingerprint.hpp"
#include "frameforge/flip.hpp"
#include "frameforge/numerics.hpp"
#include "frameforge/ost.hpp"
#include "frameforge/phase.hpp"
#include "frameforge/rip.hpp"
#include "frameforge/rng.hpp"
#include "frameforge/spark.hpp"

namespace ff = frameforge;
using ff::Index;
using ff::IndexList;

namespace {

// Criteria that are expected to fail; see the project notes for the analysis.
const std::set<int> kKnownRed{8};

struct Outcome {
  bool pass = true;
  std::string detail;

  void check(bool ok, const std::string& what) {
    if (!ok && pass) detail = what;
    pass = pass && ok;
  }
};

struct Criterion {
  int id;
  std::string name;
  double budget_s;
  std::function<Outcome()> body;
};

bool near(double a, double b, double tol) { return std::abs(a - b) <= tol; }

std::string fmt_real(double x) { return fmt::format("{:.6g}", x); }

ff::Frame sign_frame(const std::vector<std::string>& rows, double scale) {
  const auto m = static_cast<Index>(rows.size());
  const auto n = static_cast<Index>(rows.front().size());
  ff::Matrix a = ff::Matrix::Zero(m, n);
  for (Index i = 0; i < m; ++i) {
    for (Index j = 0; j < n; ++j) {
      const char c = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      a(i, j) = c == '+' ? scale : (c == '-' ? -scale : 0.0);
    }
  }
  return ff::Frame::from_matrix(std::move(a), "literal");
}

// Tight rows, unit columns, and every off-diagonal Gram modulus at the Welch bound.
bool is_etf(const ff::Frame& f, double tol) {
  const ff::Matrix& a = f.matrix();
  if (!ff::columns_unit_norm(a, tol)) return false;
  if (ff::tightness_defect(a) > tol) return false;
  const double welch = ff::welch_lower_bound(a.rows(), a.cols());
  const ff::Matrix g = ff::gram(a);
  for (Index i = 0; i < g.rows(); ++i) {
    for (Index j = i + 1; j < g.cols(); ++j) {
      if (!near(std::abs(g(i, j)), welch, tol)) return false;
    }
  }
  return true;
}

Outcome steiner_reproduction() {
  Outcome o;
  const auto path = std::filesystem::temp_directory_path() / "frameforge_acceptance_steiner.frame";
  std::ostringstream out;
  std::ostringstream err;
  const int rc = ff::cli::run({"build", "steiner", "--family", "2-blocks", "--v", "4", "--hadamard",
                               "real", "--rows", "1,2,3", "-o", path.string()},
                              out, err);
  o.check(rc == 0, "cli build failed: " + err.str());
  if (!o.pass) return o;
  const ff::Frame built = ff::load_frame(path);
  std::filesystem::remove(path);
  const ff::Frame expected = sign_frame({"+-+-+-+-00000000", "++--0000+-+-0000", "+--+00000000+-+-",
                                         "0000++--++--0000", "0000+--+0000++--", "00000000+--++--+"},
                                        1.0 / std::sqrt(3.0));
  o.check(built.rows() == 6 && built.cols() == 16, "wrong shape");
  if (!o.pass) return o;
  const double diff = (built.matrix() - expected.matrix()).cwiseAbs().maxCoeff();
  o.check(diff <= 1e-12, "entrywise difference " + fmt_real(diff));
  o.check(is_etf(built, 1e-12), "ETF predicate failed");
  const ff::Matrix g = ff::gram(built.matrix());
  for (Index i = 0; i < 16; ++i) {
    for (Index j = 0; j < 16; ++j) {
      if (i != j) o.check(near(std::abs(g(i, j)), 1.0 / 3.0, 1e-12), "Gram modulus not 1/3");
    }
  }
  o.detail = o.pass ? fmt::format("max entry error {}", fmt_real(diff)) : o.detail;
  return o;
}

Outcome catalog() {
  Outcome o;
  struct Row {
    ff::SteinerParams params;
    Index m, n;
    int k, v, r;
  };
  using F = ff::SteinerFamily;
  const std::vector<Row> rows{
      {{F::kTwoBlocks, 4, 0, 0}, 6, 16, 2, 4, 3},
      {{F::kTriples, 7, 0, 0}, 7, 28, 3, 7, 3},
      {{F::kTwoBlocks, 3, 0, 0}, 3, 9, 2, 3, 2},
      {{F::kAffine, 0, 3, 2}, 12, 45, 3, 9, 4},
      {{F::kProjective, 0, 3, 2}, 13, 65, 4, 13, 4},
  };
  for (const Row& row : rows) {
    const ff::DesignIncidence d = ff::steiner_system(row.params);
    const std::string tag = fmt::format("{}x{}", row.m, row.n);
    o.check(d.k == row.k && d.v == row.v && d.r == row.r, tag + ": design parameters");
    o.check(ff::verify_design(d).empty(), tag + ": design identities");
    const auto kind = ff::hadamard_available(d.r + 1, ff::HadamardKind::kRealSylvester)
                          ? ff::HadamardKind::kRealSylvester
                          : ff::HadamardKind::kComplexDft;
    const ff::Frame f = ff::build_steiner_etf(d, kind);
    o.check(f.rows() == row.m && f.cols() == row.n, tag + ": shape");
    o.check(is_etf(f, 1e-9), tag + ": not an ETF");
    const double mu = ff::worst_case_coherence(f);
    o.check(near(mu, ff::welch_lower_bound(row.m, row.n), 1e-9), tag + ": Welch equality");
  }
  if (o.pass) o.detail = "5 frames certified";
  return o;
}

Outcome worked_numbers() {
  Outcome o;
  const double alltop_nu = ff::average_coherence(ff::build_alltop_gabor(5));
  o.check(near(alltop_nu, 0.1348, 1e-3), "Alltop nu " + fmt_real(alltop_nu));

  const ff::Frame chirp = ff::build_chirp(5);
  const double chirp_nu = ff::average_coherence(chirp);
  const double chirp_mu = ff::worst_case_coherence(chirp);
  o.check(near(chirp_nu, 1.0 / 6.0, 1e-10), "chirp nu " + fmt_real(chirp_nu));
  o.check(near(chirp_mu, 1.0 / std::sqrt(5.0), 1e-10), "chirp mu " + fmt_real(chirp_mu));

  const ff::Frame code = ff::build_code_frame(4, 1);
  const double code_mu = ff::worst_case_coherence(code);
  const double code_nu = ff::average_coherence(code);
  o.check(near(code_mu, 0.5, 1e-12), "code mu " + fmt_real(code_mu));
  o.check(near(code_nu, 1.0 / 17.0, 1e-12), "code nu " + fmt_real(code_nu));

  const ff::Frame sph = ff::build_spherical_2design(37, {1, 7, 9, 10, 12, 16, 26, 33, 34});
  const double sph_mu = ff::worst_case_coherence(sph);
  const double sph_nu = ff::average_coherence(sph);
  o.check(near(sph_mu, 0.1967, 1e-3), "spherical mu " + fmt_real(sph_mu));
  o.check(near(sph_nu, 0.0278, 1e-3), "spherical nu " + fmt_real(sph_nu));

  const ff::Frame flip_input = sign_frame(
      {"++++-++++-", "+-+++---+-", "++++++++-+", "---+-++---", "-++--+----"}, 1.0 / std::sqrt(5.0));
  const ff::FlipResult flipped = ff::linear_time_flip(flip_input);
  const double flip_nu = ff::average_coherence(flipped.frame);
  o.check(flipped.pattern.str() == "+-+--++-++", "flip pattern " + flipped.pattern.str());
  o.check(near(flip_nu, 0.1556, 1e-3), "flipped nu " + fmt_real(flip_nu));
  if (o.pass) {
    o.detail = fmt::format("alltop nu {}, spherical mu {}, flipped nu {}", fmt_real(alltop_nu),
                           fmt_real(sph_mu), fmt_real(flip_nu));
  }
  return o;
}

Outcome rip_chain() {
  Outcome o;
  struct Case {
    std::string name;
    ff::Frame frame;
    bool etf;
  };
  std::vector<Case> cases;
  cases.push_back({"steiner 6x16",
                   ff::build_steiner_etf(ff::steiner_system({ff::SteinerFamily::kTwoBlocks, 4, 0, 0}),
                                         ff::HadamardKind::kRealSylvester),
                   true});
  cases.push_back({"paley 5", ff::build_paley_etf(5), true});
  cases.push_back({"paley 13", ff::build_paley_etf(13), true});
  const ff::Frame code = ff::build_code_frame(4, 1);
  for (std::uint64_t s = 0; s < 3; ++s) {
    ff::Rng rng(ff::Rng::derive(0xC0DE, s));
    const IndexList cols = rng.subset(code.cols(), 40);
    cases.push_back({fmt::format("code 16x40 #{}", s),
                     ff::Frame::from_matrix(ff::select_columns(code.matrix(), cols), "code-subset"),
                     false});
  }
  constexpr double kTol = 1e-9;
  for (const Case& c : cases) {
    const double mu = ff::worst_case_coherence(c.frame);
    for (Index k = 2; k <= 4; ++k) {
      const std::string tag = fmt::format("{} K={}", c.name, k);
      const double exact = ff::exact_delta(c.frame, k).delta;
      const double q4 = ff::power_delta(c.frame, k, 4).delta;
      const double q2 = ff::power_delta(c.frame, k, 2).delta;
      const double q1 = ff::power_delta(c.frame, k, 1).delta;
      const double gersh = ff::gershgorin_delta(c.frame, k).delta;
      o.check(exact <= q4 + kTol && q4 <= q2 + kTol && q2 <= q1 + kTol, tag + ": power chain");
      o.check(exact <= gersh + kTol, tag + ": exact above Gershgorin");
      o.check(near(gersh, static_cast<double>(k - 1) * mu, kTol), tag + ": Gershgorin value");
      if (k == 2) o.check(near(exact, mu, kTol), tag + ": delta_2 != mu");
      if (c.etf) {
        o.check(near(q1, std::sqrt(static_cast<double>(k * (k - 1))) * mu, kTol),
                tag + ": q=1 equality");
      }
    }
  }
  if (o.pass) o.detail = fmt::format("{} frames x K=2..4", cases.size());
  return o;
}

Outcome spark_certification() {
  Outcome o;
  const ff::Frame steiner = ff::build_steiner_etf(
      ff::steiner_system({ff::SteinerFamily::kTwoBlocks, 4, 0, 0}), ff::HadamardKind::kRealSylvester);
  const ff::SparkReport s = ff::spark(steiner);
  o.check(s.spark == 4, "Steiner spark " + std::to_string(s.spark));
  if (s.witness) {
    const IndexList& w = *s.witness;
    const Index block = w.front() / 4;
    const bool in_block = std::all_of(w.begin(), w.end(), [&](Index c) { return c / 4 == block; });
    o.check(in_block, "Steiner witness not inside one block");
    o.check(ff::columns_dependent(ff::select_columns(steiner.matrix(), w), ff::kDependenceTolerance),
            "Steiner witness independent");
  } else {
    o.check(false, "Steiner witness missing");
  }

  const ff::Frame id_dft = ff::build_identity_plus_dft(4);
  const ff::SparkReport sd = ff::spark(id_dft);
  o.check(sd.spark <= 4, "[I F] spark " + std::to_string(sd.spark));
  const IndexList comb{0, 2, 4, 6};  // spikes at 0, 2 and their transform
  o.check(ff::columns_dependent(ff::select_columns(id_dft.matrix(), comb), ff::kDependenceTolerance),
          "Dirac comb columns independent");

  o.check(ff::spark(ff::build_paley_etf(5)).full_spark, "Paley p=5 not full spark");

  for (Index n : {4, 8, 9}) {
    for (std::uint32_t mask = 1; mask + 1 < (1u << n); ++mask) {
      IndexList rows;
      for (Index r = 0; r < n; ++r) {
        if (mask & (1u << r)) rows.push_back(r);
      }
      const ff::DftSparkResult fast = ff::dft_full_spark_test(n, rows, false);
      const bool brute_full = !ff::dft_singular_columns(n, rows).has_value();
      const bool fast_full = fast.verdict == ff::FullSparkVerdict::kFullSpark;
      o.check(fast.verdict != ff::FullSparkVerdict::kNecessaryConditionOnly,
              fmt::format("n={} inconclusive", n));
      o.check(fast_full == brute_full, fmt::format("n={} mask {} disagrees", n, mask));
    }
  }

  const ff::DftSparkResult ten = ff::dft_full_spark_test(10, {0, 1, 3, 4});
  o.check(ten.uniform, "n=10: necessary condition should pass");
  o.check(ten.verdict == ff::FullSparkVerdict::kNotFullSpark, "n=10 counterexample missed");
  o.check(ten.witness == IndexList({0, 1, 2, 6}), "n=10 witness differs");
  if (o.pass) o.detail = ff::describe(ten);
  return o;
}

Outcome closure_invariance() {
  Outcome o;
  Index checked = 0;
  for (Index n = 2; n <= 12; ++n) {
    const std::uint32_t full = (1u << n) - 1;
    std::vector<int> verdict(full + 1, -1);
    auto to_rows = [&](std::uint32_t mask) {
      IndexList rows;
      for (Index r = 0; r < n; ++r) {
        if (mask & (1u << r)) rows.push_back(r);
      }
      return rows;
    };
    auto to_mask = [](const IndexList& rows) {
      std::uint32_t m = 0;
      for (Index r : rows) m |= 1u << r;
      return m;
    };
    for (std::uint32_t mask = 1; mask <= full; ++mask) {
      const ff::DftSparkResult r = ff::dft_full_spark_test(n, to_rows(mask));
      verdict[mask] = r.verdict == ff::FullSparkVerdict::kFullSpark ? 1 : 0;
    }
    std::vector<Index> units;
    for (Index u = 1; u < n; ++u) {
      if (std::gcd(u, n) == 1) units.push_back(u);
    }
    for (std::uint32_t mask = 1; mask <= full; ++mask) {
      const IndexList rows = to_rows(mask);
      for (Index shift = 1; shift < n; ++shift) {
        const auto t = to_mask(ff::translate_rows(rows, shift, n));
        o.check(verdict[t] == verdict[mask], fmt::format("n={} translation breaks mask {}", n, mask));
      }
      for (Index u : units) {
        const auto t = to_mask(ff::scale_rows(rows, u, n));
        o.check(verdict[t] == verdict[mask], fmt::format("n={} unit {} breaks mask {}", n, u, mask));
      }
      if (mask != full) {
        const auto c = to_mask(ff::complement_rows(rows, n));
        o.check(verdict[c] == verdict[mask], fmt::format("n={} complement breaks mask {}", n, mask));
      }
      ++checked;
    }
  }
  if (o.pass) o.detail = fmt::format("{} row sets", checked);
  return o;
}

Outcome ro_bridge() {
  Outcome o;
  constexpr double kTol = 1e-9;
  double worst_ratio = 0.0;
  for (std::uint64_t s = 0; s < 20; ++s) {
    ff::Rng rng(ff::Rng::derive(0x5EED, s));
    const ff::Frame f = ff::build_random_sign(6, 12, rng);
    const double d1 = ff::delta_one(f);
    for (Index k : {2, 3}) {
      const std::string tag = fmt::format("seed {} K={}", s, k);
      const double theta = ff::restricted_orthogonality(f, k).theta;
      const double d2k = ff::exact_delta(f, 2 * k).delta;
      const ff::FlatRoResult flat = ff::flat_ro(f, k);
      o.check(theta <= d2k + kTol, tag + ": theta above delta_2K");
      o.check(d2k <= 2.0 * theta + d1 + kTol, tag + ": delta_2K above 2 theta + delta_1");
      const double upper = 75.0 * flat.theta_hat * std::log(static_cast<double>(k));
      o.check(theta <= upper + kTol, tag + ": theta above 75 theta_hat ln K");
      worst_ratio = std::max(worst_ratio, theta / upper);
    }
  }
  if (o.pass) o.detail = fmt::format("max theta / (75 theta_hat ln K) = {}", fmt_real(worst_ratio));
  return o;
}

Outcome ost_recovery() {
  Outcome o;
  const ff::Frame code = ff::build_code_frame(4, 1);
  ff::OstExperiment setup;
  setup.k = 3;
  setup.sigma = 1.0;
  setup.t = 0.5;
  setup.trials = 200;
  setup.seed = 2026;
  setup.magnitude = 20.0 * std::sqrt(2.0 * std::log(static_cast<double>(code.cols())));
  const std::vector<ff::OstTrial> trials = ff::run_ost_experiment(code, setup);
  const auto exact = std::count_if(trials.begin(), trials.end(), [](const auto& t) { return t.exact_support; });
  const auto within = std::count_if(trials.begin(), trials.end(), [](const auto& t) { return t.within_bound; });
  const double exact_rate = static_cast<double>(exact) / static_cast<double>(trials.size());
  const double within_rate = static_cast<double>(within) / static_cast<double>(trials.size());
  o.check(exact_rate >= 0.95, "exact support rate " + fmt_real(exact_rate));
  o.check(within_rate >= 0.97, "within-bound rate " + fmt_real(within_rate));
  const std::string rates = fmt::format("lambda {} vs magnitude {}; exact {}, within bound {}",
                                        fmt_real(trials.front().lambda), fmt_real(setup.magnitude),
                                        fmt_real(exact_rate), fmt_real(within_rate));
  o.detail = o.pass ? rates : o.detail + "; " + rates;
  return o;
}

Outcome flipping_guarantee() {
  Outcome o;
  Index met = 0;
  for (std::uint64_t s = 0; s < 100; ++s) {
    ff::Rng rng(ff::Rng::derive(0xF11B, s));
    const ff::Frame f = ff::build_random_sign(4, 31, rng);
    const ff::FlipResult r = ff::linear_time_flip(f);
    const double mu = ff::worst_case_coherence(f);
    const double nu = ff::average_coherence(r.frame);
    if (nu <= mu / 2.0 + 1e-12) ++met;
    for (std::size_t j = 0; j < r.partial_sums.size(); ++j) {
      o.check(r.partial_sums[j] <= static_cast<double>(j + 1) + 1e-9,
              fmt::format("seed {}: partial sum {} exceeds {}", s, j, j + 1));
    }
  }
  o.check(met == 100, fmt::format("nu <= mu/sqrt(M) on {}/100 seeds", met));
  if (o.pass) o.detail = "100/100 seeds";
  return o;
}

Outcome phase_exactness() {
  Outcome o;
  const ff::Frame paley = ff::build_paley_etf(13);
  const ff::PolarizationDesign design = ff::build_design(paley, ff::complete_graph(paley.cols()));
  ff::Rng rng(1313);
  double worst = 0.0;
  for (int s = 0; s < 100; ++s) {
    ff::Vector x(paley.rows());
    for (Index i = 0; i < x.size(); ++i) x(i) = rng.complex_normal(1.0);
    if (s >= 80) {
      // Project out six frame vectors so their vertices get pruned.
      const IndexList hidden = rng.subset(paley.cols(), 6);
      const ff::Matrix span = ff::select_columns(paley.matrix(), hidden);
      const Eigen::HouseholderQR<ff::Matrix> qr(span);
      const ff::Matrix q = qr.householderQ() * ff::Matrix::Identity(span.rows(), span.cols());
      x -= q * (q.adjoint() * x);
      const double leak = (span.adjoint() * x).cwiseAbs().maxCoeff();
      o.check(leak <= 1e-12 * x.norm(), "adversarial signal not orthogonal");
    }
    const ff::PhaseRecovery r = ff::recover(design, ff::phaseless_measure(design, x));
    worst = std::max(worst, ff::phase_error(x, r.estimate) / x.norm());
  }
  o.check(worst <= 1e-8, "relative error " + fmt_real(worst));

  const ff::PolarizationDesign star = ff::build_design(paley, ff::star_graph(paley.cols()));
  ff::Vector x(paley.rows());
  for (Index i = 0; i < x.size(); ++i) x(i) = rng.complex_normal(1.0);
  const ff::Vector center = paley.matrix().col(0);
  x -= center * (center.dot(x) / center.squaredNorm());
  bool disconnected = false;
  try {
    (void)ff::recover(star, ff::phaseless_measure(star, x));
  } catch (const ff::Error& e) {
    disconnected = e.code() == ff::ErrorCode::kDisconnected;
  }
  o.check(disconnected, "star graph with a silent center did not report Disconnected");
  if (o.pass) o.detail = fmt::format("max relative error {}", fmt_real(worst));
  return o;
}

Outcome fingerprint_bounds() {
  Outcome o;
  const ff::Frame steiner = ff::build_steiner_etf(
      ff::steiner_system({ff::SteinerFamily::kTwoBlocks, 4, 0, 0}), ff::HadamardKind::kRealSylvester);
  constexpr Index kTrials = 100000;
  // Same-block pair (inner product -1/3) and a cross-block pair with +1/3.
  const ff::Matrix g = ff::gram(steiner.matrix());
  Index partner = 4;
  while (g(0, partner).real() < 0.0) ++partner;
  std::string summary;
  std::uint64_t seed = 77;
  for (const IndexList& coalition : {IndexList{0, 1}, IndexList{0, partner}}) {
    ff::CollusionScenario s{steiner, 10.0, coalition, ff::equal_weights(2), 1.0, 0.5, std::nullopt};
    const ff::DetectionBounds b = ff::theoretical_bounds(s);
    const ff::DetectionRates r = ff::simulate_detection(s, kTrials, seed++);
    auto slack = [&](double p) { return 3.0 * std::sqrt(p * (1.0 - p) / static_cast<double>(kTrials)); };
    const double pi_expected = ff::q_function(10.0 * (0.5 - b.mu));
    const double pii_expected = ff::q_function(10.0 * ((1.0 + b.mu) / 2.0 - b.mu - 0.5));
    o.check(near(b.pi_bound, pi_expected, 1e-15) && near(b.pii_bound, pii_expected, 1e-15),
            "bound formulas");
    o.check(r.pi <= b.pi_bound + slack(b.pi_bound), "P_I " + fmt_real(r.pi) + " above bound");
    o.check(r.pii <= b.pii_bound + slack(b.pii_bound), "P_II " + fmt_real(r.pii) + " above bound");
    summary += fmt::format("[{},{}] P_I {} <= {}, P_II {} <= {}; ", coalition[0], coalition[1],
                           fmt_real(r.pi), fmt_real(b.pi_bound), fmt_real(r.pii), fmt_real(b.pii_bound));
  }
  const ff::Frame simplex = ff::build_simplex(4);
  o.check(simplex.rows() == 4 && simplex.cols() == 5, "simplex shape");
  for (Index k = 2; k <= 4; ++k) {
    for (Index n = 0; n < 5; ++n) {
      const double d = ff::guilt_distance(simplex, k, n);
      o.check(near(d, ff::simplex_guilt_distance(5, k), 1e-10),
              fmt::format("guilt distance K={} n={}: {}", k, n, fmt_real(d)));
    }
  }
  if (o.pass) o.detail = summary + "guilt distances match";
  return o;
}

Outcome coherence_lower_bounds() {
  Outcome o;
  constexpr double kTol = 1e-10;
  for (Index n = 3; n <= 12; ++n) {
    const double mu = ff::worst_case_coherence(ff::build_planar(n));
    const double target = std::cos(ff::kPi / static_cast<double>(n));
    o.check(near(mu, target, kTol), fmt::format("planar N={} mu {}", n, fmt_real(mu)));
    const double real = ff::asymptotic_lower_bounds(2, n).real_bound;
    o.check(near(real, target, kTol), fmt::format("real bound N={}: {}", n, fmt_real(real)));
  }
  Index frames = 0;
  auto check_frame = [&](const ff::Frame& f, const std::string& name) {
    const Index n = f.cols();
    o.check(f.rows() == 3, name + ": expected three rows");
    const ff::AsymptoticBounds ab = ff::asymptotic_lower_bounds(3, n);
    const double welch = ff::welch_lower_bound(3, n);
    const bool real = ff::is_real(f.matrix());
    double lower = std::max(welch, ab.complex_bound);
    if (real) lower = std::max({lower, ab.real_bound, *ab.dim3_bound});
    const double mu = ff::worst_case_coherence(f);
    o.check(lower <= mu + kTol, fmt::format("{} N={}: bound {} above mu {}", name, n, fmt_real(lower),
                                            fmt_real(mu)));
    ++frames;
  };
  ff::Rng rng(33);
  for (Index n = 3; n <= 55; ++n) {
    check_frame(ff::build_normalized_gaussian(3, n, rng), "gaussian");
    check_frame(ff::build_random_sign(3, n, rng), "sign");
    if (n >= 4) check_frame(ff::build_harmonic(n, {0, 1, 3}, true), "harmonic");
    if (n >= 4) check_frame(ff::build_harmonic(n, rng.subset(n, 3), true), "random harmonic");
  }
  check_frame(ff::real_form(ff::build_paley_etf(5)), "paley 5 real");
  check_frame(ff::build_steiner_etf(ff::steiner_system({ff::SteinerFamily::kTwoBlocks, 3, 0, 0}),
                                    ff::HadamardKind::kComplexDft),
              "steiner 3x9");
  if (o.pass) o.detail = fmt::format("planar N=3..12; {} frames with M=3", frames);
  return o;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "steiner-etf-reproduction", 1.0, steiner_reproduction},
      {2, "steiner-catalog", 10.0, catalog},
      {3, "worked-coherence-numbers", 0.0, worked_numbers},
      {4, "rip-ordering-chain", 60.0, rip_chain},
      {5, "spark-certification", 120.0, spark_certification},
      {6, "closure-rule-invariance", 0.0, closure_invariance},
      {7, "ro-bridge", 0.0, ro_bridge},
      {8, "ost-recovery", 30.0, ost_recovery},
      {9, "flipping-guarantee", 0.0, flipping_guarantee},
      {10, "phase-retrieval-exactness", 30.0, phase_exactness},
      {11, "fingerprint-bounds", 0.0, fingerprint_bounds},
      {12, "coherence-lower-bounds", 0.0, coherence_lower_bounds},
  };
  int unexpected = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.body();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.budget_s > 0.0 && seconds > c.budget_s) {
      o.pass = false;
      o.detail = fmt::format("took {:.2f} s, budget {:.0f} s; {}", seconds, c.budget_s, o.detail);
    }
    const bool known = kKnownRed.count(c.id) > 0;
    std::cout << fmt::format("criterion {:>2} {} {:<28} {:>8.2f}s  {}{}\n", c.id,
                             o.pass ? "PASS" : "FAIL", c.name, seconds,
                             (!o.pass && known) ? "(known red) " : "", o.detail);
    if (!o.pass && !known) ++unexpected;
  }
  std::cout.flush();
  return unexpected == 0 ? 0 : 1;
}
