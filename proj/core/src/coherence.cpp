// Copyright 2026 The frameforge Authors.
// SPDX-License-Identifier: Apache-2.0

#include "frameforge/coherence.hpp"

#include <cmath>
#include <sstream>

#include <json.hpp>

#include "frameforge/error.hpp"
#include "frameforge/numerics.hpp"
#include "frameforge/parallel.hpp"

namespace frameforge {
namespace {

constexpr double kEqualityTolerance = 1e-9;

struct RowScan {
  double max_abs = -1.0;
  Index argmax = 0;
  double nu = 0.0;
  double potential = 0.0;
};

// Per-row statistics of a Gram matrix; row values never depend on how the
// rows are split between workers.
std::vector<RowScan> scan_rows(const Matrix& g) {
  const Index n = g.cols();
  std::vector<RowScan> rows(static_cast<std::size_t>(n));
  for_each_chunk(static_cast<std::size_t>(n), [&](std::size_t, std::size_t begin, std::size_t end) {
    for (auto i = static_cast<Index>(begin); i < static_cast<Index>(end); ++i) {
      RowScan& row = rows[static_cast<std::size_t>(i)];
      Complex sum = 0.0;
      for (Index j = 0; j < n; ++j) {
        const double a = std::abs(g(j, i));
        row.potential += a * a;
        if (j == i) continue;
        sum += g(j, i);
        if (j > i && a > row.max_abs) {
          row.max_abs = a;
          row.argmax = j;
        }
      }
      row.nu = n > 1 ? std::abs(sum) / static_cast<double>(n - 1) : 0.0;
    }
  });
  return rows;
}

}  // namespace

Matrix normalized_columns(const Matrix& m) {
  Matrix out = m;
  for (Index j = 0; j < out.cols(); ++j) {
    const double norm = out.col(j).norm();
    require(norm > 0.0, ErrorCode::kInvalidArgument, "zero column " + std::to_string(j));
    out.col(j) /= norm;
  }
  return out;
}

CoherenceReport coherence_report(const Frame& frame) {
  CoherenceReport r;
  r.m = frame.rows();
  r.n = frame.cols();
  r.normalized = !columns_unit_norm(frame.matrix(), 1e-12);
  const Matrix a = r.normalized ? normalized_columns(frame.matrix()) : frame.matrix();
  const auto rows = scan_rows(gram(a));
  double best = -1.0;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].max_abs > best) {
      best = rows[i].max_abs;
      r.argmax_pair = {static_cast<Index>(i), rows[i].argmax};
    }
    r.nu = std::max(r.nu, rows[i].nu);
    r.frame_potential += rows[i].potential;
  }
  r.mu = std::max(best, 0.0);
  r.spectral_norm = spectral_norm(a);
  r.welch_bound = welch_lower_bound(r.m, r.n);
  r.scp1 = r.n > 1 && r.mu <= 1.0 / (164.0 * std::log(static_cast<double>(r.n)));
  r.scp2 = r.nu <= r.mu / std::sqrt(static_cast<double>(r.m));
  return r;
}

double worst_case_coherence(const Frame& frame) { return coherence_report(frame).mu; }
double average_coherence(const Frame& frame) { return coherence_report(frame).nu; }

double welch_lower_bound(Index m, Index n) {
  require(m >= 1 && n >= m, ErrorCode::kInvalidArgument, "Welch bound needs n >= m >= 1");
  if (n == 1) return 0.0;
  const double md = static_cast<double>(m);
  const double nd = static_cast<double>(n);
  return std::sqrt((nd - md) / (md * (nd - 1.0)));
}

AsymptoticBounds asymptotic_lower_bounds(Index m, Index n) {
  require(m >= 2 && n >= m, ErrorCode::kInvalidArgument, "bounds need n >= m >= 2");
  const double md = static_cast<double>(m);
  const double nd = static_cast<double>(n);
  AsymptoticBounds b;
  b.complex_bound = 1.0 - 2.0 * std::pow(nd, -1.0 / (md - 1.0));
  // Cap-area argument: the log-gamma form stays finite for large M.
  const double log_ratio = std::lgamma((md - 1.0) / 2.0) - std::lgamma(md / 2.0);
  const double log_base = std::log((md - 1.0) / (nd * std::sqrt(kPi))) + log_ratio;
  const double angle = kPi * std::exp(log_base / (md - 1.0));
  b.real_bound = angle >= kPi / 2.0 ? 0.0 : std::cos(angle);
  if (m == 3) b.dim3_bound = 1.0 - 4.0 / nd + 2.0 / (nd * nd);
  return b;
}

NuConditions check_nu_sufficient_conditions(const Frame& frame) {
  const Matrix& a = frame.matrix();
  require(columns_unit_norm(a), ErrorCode::kInvalidArgument,
          "sufficient conditions need a unit-norm frame");
  const Index m = a.rows();
  const Index n = a.cols();
  const Vector total = a.rowwise().sum();
  const double target = static_cast<double>(n) / static_cast<double>(m);
  NuConditions c;
  c.cond_i = true;
  for (Index k = 0; k < n; ++k) {
    const Complex ip = total.dot(a.col(k));  // <phi_k, total>
    if (std::abs(ip - Complex(target, 0.0)) > kEqualityTolerance) c.cond_i = false;
  }
  c.cond_ii = n >= 2 * m && total.norm() <= kEqualityTolerance;
  c.cond_iii = n >= m * m + 3 * m + 3 &&
               total.squaredNorm() <= static_cast<double>(n) + kEqualityTolerance;
  return c;
}

std::string to_key_value(const CoherenceReport& r) {
  std::ostringstream out;
  out << "M=" << r.m << '\n'
      << "N=" << r.n << '\n'
      << "mu=" << format_real(r.mu) << '\n'
      << "nu=" << format_real(r.nu) << '\n'
      << "spectral_norm=" << format_real(r.spectral_norm) << '\n'
      << "frame_potential=" << format_real(r.frame_potential) << '\n'
      << "welch_bound=" << format_real(r.welch_bound) << '\n'
      << "scp1=" << (r.scp1 ? "true" : "false") << '\n'
      << "scp2=" << (r.scp2 ? "true" : "false") << '\n'
      << "argmax_pair=" << r.argmax_pair.first << ',' << r.argmax_pair.second << '\n'
      << "normalized=" << (r.normalized ? "true" : "false") << '\n';
  return out.str();
}

std::string to_json(const CoherenceReport& r) {
  nlohmann::ordered_json j;
  j["M"] = r.m;
  j["N"] = r.n;
  j["mu"] = r.mu;
  j["nu"] = r.nu;
  j["spectral_norm"] = r.spectral_norm;
  j["frame_potential"] = r.frame_potential;
  j["welch_bound"] = r.welch_bound;
  j["scp1"] = r.scp1;
  j["scp2"] = r.scp2;
  j["argmax_pair"] = {r.argmax_pair.first, r.argmax_pair.second};
  j["normalized"] = r.normalized;
  return j.dump();
}

}  // namespace frameforge
