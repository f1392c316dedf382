// Copyright 2026 The frameforge Authors.
// SPDX-License-Identifier: Apache-2.0

#include "frameforge/rip.hpp"

#include <algorithm>
#include <bitset>
#include <chrono>
#include <cmath>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include "frameforge/coherence.hpp"
#include "frameforge/error.hpp"
#include "frameforge/finite_field.hpp"
#include "frameforge/numerics.hpp"
#include "frameforge/parallel.hpp"
#include "frameforge/subsets.hpp"

namespace frameforge {
namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

void require_sparsity(const Frame& frame, Index k) {
  require(k >= 1 && k <= frame.cols(), ErrorCode::kInvalidArgument,
          "sparsity must lie in 1.." + std::to_string(frame.cols()) + ", got " + std::to_string(k));
}

void require_budget(std::uint64_t count, std::uint64_t budget, const std::string& what) {
  require(count <= budget, ErrorCode::kBudgetExceeded,
          what + " needs " + (count == kSaturated ? std::string("too many") : std::to_string(count)) +
              " subsets, budget is " + std::to_string(budget));
}

Matrix principal_block(const Matrix& g, const IndexList& s) {
  const auto k = static_cast<Index>(s.size());
  Matrix out(k, k);
  for (Index a = 0; a < k; ++a) {
    for (Index b = 0; b < k; ++b) out(a, b) = g(s[static_cast<std::size_t>(a)], s[static_cast<std::size_t>(b)]);
  }
  return out;
}

Matrix cross_block(const Matrix& g, const IndexList& rows, const IndexList& cols) {
  Matrix out(static_cast<Index>(rows.size()), static_cast<Index>(cols.size()));
  for (std::size_t a = 0; a < rows.size(); ++a) {
    for (std::size_t b = 0; b < cols.size(); ++b) {
      out(static_cast<Index>(a), static_cast<Index>(b)) = g(rows[a], cols[b]);
    }
  }
  return out;
}

RealVector deviation_eigenvalues(Matrix block) {
  block.diagonal().array() -= 1.0;
  Eigen::SelfAdjointEigenSolver<Matrix> solver(block, Eigen::EigenvaluesOnly);
  require(solver.info() == Eigen::Success, ErrorCode::kFailedToConverge,
          "eigensolver failed on a principal block");
  return solver.eigenvalues();
}

struct Best {
  double value = -1.0;
  IndexList witness;
};

// Maximum of score(subset) over the k-subsets of {0..n-1}. Chunks cover
// contiguous rank ranges and are merged in rank order with strict
// comparisons, so the first maximizer wins regardless of threading.
template <typename Score>
Best max_over_subsets(Index n, Index k, Score&& score) {
  const std::uint64_t total = binomial(static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(k));
  const std::size_t chunks = chunk_count(static_cast<std::size_t>(total));
  std::vector<Best> partial(chunks);
  for_each_chunk(static_cast<std::size_t>(total), [&](std::size_t c, std::size_t begin, std::size_t end) {
    if (begin == end) return;
    IndexList s = unrank_combination(n, k, begin);
    Best& best = partial[c];
    for (std::size_t rank = begin; rank < end; ++rank) {
      const double v = score(s);
      if (v > best.value) {
        best.value = v;
        best.witness = s;
      }
      next_combination(s, n);
    }
  });
  Best out;
  for (auto& p : partial) {
    if (p.value > out.value) out = std::move(p);
  }
  return out;
}

}  // namespace

std::string_view to_string(RipMethod method) noexcept {
  switch (method) {
    case RipMethod::kExact: return "exact";
    case RipMethod::kGershgorin: return "gershgorin";
    case RipMethod::kPower: return "power";
    case RipMethod::kFlatRo: return "flat_ro";
    case RipMethod::kRoBridge: return "ro_bridge";
  }
  return "unknown";
}

RipReport exact_delta(const Frame& frame, Index k, std::uint64_t budget) {
  const auto start = Clock::now();
  require_sparsity(frame, k);
  require_budget(binomial(static_cast<std::uint64_t>(frame.cols()), static_cast<std::uint64_t>(k)),
                 budget, "exact delta");
  const Matrix g = gram(frame.matrix());
  Best best = max_over_subsets(frame.cols(), k, [&](const IndexList& s) {
    const RealVector ev = deviation_eigenvalues(principal_block(g, s));
    return std::max(std::abs(ev(0)), std::abs(ev(ev.size() - 1)));
  });
  RipReport r;
  r.k = k;
  r.method = RipMethod::kExact;
  r.delta = best.value;
  r.witness = std::move(best.witness);
  r.runtime_ms = elapsed_ms(start);
  return r;
}

RipReport gershgorin_delta(const Frame& frame, Index k) {
  const auto start = Clock::now();
  require_sparsity(frame, k);
  require(columns_unit_norm(frame.matrix()), ErrorCode::kInvalidArgument,
          "the Gershgorin estimate needs unit-norm columns");
  RipReport r;
  r.k = k;
  r.method = RipMethod::kGershgorin;
  r.delta = static_cast<double>(k - 1) * worst_case_coherence(frame);
  r.runtime_ms = elapsed_ms(start);
  return r;
}

RipReport power_delta(const Frame& frame, Index k, int q, std::uint64_t budget) {
  const auto start = Clock::now();
  require_sparsity(frame, k);
  require(q >= 1, ErrorCode::kInvalidArgument, "power index q must be >= 1");
  require_budget(binomial(static_cast<std::uint64_t>(frame.cols()), static_cast<std::uint64_t>(k)),
                 budget, "power delta");
  const Matrix g = gram(frame.matrix());
  Best best = max_over_subsets(frame.cols(), k, [&](const IndexList& s) {
    Matrix block = principal_block(g, s);
    if (q == 1) {
      block.diagonal().array() -= 1.0;
      return block.norm();  // Tr[(G - I)^2]^{1/2} is the Frobenius norm
    }
    const RealVector ev = deviation_eigenvalues(std::move(block));
    // Scale by the largest magnitude before taking high powers.
    const double top = ev.cwiseAbs().maxCoeff();
    if (top == 0.0) return 0.0;
    double sum = 0.0;
    for (Index i = 0; i < ev.size(); ++i) sum += std::pow(std::abs(ev(i)) / top, 2.0 * q);
    return top * std::pow(sum, 1.0 / (2.0 * q));
  });
  RipReport r;
  r.k = k;
  r.method = RipMethod::kPower;
  r.q = q;
  r.delta = best.value;
  r.witness = std::move(best.witness);
  r.runtime_ms = elapsed_ms(start);
  return r;
}

double delta_one(const Frame& frame) {
  double d = 0.0;
  for (Index j = 0; j < frame.cols(); ++j) {
    d = std::max(d, std::abs(1.0 - frame.matrix().col(j).squaredNorm()));
  }
  return d;
}

RoResult restricted_orthogonality(const Frame& frame, Index k, std::uint64_t budget) {
  require_sparsity(frame, k);
  const Index n = frame.cols();
  require(n >= 2, ErrorCode::kInvalidArgument, "restricted orthogonality needs N >= 2");
  const Matrix g = gram(frame.matrix());
  auto top_singular = [&](const IndexList& left, const IndexList& right) {
    Eigen::JacobiSVD<Matrix> svd(cross_block(g, left, right));
    return svd.singularValues()(0);
  };
  RoResult out;
  out.theta = -1.0;
  if (n >= 2 * k) {
    const std::uint64_t left_count = binomial(static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(k));
    const std::uint64_t right_count =
        binomial(static_cast<std::uint64_t>(n - k), static_cast<std::uint64_t>(k));
    require_budget(left_count > kSaturated / right_count ? kSaturated : left_count * right_count / 2,
                   budget, "restricted orthogonality");
    struct Local {
      double value = -1.0;
      IndexList left, right;
    };
    const std::size_t chunks = chunk_count(static_cast<std::size_t>(left_count));
    std::vector<Local> partial(chunks);
    for_each_chunk(static_cast<std::size_t>(left_count), [&](std::size_t c, std::size_t begin, std::size_t end) {
      if (begin == end) return;
      IndexList left = unrank_combination(n, k, begin);
      for (std::size_t rank = begin; rank < end; ++rank) {
        // Each unordered pair once: the right support starts after left[0].
        IndexList pool;
        for (Index j = left[0] + 1; j < n; ++j) {
          if (!std::binary_search(left.begin(), left.end(), j)) pool.push_back(j);
        }
        const auto pool_size = static_cast<Index>(pool.size());
        if (pool_size >= k) {
          IndexList pick = first_combination(k);
          do {
            IndexList right(static_cast<std::size_t>(k));
            for (Index t = 0; t < k; ++t) right[static_cast<std::size_t>(t)] = pool[static_cast<std::size_t>(pick[static_cast<std::size_t>(t)])];
            const double v = top_singular(left, right);
            if (v > partial[c].value) partial[c] = {v, left, right};
          } while (next_combination(pick, pool_size));
        }
        next_combination(left, n);
      }
    });
    for (auto& p : partial) {
      if (p.value > out.theta) out = {p.value, std::move(p.left), std::move(p.right)};
    }
  } else {
    // Too few columns for two disjoint k-supports: the right support is the
    // whole complement of the left one.
    std::uint64_t count = 0;
    for (Index a = n - k; a <= k; ++a) count += binomial(static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(a));
    require_budget(count, budget, "restricted orthogonality");
    for (Index a = std::max<Index>(1, n - k); a <= std::min(k, n - 1); ++a) {
      IndexList left = first_combination(a);
      do {
        const IndexList right = complement(left, n);
        const double v = top_singular(left, right);
        if (v > out.theta) out = {v, left, right};
      } while (next_combination(left, n));
    }
  }
  out.theta = std::max(out.theta, 0.0);
  return out;
}

FlatRoResult flat_ro(const Frame& frame, Index k, std::uint64_t budget) {
  require_sparsity(frame, k);
  const Index n = frame.cols();
  std::uint64_t count = 0;
  for (Index a = 1; a <= k; ++a) {
    std::uint64_t rights = 0;
    for (Index b = 1; b <= std::min(k, n - a); ++b) {
      rights += binomial(static_cast<std::uint64_t>(n - a), static_cast<std::uint64_t>(b));
    }
    const std::uint64_t lefts = binomial(static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(a));
    count = (rights != 0 && lefts > (kSaturated - count) / rights) ? kSaturated : count + lefts * rights;
  }
  require_budget(count, budget, "flat restricted orthogonality");
  const Matrix g = gram(frame.matrix());
  double theta_hat = 0.0;
  for (Index a = 1; a <= k && a < n; ++a) {
    const std::uint64_t lefts = binomial(static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(a));
    const std::size_t chunks = chunk_count(static_cast<std::size_t>(lefts));
    std::vector<double> partial(chunks, 0.0);
    for_each_chunk(static_cast<std::size_t>(lefts), [&](std::size_t c, std::size_t begin, std::size_t end) {
      if (begin == end) return;
      IndexList left = unrank_combination(n, a, begin);
      for (std::size_t rank = begin; rank < end; ++rank) {
        // u_j = <sum_I phi, phi_j>, so <sum_I, sum_J> = sum_{j in J} u_j.
        Vector u = Vector::Zero(n);
        for (Index i : left) u += g.col(i);
        const IndexList pool = complement(left, n);
        const auto pool_size = static_cast<Index>(pool.size());
        for (Index b = 1; b <= std::min(k, pool_size); ++b) {
          const double norm = std::sqrt(static_cast<double>(a * b));
          IndexList pick = first_combination(b);
          do {
            Complex s = 0.0;
            for (Index t : pick) s += u(pool[static_cast<std::size_t>(t)]);
            partial[c] = std::max(partial[c], std::abs(s) / norm);
          } while (next_combination(pick, pool_size));
        }
        next_combination(left, n);
      }
    });
    for (double p : partial) theta_hat = std::max(theta_hat, p);
  }
  FlatRoResult r;
  r.theta_hat = theta_hat;
  const double log_k = k >= 2 ? std::log(static_cast<double>(k)) : 0.0;
  r.ro_upper = k >= 2 ? kFlatRoConstant * theta_hat * log_k : theta_hat;
  r.ro_upper_proof = k >= 2 ? kFlatRoProofConstant * theta_hat * log_k : theta_hat;
  return r;
}

double ro_to_rip(double theta_k, double delta_1) {
  require(theta_k >= 0.0 && delta_1 >= 0.0, ErrorCode::kInvalidArgument,
          "restricted constants are nonnegative");
  return 2.0 * theta_k + delta_1;
}

double iterated_ro_bound(double theta_k, double delta_1, Index k) {
  require(theta_k >= 0.0 && delta_1 >= 0.0 && k >= 1, ErrorCode::kInvalidArgument,
          "restricted constants are nonnegative and k >= 1");
  const double steps = std::ceil(std::log2(static_cast<double>(k)));
  return (1.0 + steps) * theta_k + delta_1;
}

WeakRipProbe weak_rip_probe(const Frame& frame, std::span<const Complex> values, Index trials,
                            std::uint64_t seed, double delta) {
  const auto k = static_cast<Index>(values.size());
  require_sparsity(frame, k);
  require(trials >= 1, ErrorCode::kInvalidArgument, "need at least one trial");
  double energy = 0.0;
  for (const Complex& v : values) energy += std::norm(v);
  require(energy > 0.0, ErrorCode::kInvalidArgument, "the value vector is zero");
  const Matrix& a = frame.matrix();
  const Index n = frame.cols();
  WeakRipProbe out;
  out.distortions.resize(static_cast<std::size_t>(trials));
  for_each_chunk(static_cast<std::size_t>(trials), [&](std::size_t, std::size_t begin, std::size_t end) {
    for (std::size_t t = begin; t < end; ++t) {
      std::vector<Complex> shuffled(values.begin(), values.end());
      Rng rng(Rng::derive(seed, t));
      const IndexList support = rng.subset(n, k);
      rng.shuffle(std::span<Complex>(shuffled));
      Vector y = Vector::Zero(a.rows());
      for (Index i = 0; i < k; ++i) {
        y += shuffled[static_cast<std::size_t>(i)] * a.col(support[static_cast<std::size_t>(i)]);
      }
      out.distortions[t] = std::abs(y.squaredNorm() - energy) / energy;
    }
  });
  std::sort(out.distortions.begin(), out.distortions.end());
  auto quantile = [&](double p) {
    const auto rank = static_cast<std::size_t>(std::ceil(p * static_cast<double>(trials)));
    return out.distortions[std::clamp<std::size_t>(rank, 1, out.distortions.size()) - 1];
  };
  out.median = quantile(0.5);
  out.q90 = quantile(0.9);
  out.q99 = quantile(0.99);
  out.max = out.distortions.back();
  const CoherenceReport c = coherence_report(frame);
  const double log_n = std::log(static_cast<double>(n));
  out.regime = c.scp1 && c.scp2 && n >= 128 &&
               2.0 * static_cast<double>(k) * log_n <=
                   std::min(delta * delta / (100.0 * c.mu * c.mu), static_cast<double>(c.m));
  return out;
}

CliqueAudit paley_clique_audit(long long p) {
  require(p > 2 && is_prime(static_cast<std::uint64_t>(p)), ErrorCode::kNotPrime,
          "Paley graphs need an odd prime, got " + std::to_string(p));
  require(p % 4 == 1, ErrorCode::kBadPrime, "Paley graphs need p = 1 mod 4");
  require(p <= 101, ErrorCode::kUnsupportedSize, "clique search is limited to p <= 101");
  using Set = std::bitset<128>;
  std::vector<Set> adj(static_cast<std::size_t>(p));
  for (long long i = 0; i < p; ++i) {
    for (long long j = 0; j < p; ++j) {
      if (i != j && legendre(i - j, p) == 1) adj[static_cast<std::size_t>(i)].set(static_cast<std::size_t>(j));
    }
  }
  IndexList best;
  IndexList current;
  // Bron-Kerbosch with pivoting; candidates visited in increasing order.
  auto expand = [&](auto&& self, Set candidates, Set excluded) -> void {
    if (candidates.none() && excluded.none()) {
      if (current.size() > best.size()) best = current;
      return;
    }
    if (current.size() + candidates.count() <= best.size()) return;
    std::size_t pivot = 0;
    std::size_t pivot_degree = 0;
    const Set both = candidates | excluded;
    for (std::size_t u = 0; u < static_cast<std::size_t>(p); ++u) {
      if (!both.test(u)) continue;
      const std::size_t d = (candidates & adj[u]).count();
      if (d >= pivot_degree) {
        pivot = u;
        pivot_degree = d;
      }
    }
    const Set branch = candidates & ~adj[pivot];
    for (std::size_t v = 0; v < static_cast<std::size_t>(p); ++v) {
      if (!branch.test(v)) continue;
      current.push_back(static_cast<Index>(v));
      self(self, candidates & adj[v], excluded & adj[v]);
      current.pop_back();
      candidates.reset(v);
      excluded.set(v);
    }
  };
  Set all;
  for (long long i = 0; i < p; ++i) all.set(static_cast<std::size_t>(i));
  expand(expand, all, Set{});
  CliqueAudit r;
  r.p = p;
  r.omega = static_cast<Index>(best.size());
  std::sort(best.begin(), best.end());
  r.clique = best;
  r.sqrt_p = std::sqrt(static_cast<double>(p));
  r.below_sqrt_p = static_cast<double>(r.omega) < r.sqrt_p;
  r.delta_at_clique = static_cast<double>(r.omega) / r.sqrt_p;
  return r;
}

}  // namespace frameforge
