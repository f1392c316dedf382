// Copyright 2026 The frameforge Authors.
// SPDX-License-Identifier: Apache-2.0

#include "frameforge/phase.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <map>
#include <set>

#include "frameforge/error.hpp"
#include "frameforge/numerics.hpp"
#include "frameforge/spark.hpp"

namespace frameforge {
namespace {

constexpr int kRegularAttempts = 10'000;

const Complex kUnit[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};  // i^k

}  // namespace

MeasurementGraph::MeasurementGraph(Index vertices, std::vector<Edge> edges)
    : vertices_(vertices), edges_(std::move(edges)) {
  require(vertices_ >= 1, ErrorCode::kInvalidArgument, "graph needs at least one vertex");
  for (auto& [a, b] : edges_) {
    require(a >= 0 && b >= 0 && a < vertices_ && b < vertices_, ErrorCode::kInvalidArgument,
            "edge endpoint out of range");
    require(a != b, ErrorCode::kInvalidArgument, "loop at vertex " + std::to_string(a));
    if (a > b) std::swap(a, b);
  }
  std::sort(edges_.begin(), edges_.end());
  require(std::adjacent_find(edges_.begin(), edges_.end()) == edges_.end(),
          ErrorCode::kInvalidArgument, "repeated edge");
  neighbors_.resize(static_cast<std::size_t>(vertices_));
  Matrix adjacency = Matrix::Zero(vertices_, vertices_);
  for (const auto& [a, b] : edges_) {
    neighbors_[static_cast<std::size_t>(a)].push_back(b);
    neighbors_[static_cast<std::size_t>(b)].push_back(a);
    adjacency(a, b) = 1.0;
    adjacency(b, a) = 1.0;
  }
  for (auto& list : neighbors_) std::sort(list.begin(), list.end());
  spectrum_ = hermitian_eigenvalues(adjacency);
  const auto d = static_cast<Index>(neighbors_.front().size());
  const bool regular = std::all_of(neighbors_.begin(), neighbors_.end(),
                                   [&](const IndexList& l) { return static_cast<Index>(l.size()) == d; });
  if (regular) {
    degree_ = d;
    if (d >= 1 && vertices_ >= 2) {
      expansion_ = std::max(std::abs(spectrum_[1]), std::abs(spectrum_.back())) / static_cast<double>(d);
    }
  }
}

MeasurementGraph complete_graph(Index n) {
  std::vector<Edge> edges;
  for (Index i = 0; i < n; ++i) {
    for (Index j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  }
  return {n, std::move(edges)};
}

MeasurementGraph star_graph(Index n) {
  std::vector<Edge> edges;
  for (Index i = 1; i < n; ++i) edges.emplace_back(0, i);
  return {n, std::move(edges)};
}

MeasurementGraph cycle_graph(Index n) {
  require(n >= 3, ErrorCode::kInvalidArgument, "a cycle needs at least 3 vertices");
  std::vector<Edge> edges;
  for (Index i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return {n, std::move(edges)};
}

MeasurementGraph edgeless_graph(Index n) { return {n, {}}; }

MeasurementGraph random_regular_graph(Index n, Index d, Rng& rng) {
  require(n >= 1 && d >= 0 && d < n, ErrorCode::kInvalidArgument, "need 0 <= d < n");
  require((n * d) % 2 == 0, ErrorCode::kInvalidArgument, "n d must be even");
  for (int attempt = 0; attempt < kRegularAttempts; ++attempt) {
    std::set<Edge> edges;
    IndexList stubs;
    for (Index v = 0; v < n; ++v) {
      for (Index k = 0; k < d; ++k) stubs.push_back(v);
    }
    bool stuck = false;
    while (!stubs.empty()) {
      rng.shuffle(std::span<Index>(stubs));
      std::map<Index, Index> leftover;
      for (std::size_t i = 0; i + 1 < stubs.size(); i += 2) {
        Index a = stubs[i];
        Index b = stubs[i + 1];
        if (a > b) std::swap(a, b);
        if (a != b && edges.insert({a, b}).second) continue;
        ++leftover[a];
        ++leftover[b];
      }
      // Give up on this attempt when no two leftover vertices can still be
      // joined.
      bool joinable = false;
      for (auto i = leftover.begin(); i != leftover.end() && !joinable; ++i) {
        for (auto j = std::next(i); j != leftover.end(); ++j) {
          if (!edges.count({i->first, j->first})) {
            joinable = true;
            break;
          }
        }
      }
      stubs.clear();
      for (const auto& [v, count] : leftover) {
        for (Index k = 0; k < count; ++k) stubs.push_back(v);
      }
      if (!stubs.empty() && !joinable) {
        stuck = true;
        break;
      }
    }
    if (!stuck) return {n, std::vector<Edge>(edges.begin(), edges.end())};
  }
  fail(ErrorCode::kFailedToConverge, "no simple " + std::to_string(d) + "-regular pairing found");
}

PolarizationDesign build_design(const Frame& frame, const MeasurementGraph& graph, bool certify) {
  require(frame.cols() == graph.vertices(), ErrorCode::kInvalidArgument,
          "frame has " + std::to_string(frame.cols()) + " columns but the graph has " +
              std::to_string(graph.vertices()) + " vertices");
  if (certify) {
    require(spark(frame).full_spark, ErrorCode::kInvalidArgument,
            "vertex frame is not full spark");
  }
  const Matrix& a = frame.matrix();
  const auto edge_count = static_cast<Index>(graph.edges().size());
  Matrix v(a.rows(), a.cols() + 4 * edge_count);
  v.leftCols(a.cols()) = a;
  Index col = a.cols();
  for (const auto& [i, j] : graph.edges()) {
    for (const Complex& unit : kUnit) v.col(col++) = a.col(i) + unit * a.col(j);
  }
  return {frame, graph, std::move(v)};
}

RealVector phaseless_measure(const PolarizationDesign& design, const Vector& x) {
  require(x.size() == design.vectors.rows(), ErrorCode::kInvalidArgument,
          "signal dimension differs from M");
  return (design.vectors.adjoint() * x).cwiseAbs();
}

PhaseRecovery recover(const PolarizationDesign& design, const RealVector& magnitudes) {
  require(magnitudes.size() == design.measurement_count(), ErrorCode::kInvalidArgument,
          "expected " + std::to_string(design.measurement_count()) + " magnitudes, got " +
              std::to_string(magnitudes.size()));
  const MeasurementGraph& graph = design.graph;
  const Index n = graph.vertices();
  const Index m = design.vertex_frame.rows();
  const RealVector vertex = magnitudes.head(n);
  const double top = n > 0 ? vertex.maxCoeff() : 0.0;

  PhaseRecovery out;
  std::vector<bool> alive(static_cast<std::size_t>(n), true);
  for (Index i = 0; i < n; ++i) {
    if (!(vertex(i) >= kPruneTolerance * top) || top == 0.0) {
      alive[static_cast<std::size_t>(i)] = false;
      out.removed.push_back(i);
    }
  }

  // Relative phases conj(c_i) c_j from the four polarization measurements.
  std::map<Edge, Complex> omega;
  for (std::size_t e = 0; e < graph.edges().size(); ++e) {
    const auto [i, j] = graph.edges()[e];
    if (!alive[static_cast<std::size_t>(i)] || !alive[static_cast<std::size_t>(j)]) continue;
    Complex w = 0.0;
    for (int k = 0; k < 4; ++k) {
      const double mag = magnitudes(n + 4 * static_cast<Index>(e) + k);
      w += kUnit[k] * mag * mag;
    }
    w /= 4.0;
    // The design stores phi_i + i^k phi_j, whose inner product with x is
    // c_i + i^{-k} c_j; summing i^k |.|^2 then gives conj(c_i) c_j.
    omega[{i, j}] = w / std::abs(w);
  }

  // Largest surviving component; ties go to the one with the smallest vertex.
  std::vector<Index> label(static_cast<std::size_t>(n), -1);
  IndexList best;
  for (Index s = 0; s < n; ++s) {
    if (!alive[static_cast<std::size_t>(s)] || label[static_cast<std::size_t>(s)] >= 0) continue;
    IndexList comp{s};
    label[static_cast<std::size_t>(s)] = s;
    for (std::size_t head = 0; head < comp.size(); ++head) {
      for (Index u : graph.neighbors()[static_cast<std::size_t>(comp[head])]) {
        if (alive[static_cast<std::size_t>(u)] && label[static_cast<std::size_t>(u)] < 0) {
          label[static_cast<std::size_t>(u)] = s;
          comp.push_back(u);
        }
      }
    }
    if (comp.size() > best.size()) best = std::move(comp);
  }
  require(static_cast<Index>(best.size()) >= m, ErrorCode::kDisconnected,
          "largest surviving component has " + std::to_string(best.size()) + " vertices, need M = " +
              std::to_string(m));
  std::sort(best.begin(), best.end());
  out.component = best;

  Index anchor = best.front();
  for (Index v : best) {
    if (vertex(v) > vertex(anchor)) anchor = v;
  }
  out.anchor = anchor;

  auto relative = [&](Index from, Index to) {
    return from < to ? omega.at({from, to}) : std::conj(omega.at({to, from}));
  };
  std::vector<Complex> phase(static_cast<std::size_t>(n), 0.0);
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  std::deque<Index> queue{anchor};
  phase[static_cast<std::size_t>(anchor)] = 1.0;
  seen[static_cast<std::size_t>(anchor)] = true;
  while (!queue.empty()) {
    const Index u = queue.front();
    queue.pop_front();
    for (Index w : graph.neighbors()[static_cast<std::size_t>(u)]) {
      if (!alive[static_cast<std::size_t>(w)] || seen[static_cast<std::size_t>(w)]) continue;
      seen[static_cast<std::size_t>(w)] = true;
      phase[static_cast<std::size_t>(w)] = phase[static_cast<std::size_t>(u)] * relative(u, w);
      queue.push_back(w);
    }
  }
  for (const auto& [edge, w] : omega) {
    const auto [i, j] = edge;
    if (label[static_cast<std::size_t>(i)] != label[static_cast<std::size_t>(anchor)]) continue;
    const double defect = std::abs(phase[static_cast<std::size_t>(j)] - phase[static_cast<std::size_t>(i)] * w);
    out.cycle_defect = std::max(out.cycle_defect, defect);
  }
  require(out.cycle_defect <= kCycleTolerance, ErrorCode::kInconsistentCycle,
          "edge phases disagree around a cycle by " + std::to_string(out.cycle_defect));

  // Canonical dual of the component's subframe: x = (F F*)^{-1} F c with
  // c_i = <x, phi_i> up to the common phase.
  const Matrix sub = select_columns(design.vertex_frame.matrix(), best);
  Vector coeffs(static_cast<Index>(best.size()));
  for (std::size_t t = 0; t < best.size(); ++t) {
    coeffs(static_cast<Index>(t)) = vertex(best[t]) * phase[static_cast<std::size_t>(best[t])];
  }
  out.estimate = least_squares(sub.adjoint(), coeffs);
  return out;
}

double phase_error(const Vector& x, const Vector& estimate) {
  require(x.size() == estimate.size(), ErrorCode::kInvalidArgument, "length mismatch");
  const Complex overlap = estimate.dot(x);  // estimate* x
  const Complex align = std::abs(overlap) > 0.0 ? overlap / std::abs(overlap) : Complex(1.0);
  return (x - align * estimate).norm();
}

}  // namespace frameforge
