// Copyright 2026 The frameforge Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "frameforge/frame.hpp"
#include "frameforge/rng.hpp"

namespace frameforge {

using Edge = std::pair<Index, Index>;

// Simple undirected graph on vertices 0..n-1 with its adjacency spectrum.
class MeasurementGraph {
 public:
  // Edges are normalized to (min, max) and sorted. Throws InvalidArgument
  // on loops, repeated edges, or out-of-range endpoints.
  MeasurementGraph(Index vertices, std::vector<Edge> edges);

  Index vertices() const noexcept { return vertices_; }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  std::optional<Index> degree() const noexcept { return degree_; }
  // max(|lambda_2|, |lambda_n|) / d, for regular graphs with d >= 1.
  std::optional<double> expansion() const noexcept { return expansion_; }
  const std::vector<double>& spectrum() const noexcept { return spectrum_; }  // descending
  const std::vector<IndexList>& neighbors() const noexcept { return neighbors_; }

 private:
  Index vertices_;
  std::vector<Edge> edges_;
  std::vector<IndexList> neighbors_;
  std::optional<Index> degree_;
  std::optional<double> expansion_;
  std::vector<double> spectrum_;
};

MeasurementGraph complete_graph(Index n);
MeasurementGraph star_graph(Index n);  // center 0
MeasurementGraph cycle_graph(Index n);
MeasurementGraph edgeless_graph(Index n);
// Uniform-ish simple d-regular graph: stubs are paired at random, pairs
// that would form loops or repeated edges are re-paired, and the attempt
// restarts when no valid pairing remains. Requires n d even and d < n.
MeasurementGraph random_regular_graph(Index n, Index d, Rng& rng);

struct PolarizationDesign {
  Frame vertex_frame;
  MeasurementGraph graph;
  // Vertex columns first, then for each edge (i, j) the four vectors
  // phi_i + i^k phi_j, k = 0..3.
  Matrix vectors;
  Index measurement_count() const noexcept { return vectors.cols(); }
};

// Throws InvalidArgument when the vertex counts differ. With `certify`,
// also throws InvalidArgument unless the vertex frame is full spark.
PolarizationDesign build_design(const Frame& frame, const MeasurementGraph& graph,
                                bool certify = true);

// |<x, v>| for every design vector v, in design order.
RealVector phaseless_measure(const PolarizationDesign& design, const Vector& x);

struct PhaseRecovery {
  Vector estimate;
  IndexList component;   // vertices used for the reconstruction
  IndexList removed;     // vertices dropped for near-zero magnitude
  Index anchor = 0;
  double cycle_defect = 0.0;  // largest phase mismatch on non-tree edges
};

inline constexpr double kPruneTolerance = 1e-9;
inline constexpr double kCycleTolerance = 1e-6;

// Polarization recovery up to a global phase. Throws Disconnected when the
// largest surviving component has fewer than M vertices and
// InconsistentCycle when edge phases disagree around a cycle.
PhaseRecovery recover(const PolarizationDesign& design, const RealVector& magnitudes);

// min over theta of ||x - e^{i theta} estimate||.
double phase_error(const Vector& x, const Vector& estimate);

}  // namespace frameforge
