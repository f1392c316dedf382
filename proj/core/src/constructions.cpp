// Copyright 2026 The frameforge Authors.
// SPDX-License-Identifier: Apache-2.0

#include "frameforge/constructions.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <Eigen/Cholesky>

#include "frameforge/error.hpp"
#include "frameforge/finite_field.hpp"
#include "frameforge/numerics.hpp"

namespace frameforge {
namespace {

// Measures the structural flags rather than trusting the construction.
Frame tagged(Matrix m, std::string family, std::string params, bool equiangular = false,
             std::optional<std::uint64_t> seed = std::nullopt) {
  Frame measured = Frame::from_matrix(std::move(m), std::move(family), std::move(params));
  FrameTags tags = measured.tags();
  tags.equiangular = equiangular;
  tags.seed = seed;
  return Frame(measured.matrix(), std::move(tags));
}

IndexList normalized_row_set(IndexList rows, Index n) {
  require(!rows.empty(), ErrorCode::kEmptyRowSet, "row set is empty");
  std::sort(rows.begin(), rows.end());
  require(std::adjacent_find(rows.begin(), rows.end()) == rows.end(), ErrorCode::kInvalidArgument,
          "row set has repeated indices");
  require(rows.front() >= 0 && rows.back() < n, ErrorCode::kInvalidArgument,
          "row index outside 0.." + std::to_string(n - 1));
  return rows;
}

std::string join(const IndexList& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(xs[i]);
  }
  return out;
}

Matrix gabor_matrix(const std::vector<Complex>& seed, GaborShift shift) {
  const auto m = static_cast<Index>(seed.size());
  Matrix a(m, m * m);
  for (Index x = 0; x < m; ++x) {
    for (Index y = 0; y < m; ++y) {
      for (Index t = 0; t < m; ++t) {
        const Index s = ((t - x) % m + m) % m;
        const Index phase = shift == GaborShift::kModulateThenTranslate ? y * s : y * t;
        a(t, x * m + y) = seed[static_cast<std::size_t>(s)] * root_of_unity(phase, m);
      }
    }
  }
  return a;
}

std::string_view shift_name(GaborShift shift) {
  return shift == GaborShift::kModulateThenTranslate ? "mt" : "tm";
}

Matrix real_matrix_from_gram(const RealMatrix& g, Index m) {
  const Index n = g.cols();
  const RealMatrix g11 = g.topLeftCorner(m, m);
  Eigen::LLT<RealMatrix> llt(g11);
  require(llt.info() == Eigen::Success, ErrorCode::kRankDeficient,
          "leading Gram block is not positive definite");
  const RealMatrix lower = llt.matrixL();
  RealMatrix psi(m, n);
  psi.leftCols(m) = lower.transpose();
  psi.rightCols(n - m) = lower.triangularView<Eigen::Lower>().solve(g.topRightCorner(m, n - m));
  return psi.cast<Complex>();
}

}  // namespace

Frame build_harmonic(Index n, IndexList rows, bool normalize) {
  require(n >= 1, ErrorCode::kInvalidArgument, "DFT size must be positive");
  rows = normalized_row_set(std::move(rows), n);
  const auto m = static_cast<Index>(rows.size());
  Matrix a(m, n);
  for (Index i = 0; i < m; ++i) {
    for (Index j = 0; j < n; ++j) a(i, j) = root_of_unity(-rows[static_cast<std::size_t>(i)] * j, n);
  }
  if (normalize) a /= std::sqrt(static_cast<double>(m));
  return tagged(std::move(a), "harmonic", "n=" + std::to_string(n) + ",rows=" + join(rows));
}

std::vector<Complex> unit_circle_bases(Index n) {
  std::vector<Complex> out;
  for (Index k = 0; k < n; ++k) out.push_back(root_of_unity(k, n));
  return out;
}

Frame build_vandermonde(std::span<const Complex> bases, Index m) {
  require(m >= 1, ErrorCode::kInvalidArgument, "Vandermonde needs m >= 1");
  const auto n = static_cast<Index>(bases.size());
  Matrix a(m, n);
  for (Index j = 0; j < n; ++j) {
    Complex power = 1.0;
    for (Index i = 0; i < m; ++i) {
      a(i, j) = power;
      power *= bases[static_cast<std::size_t>(j)];
    }
  }
  return tagged(std::move(a), "vandermonde", "m=" + std::to_string(m));
}

Frame build_steiner_etf(const DesignIncidence& design, HadamardKind kind, IndexList row_choice) {
  const auto violations = verify_design(design);
  require(violations.empty(), ErrorCode::kInvalidArgument,
          "design fails the " + (violations.empty() ? std::string() : violations.front().check) +
              " check");
  require(design.lambda_ == 1, ErrorCode::kInvalidArgument, "Steiner ETFs need lambda = 1");
  const Index r = design.r;
  const Index size = r + 1;
  require(hadamard_available(size, kind), ErrorCode::kHadamardUnavailable,
          "no " + std::string(to_string(kind)) + " Hadamard matrix of size " + std::to_string(size));
  if (row_choice.empty()) {
    for (Index i = 1; i <= r; ++i) row_choice.push_back(i);
  }
  require(static_cast<Index>(row_choice.size()) == r, ErrorCode::kInvalidArgument,
          "row choice must list r = " + std::to_string(r) + " Hadamard rows");
  {
    IndexList sorted = row_choice;
    std::sort(sorted.begin(), sorted.end());
    require(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end() &&
                sorted.front() >= 0 && sorted.back() < size,
            ErrorCode::kInvalidArgument, "row choice must be distinct rows of H");
  }
  const Matrix h = hadamard(size, kind);
  const Index b = design.b;
  const Index v = design.v;
  Matrix a = Matrix::Zero(b, v * size);
  for (Index j = 0; j < v; ++j) {
    std::size_t used = 0;
    for (Index i = 0; i < b; ++i) {
      if (design.incidence(i, j) == 0) continue;
      a.block(i, j * size, 1, size) = h.row(row_choice[used++]);
    }
  }
  a /= std::sqrt(static_cast<double>(r));
  const bool skips_ones_row =
      std::find(row_choice.begin(), row_choice.end(), Index{0}) == row_choice.end();
  return tagged(std::move(a), "steiner",
                "v=" + std::to_string(v) + ",k=" + std::to_string(design.k) +
                    ",h=" + std::string(to_string(kind)) + (skips_ones_row ? "" : ",rows=" + join(row_choice)),
                true);
}

Frame build_paley_etf(long long p) {
  require(p > 2 && is_prime(static_cast<std::uint64_t>(p)), ErrorCode::kNotPrime,
          "Paley ETF needs an odd prime, got " + std::to_string(p));
  require(p % 4 == 1, ErrorCode::kBadPrime,
          "Paley ETF needs p = 1 mod 4, got p=" + std::to_string(p) + " (p mod 4 = " +
              std::to_string(p % 4) + ")");
  const auto residues = squares_mod(static_cast<std::uint32_t>(p));
  const auto m = static_cast<Index>(residues.size());
  Matrix a = Matrix::Zero(m, p + 1);
  for (Index i = 0; i < m; ++i) {
    const double weight = std::sqrt((i == 0 ? 1.0 : 2.0) / static_cast<double>(p));
    for (Index n = 0; n < p; ++n) {
      a(i, n) = weight * root_of_unity(-static_cast<long long>(residues[static_cast<std::size_t>(i)]) * n, p);
    }
  }
  a(0, p) = 1.0;
  return tagged(std::move(a), "paley", "p=" + std::to_string(p), true);
}

Frame real_form(const Frame& frame) {
  const Matrix g = gram(frame.matrix());
  require(g.imag().cwiseAbs().maxCoeff() <= 1e-12, ErrorCode::kInvalidArgument,
          frame.tags().family + " frame has a complex Gram matrix; no real form");
  Matrix psi = real_matrix_from_gram(g.real(), frame.rows());
  FrameTags tags = frame.tags();
  Frame measured = Frame::from_matrix(std::move(psi), tags.family, tags.params + ",real");
  FrameTags out = measured.tags();
  out.equiangular = tags.equiangular;
  out.seed = tags.seed;
  return Frame(measured.matrix(), std::move(out));
}

Frame build_simplex(Index m) {
  require(m >= 1, ErrorCode::kInvalidArgument, "simplex needs m >= 1");
  const Index n = m + 1;
  const double md = static_cast<double>(m);
  RealMatrix g = RealMatrix::Constant(n, n, -1.0 / md);
  g.diagonal().setOnes();
  return tagged(real_matrix_from_gram(g, m), "simplex", "m=" + std::to_string(m), true);
}

Frame build_alltop_gabor(Index m, GaborShift shift) {
  require(m >= 1, ErrorCode::kInvalidArgument, "Gabor needs m >= 1");
  std::vector<Complex> seed;
  const double scale = 1.0 / std::sqrt(static_cast<double>(m));
  for (Index t = 0; t < m; ++t) seed.push_back(scale * root_of_unity(t * t % m * t, m));
  return tagged(gabor_matrix(seed, shift), "alltop",
                "m=" + std::to_string(m) + ",shift=" + std::string(shift_name(shift)));
}

Frame build_steinhaus_gabor(Index m, Rng& rng, GaborShift shift) {
  require(m >= 1, ErrorCode::kInvalidArgument, "Gabor needs m >= 1");
  std::vector<Complex> seed;
  const double scale = 1.0 / std::sqrt(static_cast<double>(m));
  for (Index t = 0; t < m; ++t) seed.push_back(scale * std::polar(1.0, 2.0 * kPi * rng.uniform()));
  return tagged(gabor_matrix(seed, shift), "steinhaus",
                "m=" + std::to_string(m) + ",shift=" + std::string(shift_name(shift)), false,
                rng.seed());
}

Frame build_chirp(Index m) {
  require(is_prime(static_cast<std::uint64_t>(std::max<Index>(m, 0))), ErrorCode::kNotPrime,
          "chirp frames need a prime m, got " + std::to_string(m));
  Matrix a(m, m * m);
  const double scale = 1.0 / std::sqrt(static_cast<double>(m));
  for (Index x = 0; x < m; ++x) {
    for (Index y = 0; y < m; ++y) {
      for (Index t = 0; t < m; ++t) {
        a(t, x * m + y) = scale * root_of_unity(x * t * (t - m) + 2 * y * t, 2 * m);
      }
    }
  }
  return tagged(std::move(a), "chirp", "m=" + std::to_string(m));
}

Frame build_spherical_2design(Index n, IndexList rows) {
  require(!rows.empty(), ErrorCode::kEmptyRowSet, "frequency set is empty");
  require(std::find(rows.begin(), rows.end(), Index{0}) == rows.end(),
          ErrorCode::kZeroIndexIncluded, "frequency 0 would give a constant row");
  rows = normalized_row_set(std::move(rows), n);
  const auto m = static_cast<Index>(2 * rows.size());
  require(n >= 2 * m, ErrorCode::kInvalidArgument,
          "need n >= 2M = " + std::to_string(2 * m) + ", got n=" + std::to_string(n));
  Matrix a(m, n);
  const double scale = std::sqrt(2.0 / static_cast<double>(m));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (Index l = 0; l < n; ++l) {
      const Complex w = root_of_unity(rows[i] * l, n);
      a(static_cast<Index>(2 * i), l) = scale * w.real();
      a(static_cast<Index>(2 * i + 1), l) = scale * w.imag();
    }
  }
  return tagged(std::move(a), "spherical", "n=" + std::to_string(n) + ",rows=" + join(rows));
}

Frame build_code_frame(int m, int t) {
  require(m >= 1 && t >= 0, ErrorCode::kInvalidArgument, "code frame needs m >= 1, t >= 0");
  require(static_cast<long long>(t + 1) * m <= 22, ErrorCode::kInvalidArgument,
          "code frame would have more than 2^22 columns");
  const FiniteField field(2, static_cast<std::uint32_t>(m));
  const Index q = field.order();
  Index n = 1;
  for (int i = 0; i <= t; ++i) n *= q;
  std::vector<std::uint8_t> trace(static_cast<std::size_t>(q));
  for (Index z = 0; z < q; ++z) {
    trace[static_cast<std::size_t>(z)] =
        static_cast<std::uint8_t>(field.trace(static_cast<FiniteField::Code>(z)));
  }
  // powers[x][i] = x^{2^i + 1} for i = 1..t
  std::vector<std::vector<FiniteField::Code>> powers(static_cast<std::size_t>(q));
  for (Index x = 0; x < q; ++x) {
    for (int i = 1; i <= t; ++i) {
      powers[static_cast<std::size_t>(x)].push_back(
          field.pow(static_cast<FiniteField::Code>(x), (std::uint64_t{1} << i) + 1));
    }
  }
  const double scale = 1.0 / std::sqrt(static_cast<double>(q));
  Matrix a(q, n);
  for (Index col = 0; col < n; ++col) {
    std::vector<FiniteField::Code> alpha;
    for (Index rest = col; alpha.size() <= static_cast<std::size_t>(t); rest /= q) {
      alpha.push_back(static_cast<FiniteField::Code>(rest % q));
    }
    for (Index x = 0; x < q; ++x) {
      FiniteField::Code z = field.mul(alpha[0], static_cast<FiniteField::Code>(x));
      for (int i = 1; i <= t; ++i) {
        z = field.add(z, field.mul(alpha[static_cast<std::size_t>(i)],
                                   powers[static_cast<std::size_t>(x)][static_cast<std::size_t>(i - 1)]));
      }
      a(x, col) = trace[z] ? -scale : scale;
    }
  }
  return tagged(std::move(a), "code", "m=" + std::to_string(m) + ",t=" + std::to_string(t));
}

Frame build_normalized_gaussian(Index m, Index n, Rng& rng) {
  require(m >= 1 && n >= m, ErrorCode::kInvalidArgument, "need 1 <= m <= n");
  Matrix a(m, n);
  for (Index j = 0; j < n; ++j) {
    for (Index i = 0; i < m; ++i) a(i, j) = rng.normal();
    a.col(j).normalize();
  }
  return tagged(std::move(a), "gaussian", "m=" + std::to_string(m) + ",n=" + std::to_string(n),
                false, rng.seed());
}

Frame build_random_harmonic(Index m, Index n, Rng& rng) {
  require(m >= 1 && n >= m, ErrorCode::kInvalidArgument, "need 1 <= m <= n");
  const double keep = static_cast<double>(m) / static_cast<double>(n);
  IndexList rows;
  while (rows.empty()) {
    for (Index k = 0; k < n; ++k) {
      if (rng.uniform() < keep) rows.push_back(k);
    }
  }
  Frame h = build_harmonic(n, rows, true);
  FrameTags tags = h.tags();
  tags.family = "random-harmonic";
  tags.seed = rng.seed();
  return Frame(h.matrix(), std::move(tags));
}

Frame build_random_sign(Index m, Index n, Rng& rng) {
  require(m >= 1 && n >= m, ErrorCode::kInvalidArgument, "need 1 <= m <= n");
  const double scale = 1.0 / std::sqrt(static_cast<double>(m));
  Matrix a(m, n);
  for (Index j = 0; j < n; ++j) {
    for (Index i = 0; i < m; ++i) a(i, j) = (rng.next_u64() >> 63) ? -scale : scale;
  }
  return tagged(std::move(a), "sign", "m=" + std::to_string(m) + ",n=" + std::to_string(n), false,
                rng.seed());
}

Frame build_identity(Index m) {
  require(m >= 1, ErrorCode::kInvalidArgument, "identity needs m >= 1");
  return tagged(Matrix::Identity(m, m), "identity", "m=" + std::to_string(m), true);
}

Frame build_identity_plus_dft(Index m) {
  require(m >= 1, ErrorCode::kInvalidArgument, "need m >= 1");
  Matrix a(m, 2 * m);
  a.leftCols(m).setIdentity();
  a.rightCols(m) = hadamard(m, HadamardKind::kComplexDft) / std::sqrt(static_cast<double>(m));
  return tagged(std::move(a), "identity+dft", "m=" + std::to_string(m));
}

Frame build_planar(Index n) {
  require(n >= 2, ErrorCode::kInvalidArgument, "planar frame needs n >= 2");
  Matrix a(2, n);
  for (Index k = 0; k < n; ++k) {
    const double angle = kPi * static_cast<double>(k) / static_cast<double>(n);
    a(0, k) = std::cos(angle);
    a(1, k) = std::sin(angle);
  }
  return tagged(std::move(a), "planar", "n=" + std::to_string(n));
}

}  // namespace frameforge
