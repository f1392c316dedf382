// Copyright 2026 The frameforge Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <span>
#include <string_view>

#include "frameforge/design.hpp"
#include "frameforge/frame.hpp"
#include "frameforge/hadamard.hpp"
#include "frameforge/rng.hpp"

namespace frameforge {

// Rows of the N-point DFT with entries w^{mn}, w = e^{-2 pi i / n}.
// Rows are treated as a set and emitted in ascending order; with
// `normalize` the columns are scaled to unit norm. Throws EmptyRowSet.
Frame build_harmonic(Index n, IndexList rows, bool normalize);

// m x N Vandermonde matrix with rows 1, a, ..., a^{m-1}. Columns are left
// unnormalized.
Frame build_vandermonde(std::span<const Complex> bases, Index m);
// N equally spaced points e^{2 pi i n / N} on the unit circle.
std::vector<Complex> unit_circle_bases(Index n);

// Steiner ETF of a (2, k, v) design. Point j contributes the r + 1 columns
// j (r + 1) + c of a Hadamard matrix of size r + 1; the blocks through j,
// top to bottom, receive the Hadamard rows listed in `row_choice`
// (default: every row but the all-ones row 0, in order). Scale 1/sqrt(r).
// Throws HadamardUnavailable and InvalidArgument for a bad row choice.
Frame build_steiner_etf(const DesignIncidence& design, HadamardKind kind,
                        IndexList row_choice = {});

// (p+1)/2 x (p+1) ETF: the quadratic-residue rows (0 included) of the
// p-point DFT weighted by sqrt(1/p) on row 0 and sqrt(2/p) elsewhere, then
// the first identity column appended. Throws NotPrime, BadPrime.
Frame build_paley_etf(long long p);

// Real frame with the same Gram matrix, obtained from a Cholesky factor of
// its leading M x M block. Throws InvalidArgument when the Gram is not
// real and RankDeficient when the leading block is singular.
Frame real_form(const Frame& frame);

// The M x (M+1) regular simplex, as a real unit-norm ETF.
Frame build_simplex(Index m);

enum class GaborShift {
  kModulateThenTranslate,  // f(t - x) e^{2 pi i y (t - x) / m}
  kTranslateThenModulate,  // f(t - x) e^{2 pi i y t / m}
};
// Alltop seed f(t) = e^{2 pi i t^3 / m} / sqrt(m); column x m + y.
Frame build_alltop_gabor(Index m, GaborShift shift = GaborShift::kModulateThenTranslate);
// Seed with phases theta_t drawn uniform in [0, 1).
Frame build_steinhaus_gabor(Index m, Rng& rng,
                            GaborShift shift = GaborShift::kModulateThenTranslate);

// Columns h_ab(t) = e^{pi i a t (t - m) / m} e^{2 pi i b t / m} / sqrt(m),
// column a m + b. Throws NotPrime.
Frame build_chirp(Index m);

// Real 2|rows| x n frame: for each listed frequency a cosine row followed
// by a sine row, scaled by sqrt(2/M). Throws EmptyRowSet,
// ZeroIndexIncluded, InvalidArgument (n < 2M or a row out of range).
Frame build_spherical_2design(Index n, IndexList rows);

// 2^m x 2^{(t+1) m} frame over GF(2^m): entry (x, a) is
// (-1)^{Tr[a_0 x + sum_i a_i x^{2^i + 1}]} / sqrt(2^m), where the column
// index is sum_i a_i 2^{m i}.
Frame build_code_frame(int m, int t);

Frame build_normalized_gaussian(Index m, Index n, Rng& rng);
// Each DFT row kept independently with probability m/n (redrawn if none
// survive), columns normalized. The realized row count is rows().
Frame build_random_harmonic(Index m, Index n, Rng& rng);
// Entries +-1/sqrt(m), independent fair signs.
Frame build_random_sign(Index m, Index n, Rng& rng);

Frame build_identity(Index m);
// [I F] with F the unitary m-point DFT.
Frame build_identity_plus_dft(Index m);
// n unit vectors in the plane at angles pi k / n.
Frame build_planar(Index n);

}  // namespace frameforge
