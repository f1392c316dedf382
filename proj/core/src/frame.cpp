// Copyright 2026 The frameforge Authors.
// SPDX-License-Identifier: Apache-2.0

#include "frameforge/frame.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <system_error>

#include "frameforge/error.hpp"

namespace frameforge {
namespace {

std::string format_double(double x) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::general, 17);
  return {buf, res.ptr};
}

double parse_double(std::string_view token, Index line) {
  double x = 0.0;
  const auto res = std::from_chars(token.data(), token.data() + token.size(), x);
  require(res.ec == std::errc{} && res.ptr == token.data() + token.size(), ErrorCode::kParse,
          "bad number '" + std::string(token) + "' on entry line " + std::to_string(line));
  return x;
}

std::string field_or_dash(const std::string& s) { return s.empty() ? "-" : s; }

}  // namespace

Frame::Frame(Matrix matrix, FrameTags tags) : matrix_(std::move(matrix)), tags_(std::move(tags)) {
  const Index m = matrix_.rows();
  const Index n = matrix_.cols();
  require(m >= 1 && m <= n, ErrorCode::kInvalidArgument,
          "frame needs 1 <= M <= N, got " + std::to_string(m) + "x" + std::to_string(n));
  require(matrix_.allFinite(), ErrorCode::kInvalidArgument, "frame has non-finite entries");
  for (Index j = 0; j < n; ++j) {
    require(matrix_.col(j).squaredNorm() > 0.0, ErrorCode::kInvalidArgument,
            "frame column " + std::to_string(j) + " is zero");
  }
  if (tags_.unit_norm) {
    require(columns_unit_norm(matrix_), ErrorCode::kInvalidArgument,
            tags_.family + " frame tagged unit norm but a column norm is off");
  }
  if (tags_.tight) {
    require(tightness_defect(matrix_) <= kTightTolerance, ErrorCode::kInvalidArgument,
            tags_.family + " frame tagged tight but rows are not orthogonal");
  }
}

Frame Frame::from_matrix(Matrix matrix, std::string family, std::string params) {
  FrameTags tags;
  tags.family = std::move(family);
  tags.params = std::move(params);
  tags.unit_norm = columns_unit_norm(matrix);
  tags.tight = matrix.rows() >= 1 && matrix.rows() <= matrix.cols() &&
               tightness_defect(matrix) <= kTightTolerance;
  tags.real = is_real(matrix);
  return Frame(std::move(matrix), std::move(tags));
}

bool columns_unit_norm(const Matrix& m, double tol) {
  for (Index j = 0; j < m.cols(); ++j) {
    if (std::abs(m.col(j).norm() - 1.0) > tol) return false;
  }
  return true;
}

double tightness_defect(const Matrix& m) {
  if (m.size() == 0) return 0.0;
  Matrix frame_op = m * m.adjoint();
  frame_op.diagonal().array() -= static_cast<double>(m.cols()) / static_cast<double>(m.rows());
  return frame_op.cwiseAbs().maxCoeff();
}

std::string format_real(double x) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return {buf, res.ptr};
}

bool is_real(const Matrix& m) { return m.size() == 0 || m.imag().cwiseAbs().maxCoeff() == 0.0; }

void write_frame(std::ostream& out, const Frame& frame) {
  const FrameTags& t = frame.tags();
  out << frame.rows() << ' ' << frame.cols() << ' ' << field_or_dash(t.family) << ' '
      << field_or_dash(t.params) << ' ' << (t.seed ? std::to_string(*t.seed) : "-") << '\n';
  const Matrix& a = frame.matrix();
  for (Index j = 0; j < a.cols(); ++j) {
    for (Index i = 0; i < a.rows(); ++i) {
      out << format_double(a(i, j).real()) << ' ' << format_double(a(i, j).imag()) << '\n';
    }
  }
}

Frame read_frame(std::istream& in) {
  std::string header;
  require(static_cast<bool>(std::getline(in, header)), ErrorCode::kParse, "missing frame header");
  std::istringstream hs(header);
  long long m = 0;
  long long n = 0;
  std::string family;
  std::string params;
  std::string seed;
  require(static_cast<bool>(hs >> m >> n >> family >> params >> seed), ErrorCode::kParse,
          "frame header must be 'M N family params seed'");
  require(m >= 1 && n >= 1, ErrorCode::kParse, "frame dimensions must be positive");
  Matrix a(m, n);
  std::string line;
  Index line_no = 0;
  for (Index j = 0; j < n; ++j) {
    for (Index i = 0; i < m; ++i) {
      ++line_no;
      require(static_cast<bool>(std::getline(in, line)), ErrorCode::kParse,
              "frame ends after " + std::to_string(line_no - 1) + " of " +
                  std::to_string(m * n) + " entries");
      const auto space = line.find(' ');
      require(space != std::string::npos, ErrorCode::kParse,
              "entry line " + std::to_string(line_no) + " must be 're im'");
      const std::string_view view(line);
      a(i, j) = {parse_double(view.substr(0, space), line_no),
                 parse_double(view.substr(space + 1), line_no)};
    }
  }
  Frame parsed = Frame::from_matrix(std::move(a), family == "-" ? "" : family,
                                    params == "-" ? "" : params);
  FrameTags tags = parsed.tags();
  if (seed != "-") {
    std::uint64_t s = 0;
    const auto res = std::from_chars(seed.data(), seed.data() + seed.size(), s);
    require(res.ec == std::errc{} && res.ptr == seed.data() + seed.size(), ErrorCode::kParse,
            "bad seed '" + seed + "'");
    tags.seed = s;
  }
  return Frame(parsed.matrix(), std::move(tags));
}

void save_frame(const std::filesystem::path& path, const Frame& frame) {
  std::ofstream out(path);
  require(static_cast<bool>(out), ErrorCode::kIo, "cannot open " + path.string() + " for writing");
  write_frame(out, frame);
  require(static_cast<bool>(out), ErrorCode::kIo, "write to " + path.string() + " failed");
}

Frame load_frame(const std::filesystem::path& path) {
  std::ifstream in(path);
  require(static_cast<bool>(in), ErrorCode::kIo, "cannot open " + path.string());
  return read_frame(in);
}

}  // namespace frameforge
