// Copyright 2026 The frameforge Authors.
// SPDX-License-Identifier: Apache-2.0

#include "frameforge/design.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <map>
#include <numeric>
#include <ostream>
#include <set>
#include <sstream>

#include "frameforge/error.hpp"
#include "frameforge/finite_field.hpp"

namespace frameforge {
namespace {

using Block = std::vector<int>;

// Bose construction on Z_{2m+1} x Z_3 using the idempotent commutative
// quasigroup x o y = (m+1)(x+y) mod (2m+1).
std::vector<Block> bose_triples(int v) {
  const int m = (v - 3) / 6;
  const int order = 2 * m + 1;
  auto point = [&](int x, int level) { return x + (level % 3) * order; };
  auto op = [&](int x, int y) { return (m + 1) * (x + y) % order; };
  std::vector<Block> blocks;
  for (int x = 0; x < order; ++x) blocks.push_back({point(x, 0), point(x, 1), point(x, 2)});
  for (int level = 0; level < 3; ++level) {
    for (int x = 0; x < order; ++x) {
      for (int y = x + 1; y < order; ++y) {
        blocks.push_back({point(x, level), point(y, level), point(op(x, y), level + 1)});
      }
    }
  }
  return blocks;
}

// Skolem construction on Z_{2m} x Z_3 plus a point at infinity, using the
// half-idempotent commutative quasigroup obtained by relabeling the addition
// table of Z_{2m}: 2i -> i and 2i+1 -> m+i.
std::vector<Block> skolem_triples(int v) {
  const int m = (v - 1) / 6;
  const int order = 2 * m;
  const int infinity = 6 * m;
  auto point = [&](int x, int level) { return x + (level % 3) * order; };
  auto op = [&](int x, int y) {
    const int s = (x + y) % order;
    return s % 2 == 0 ? s / 2 : m + s / 2;
  };
  std::vector<Block> blocks;
  for (int x = 0; x < m; ++x) blocks.push_back({point(x, 0), point(x, 1), point(x, 2)});
  for (int level = 0; level < 3; ++level) {
    for (int x = 0; x < m; ++x) {
      blocks.push_back({infinity, point(m + x, level), point(x, level + 1)});
    }
    for (int x = 0; x < order; ++x) {
      for (int y = x + 1; y < order; ++y) {
        blocks.push_back({point(x, level), point(y, level), point(op(x, y), level + 1)});
      }
    }
  }
  return blocks;
}

using Vec = std::vector<FiniteField::Code>;

int encode_point(const Vec& coords, int q) {
  int code = 0;
  for (std::size_t i = coords.size(); i-- > 0;) code = code * q + static_cast<int>(coords[i]);
  return code;
}

Vec decode_point(int code, int q, int dim) {
  Vec coords(static_cast<std::size_t>(dim));
  for (auto& c : coords) {
    c = static_cast<FiniteField::Code>(code % q);
    code /= q;
  }
  return coords;
}

// Lines {a + t d : t in GF(q)} of AG(n, q); points coded base q.
std::vector<Block> affine_lines(const FiniteField& f, int n) {
  const int q = static_cast<int>(f.order());
  int v = 1;
  for (int i = 0; i < n; ++i) v *= q;
  std::set<Block> lines;
  for (int dcode = 1; dcode < v; ++dcode) {
    const Vec d = decode_point(dcode, q, n);
    const auto lead = std::find_if(d.begin(), d.end(), [](auto c) { return c != 0; });
    if (*lead != 1) continue;  // one representative per direction
    for (int acode = 0; acode < v; ++acode) {
      const Vec a = decode_point(acode, q, n);
      Block line;
      for (FiniteField::Code t = 0; t < f.order(); ++t) {
        Vec p(a.size());
        for (std::size_t i = 0; i < a.size(); ++i) p[i] = f.add(a[i], f.mul(t, d[i]));
        line.push_back(encode_point(p, q));
      }
      std::sort(line.begin(), line.end());
      lines.insert(line);
    }
  }
  return {lines.begin(), lines.end()};
}

// Lines of PG(n, q). Points are the nonzero vectors of GF(q)^{n+1} whose
// first nonzero coordinate is 1, numbered in increasing code order.
std::vector<Block> projective_lines(const FiniteField& f, int n) {
  const int q = static_cast<int>(f.order());
  const int dim = n + 1;
  int total = 1;
  for (int i = 0; i < dim; ++i) total *= q;
  std::vector<Vec> points;
  std::map<Vec, int> index;
  for (int code = 1; code < total; ++code) {
    Vec p = decode_point(code, q, dim);
    const auto lead = std::find_if(p.begin(), p.end(), [](auto c) { return c != 0; });
    if (*lead != 1) continue;
    index.emplace(p, static_cast<int>(points.size()));
    points.push_back(std::move(p));
  }
  auto normalize = [&](Vec p) {
    const auto lead = std::find_if(p.begin(), p.end(), [](auto c) { return c != 0; });
    const FiniteField::Code scale = f.inv(*lead);
    for (auto& c : p) c = f.mul(c, scale);
    return p;
  };
  std::set<Block> lines;
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      Block line{static_cast<int>(i)};
      for (FiniteField::Code t = 0; t < f.order(); ++t) {
        Vec p(static_cast<std::size_t>(dim));
        for (int c = 0; c < dim; ++c) {
          p[static_cast<std::size_t>(c)] = f.add(points[j][static_cast<std::size_t>(c)],
                                                 f.mul(t, points[i][static_cast<std::size_t>(c)]));
        }
        line.push_back(index.at(normalize(p)));
      }
      std::sort(line.begin(), line.end());
      lines.insert(line);
    }
  }
  return {lines.begin(), lines.end()};
}

DesignIncidence from_blocks(std::vector<Block> blocks, int v) {
  for (auto& block : blocks) std::sort(block.begin(), block.end());
  std::sort(blocks.begin(), blocks.end());
  Eigen::MatrixXi incidence = Eigen::MatrixXi::Zero(static_cast<Index>(blocks.size()), v);
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    for (int p : blocks[b]) incidence(static_cast<Index>(b), p) = 1;
  }
  return design_from_incidence(incidence);
}

void inadmissible(const std::string& what) { fail(ErrorCode::kInadmissibleParameters, what); }

long long isqrt_exact(long long x) {
  if (x < 0) return -1;
  auto s = static_cast<long long>(std::llround(std::sqrt(static_cast<double>(x))));
  while (s * s > x) --s;
  while ((s + 1) * (s + 1) <= x) ++s;
  return s * s == x ? s : -1;
}

struct KnownSystem {
  int k;
  int v;
  SteinerExistence status;
};
constexpr KnownSystem kExceptions[] = {
    {6, 16, SteinerExistence::kNonexistent}, {6, 21, SteinerExistence::kNonexistent},
    {6, 36, SteinerExistence::kNonexistent}, {6, 46, SteinerExistence::kNonexistent},
    {7, 43, SteinerExistence::kNonexistent}, {10, 46, SteinerExistence::kUnknown},
    {14, 92, SteinerExistence::kUnknown},
};

}  // namespace

std::string_view to_string(SteinerFamily family) noexcept {
  switch (family) {
    case SteinerFamily::kTwoBlocks: return "2-blocks";
    case SteinerFamily::kTriples: return "triples";
    case SteinerFamily::kAffine: return "affine";
    case SteinerFamily::kProjective: return "projective";
  }
  return "unknown";
}

std::optional<SteinerFamily> parse_steiner_family(std::string_view text) noexcept {
  if (text == "2-blocks" || text == "pairs") return SteinerFamily::kTwoBlocks;
  if (text == "triples" || text == "3-blocks") return SteinerFamily::kTriples;
  if (text == "affine") return SteinerFamily::kAffine;
  if (text == "projective") return SteinerFamily::kProjective;
  return std::nullopt;
}

DesignIncidence steiner_system(const SteinerParams& params) {
  switch (params.family) {
    case SteinerFamily::kTwoBlocks: {
      if (params.v < 2) inadmissible("2-blocks need v >= 2, got v=" + std::to_string(params.v));
      std::vector<Block> blocks;
      for (int i = 0; i < params.v; ++i) {
        for (int j = i + 1; j < params.v; ++j) blocks.push_back({i, j});
      }
      return from_blocks(std::move(blocks), params.v);
    }
    case SteinerFamily::kTriples: {
      const int v = params.v;
      if (v < 3 || (v % 6 != 1 && v % 6 != 3)) {
        inadmissible("triple systems need v = 1 or 3 mod 6 with v >= 3, got v=" +
                     std::to_string(v) + " (v mod 6 = " + std::to_string(v % 6) + ")");
      }
      return from_blocks(v % 6 == 3 ? bose_triples(v) : skolem_triples(v), v);
    }
    case SteinerFamily::kAffine:
    case SteinerFamily::kProjective: {
      if (!prime_power(static_cast<std::uint64_t>(std::max(params.q, 0)))) {
        inadmissible("q must be a prime power, got q=" + std::to_string(params.q));
      }
      if (params.n < 2) inadmissible("geometry dimension must be >= 2, got n=" + std::to_string(params.n));
      const FiniteField field = FiniteField::of_order(static_cast<std::uint64_t>(params.q));
      if (params.family == SteinerFamily::kAffine) {
        int v = 1;
        for (int i = 0; i < params.n; ++i) v *= params.q;
        return from_blocks(affine_lines(field, params.n), v);
      }
      int v = 0;
      int power = 1;
      for (int i = 0; i <= params.n; ++i) {
        v += power;
        power *= params.q;
      }
      return from_blocks(projective_lines(field, params.n), v);
    }
  }
  inadmissible("unknown family");
  return {};
}

DesignIncidence design_from_incidence(const Eigen::MatrixXi& incidence) {
  DesignIncidence d;
  d.incidence = incidence;
  d.b = static_cast<int>(incidence.rows());
  d.v = static_cast<int>(incidence.cols());
  if (d.b > 0) d.k = incidence.row(0).sum();
  if (d.v > 0) d.r = incidence.col(0).sum();
  if (d.v > 1) d.lambda_ = incidence.col(0).dot(incidence.col(1));
  return d;
}

std::vector<DesignViolation> verify_design(const DesignIncidence& d) {
  std::vector<DesignViolation> out;
  const Eigen::MatrixXi& a = d.incidence;
  if (a.rows() != d.b || a.cols() != d.v) {
    out.push_back({"dimension", {}, static_cast<long long>(d.b) * d.v,
                   static_cast<long long>(a.rows()) * a.cols()});
    return out;
  }
  for (Index i = 0; i < a.rows(); ++i) {
    const int s = a.row(i).sum();
    if (s != d.k) out.push_back({"row_sum", {i}, d.k, s});
  }
  for (Index j = 0; j < a.cols(); ++j) {
    const int s = a.col(j).sum();
    if (s != d.r) out.push_back({"column_sum", {j}, d.r, s});
  }
  for (Index i = 0; i < a.cols(); ++i) {
    for (Index j = i + 1; j < a.cols(); ++j) {
      const int s = a.col(i).dot(a.col(j));
      if (s != d.lambda_) out.push_back({"pair", {i, j}, d.lambda_, s});
    }
  }
  // b k (k-1) = lambda v (v-1) and r (k-1) = lambda (v-1).
  const long long bk = static_cast<long long>(d.b) * d.k * (d.k - 1);
  const long long vv = static_cast<long long>(d.lambda_) * d.v * (d.v - 1);
  if (bk != vv) out.push_back({"dimension", {}, vv, bk});
  const long long rk = static_cast<long long>(d.r) * (d.k - 1);
  const long long lv = static_cast<long long>(d.lambda_) * (d.v - 1);
  if (rk != lv) out.push_back({"dimension", {}, lv, rk});
  return out;
}

void write_design(std::ostream& out, const DesignIncidence& d) {
  out << d.v << ' ' << d.b << ' ' << d.r << ' ' << d.k << ' ' << d.lambda_ << '\n';
  for (Index i = 0; i < d.incidence.rows(); ++i) {
    for (Index j = 0; j < d.incidence.cols(); ++j) out << (d.incidence(i, j) ? '1' : '0');
    out << '\n';
  }
}

DesignIncidence read_design(std::istream& in) {
  DesignIncidence d;
  std::string header;
  require(static_cast<bool>(std::getline(in, header)), ErrorCode::kParse, "missing design header");
  std::istringstream hs(header);
  require(static_cast<bool>(hs >> d.v >> d.b >> d.r >> d.k >> d.lambda_), ErrorCode::kParse,
          "design header must be 'v b r k lambda'");
  require(d.v >= 0 && d.b >= 0, ErrorCode::kParse, "negative design size");
  d.incidence = Eigen::MatrixXi::Zero(d.b, d.v);
  for (int i = 0; i < d.b; ++i) {
    std::string line;
    require(static_cast<bool>(std::getline(in, line)), ErrorCode::kParse,
            "design has fewer than b rows");
    require(line.size() == static_cast<std::size_t>(d.v), ErrorCode::kParse,
            "design row " + std::to_string(i) + " does not have v characters");
    for (int j = 0; j < d.v; ++j) {
      const char c = line[static_cast<std::size_t>(j)];
      require(c == '0' || c == '1', ErrorCode::kParse, "design rows use only 0 and 1");
      d.incidence(i, j) = c - '0';
    }
  }
  return d;
}

Rational make_rational(long long num, long long den) {
  require(den != 0, ErrorCode::kInvalidArgument, "zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const long long g = std::gcd(num, den);
  return {num / (g == 0 ? 1 : g), den / (g == 0 ? 1 : g)};
}

std::string Rational::str() const {
  return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
}

std::string_view to_string(SteinerExistence existence) noexcept {
  switch (existence) {
    case SteinerExistence::kNotApplicable: return "inadmissible";
    case SteinerExistence::kUnlisted: return "admissible";
    case SteinerExistence::kNonexistent: return "admissible but design nonexistent";
    case SteinerExistence::kUnknown: return "admissible, existence unknown";
  }
  return "unknown";
}

SteinerParameterSolution steiner_parameter_solver(long long m, long long n) {
  require(m >= 1 && n > m, ErrorCode::kInvalidArgument,
          "need N > M >= 1, got M=" + std::to_string(m) + " N=" + std::to_string(n));
  SteinerParameterSolution s;
  s.b = m;
  // r = 1/alpha with alpha^2 = (N-M)/(M(N-1)).
  s.r_squared = make_rational(m * (n - 1), n - m);
  const long long rn = isqrt_exact(s.r_squared.num);
  const long long rd = isqrt_exact(s.r_squared.den);
  if (rn < 0 || rd < 0) {
    s.note = "r^2 = " + s.r_squared.str() + " is not a rational square";
    return s;
  }
  const Rational r = make_rational(rn, rd);
  s.r = r;
  // v = N / (r + 1), k = N r / (M (r + 1)).
  s.v = make_rational(n * r.den, r.num + r.den);
  s.k = make_rational(n * r.num, m * (r.num + r.den));
  s.admissible = r.is_integer() && s.v->is_integer() && s.k->is_integer() && s.k->num >= 2;
  if (!s.admissible) {
    s.note = "v=" + s.v->str() + " r=" + r.str() + " k=" + s.k->str();
    return s;
  }
  s.existence = SteinerExistence::kUnlisted;
  for (const auto& e : kExceptions) {
    if (e.k == s.k->num && e.v == s.v->num) s.existence = e.status;
  }
  s.note = std::string(to_string(s.existence));
  return s;
}

}  // namespace frameforge
