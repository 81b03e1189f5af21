#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "sharplab/simplex_lp.hpp"
#include "sharplab/vec.hpp"

namespace sharplab {

struct GeometryError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Exponent of an l_p norm. The infinite end is a tagged state rather than a
/// floating-point infinity, so conjugation (1/mu + 1/rho = 1) is exact at both
/// ends of the scale.
class LpExponent {
 public:
  static LpExponent finite(double v) {
    if (!(v >= 1.0) || std::isinf(v) || std::isnan(v)) {
      throw GeometryError("LpExponent: finite exponent must lie in [1, inf)");
    }
    return LpExponent(false, v);
  }
  static LpExponent inf() { return LpExponent(true, 0.0); }

  bool is_inf() const { return inf_; }
  double value() const {
    if (inf_) throw GeometryError("LpExponent: no finite value at the infinite end");
    return value_;
  }
  /// 1/mu, with 1/inf = 0 exactly.
  double inverse() const { return inf_ ? 0.0 : 1.0 / value_; }

  LpExponent conjugate() const {
    if (inf_) return finite(1.0);
    if (value_ == 1.0) return inf();
    return finite(value_ / (value_ - 1.0));
  }

  bool operator==(const LpExponent& o) const {
    return inf_ == o.inf_ && (inf_ || value_ == o.value_);
  }
  bool operator!=(const LpExponent& o) const { return !(*this == o); }

 private:
  LpExponent(bool is_infinite, double v) : inf_(is_infinite), value_(v) {}
  bool inf_;
  double value_;
};

inline double lp_norm(const Vec& x, const LpExponent& mu) {
  if (mu.is_inf()) return norm_inf(x);
  const double p = mu.value();
  if (p == 1.0) {
    double s = 0.0;
    for (double v : x) s += std::abs(v);
    return s;
  }
  if (p == 2.0) return norm2(x);
  const double mx = norm_inf(x);
  if (mx == 0.0) return 0.0;
  double s = 0.0;
  for (double v : x) s += std::pow(std::abs(v) / mx, p);
  return mx * std::pow(s, 1.0 / p);
}

struct LpBall {
  LpExponent exponent;
  int dim;
  double scale;  // the body is {x : lp_norm(x, exponent) <= scale}
};

/// {x : |(rows[i], x)| <= 1 for all i}; bounded iff rows span R^m.
struct HPolytope {
  std::vector<Vec> rows;
};

/// conv{ +/- vertices[i] }; full-dimensional iff vertices span R^m.
struct VPolytope {
  std::vector<Vec> vertices;
};

namespace detail {

inline int matrix_rank(std::vector<Vec> vs) {
  if (vs.empty()) return 0;
  const std::size_t cols = vs[0].size();
  double scale = 0.0;
  for (const auto& v : vs) scale = std::max(scale, norm_inf(v));
  if (scale == 0.0) return 0;
  const double tol = 1e-9 * scale;
  int rank = 0;
  std::size_t row = 0;
  for (std::size_t c = 0; c < cols && row < vs.size(); ++c) {
    std::size_t piv = row;
    for (std::size_t i = row + 1; i < vs.size(); ++i) {
      if (std::abs(vs[i][c]) > std::abs(vs[piv][c])) piv = i;
    }
    if (std::abs(vs[piv][c]) <= tol) continue;
    std::swap(vs[piv], vs[row]);
    for (std::size_t i = row + 1; i < vs.size(); ++i) {
      const double f = vs[i][c] / vs[row][c];
      for (std::size_t j = c; j < cols; ++j) vs[i][j] -= f * vs[row][j];
    }
    ++rank;
    ++row;
  }
  return rank;
}

inline void validate_generators(const std::vector<Vec>& vs, const char* what) {
  if (vs.empty()) throw GeometryError(std::string(what) + ": empty generator list");
  const std::size_t m = vs[0].size();
  if (m == 0) throw GeometryError(std::string(what) + ": zero-dimensional generators");
  for (const auto& v : vs) {
    if (v.size() != m) throw GeometryError(std::string(what) + ": inconsistent generator dimensions");
    for (double x : v) {
      if (std::isnan(x) || std::isinf(x)) throw GeometryError(std::string(what) + ": non-finite generator entry");
    }
  }
  if (matrix_rank(vs) != static_cast<int>(m)) {
    throw GeometryError(std::string(what) + ": generators do not span the space (degenerate body)");
  }
}

}  // namespace detail

/// Origin-symmetric convex body in one of three descriptions. Construction
/// validates full-dimensionality, so every instance is a genuine norm unit
/// ball and gauge/support values below are finite and positive away from 0.
class ConvexBody {
 public:
  static ConvexBody lp_ball(LpExponent mu, int dim, double scale = 1.0) {
    if (dim < 1) throw GeometryError("ConvexBody: dimension must be >= 1");
    if (!(scale > 0.0) || std::isinf(scale) || std::isnan(scale)) {
      throw GeometryError("ConvexBody: scale must be positive and finite");
    }
    return ConvexBody(LpBall{mu, dim, scale}, dim);
  }

  static ConvexBody hrep(std::vector<Vec> rows) {
    detail::validate_generators(rows, "hrep");
    const int dim = static_cast<int>(rows[0].size());
    return ConvexBody(HPolytope{std::move(rows)}, dim);
  }

  static ConvexBody vrep(std::vector<Vec> vertices) {
    detail::validate_generators(vertices, "vrep");
    const int dim = static_cast<int>(vertices[0].size());
    return ConvexBody(VPolytope{std::move(vertices)}, dim);
  }

  int dim() const { return dim_; }
  bool is_lp() const { return std::holds_alternative<LpBall>(data_); }
  bool is_hrep() const { return std::holds_alternative<HPolytope>(data_); }
  bool is_vrep() const { return std::holds_alternative<VPolytope>(data_); }

  const LpBall& lp() const { return std::get<LpBall>(data_); }
  const HPolytope& h() const { return std::get<HPolytope>(data_); }
  const VPolytope& v() const { return std::get<VPolytope>(data_); }

  const std::variant<LpBall, HPolytope, VPolytope>& data() const { return data_; }

 private:
  ConvexBody(std::variant<LpBall, HPolytope, VPolytope> d, int dim)
      : data_(std::move(d)), dim_(dim) {}
  std::variant<LpBall, HPolytope, VPolytope> data_;
  int dim_;
};

/// Polar body V* = {y : |(x, y)| <= 1 for all x in V}. Exact per class:
/// lp balls conjugate the exponent and invert the scale, and the two polytope
/// descriptions swap roles with the same generator list.
inline ConvexBody polar(const ConvexBody& V) {
  if (V.is_lp()) {
    const auto& b = V.lp();
    return ConvexBody::lp_ball(b.exponent.conjugate(), b.dim, 1.0 / b.scale);
  }
  if (V.is_hrep()) return ConvexBody::vrep(V.h().rows);
  return ConvexBody::hrep(V.v().vertices);
}

inline ConvexBody scale_body(const ConvexBody& V, double s) {
  if (!(s > 0.0) || std::isinf(s) || std::isnan(s)) {
    throw GeometryError("scale_body: scale must be positive and finite");
  }
  if (V.is_lp()) {
    const auto& b = V.lp();
    return ConvexBody::lp_ball(b.exponent, b.dim, b.scale * s);
  }
  if (V.is_hrep()) {
    auto rows = V.h().rows;
    for (auto& r : rows) r = scaled(std::move(r), 1.0 / s);
    return ConvexBody::hrep(std::move(rows));
  }
  auto verts = V.v().vertices;
  for (auto& v : verts) v = scaled(std::move(v), s);
  return ConvexBody::vrep(std::move(verts));
}

/// max_{t in V} |(t, y)|, the support value of the symmetric body in
/// direction y (equivalently the dual-gauge of y).
inline double support_max(const ConvexBody& V, const Vec& y) {
  require_same_dim(static_cast<std::size_t>(V.dim()), y.size());
  if (V.is_lp()) {
    const auto& b = V.lp();
    return b.scale * lp_norm(y, b.exponent.conjugate());
  }
  if (V.is_vrep()) {
    double best = 0.0;
    for (const auto& v : V.v().vertices) best = std::max(best, std::abs(dot(v, y)));
    return best;
  }
  return lp_support(V.h().rows, y).value;
}

/// Support value together with a boundary point of V attaining it.
inline LpSolution support_argmax(const ConvexBody& V, const Vec& y) {
  require_same_dim(static_cast<std::size_t>(V.dim()), y.size());
  if (V.is_vrep()) {
    const auto& verts = V.v().vertices;
    std::size_t best = 0;
    double bestval = dot(verts[0], y);
    for (std::size_t i = 1; i < verts.size(); ++i) {
      const double d = dot(verts[i], y);
      if (std::abs(d) > std::abs(bestval)) {
        best = i;
        bestval = d;
      }
    }
    Vec point = verts[best];
    if (bestval < 0.0) point = scaled(std::move(point), -1.0);
    return {std::abs(bestval), std::move(point)};
  }
  if (V.is_hrep()) return lp_support(V.h().rows, y);

  const auto& b = V.lp();
  if (norm_inf(y) == 0.0) return {0.0, axis_vector(b.dim, 0, b.scale)};
  Vec t(y.size(), 0.0);
  if (b.exponent.is_inf()) {
    for (std::size_t j = 0; j < y.size(); ++j) t[j] = b.scale * (y[j] < 0.0 ? -1.0 : 1.0);
  } else if (b.exponent.value() == 1.0) {
    std::size_t jstar = 0;
    for (std::size_t j = 1; j < y.size(); ++j) {
      if (std::abs(y[j]) > std::abs(y[jstar])) jstar = j;
    }
    t[jstar] = b.scale * (y[jstar] < 0.0 ? -1.0 : 1.0);
  } else {
    // Hoelder equality case: t_j proportional to sign(y_j) |y_j|^{rho-1}
    // with rho the conjugate exponent of the ball's own exponent.
    const double rho = b.exponent.conjugate().value();
    const double ny = lp_norm(y, b.exponent.conjugate());
    for (std::size_t j = 0; j < y.size(); ++j) {
      const double mag = std::pow(std::abs(y[j]) / ny, rho - 1.0);
      t[j] = b.scale * (y[j] < 0.0 ? -mag : mag);
    }
  }
  return {dot(t, y), std::move(t)};
}

/// Gauge (Minkowski functional) of V at x; identically support_max over the
/// polar body, which keeps the two operations consistent by construction.
inline double gauge(const ConvexBody& V, const Vec& x) {
  return support_max(polar(V), x);
}

inline bool contains(const ConvexBody& V, const Vec& x, double tol = 1e-9) {
  return gauge(V, x) <= 1.0 + tol;
}

inline bool approx_equal(const LpExponent& a, const LpExponent& b, double tol) {
  if (a.is_inf() != b.is_inf()) return false;
  return a.is_inf() || approx(a.value(), b.value(), tol);
}

inline bool approx_equal(const ConvexBody& a, const ConvexBody& b, double tol = 1e-12) {
  if (a.dim() != b.dim()) return false;
  if (a.is_lp() && b.is_lp()) {
    return approx_equal(a.lp().exponent, b.lp().exponent, tol) && approx(a.lp().scale, b.lp().scale, tol);
  }
  const std::vector<Vec>* va = a.is_hrep() ? &a.h().rows : (a.is_vrep() ? &a.v().vertices : nullptr);
  const std::vector<Vec>* vb = b.is_hrep() ? &b.h().rows : (b.is_vrep() ? &b.v().vertices : nullptr);
  if (va == nullptr || vb == nullptr) return false;
  if (a.is_hrep() != b.is_hrep()) return false;
  if (va->size() != vb->size()) return false;
  for (std::size_t i = 0; i < va->size(); ++i) {
    for (std::size_t j = 0; j < (*va)[i].size(); ++j) {
      if (!approx((*va)[i][j], (*vb)[i][j], tol)) return false;
    }
  }
  return true;
}

/// All integer points of body \cap Z^m, in lexicographic order. The axis
/// bounds come from support values, so the scan box is tight.
inline std::vector<std::vector<int>> lattice_points(const ConvexBody& body) {
  const int m = body.dim();
  std::vector<int> lo(m), hi(m);
  double cells = 1.0;
  for (int j = 0; j < m; ++j) {
    const double r = support_max(body, axis_vector(m, j));
    const int b = static_cast<int>(std::floor(r + 1e-9));
    lo[j] = -b;
    hi[j] = b;
    cells *= static_cast<double>(2 * b + 1);
  }
  if (cells > 2e6) throw GeometryError("lattice_points: scan box too large");

  std::vector<std::vector<int>> out;
  std::vector<int> k(lo);
  Vec kd(m);
  for (;;) {
    for (int j = 0; j < m; ++j) kd[j] = static_cast<double>(k[j]);
    if (gauge(body, kd) <= 1.0 + 1e-12) out.push_back(k);
    int axis = m - 1;
    while (axis >= 0) {
      if (++k[axis] <= hi[axis]) break;
      k[axis] = lo[axis];
      --axis;
    }
    if (axis < 0) break;
  }
  return out;
}

}  // namespace sharplab
