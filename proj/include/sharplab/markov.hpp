#pragma once

#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "sharplab/bernstein.hpp"
#include "sharplab/poly.hpp"
#include "sharplab/report.hpp"
#include "sharplab/rng.hpp"
#include "sharplab/sharp_constant.hpp"

namespace sharplab {

struct BodySupEstimate {
  double value = 0.0;
  Vec argmax;
};

/// Sup of |P| over the body V: bounding-box grid filtered by the gauge, plus
/// seeded boundary samples, plus per-coordinate golden-section polish with
/// radial clamping back into V. Always a lower bound on the true sup.
/// V-rep bodies cost one LP per gauge test, so keep the resolution modest
/// for those.
inline BodySupEstimate sup_norm_on_body(const MultiPolynomial& P, const ConvexBody& V,
                                        int resolution) {
  if (resolution < 2) throw std::invalid_argument("sup_norm_on_body: resolution must be >= 2");
  const int m = V.dim();
  require_same_dim(static_cast<std::size_t>(P.dim()), static_cast<std::size_t>(m));

  Vec radius(static_cast<std::size_t>(m));
  for (int j = 0; j < m; ++j) radius[static_cast<std::size_t>(j)] = support_max(V, axis_vector(m, j));

  double best = -1.0;
  Vec best_x(static_cast<std::size_t>(m), 0.0);
  auto consider = [&](const Vec& x) {
    const double v = std::abs(eval_poly(P, x));
    if (v > best) {
      best = v;
      best_x = x;
    }
  };

  std::vector<int> idx(static_cast<std::size_t>(m), 0);
  Vec x(static_cast<std::size_t>(m));
  for (;;) {
    for (int j = 0; j < m; ++j) {
      const double r = radius[static_cast<std::size_t>(j)];
      x[static_cast<std::size_t>(j)] = -r + 2.0 * r * idx[static_cast<std::size_t>(j)] / (resolution - 1);
    }
    if (gauge(V, x) <= 1.0 + 1e-12) consider(x);
    int axis = m - 1;
    while (axis >= 0) {
      if (++idx[static_cast<std::size_t>(axis)] < resolution) break;
      idx[static_cast<std::size_t>(axis)] = 0;
      --axis;
    }
    if (axis < 0) break;
  }

  Rng rng(0xB0D7A1E5C3F29D48ull);  // fixed stream: estimate depends only on inputs
  const int boundary_samples = 4096;
  for (int i = 0; i < boundary_samples; ++i) {
    Vec t(static_cast<std::size_t>(m));
    for (auto& c : t) c = rng.normal();
    const double g = gauge(V, t);
    if (g <= 1e-12) continue;
    consider(scaled(std::move(t), 1.0 / g));
  }

  auto clamped_value = [&](Vec y) {
    const double g = gauge(V, y);
    if (g > 1.0) y = scaled(std::move(y), 1.0 / g);
    return std::abs(eval_poly(P, y));
  };
  for (int sweep = 0; sweep < 3; ++sweep) {
    for (int j = 0; j < m; ++j) {
      const double h = 2.0 * radius[static_cast<std::size_t>(j)] / resolution;
      auto line = [&](double xj) {
        Vec y = best_x;
        y[static_cast<std::size_t>(j)] = xj;
        return clamped_value(std::move(y));
      };
      const double center = best_x[static_cast<std::size_t>(j)];
      const auto [xj, v] = detail::golden_max(line, center - h, center + h);
      if (v > best) {
        best = v;
        best_x[static_cast<std::size_t>(j)] = xj;
        const double g = gauge(V, best_x);
        if (g > 1.0) best_x = scaled(std::move(best_x), 1.0 / g);
      }
    }
  }
  return {best, best_x};
}

struct MarkovOptions {
  int resolution = 64;
  /// Slack on ratio <= 1; negative means automatic (10/resolution for grid
  /// sup norms, 1e-6 when known_sup supplies the exact norm).
  double allowance = -1.0;
  /// Exact sup norm over the body, when the caller knows it (e.g. |C| for a
  /// ridge Chebyshev instance).
  std::optional<double> known_sup;
  /// Directions for the directional-derivative check; axes plus two diagonals
  /// when empty.
  std::vector<Vec> directions;
};

namespace detail {

inline std::vector<Vec> default_directions(int m) {
  std::vector<Vec> dirs;
  for (int j = 0; j < m; ++j) dirs.push_back(axis_vector(m, j));
  dirs.emplace_back(static_cast<std::size_t>(m), 1.0);
  Vec alt(static_cast<std::size_t>(m));
  for (int j = 0; j < m; ++j) alt[static_cast<std::size_t>(j)] = (j % 2 == 0) ? 1.0 : -1.0;
  dirs.push_back(std::move(alt));
  return dirs;
}

}  // namespace detail

/// Degree-squared gradient bounds for an algebraic polynomial on V:
///   "3.1"  |(grad P(x), y)| <= gauge_V(y) n^2 sup_V |P| per direction y,
///   "3.3"  gauge-norm of grad P(x) w.r.t. K <= M(K, V*) n^2 sup_V |P|,
///   "3.2"  for Euclidean K, additionally M(K, V*) must agree with 2/w(V).
/// Trial points must lie in V.
inline VerificationReport markov_check(const MultiPolynomial& P, const ConvexBody& K,
                                       const ConvexBody& V, const std::vector<Vec>& points,
                                       MarkovOptions opts = {}) {
  if (K.dim() != V.dim() || P.dim() != V.dim()) {
    throw std::invalid_argument("markov_check: dimension mismatch");
  }
  const int n = P.degree();
  const double n2 = static_cast<double>(n) * static_cast<double>(n);
  const double M = sharp_constant(K, polar(V)).value;
  const double sup = opts.known_sup ? *opts.known_sup : sup_norm_on_body(P, V, opts.resolution).value;
  const double allowance =
      opts.allowance >= 0.0 ? opts.allowance : (opts.known_sup ? 1e-6 : 10.0 / opts.resolution);
  const std::vector<Vec> dirs =
      opts.directions.empty() ? detail::default_directions(V.dim()) : opts.directions;

  VerificationReport report;
  report.campaign = "markov";

  const bool euclidean_K =
      K.is_lp() && !K.lp().exponent.is_inf() && K.lp().exponent.value() == 2.0 && K.lp().scale == 1.0;
  if (euclidean_K) {
    const WidthDiameter wd = width_diameter(V);
    const double lhs = M * n2 * sup;
    const double alt = (2.0 / wd.width) * n2 * sup;
    report.add(make_entry(0, "", "3.2", std::abs(lhs - alt), 1e-9 * std::max(1.0, std::abs(lhs)),
                          Vec{}, 0.0));
  }

  const std::string instance = n == 0 ? "vacuous: degree 0" : "";
  int trial = 0;
  for (const auto& x : points) {
    if (gauge(V, x) > 1.0 + 1e-6) {
      throw std::invalid_argument("markov_check: trial point outside V");
    }
    const CVec grad = grad_poly(P, x);

    double worst_lhs = 0.0, worst_rhs = -1.0;
    for (const auto& y : dirs) {
      const double lhs = std::abs(cdot(grad, y));
      const double rhs = gauge(V, y) * n2 * sup;
      const bool worse = worst_rhs < 0.0 ||
                         (rhs > 0.0 ? lhs / rhs : lhs) > (worst_rhs > 0.0 ? worst_lhs / worst_rhs : worst_lhs);
      if (worse) {
        worst_lhs = lhs;
        worst_rhs = rhs;
      }
    }
    report.add(make_entry(trial, instance, "3.1", worst_lhs, worst_rhs, x, allowance));

    const double gn = gradient_norm_complex(grad, K);
    report.add(make_entry(trial, instance, "3.3", gn, M * n2 * sup, x, allowance));
    ++trial;
  }
  report.finalize(static_cast<int>(points.size()));
  return report;
}

/// Body with generators closed under coordinate sign flips, the symmetry that
/// makes squared-coordinate substitution well defined. lp balls always
/// qualify; polytopes are checked generator by generator.
class WeightedBody {
 public:
  static WeightedBody make(ConvexBody base) {
    if (!base.is_lp()) {
      const std::vector<Vec>& gens = base.is_hrep() ? base.h().rows : base.v().vertices;
      const int m = base.dim();
      const std::size_t patterns = static_cast<std::size_t>(1) << m;
      for (const auto& g : gens) {
        for (std::size_t mask = 1; mask < patterns; ++mask) {
          Vec flipped = g;
          for (int j = 0; j < m; ++j) {
            if (mask & (static_cast<std::size_t>(1) << j)) flipped[static_cast<std::size_t>(j)] = -flipped[static_cast<std::size_t>(j)];
          }
          bool found = false;
          for (const auto& h : gens) {
            bool eq_plus = true, eq_minus = true;
            for (std::size_t j = 0; j < flipped.size(); ++j) {
              eq_plus = eq_plus && std::abs(flipped[j] - h[j]) <= 1e-9;
              eq_minus = eq_minus && std::abs(flipped[j] + h[j]) <= 1e-9;
            }
            if (eq_plus || eq_minus) {
              found = true;
              break;
            }
          }
          if (!found) {
            throw GeometryError("WeightedBody: base body is not coordinate-symmetric");
          }
        }
      }
    }
    return WeightedBody(std::move(base));
  }

  const ConvexBody& base() const { return base_; }
  int dim() const { return base_.dim(); }

 private:
  explicit WeightedBody(ConvexBody b) : base_(std::move(b)) {}
  ConvexBody base_;
};

/// Membership in the squared-coordinate image C of the base body: u >= 0 and
/// (sqrt(u_1), ..., sqrt(u_m)) in base.
inline bool weighted_body_contains(const WeightedBody& W, const Vec& u, double tol = 1e-9) {
  Vec root(u.size());
  for (std::size_t j = 0; j < u.size(); ++j) {
    if (u[j] < -tol) return false;
    root[j] = std::sqrt(std::max(0.0, u[j]));
  }
  return gauge(W.base(), root) <= 1.0 + tol;
}

/// Even Chebyshev profile in one coordinate of u: C * T_{2n}(a_k sqrt(u_k)),
/// which is a genuine polynomial of degree n in u because T_{2n} is even.
inline MultiPolynomial axis_cheb_squared(int n, double a_k, int m, int axis, Cplx C = 1.0) {
  if (n < 0) throw std::invalid_argument("axis_cheb_squared: negative degree");
  if (2 * n > kRidgeExpansionCap * 2) {
    throw std::invalid_argument("axis_cheb_squared: degree too large for exact expansion");
  }
  const auto coeffs = chebyshev(2 * n);
  MultiPolynomial::TermMap terms;
  for (int j = 0; j <= n; ++j) {
    const double c = coeffs[static_cast<std::size_t>(2 * j)];
    if (c == 0.0) continue;
    std::vector<int> alpha(static_cast<std::size_t>(m), 0);
    alpha[static_cast<std::size_t>(axis)] = j;
    terms[std::move(alpha)] += C * c * detail::int_pow(a_k, 2 * j);
  }
  return MultiPolynomial::make(m, std::move(terms));
}

namespace detail {
inline bool is_axis_vector(const Vec& v, int* axis_out) {
  int axis = -1;
  for (std::size_t j = 0; j < v.size(); ++j) {
    if (std::abs(v[j]) > 1e-9) {
      if (axis >= 0) return false;
      axis = static_cast<int>(j);
    }
  }
  if (axis < 0) return false;
  *axis_out = axis;
  return true;
}
}  // namespace detail

/// Weighted degree-squared bound on the squared-coordinate body C of W:
///   "3.7"  gauge-norm_K of the weighted gradient of Q at u
///            <= 2 M(K, V*) n^2 sup_C |Q|,
/// with sup_C |Q| computed as sup_V |Q(x^2)| through the lift. When the
/// maximizer of M(K, V*) sits on a coordinate axis, the extremal instance
/// C T_{2n}(a_k sqrt(u_k)) at u0 = a_k^{-2} e_k is checked for equality
/// ("3.7.sharp"); otherwise that entry records a skip note.
inline VerificationReport weighted_markov_check(const MultiPolynomial& Q, const ConvexBody& K,
                                                const WeightedBody& W, const std::vector<Vec>& points,
                                                MarkovOptions opts = {}) {
  if (K.dim() != W.dim() || Q.dim() != W.dim()) {
    throw std::invalid_argument("weighted_markov_check: dimension mismatch");
  }
  const ConvexBody& V = W.base();
  const int n = Q.degree();
  const double n2 = static_cast<double>(n) * static_cast<double>(n);
  const WitnessedConstant wc = sharp_constant(K, polar(V));
  const double M = wc.value;
  const MultiPolynomial P = lift_square(Q);
  const double sup = opts.known_sup ? *opts.known_sup : sup_norm_on_body(P, V, opts.resolution).value;
  const double allowance =
      opts.allowance >= 0.0 ? opts.allowance : (opts.known_sup ? 1e-6 : 10.0 / opts.resolution);

  VerificationReport report;
  report.campaign = "weighted-markov";
  const std::string instance = n == 0 ? "vacuous: degree 0" : "";
  int trial = 0;
  for (const auto& u : points) {
    if (!weighted_body_contains(W, u, 1e-6)) {
      throw std::invalid_argument("weighted_markov_check: trial point outside the weighted body");
    }
    const CVec wg = weighted_gradient(Q, u);
    const double lhs = gradient_norm_complex(wg, K);
    report.add(make_entry(trial, instance, "3.7", lhs, 2.0 * M * n2 * sup, u, allowance));
    ++trial;
  }

  int axis = -1;
  if (detail::is_axis_vector(wc.witness_a, &axis) && n >= 1) {
    const double ak = wc.witness_a[static_cast<std::size_t>(axis)];
    const MultiPolynomial Q0 = axis_cheb_squared(n, ak, W.dim(), axis);
    const Vec u0 = axis_vector(W.dim(), axis, 1.0 / (ak * ak));
    const double lhs0 = gradient_norm_complex(weighted_gradient(Q0, u0), K);
    const double rhs0 = 2.0 * M * n2 * 1.0;  // sup of |T_{2n}| on the profile is 1
    report.add(make_equality_entry(trial, "extremal axis-Chebyshev", "3.7.sharp", lhs0, rhs0, u0, 1e-6));
  } else {
    ReportEntry note;
    note.trial = trial;
    note.instance = "skipped: maximizer of M(K, V*) not on a coordinate axis";
    note.inequality = "3.7.sharp";
    note.pass = true;
    report.add(std::move(note));
  }
  report.finalize(static_cast<int>(points.size()));
  return report;
}

struct LpDualConstant {
  double value = 0.0;
  Vec witness;
};

/// M(V_mu, polar(V_lambda)) in closed form: m^{1/mu + 1/lambda - 1} when
/// 1/mu + 1/lambda > 1, otherwise 1. The witness is the maximizer on the
/// boundary of polar(V_lambda): diagonal in the power branch, coordinate
/// vector otherwise.
inline LpDualConstant lp_dual_sharp_constant(const LpExponent& mu, const LpExponent& lambda, int m) {
  const double s = mu.inverse() + lambda.inverse();
  if (s > 1.0) {
    return {std::pow(static_cast<double>(m), s - 1.0),
            Vec(static_cast<std::size_t>(m), std::pow(static_cast<double>(m), lambda.inverse() - 1.0))};
  }
  return {1.0, axis_vector(m, 0)};
}

struct NonConvexityWitness {
  Vec u;
  Vec v;
  Vec midpoint;
  double midpoint_gauge = 0.0;  // gauge of sqrt(midpoint) in the base body, > 1
};

/// For the l1 base ball the squared-coordinate body is not convex: the first
/// two coordinate unit vectors lie in it but their midpoint does not.
inline NonConvexityWitness weighted_body_nonconvexity(int m) {
  if (m < 2) throw std::invalid_argument("weighted_body_nonconvexity: need dimension >= 2");
  NonConvexityWitness w;
  w.u = axis_vector(m, 0);
  w.v = axis_vector(m, 1);
  w.midpoint = Vec(static_cast<std::size_t>(m), 0.0);
  w.midpoint[0] = 0.5;
  w.midpoint[1] = 0.5;
  Vec root(w.midpoint.size(), 0.0);
  for (std::size_t j = 0; j < root.size(); ++j) root[j] = std::sqrt(w.midpoint[j]);
  const ConvexBody base = ConvexBody::lp_ball(LpExponent::finite(1.0), m, 1.0);
  w.midpoint_gauge = gauge(base, root);
  return w;
}

}  // namespace sharplab
