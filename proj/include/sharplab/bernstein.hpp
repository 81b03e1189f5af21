#pragma once

#include <cmath>
#include <complex>
#include <functional>
#include <numbers>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "sharplab/report.hpp"
#include "sharplab/sharp_constant.hpp"
#include "sharplab/trig.hpp"

namespace sharplab {

/// Closed form of sup over the mixing angle alpha of
///   | lambda sin(alpha) p - cos(alpha) q |
/// for complex p, q. Non-decreasing in lambda >= 0.
inline double angle_mix_sup(Cplx p, Cplx q, double lambda) {
  if (lambda < 0.0) throw std::invalid_argument("angle_mix_sup: lambda must be >= 0");
  const double A2 = std::norm(p);
  const double C2 = std::norm(q);
  const double X = (p * std::conj(q)).real();
  const double l2 = lambda * lambda;
  const double mean = l2 * A2 + C2;
  const double osc = std::sqrt((l2 * A2 - C2) * (l2 * A2 - C2) + 4.0 * l2 * X * X);
  return std::sqrt(0.5 * (mean + osc));
}

/// | sin(alpha) (grad f(x), y) - M cos(alpha) f(x) |, the angle-mixed
/// derivative/value combination bounded by M times the sup norm.
inline double angle_mix_lhs(Cplx grad_pair, Cplx value, double alpha, double M) {
  return std::abs(std::sin(alpha) * grad_pair - M * std::cos(alpha) * value);
}

/// Gauge norm of a complex vector field value:
///   sup_phi gauge_K( Re(e^{i phi} g) ),
/// equivalently the largest |(g, y)| over y in polar(K). When the real and
/// imaginary parts are linearly dependent the sweep collapses to a single
/// exact gauge evaluation; otherwise a 256-point phase grid seeds a
/// golden-section polish.
inline double gradient_norm_complex(const CVec& g, const ConvexBody& K) {
  require_same_dim(g.size(), static_cast<std::size_t>(K.dim()));
  const Vec p = real_part(g);
  const Vec q = imag_part(g);
  const double pp = dot(p, p);
  const double qq = dot(q, q);
  if (pp == 0.0 && qq == 0.0) return 0.0;
  const double pq = dot(p, q);
  const double gram = pp * qq - pq * pq;
  if (gram <= 1e-24 * (pp + qq) * (pp + qq)) {
    const Vec& d = pp >= qq ? p : q;
    std::size_t jstar = 0;
    for (std::size_t j = 1; j < d.size(); ++j) {
      if (std::abs(d[j]) > std::abs(d[jstar])) jstar = j;
    }
    const Cplx c = g[jstar] / d[jstar];
    return std::abs(c) * gauge(K, d);
  }

  auto val = [&](double phi) { return gauge(K, rotated_real_part(g, phi)); };
  const int grid = 256;
  double best = -1.0, best_phi = 0.0;
  for (int i = 0; i < grid; ++i) {
    const double phi = 2.0 * std::numbers::pi * i / grid;
    const double v = val(phi);
    if (v > best) {
      best = v;
      best_phi = phi;
    }
  }
  const double h = 2.0 * std::numbers::pi / grid;
  const auto [phi, v] = detail::golden_max(val, best_phi - h, best_phi + h);
  (void)phi;
  return std::max(best, v);
}

/// The alpha grid used by the mixed-angle checks: `points` equally spaced
/// angles plus 0 and pi/2 exactly (the pure-value and pure-derivative ends).
inline std::vector<double> alpha_grid(int points = 360) {
  std::vector<double> g;
  g.reserve(static_cast<std::size_t>(points) + 2);
  g.push_back(0.0);
  g.push_back(std::numbers::pi / 2.0);
  for (int i = 0; i < points; ++i) g.push_back(2.0 * std::numbers::pi * i / points);
  return g;
}

struct BernsteinOptions {
  int resolution = 64;
  /// Slack on ratio <= 1. Negative means automatic: 10/resolution when the
  /// sup norm comes from a grid, 1e-6 when it is exact.
  double allowance = -1.0;
  int alpha_points = 360;
};

namespace detail {

inline std::vector<Vec> dual_boundary_directions(const ConvexBody& K, const Vec& witness_b) {
  std::vector<Vec> ys;
  ys.push_back(witness_b);
  for (int j = 0; j < K.dim(); ++j) {
    Vec e = axis_vector(K.dim(), j);
    const double s = support_max(K, e);  // gauge of polar(K)
    if (s > 0.0) ys.push_back(scaled(std::move(e), 1.0 / s));
  }
  return ys;
}

template <class F>
VerificationReport check_bernstein_impl(const F& f, const ConvexBody& K, const ConvexBody& V,
                                        const std::vector<Vec>& points, double fnorm,
                                        bool fnorm_exact, bool realvalued,
                                        const BernsteinOptions& opts) {
  const WitnessedConstant wc = sharp_constant(K, V);
  const double M = wc.value;
  const double allowance =
      opts.allowance >= 0.0 ? opts.allowance : (fnorm_exact ? 1e-6 : 10.0 / opts.resolution);
  const std::vector<double> alphas = alpha_grid(opts.alpha_points);
  const std::vector<Vec> ys = dual_boundary_directions(K, wc.witness_b);

  VerificationReport report;
  report.campaign = "bernstein";
  int trial = 0;
  for (const auto& x : points) {
    const CVec grad = gradient(f, x);
    const Cplx fx = eval(f, x);

    double lhs24 = 0.0;
    for (const auto& y : ys) {
      const Cplx gp = cdot(grad, y);
      for (double alpha : alphas) lhs24 = std::max(lhs24, angle_mix_lhs(gp, fx, alpha, M));
    }
    report.add(make_entry(trial, "", "2.4", lhs24, M * fnorm, x, allowance));

    const double gn = gradient_norm_complex(grad, K);
    report.add(make_entry(trial, "", "2.8", gn, M * fnorm, x, allowance));

    if (realvalued) {
      const double fv = fx.real();
      const double lhs29 = gn * gn + M * M * fv * fv;
      const double rhs29 = M * M * fnorm * fnorm;
      // Squared quantities double the relative slack.
      report.add(make_entry(trial, "", "2.9", lhs29, rhs29, x, 2.0 * allowance + allowance * allowance));
    }
    ++trial;
  }
  report.finalize(static_cast<int>(points.size()));
  return report;
}

}  // namespace detail

/// Checks the mixed-angle bound ("2.4"), the gauge gradient bound ("2.8") and,
/// for real-valued f, the derivative/value identity bound ("2.9") at the given
/// points. V must be the spectrum body of f; the comparison constant M(K, V)
/// and the dual-boundary test directions are derived from it.
inline VerificationReport check_bernstein(const TrigPolynomial& f, const ConvexBody& K,
                                          const ConvexBody& V, const std::vector<Vec>& points,
                                          BernsteinOptions opts = {}) {
  for (const auto& [k, c] : f.terms()) {
    Vec kd(k.size());
    for (std::size_t j = 0; j < k.size(); ++j) kd[j] = static_cast<double>(k[j]);
    if (gauge(V, kd) > 1.0 + 1e-9) {
      throw std::invalid_argument("check_bernstein: spectrum of f is not contained in V");
    }
  }
  const double fnorm = sup_norm(f, opts.resolution).value;
  return detail::check_bernstein_impl(f, K, V, points, fnorm, false, f.is_real_valued(), opts);
}

inline VerificationReport check_bernstein(const ExpPair& f, const ConvexBody& K,
                                          const ConvexBody& V, const std::vector<Vec>& points,
                                          BernsteinOptions opts = {}) {
  if (gauge(V, f.a) > 1.0 + 1e-9) {
    throw std::invalid_argument("check_bernstein: frequency vector a lies outside V");
  }
  const double fnorm = sup_norm_exp_pair(f);
  const bool realvalued = std::abs(f.c2 - std::conj(f.c1)) <= 1e-12;
  return detail::check_bernstein_impl(f, K, V, points, fnorm, true, realvalued, opts);
}

/// Equality side of the mixed-angle bound for an exponential pair built on a
/// maximizer a of gauge_K over V: for every alpha the supremum of the lhs
/// along the line spanned by a equals M (|C1| + |C2|). Emits one "2.4" entry
/// per alpha (ratios should be 1) plus one "2.8" entry for the gradient-norm
/// supremum, evaluated at the polished maximizing point through the public
/// gradient path.
inline VerificationReport bernstein_sharpness(const ExpPair& f, const ConvexBody& K,
                                              const ConvexBody& V, BernsteinOptions opts = {}) {
  const WitnessedConstant wc = sharp_constant(K, V);
  const double M = wc.value;
  const double norm0 = sup_norm_exp_pair(f);
  const double na2 = dot(f.a, f.a);
  if (na2 == 0.0) throw std::invalid_argument("bernstein_sharpness: zero frequency vector");
  auto point_on_line = [&](double theta) { return scaled(f.a, theta / na2); };

  VerificationReport report;
  report.campaign = "bernstein-sharpness";
  const std::vector<double> alphas = alpha_grid(opts.alpha_points);
  const double allowance = opts.allowance >= 0.0 ? opts.allowance : 1e-6;

  int trial = 0;
  for (double alpha : alphas) {
    auto lhs_at = [&](double theta) {
      const Vec x = point_on_line(theta);
      return angle_mix_lhs(cdot(gradient(f, x), wc.witness_b), eval(f, x), alpha, M);
    };
    const int grid = 1024;
    double best = -1.0, best_theta = 0.0;
    for (int i = 0; i < grid; ++i) {
      const double theta = 2.0 * std::numbers::pi * i / grid;
      const double v = lhs_at(theta);
      if (v > best) {
        best = v;
        best_theta = theta;
      }
    }
    const double h = 2.0 * std::numbers::pi / grid;
    best = std::max(best, detail::golden_max(lhs_at, best_theta - h, best_theta + h).second);
    report.add(make_equality_entry(trial++, "", "2.4", best, M * norm0, point_on_line(best_theta),
                                   allowance));
  }

  auto growth = [&](double theta) {
    return std::abs(f.c1 * std::polar(1.0, theta) - f.c2 * std::polar(1.0, -theta));
  };
  const int grid = 1024;
  double best = -1.0, best_theta = 0.0;
  for (int i = 0; i < grid; ++i) {
    const double theta = 2.0 * std::numbers::pi * i / grid;
    const double v = growth(theta);
    if (v > best) {
      best = v;
      best_theta = theta;
    }
  }
  const double h = 2.0 * std::numbers::pi / grid;
  best_theta = detail::golden_max(growth, best_theta - h, best_theta + h).first;
  const Vec xstar = point_on_line(best_theta);
  const double gn = gradient_norm_complex(gradient(f, xstar), K);
  report.add(make_equality_entry(trial, "", "2.8", gn, M * norm0, xstar, allowance));
  report.finalize(trial + 1);
  return report;
}

/// Residual of the derivative/value identity for a real-valued exponential
/// pair on a maximizer a: gauge_K(grad f)^2 + M^2 f^2 is constant in x and
/// equals M^2 (R1^2 + R2^2) = M^2 (|C1| + |C2|)^2.
inline double bernstein_identity_residual(const ExpPair& f, const ConvexBody& K, double M,
                                          const Vec& x) {
  const double gn = gradient_norm_complex(gradient(f, x), K);
  const double fv = eval(f, x).real();
  const double target = M * M * sup_norm_exp_pair(f) * sup_norm_exp_pair(f);
  return std::abs(gn * gn + M * M * fv * fv - target);
}

struct AsymptoticRow {
  double sigma = 0.0;
  std::vector<int> k0;
  double ratio = 0.0;   // gradient-to-norm ratio of the nearest-frequency pair
  double defect = 0.0;  // sigma M(K, V) - ratio
  bool degenerate = false;
};

/// Discretization sharpness across spectrum scales: for each sigma, pick the
/// lattice frequency k0 in sigma V nearest to sigma a (a the maximizer from
/// M(K, V)) and report how close the pair with frequency k0 comes to the
/// continuous bound sigma M(K, V). The gradient-to-norm ratio of such a pair
/// is gauge_K(k0) for every coefficient choice.
inline std::vector<AsymptoticRow> asymptotic_sharpness(const ConvexBody& K, const ConvexBody& V,
                                                       const std::vector<double>& sigmas) {
  const WitnessedConstant wc = sharp_constant(K, V);
  std::vector<AsymptoticRow> rows;
  rows.reserve(sigmas.size());
  for (double sigma : sigmas) {
    AsymptoticRow row;
    row.sigma = sigma;
    const ConvexBody body = scale_body(V, sigma);
    const auto lattice = lattice_points(body);
    const Vec target = scaled(wc.witness_a, sigma);

    bool found = false;
    double best_d2 = 0.0;
    bool nonzero_seen = false;
    Vec kd(target.size());
    for (const auto& k : lattice) {
      double d2 = 0.0;
      bool nz = false;
      for (std::size_t j = 0; j < target.size(); ++j) {
        const double diff = static_cast<double>(k[j]) - target[j];
        d2 += diff * diff;
        nz = nz || k[j] != 0;
      }
      nonzero_seen = nonzero_seen || nz;
      if (!found || d2 < best_d2) {  // lexicographic scan order breaks ties
        found = true;
        best_d2 = d2;
        row.k0 = k;
      }
    }
    if (!found || !nonzero_seen) {
      row.degenerate = true;
      row.ratio = 0.0;
      row.defect = sigma * wc.value;
      rows.push_back(std::move(row));
      continue;
    }
    for (std::size_t j = 0; j < kd.size(); ++j) kd[j] = static_cast<double>(row.k0[j]);
    row.ratio = gauge(K, kd);
    row.defect = sigma * wc.value - row.ratio;
    rows.push_back(std::move(row));
  }
  return rows;
}

/// Real scalar field with gradient, the shape consumed by the extremal line
/// check. Adapters below wrap the concrete families.
struct LineFunction {
  std::function<double(const Vec&)> value;
  std::function<Vec(const Vec&)> grad;
};

/// f(x) = amplitude * cos(frequency |x|); the rotation-invariant extremal on
/// Euclidean balls. Smooth through the origin because cos is even.
struct RadialCosine {
  double amplitude = 1.0;
  double frequency = 1.0;
  int dim = 2;
};

inline LineFunction as_line_function(const RadialCosine& f) {
  LineFunction lf;
  lf.value = [f](const Vec& x) { return f.amplitude * std::cos(f.frequency * norm2(x)); };
  lf.grad = [f](const Vec& x) {
    const double r = norm2(x);
    if (r == 0.0) return Vec(x.size(), 0.0);
    const double s = -f.amplitude * f.frequency * std::sin(f.frequency * r) / r;
    return scaled(x, s);
  };
  return lf;
}

inline LineFunction as_line_function(const ExpPair& f) {
  LineFunction lf;
  lf.value = [f](const Vec& x) { return eval(f, x).real(); };
  lf.grad = [f](const Vec& x) { return real_part(gradient(f, x)); };
  return lf;
}

inline LineFunction as_line_function(const TrigPolynomial& f) {
  LineFunction lf;
  lf.value = [f](const Vec& x) { return eval(f, x).real(); };
  lf.grad = [f](const Vec& x) { return real_part(gradient(f, x)); };
  return lf;
}

struct LineCheckOptions {
  double tol = 1e-9;
};

/// Structure of extremal functions along the critical line: fit
/// g(x) = R1 cos(a, x) + R2 sin(a, x) from the value and directional
/// derivative of f0 at x0, then require f0 and its gradient to agree with g
/// at x0 + tau y0 for every tau, and f0 to vanish at x0. Emits entries
/// "line.value", "line.gradient", "line.zero" whose lhs are max deviations.
inline VerificationReport extremal_line_check(const LineFunction& f0, const Vec& a, const Vec& y0,
                                              const Vec& x0, const std::vector<double>& taus,
                                              LineCheckOptions opts = {}) {
  const double theta0 = dot(a, x0);
  const double delta = dot(a, y0);
  if (std::abs(delta) < 1e-12) {
    throw std::invalid_argument("extremal_line_check: direction y0 is orthogonal to a");
  }
  const double v0 = f0.value(x0);
  const double d0 = dot(f0.grad(x0), y0);
  const double r1 = v0 * std::cos(theta0) - (d0 / delta) * std::sin(theta0);
  const double r2 = v0 * std::sin(theta0) + (d0 / delta) * std::cos(theta0);

  double max_val_dev = 0.0;
  double max_grad_dev = 0.0;
  for (double tau : taus) {
    const Vec x = add_scaled(x0, y0, tau);
    const double theta = theta0 + tau * delta;
    const double gval = r1 * std::cos(theta) + r2 * std::sin(theta);
    const Vec ggrad = scaled(a, -r1 * std::sin(theta) + r2 * std::cos(theta));
    max_val_dev = std::max(max_val_dev, std::abs(f0.value(x) - gval));
    max_grad_dev = std::max(max_grad_dev, norm_inf(sub(f0.grad(x), ggrad)));
  }
  const double scale = std::max(1.0, std::abs(r1) + std::abs(r2));
  const double rhs = opts.tol * scale;

  VerificationReport report;
  report.campaign = "extremal-line";
  report.add(make_entry(0, "", "line.value", max_val_dev, rhs, x0, 0.0));
  report.add(make_entry(0, "", "line.gradient", max_grad_dev, rhs, x0, 0.0));
  report.add(make_entry(0, "", "line.zero", std::abs(v0), rhs, x0, 0.0));
  report.finalize(1);
  return report;
}

inline std::vector<double> uniform_taus(double lo, double hi, int count) {
  if (count < 2) throw std::invalid_argument("uniform_taus: need at least 2 points");
  std::vector<double> taus(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    taus[static_cast<std::size_t>(i)] = lo + (hi - lo) * i / (count - 1);
  }
  return taus;
}

}  // namespace sharplab
