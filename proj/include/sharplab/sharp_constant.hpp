#pragma once

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

#include "sharplab/convex_body.hpp"
#include "sharplab/rng.hpp"
#include "sharplab/vec.hpp"

namespace sharplab {

enum class Method { closed_form, vertex_enumeration, sampling };

inline const char* to_string(Method m) {
  switch (m) {
    case Method::closed_form: return "closed_form";
    case Method::vertex_enumeration: return "vertex_enumeration";
    case Method::sampling: return "sampling";
  }
  return "unknown";
}

struct WitnessError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// The sharp comparison constant M(K, V) = max_{y in V} gauge_K(y) together
/// with an extremal pair: a on the boundary of V attaining the maximum and b
/// on the boundary of the polar of K with |(b, a)| = value. `lower_bound` is
/// set when only the sampling fallback was available.
struct WitnessedConstant {
  double value = 0.0;
  Vec witness_a;
  Vec witness_b;
  Method method = Method::closed_form;
  bool lower_bound = false;
};

/// M(V_mu, V_lambda) for unit balls: m^{1/mu - 1/lambda} when mu < lambda,
/// otherwise 1 (smaller exponent dominates on the unit sphere).
inline double lp_pair_sharp_constant(const LpExponent& mu, const LpExponent& lambda, int m) {
  const double diff = mu.inverse() - lambda.inverse();
  return diff > 0.0 ? std::pow(static_cast<double>(m), diff) : 1.0;
}

/// Maximizer on the boundary of V_lambda for the pair above: the diagonal
/// point when mu < lambda, a coordinate unit vector otherwise.
inline Vec lp_pair_witness(const LpExponent& mu, const LpExponent& lambda, int m) {
  if (mu.inverse() > lambda.inverse()) {
    return Vec(static_cast<std::size_t>(m), std::pow(static_cast<double>(m), -lambda.inverse()));
  }
  return axis_vector(m, 0);
}

/// Given a maximizer a of gauge_K over V with value M, produce b on the
/// boundary of polar(K) pairing to |(b, a)| = M. For lp-ball pairs the scaled
/// candidate (M / |a|^2) a is tried first; otherwise (or when it fails the
/// boundary check) the generic support argmax over polar(K) is used. Either
/// way the result is verified, and a failed verification signals that a was
/// not actually extremal.
inline Vec dual_witness(const ConvexBody& K, const ConvexBody& V, const Vec& a, double M,
                        double tol = 1e-6) {
  require_same_dim(static_cast<std::size_t>(K.dim()), a.size());
  require_same_dim(static_cast<std::size_t>(V.dim()), a.size());
  auto verified = [&](const Vec& b) {
    const double boundary = support_max(K, b);  // gauge of polar(K) at b
    const double pairing = std::abs(dot(b, a));
    return std::abs(boundary - 1.0) <= tol && std::abs(pairing - M) <= tol * std::max(1.0, M);
  };
  if (K.is_lp() && V.is_lp()) {
    const double n2 = dot(a, a);
    if (n2 > 0.0) {
      Vec b = scaled(a, M / n2);
      if (verified(b)) return b;
    }
  }
  Vec b = support_argmax(polar(K), a).point;
  if (!verified(b)) {
    throw WitnessError("dual_witness: verification failed, a does not attain M(K,V)");
  }
  return b;
}

namespace detail {

inline WitnessedConstant sampled_sharp_constant(const ConvexBody& K, const ConvexBody& V) {
  const int m = V.dim();
  Rng rng(0x5A3F17C2D94E08B1ull);  // fixed stream: result depends only on inputs
  const int kDirections = 10000;
  double best = -1.0;
  Vec best_dir, best_point;
  for (int i = 0; i < kDirections; ++i) {
    Vec t(static_cast<std::size_t>(m));
    for (auto& c : t) c = rng.normal();
    const double g = gauge(V, t);
    if (g <= 1e-12) continue;
    Vec y = scaled(std::move(t), 1.0 / g);
    const double val = gauge(K, y);
    if (val > best) {
      best = val;
      best_dir = y;
      best_point = best_dir;
    }
  }
  if (best < 0.0) throw GeometryError("sharp_constant: sampling failed to find a direction");

  double step = 0.25;
  for (int it = 0; it < 20; ++it) {
    bool improved = false;
    for (int j = 0; j < m; ++j) {
      for (double sgn : {1.0, -1.0}) {
        Vec cand = best_dir;
        cand[static_cast<std::size_t>(j)] += sgn * step;
        const double g = gauge(V, cand);
        if (g <= 1e-12) continue;
        Vec y = scaled(std::move(cand), 1.0 / g);
        const double val = gauge(K, y);
        if (val > best) {
          best = val;
          best_point = y;
          best_dir = best_point;
          improved = true;
        }
      }
    }
    if (!improved) step *= 0.5;
    else step *= 0.9;
  }

  WitnessedConstant out;
  out.value = best;
  out.witness_a = best_point;
  out.witness_b = dual_witness(K, V, out.witness_a, out.value, 5e-2);
  out.method = Method::sampling;
  out.lower_bound = true;
  return out;
}

}  // namespace detail

/// Sharp constant M(K, V) with witnesses. Strategy ladder:
///   1. both lp balls: closed form (exact, with scales);
///   2. V has listed vertices: the convex gauge attains its maximum there;
///   3. K is an H-polytope: by polarity M(K, V) = M(V*, K*) and the outer
///      maximization runs over the rows of K, each solved as a support value
///      on V (exact);
///   4. otherwise: seeded boundary sampling plus coordinate refinement,
///      flagged as a lower bound.
inline WitnessedConstant sharp_constant(const ConvexBody& K, const ConvexBody& V) {
  if (K.dim() != V.dim()) throw GeometryError("sharp_constant: dimension mismatch");

  if (K.is_lp() && V.is_lp()) {
    const auto& bk = K.lp();
    const auto& bv = V.lp();
    WitnessedConstant out;
    out.value = (bv.scale / bk.scale) * lp_pair_sharp_constant(bk.exponent, bv.exponent, K.dim());
    out.witness_a = scaled(lp_pair_witness(bk.exponent, bv.exponent, K.dim()), bv.scale);
    out.witness_b = dual_witness(K, V, out.witness_a, out.value);
    out.method = Method::closed_form;
    return out;
  }

  if (V.is_vrep()) {
    const auto& verts = V.v().vertices;
    double best = -1.0;
    std::size_t besti = 0;
    for (std::size_t i = 0; i < verts.size(); ++i) {
      const double g = gauge(K, verts[i]);
      if (g > best) {
        best = g;
        besti = i;
      }
    }
    WitnessedConstant out;
    out.value = best;
    out.witness_a = verts[besti];
    out.witness_b = dual_witness(K, V, out.witness_a, out.value);
    out.method = Method::vertex_enumeration;
    return out;
  }

  if (K.is_hrep()) {
    const auto& rows = K.h().rows;
    double best = -1.0;
    Vec best_point;
    std::size_t besti = 0;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      LpSolution s = support_argmax(V, rows[i]);
      if (s.value > best) {
        best = s.value;
        best_point = std::move(s.point);
        besti = i;
      }
    }
    WitnessedConstant out;
    out.value = best;
    out.witness_a = std::move(best_point);
    // The maximizing row lies on the boundary of polar(K): any strictly
    // dominated row would have produced a strictly smaller support value.
    out.witness_b = rows[besti];
    if (dot(out.witness_b, out.witness_a) < 0.0) out.witness_b = scaled(std::move(out.witness_b), -1.0);
    out.method = Method::vertex_enumeration;
    return out;
  }

  return detail::sampled_sharp_constant(K, V);
}

struct WidthDiameter {
  double width = 0.0;
  double diameter = 0.0;
};

/// Minimal width and diameter of V through the support identities
/// w(V) = 2 / M(V, B^m) and d(V) = 2 M(B^m, V).
inline WidthDiameter width_diameter(const ConvexBody& V) {
  const ConvexBody ball = ConvexBody::lp_ball(LpExponent::finite(2.0), V.dim(), 1.0);
  WidthDiameter out;
  out.width = 2.0 / sharp_constant(V, ball).value;
  out.diameter = 2.0 * sharp_constant(ball, V).value;
  return out;
}

}  // namespace sharplab
