#pragma once

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "sharplab/convex_body.hpp"
#include "sharplab/poly.hpp"
#include "sharplab/rng.hpp"
#include "sharplab/trig.hpp"

namespace sharplab {

struct GenerationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline LpExponent random_lp_exponent(Rng& rng) {
  switch (rng.uniform_int(0, 4)) {
    case 0: return LpExponent::finite(1.0);
    case 1: return LpExponent::finite(1.5);
    case 2: return LpExponent::finite(2.0);
    case 3: return LpExponent::finite(3.0);
    default: return LpExponent::inf();
  }
}

inline Vec random_unit_vector(Rng& rng, int m) {
  for (int attempt = 0; attempt < 100; ++attempt) {
    Vec t(static_cast<std::size_t>(m));
    for (auto& c : t) c = rng.normal();
    const double n = norm2(t);
    if (n > 1e-9) return scaled(std::move(t), 1.0 / n);
  }
  throw GenerationError("random_unit_vector: degenerate draws");
}

/// Body classes: "lp" (exponent from {1, 1.5, 2, 3, inf}, scale in [0.5, 2]),
/// "hrep"/"vrep" (2m to 4m unit-sphere generators, resampled until full rank),
/// or "any".
inline ConvexBody random_body(Rng& rng, int m, const std::string& kind) {
  if (kind == "any") {
    switch (rng.uniform_int(0, 2)) {
      case 0: return random_body(rng, m, "lp");
      case 1: return random_body(rng, m, "hrep");
      default: return random_body(rng, m, "vrep");
    }
  }
  if (kind == "lp") {
    const LpExponent mu = random_lp_exponent(rng);
    return ConvexBody::lp_ball(mu, m, rng.uniform(0.5, 2.0));
  }
  if (kind != "hrep" && kind != "vrep") {
    throw std::invalid_argument("random_body: unknown class tag '" + kind + "'");
  }
  for (int attempt = 0; attempt < 100; ++attempt) {
    const int count = rng.uniform_int(2 * m, 4 * m);
    std::vector<Vec> gens;
    gens.reserve(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) gens.push_back(random_unit_vector(rng, m));
    try {
      return kind == "hrep" ? ConvexBody::hrep(std::move(gens)) : ConvexBody::vrep(std::move(gens));
    } catch (const GeometryError&) {
    }
  }
  throw GenerationError("random_body: rank validation exhausted after 100 attempts");
}

/// Pair (K, V) for which sharp_constant is exact in both orientations
/// (M(K, V) and M(V*, K*)), so duality can be asserted at tight tolerance.
/// Exactness holds when both bodies are lp balls, V has vertices, or K has
/// facets; the admissible class combinations are closed under polarization.
inline std::pair<ConvexBody, ConvexBody> random_exact_pair(Rng& rng, int m) {
  static const std::pair<const char*, const char*> kCombos[] = {
      {"lp", "lp"}, {"lp", "vrep"}, {"vrep", "vrep"},
      {"hrep", "lp"}, {"hrep", "hrep"}, {"hrep", "vrep"},
  };
  const auto& [kk, vk] = kCombos[rng.uniform_int(0, 5)];
  ConvexBody K = random_body(rng, m, kk);
  ConvexBody V = random_body(rng, m, vk);
  return {std::move(K), std::move(V)};
}

inline Vec random_boundary_point(Rng& rng, const ConvexBody& body) {
  for (int attempt = 0; attempt < 100; ++attempt) {
    Vec t(static_cast<std::size_t>(body.dim()));
    for (auto& c : t) c = rng.normal();
    const double g = gauge(body, t);
    if (g > 1e-9) return scaled(std::move(t), 1.0 / g);
  }
  throw GenerationError("random_boundary_point: degenerate draws");
}

inline Vec random_point_in_body(Rng& rng, const ConvexBody& body) {
  Vec x = random_boundary_point(rng, body);
  const double r = std::pow(rng.uniform(), 1.0 / body.dim());
  return scaled(std::move(x), r);
}

inline Vec random_torus_point(Rng& rng, int m) {
  Vec x(static_cast<std::size_t>(m));
  const double pi = std::acos(-1.0);
  for (auto& c : x) c = rng.uniform(-pi, pi);
  return x;
}

/// Trig polynomial with frequencies drawn uniformly from the integer lattice
/// inside sigma V and standard-normal complex coefficients. The real-valued
/// variant adds the conjugate term at -k for every draw.
inline TrigPolynomial random_trig(Rng& rng, const ConvexBody& V, double sigma, int max_terms,
                                  bool real_valued) {
  if (sigma <= 0.0) throw std::invalid_argument("random_trig: sigma must be positive");
  if (max_terms < 1) throw std::invalid_argument("random_trig: max_terms must be >= 1");
  ConvexBody spectrum = scale_body(V, sigma);
  const auto lattice = lattice_points(spectrum);
  bool has_nonzero = false;
  for (const auto& k : lattice) {
    for (int c : k) has_nonzero = has_nonzero || c != 0;
  }
  if (!has_nonzero) {
    throw GenerationError("random_trig: lattice inside sigma V has no nonzero frequency");
  }
  const int draws = rng.uniform_int(1, max_terms);
  TrigPolynomial::TermMap terms;
  for (int i = 0; i < draws; ++i) {
    const auto& k = lattice[static_cast<std::size_t>(rng.uniform_int(0, static_cast<int>(lattice.size()) - 1))];
    const Cplx c = rng.normal_complex();
    if (real_valued) {
      std::vector<int> neg(k.size());
      for (std::size_t j = 0; j < k.size(); ++j) neg[j] = -k[j];
      terms[k] += c;
      terms[neg] += std::conj(c);
    } else {
      terms[k] += c;
    }
  }
  return TrigPolynomial::make(V.dim(), std::move(terms), std::move(spectrum));
}

/// Algebraic polynomial with standard-normal coefficients on every multi-index
/// of total degree <= n; real or complex per the tag.
inline MultiPolynomial random_poly(Rng& rng, int n, int m, bool complex_coeffs) {
  if (n < 0) throw std::invalid_argument("random_poly: negative degree");
  MultiPolynomial::TermMap terms;
  std::vector<int> alpha(static_cast<std::size_t>(m), 0);
  for (;;) {
    int total = 0;
    for (int a : alpha) total += a;
    if (total <= n) {
      terms[alpha] = complex_coeffs ? rng.normal_complex() : Cplx(rng.normal(), 0.0);
    }
    int axis = m - 1;
    while (axis >= 0) {
      if (++alpha[static_cast<std::size_t>(axis)] <= n) break;
      alpha[static_cast<std::size_t>(axis)] = 0;
      --axis;
    }
    if (axis < 0) break;
  }
  return MultiPolynomial::make(m, std::move(terms));
}

}  // namespace sharplab
