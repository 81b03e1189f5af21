#pragma once

#include <cmath>
#include <complex>
#include <map>
#include <numbers>
#include <stdexcept>
#include <utility>
#include <vector>

#include "sharplab/convex_body.hpp"
#include "sharplab/vec.hpp"

namespace sharplab {

namespace detail {

/// Golden-section maximizer for a smooth 1-d function on [lo, hi].
/// Returns (argmax, max). Used to polish grid seeds; correctness only needs
/// the result to be at least the best probed value.
template <class F>
std::pair<double, double> golden_max(F&& f, double lo, double hi, int iters = 60) {
  const double phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo, b = hi;
  double c = b - phi * (b - a);
  double d = a + phi * (b - a);
  double fc = f(c), fd = f(d);
  for (int i = 0; i < iters; ++i) {
    if (fc < fd) {
      a = c;
      c = d;
      fc = fd;
      d = a + phi * (b - a);
      fd = f(d);
    } else {
      b = d;
      d = c;
      fd = fc;
      c = b - phi * (b - a);
      fc = f(c);
    }
  }
  return fc > fd ? std::make_pair(c, fc) : std::make_pair(d, fd);
}

}  // namespace detail

/// Finite sum of complex exponentials e^{i(k, x)} with integer frequencies k
/// constrained to a spectrum body. The frequency map is ordered, so all
/// iteration is deterministic.
class TrigPolynomial {
 public:
  using TermMap = std::map<std::vector<int>, Cplx>;

  static TrigPolynomial make(int dim, TermMap terms, ConvexBody spectrum) {
    if (dim < 1) throw GeometryError("TrigPolynomial: dimension must be >= 1");
    if (spectrum.dim() != dim) throw GeometryError("TrigPolynomial: spectrum dimension mismatch");
    if (terms.empty()) throw GeometryError("TrigPolynomial: empty term list");
    Vec kd(static_cast<std::size_t>(dim));
    for (const auto& [k, c] : terms) {
      (void)c;
      if (static_cast<int>(k.size()) != dim) {
        throw GeometryError("TrigPolynomial: frequency dimension mismatch");
      }
      for (int j = 0; j < dim; ++j) kd[static_cast<std::size_t>(j)] = static_cast<double>(k[static_cast<std::size_t>(j)]);
      if (gauge(spectrum, kd) > 1.0 + 1e-12) {
        throw GeometryError("TrigPolynomial: frequency outside the spectrum body");
      }
    }
    return TrigPolynomial(dim, std::move(terms), std::move(spectrum));
  }

  int dim() const { return dim_; }
  const TermMap& terms() const { return terms_; }
  const ConvexBody& spectrum() const { return spectrum_; }

  /// Real-valued iff coefficients at k and -k are conjugate (and the constant
  /// term is real).
  bool is_real_valued(double tol = 1e-12) const {
    std::vector<int> neg;
    for (const auto& [k, c] : terms_) {
      neg.assign(k.begin(), k.end());
      for (auto& e : neg) e = -e;
      const auto it = terms_.find(neg);
      if (it == terms_.end()) {
        if (std::abs(c) > tol) return false;
        continue;
      }
      if (std::abs(c - std::conj(it->second)) > tol) return false;
    }
    return true;
  }

 private:
  TrigPolynomial(int dim, TermMap terms, ConvexBody spectrum)
      : dim_(dim), terms_(std::move(terms)), spectrum_(std::move(spectrum)) {}
  int dim_;
  TermMap terms_;
  ConvexBody spectrum_;
};

/// Two-term exponential C1 e^{i(a,x)} + C2 e^{-i(a,x)} with one real
/// frequency vector a; the extremal family for the gradient bounds.
struct ExpPair {
  Vec a;
  Cplx c1;
  Cplx c2;
  int dim() const { return static_cast<int>(a.size()); }
};

inline Cplx eval(const TrigPolynomial& f, const Vec& x) {
  require_same_dim(static_cast<std::size_t>(f.dim()), x.size());
  Cplx s{0.0, 0.0};
  for (const auto& [k, c] : f.terms()) {
    double phase = 0.0;
    for (std::size_t j = 0; j < x.size(); ++j) phase += static_cast<double>(k[j]) * x[j];
    s += c * std::polar(1.0, phase);
  }
  return s;
}

inline Cplx eval(const ExpPair& f, const Vec& x) {
  const double phase = dot(f.a, x);
  return f.c1 * std::polar(1.0, phase) + f.c2 * std::polar(1.0, -phase);
}

inline CVec gradient(const TrigPolynomial& f, const Vec& x) {
  require_same_dim(static_cast<std::size_t>(f.dim()), x.size());
  CVec g(x.size(), Cplx{0.0, 0.0});
  const Cplx iunit{0.0, 1.0};
  for (const auto& [k, c] : f.terms()) {
    double phase = 0.0;
    for (std::size_t j = 0; j < x.size(); ++j) phase += static_cast<double>(k[j]) * x[j];
    const Cplx w = iunit * c * std::polar(1.0, phase);
    for (std::size_t j = 0; j < x.size(); ++j) g[j] += w * static_cast<double>(k[j]);
  }
  return g;
}

inline CVec gradient(const ExpPair& f, const Vec& x) {
  const double phase = dot(f.a, x);
  const Cplx iunit{0.0, 1.0};
  const Cplx w = iunit * (f.c1 * std::polar(1.0, phase) - f.c2 * std::polar(1.0, -phase));
  CVec g(x.size());
  for (std::size_t j = 0; j < x.size(); ++j) g[j] = w * f.a[j];
  return g;
}

struct SupNormEstimate {
  double value = 0.0;
  Vec argmax;
};

/// Sup norm of |f| over the period cell, estimated from a uniform grid with
/// `resolution` points per axis and polished by per-coordinate golden-section
/// sweeps around the best grid point. Always a lower bound on the true sup.
inline SupNormEstimate sup_norm(const TrigPolynomial& f, int resolution) {
  if (resolution < 2) throw std::invalid_argument("sup_norm: resolution must be >= 2");
  const int m = f.dim();
  const double step = 2.0 * std::numbers::pi / resolution;

  std::vector<std::pair<std::vector<int>, Cplx>> terms(f.terms().begin(), f.terms().end());
  const std::size_t T = terms.size();

  // Per-term, per-axis phase tables: e^{i k_j x_g}.
  std::vector<std::vector<CVec>> table(T, std::vector<CVec>(static_cast<std::size_t>(m)));
  for (std::size_t t = 0; t < T; ++t) {
    for (int j = 0; j < m; ++j) {
      CVec col(static_cast<std::size_t>(resolution));
      const double kj = static_cast<double>(terms[t].first[static_cast<std::size_t>(j)]);
      for (int g = 0; g < resolution; ++g) col[static_cast<std::size_t>(g)] = std::polar(1.0, kj * step * g);
      table[t][static_cast<std::size_t>(j)] = std::move(col);
    }
  }

  std::vector<int> idx(static_cast<std::size_t>(m), 0);
  std::vector<int> best_idx(idx);
  double best = -1.0;
  for (;;) {
    Cplx val{0.0, 0.0};
    for (std::size_t t = 0; t < T; ++t) {
      Cplx w = terms[t].second;
      for (int j = 0; j < m; ++j) w *= table[t][static_cast<std::size_t>(j)][static_cast<std::size_t>(idx[static_cast<std::size_t>(j)])];
      val += w;
    }
    const double a = std::abs(val);
    if (a > best) {
      best = a;
      best_idx = idx;
    }
    int axis = m - 1;
    while (axis >= 0) {
      if (++idx[static_cast<std::size_t>(axis)] < resolution) break;
      idx[static_cast<std::size_t>(axis)] = 0;
      --axis;
    }
    if (axis < 0) break;
  }

  Vec x(static_cast<std::size_t>(m));
  for (int j = 0; j < m; ++j) x[static_cast<std::size_t>(j)] = step * best_idx[static_cast<std::size_t>(j)];

  for (int sweep = 0; sweep < 3; ++sweep) {
    for (int j = 0; j < m; ++j) {
      auto line = [&](double xj) {
        Vec y = x;
        y[static_cast<std::size_t>(j)] = xj;
        return std::abs(eval(f, y));
      };
      const auto [xj, v] = detail::golden_max(line, x[static_cast<std::size_t>(j)] - step, x[static_cast<std::size_t>(j)] + step);
      if (v > best) {
        best = v;
        x[static_cast<std::size_t>(j)] = xj;
      }
    }
  }
  return {best, x};
}

/// Exact sup norm of an exponential pair: |C1| + |C2|, attained where the two
/// phases align.
inline double sup_norm_exp_pair(const ExpPair& f) { return std::abs(f.c1) + std::abs(f.c2); }

}  // namespace sharplab
