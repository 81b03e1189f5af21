#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace sharplab {

using Vec = std::vector<double>;
using Cplx = std::complex<double>;
using CVec = std::vector<Cplx>;

inline void require_same_dim(std::size_t a, std::size_t b) {
  if (a != b) throw std::invalid_argument("dimension mismatch");
}

inline double dot(const Vec& a, const Vec& b) {
  require_same_dim(a.size(), b.size());
  double s = 0.0;
  for (std::size_t j = 0; j < a.size(); ++j) s += a[j] * b[j];
  return s;
}

/// Pairing of a complex vector with a real direction.
inline Cplx cdot(const CVec& g, const Vec& y) {
  require_same_dim(g.size(), y.size());
  Cplx s{0.0, 0.0};
  for (std::size_t j = 0; j < g.size(); ++j) s += g[j] * y[j];
  return s;
}

inline double norm2(const Vec& a) { return std::sqrt(dot(a, a)); }

inline double norm_inf(const Vec& a) {
  double m = 0.0;
  for (double v : a) m = std::max(m, std::abs(v));
  return m;
}

inline Vec scaled(Vec a, double s) {
  for (double& v : a) v *= s;
  return a;
}

inline Vec axis_vector(int dim, int axis, double value = 1.0) {
  Vec e(static_cast<std::size_t>(dim), 0.0);
  e.at(static_cast<std::size_t>(axis)) = value;
  return e;
}

inline Vec real_part(const CVec& g) {
  Vec r(g.size());
  for (std::size_t j = 0; j < g.size(); ++j) r[j] = g[j].real();
  return r;
}

inline Vec imag_part(const CVec& g) {
  Vec r(g.size());
  for (std::size_t j = 0; j < g.size(); ++j) r[j] = g[j].imag();
  return r;
}

/// Re(e^{i phi} g), the real slice of a complex vector at rotation phi.
inline Vec rotated_real_part(const CVec& g, double phi) {
  const Cplx rot = std::polar(1.0, phi);
  Vec r(g.size());
  for (std::size_t j = 0; j < g.size(); ++j) r[j] = (rot * g[j]).real();
  return r;
}

inline Vec sub(const Vec& a, const Vec& b) {
  require_same_dim(a.size(), b.size());
  Vec r(a.size());
  for (std::size_t j = 0; j < a.size(); ++j) r[j] = a[j] - b[j];
  return r;
}

inline Vec add_scaled(Vec a, const Vec& b, double s) {
  require_same_dim(a.size(), b.size());
  for (std::size_t j = 0; j < a.size(); ++j) a[j] += s * b[j];
  return a;
}

inline bool approx(double a, double b, double tol) {
  return std::abs(a - b) <= tol * std::max({1.0, std::abs(a), std::abs(b)});
}

}  // namespace sharplab
