#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "sharplab/vec.hpp"

namespace sharplab {

/// Algebraic polynomial on R^m with complex coefficients, stored as a sorted
/// multi-index -> coefficient map.
class MultiPolynomial {
 public:
  using TermMap = std::map<std::vector<int>, Cplx>;

  static MultiPolynomial make(int dim, TermMap terms) {
    if (dim < 1) throw std::invalid_argument("MultiPolynomial: dimension must be >= 1");
    TermMap kept;
    for (auto& [alpha, c] : terms) {
      if (static_cast<int>(alpha.size()) != dim) {
        throw std::invalid_argument("MultiPolynomial: multi-index dimension mismatch");
      }
      for (int e : alpha) {
        if (e < 0) throw std::invalid_argument("MultiPolynomial: negative exponent");
      }
      if (c != Cplx{0.0, 0.0}) kept.emplace(alpha, c);
    }
    return MultiPolynomial(dim, std::move(kept));
  }

  static MultiPolynomial zero(int dim) { return make(dim, {}); }

  static MultiPolynomial constant(int dim, Cplx c) {
    TermMap t;
    if (c != Cplx{0.0, 0.0}) t.emplace(std::vector<int>(static_cast<std::size_t>(dim), 0), c);
    return MultiPolynomial(dim, std::move(t));
  }

  /// The monomial coeff * x_axis^power.
  static MultiPolynomial monomial(int dim, int axis, int power, Cplx coeff) {
    std::vector<int> alpha(static_cast<std::size_t>(dim), 0);
    alpha.at(static_cast<std::size_t>(axis)) = power;
    TermMap t;
    t.emplace(std::move(alpha), coeff);
    return make(dim, std::move(t));
  }

  int dim() const { return dim_; }
  const TermMap& terms() const { return terms_; }

  int degree() const {
    int d = 0;
    for (const auto& [alpha, c] : terms_) {
      (void)c;
      int s = 0;
      for (int e : alpha) s += e;
      d = std::max(d, s);
    }
    return d;
  }

  bool is_real(double tol = 1e-12) const {
    for (const auto& [alpha, c] : terms_) {
      (void)alpha;
      if (std::abs(c.imag()) > tol) return false;
    }
    return true;
  }

  MultiPolynomial& operator+=(const MultiPolynomial& o) {
    if (dim_ != o.dim_) throw std::invalid_argument("MultiPolynomial: dimension mismatch");
    for (const auto& [alpha, c] : o.terms_) {
      auto [it, inserted] = terms_.emplace(alpha, c);
      if (!inserted) {
        it->second += c;
        if (it->second == Cplx{0.0, 0.0}) terms_.erase(it);
      }
    }
    return *this;
  }

  MultiPolynomial& operator*=(Cplx s) {
    if (s == Cplx{0.0, 0.0}) {
      terms_.clear();
      return *this;
    }
    for (auto& [alpha, c] : terms_) {
      (void)alpha;
      c *= s;
    }
    return *this;
  }

  friend MultiPolynomial operator+(MultiPolynomial a, const MultiPolynomial& b) {
    a += b;
    return a;
  }

  friend MultiPolynomial operator*(const MultiPolynomial& a, const MultiPolynomial& b) {
    if (a.dim_ != b.dim_) throw std::invalid_argument("MultiPolynomial: dimension mismatch");
    TermMap out;
    std::vector<int> alpha(static_cast<std::size_t>(a.dim_));
    for (const auto& [aa, ca] : a.terms_) {
      for (const auto& [ab, cb] : b.terms_) {
        for (std::size_t j = 0; j < alpha.size(); ++j) alpha[j] = aa[j] + ab[j];
        out[alpha] += ca * cb;
      }
    }
    return make(a.dim_, std::move(out));
  }

  friend MultiPolynomial operator*(MultiPolynomial a, Cplx s) {
    a *= s;
    return a;
  }

 private:
  MultiPolynomial(int dim, TermMap terms) : dim_(dim), terms_(std::move(terms)) {}
  int dim_;
  TermMap terms_;
};

namespace detail {

inline double int_pow(double x, int e) {
  double r = 1.0;
  for (int i = 0; i < e; ++i) r *= x;
  return r;
}

/// Horner over the current axis on a sorted (lexicographic) term range:
/// consecutive runs share the leading exponent, and the runs are folded from
/// the highest exponent down.
inline Cplx eval_sorted_range(MultiPolynomial::TermMap::const_iterator begin,
                              MultiPolynomial::TermMap::const_iterator end, std::size_t axis,
                              const Vec& x) {
  if (begin == end) return {0.0, 0.0};
  if (axis == x.size()) return begin->second;

  std::vector<std::pair<int, Cplx>> groups;
  auto it = begin;
  while (it != end) {
    const int e = it->first[axis];
    auto run_end = it;
    while (run_end != end && run_end->first[axis] == e) ++run_end;
    groups.emplace_back(e, eval_sorted_range(it, run_end, axis + 1, x));
    it = run_end;
  }
  Cplx acc = groups.back().second;
  for (std::size_t i = groups.size() - 1; i-- > 0;) {
    acc = acc * int_pow(x[axis], groups[i + 1].first - groups[i].first) + groups[i].second;
  }
  return acc * int_pow(x[axis], groups.front().first);
}

}  // namespace detail

inline Cplx eval_poly(const MultiPolynomial& P, const Vec& x) {
  require_same_dim(static_cast<std::size_t>(P.dim()), x.size());
  return detail::eval_sorted_range(P.terms().begin(), P.terms().end(), 0, x);
}

inline CVec grad_poly(const MultiPolynomial& P, const Vec& x) {
  require_same_dim(static_cast<std::size_t>(P.dim()), x.size());
  CVec g(x.size(), Cplx{0.0, 0.0});
  for (const auto& [alpha, c] : P.terms()) {
    for (std::size_t j = 0; j < x.size(); ++j) {
      if (alpha[j] == 0) continue;
      double mono = 1.0;
      for (std::size_t l = 0; l < x.size(); ++l) {
        mono *= detail::int_pow(x[l], l == j ? alpha[l] - 1 : alpha[l]);
      }
      g[j] += c * static_cast<double>(alpha[j]) * mono;
    }
  }
  return g;
}

/// Coefficients of the Chebyshev polynomial T_n in the monomial basis,
/// ascending powers. Integer-valued and exact in double for the degrees the
/// library expands (see ridge_cheb).
inline std::vector<double> chebyshev(int n) {
  if (n < 0) throw std::invalid_argument("chebyshev: negative degree");
  std::vector<double> prev{1.0};
  if (n == 0) return prev;
  std::vector<double> cur{0.0, 1.0};
  for (int k = 2; k <= n; ++k) {
    std::vector<double> next(static_cast<std::size_t>(k) + 1, 0.0);
    for (std::size_t j = 0; j < cur.size(); ++j) next[j + 1] += 2.0 * cur[j];
    for (std::size_t j = 0; j < prev.size(); ++j) next[j] -= prev[j];
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

/// T_n(t) by the three-term recurrence (valid for all real t, not just
/// [-1, 1]).
inline double chebyshev_eval(int n, double t) {
  if (n < 0) throw std::invalid_argument("chebyshev_eval: negative degree");
  if (n == 0) return 1.0;
  double tkm1 = 1.0;
  double tk = t;
  for (int k = 2; k <= n; ++k) {
    const double tkp1 = 2.0 * t * tk - tkm1;
    tkm1 = tk;
    tk = tkp1;
  }
  return tk;
}

/// Derivative T_n'(t), recurrence on the pair (T_k, T_k').
inline double chebyshev_deriv(int n, double t) {
  if (n <= 0) return 0.0;
  double tkm1 = 1.0, tk = t;
  double dkm1 = 0.0, dk = 1.0;
  for (int k = 2; k <= n; ++k) {
    const double tkp1 = 2.0 * t * tk - tkm1;
    const double dkp1 = 2.0 * tk + 2.0 * t * dk - dkm1;
    tkm1 = tk;
    tk = tkp1;
    dkm1 = dk;
    dk = dkp1;
  }
  return dk;
}

constexpr int kRidgeExpansionCap = 16;

/// Ridge Chebyshev polynomial C * T_n((a_star, x)) expanded into monomials.
/// The expansion is exact (integer Chebyshev coefficients, repeated products)
/// but is capped at n <= 16 to stay within exact double integers; use
/// eval_ridge_cheb beyond the cap.
inline MultiPolynomial ridge_cheb(int n, const Vec& a_star, Cplx C) {
  if (a_star.empty()) throw std::invalid_argument("ridge_cheb: empty direction");
  if (norm_inf(a_star) == 0.0) throw std::invalid_argument("ridge_cheb: zero direction");
  if (n < 0) throw std::invalid_argument("ridge_cheb: negative degree");
  if (n > kRidgeExpansionCap) {
    throw std::invalid_argument("ridge_cheb: expansion capped at n <= 16, use eval_ridge_cheb");
  }
  const int m = static_cast<int>(a_star.size());
  MultiPolynomial linear = MultiPolynomial::zero(m);
  for (int j = 0; j < m; ++j) {
    if (a_star[static_cast<std::size_t>(j)] != 0.0) {
      linear += MultiPolynomial::monomial(m, j, 1, a_star[static_cast<std::size_t>(j)]);
    }
  }
  const auto coeffs = chebyshev(n);
  MultiPolynomial acc = MultiPolynomial::constant(m, coeffs[0]);
  MultiPolynomial power = MultiPolynomial::constant(m, 1.0);
  for (std::size_t d = 1; d < coeffs.size(); ++d) {
    power = power * linear;
    if (coeffs[d] != 0.0) acc += power * Cplx{coeffs[d], 0.0};
  }
  return acc * C;
}

inline Cplx eval_ridge_cheb(int n, const Vec& a_star, Cplx C, const Vec& x) {
  return C * chebyshev_eval(n, dot(a_star, x));
}

/// P(x) = Q(x_1^2, ..., x_m^2): multi-indices double, coefficients carry over.
inline MultiPolynomial lift_square(const MultiPolynomial& Q) {
  MultiPolynomial::TermMap out;
  for (const auto& [alpha, c] : Q.terms()) {
    std::vector<int> beta(alpha);
    for (auto& e : beta) e *= 2;
    out.emplace(std::move(beta), c);
  }
  return MultiPolynomial::make(Q.dim(), std::move(out));
}

/// Weighted gradient (sqrt(u_j) dQ/du_j)_j, defined on the closed positive
/// orthant only.
inline CVec weighted_gradient(const MultiPolynomial& Q, const Vec& u) {
  require_same_dim(static_cast<std::size_t>(Q.dim()), u.size());
  for (double v : u) {
    if (v < 0.0) throw std::domain_error("weighted_gradient: negative coordinate");
  }
  CVec g = grad_poly(Q, u);
  for (std::size_t j = 0; j < u.size(); ++j) g[j] *= std::sqrt(u[j]);
  return g;
}

}  // namespace sharplab
