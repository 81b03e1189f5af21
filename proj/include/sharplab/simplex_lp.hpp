#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "sharplab/vec.hpp"

namespace sharplab {

struct LpError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct LpSolution {
  double value = 0.0;
  Vec point;
};

/// Maximize (objective, t) over the symmetric polytope {t : |(rows[i], t)| <= 1}.
///
/// Dense tableau simplex on the split t = p - q with one slack per one-sided
/// constraint. The all-slack basis is feasible (every right-hand side is 1),
/// so no phase-1 is needed. Pricing is Dantzig until the iteration guard
/// trips, then Bland, which cannot cycle. Returns the optimum together with
/// an optimal vertex of the feasible region.
///
/// Throws LpError when the feasible set is unbounded in the objective
/// direction (rows do not span, i.e. the "polytope" is actually a slab) or
/// when even the Bland guard is exceeded.
inline LpSolution lp_support(const std::vector<Vec>& rows, const Vec& objective) {
  const std::size_t m = objective.size();
  const std::size_t r = rows.size();
  if (m == 0) throw LpError("lp_support: empty objective");
  if (r == 0) throw LpError("lp_support: no constraints, problem unbounded");
  for (const auto& row : rows) require_same_dim(row.size(), m);
  if (norm_inf(objective) == 0.0) return {0.0, Vec(m, 0.0)};

  constexpr double kTol = 1e-10;
  const std::size_t ncons = 2 * r;
  const std::size_t nvars = 2 * m + ncons;

  std::vector<Vec> tab(ncons, Vec(nvars + 1, 0.0));
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      tab[i][j] = rows[i][j];
      tab[i][m + j] = -rows[i][j];
      tab[r + i][j] = -rows[i][j];
      tab[r + i][m + j] = rows[i][j];
    }
    tab[i][2 * m + i] = 1.0;
    tab[r + i][2 * m + r + i] = 1.0;
    tab[i][nvars] = 1.0;
    tab[r + i][nvars] = 1.0;
  }
  Vec obj(nvars + 1, 0.0);
  for (std::size_t j = 0; j < m; ++j) {
    obj[j] = objective[j];
    obj[m + j] = -objective[j];
  }
  std::vector<std::size_t> basis(ncons);
  for (std::size_t i = 0; i < ncons; ++i) basis[i] = 2 * m + i;

  const std::size_t dantzig_guard = 50 * (nvars + ncons);
  const std::size_t hard_guard = dantzig_guard + 500 * (nvars + ncons);

  for (std::size_t iter = 0;; ++iter) {
    if (iter > hard_guard) throw LpError("lp_support: cycling guard exceeded");
    const bool bland = iter > dantzig_guard;

    std::size_t enter = nvars;
    if (bland) {
      for (std::size_t j = 0; j < nvars; ++j) {
        if (obj[j] > kTol) {
          enter = j;
          break;
        }
      }
    } else {
      double best = kTol;
      for (std::size_t j = 0; j < nvars; ++j) {
        if (obj[j] > best) {
          best = obj[j];
          enter = j;
        }
      }
    }
    if (enter == nvars) break;  // no improving column: optimal

    std::size_t leave = ncons;
    double best_ratio = 0.0;
    for (std::size_t i = 0; i < ncons; ++i) {
      if (tab[i][enter] <= kTol) continue;
      const double ratio = tab[i][nvars] / tab[i][enter];
      if (leave == ncons || ratio < best_ratio - 1e-15 ||
          (ratio <= best_ratio + 1e-15 && basis[i] < basis[leave])) {
        leave = i;
        best_ratio = ratio;
      }
    }
    if (leave == ncons) throw LpError("lp_support: unbounded feasible set (constraint rows rank-deficient)");

    const double piv = tab[leave][enter];
    for (std::size_t j = 0; j <= nvars; ++j) tab[leave][j] /= piv;
    for (std::size_t i = 0; i < ncons; ++i) {
      if (i == leave) continue;
      const double f = tab[i][enter];
      if (f == 0.0) continue;
      for (std::size_t j = 0; j <= nvars; ++j) tab[i][j] -= f * tab[leave][j];
    }
    {
      const double f = obj[enter];
      if (f != 0.0) {
        for (std::size_t j = 0; j <= nvars; ++j) obj[j] -= f * tab[leave][j];
      }
    }
    basis[leave] = enter;
  }

  Vec t(m, 0.0);
  for (std::size_t i = 0; i < ncons; ++i) {
    if (basis[i] < m) {
      t[basis[i]] += tab[i][nvars];
    } else if (basis[i] < 2 * m) {
      t[basis[i] - m] -= tab[i][nvars];
    }
  }
  return {dot(objective, t), t};
}

}  // namespace sharplab
