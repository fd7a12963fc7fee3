#include "zspulse/remez.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>

#include "zspulse/errors.hpp"

namespace zs {

namespace {

struct GridPoint {
  double theta;
  double target;
  double weight;
};

struct DenseGrid {
  std::vector<GridPoint> pts;
  std::vector<std::pair<std::size_t, std::size_t>> band_ranges;  // [first, last]
};

DenseGrid build_grid(const std::vector<RemezBand>& bands, std::size_t total) {
  double len = 0.0;
  for (const auto& b : bands) len += b.hi - b.lo;
  DenseGrid grid;
  grid.pts.reserve(total + 4 * bands.size());
  for (const auto& b : bands) {
    const auto n = std::max<std::size_t>(
        8, static_cast<std::size_t>(
               std::round(static_cast<double>(total) * (b.hi - b.lo) / len)));
    const std::size_t first = grid.pts.size();
    for (std::size_t i = 0; i <= n; ++i) {
      const double t =
          b.lo + (b.hi - b.lo) * static_cast<double>(i) / static_cast<double>(n);
      grid.pts.push_back({t, b.target, b.weight});
    }
    grid.band_ranges.emplace_back(first, grid.pts.size() - 1);
  }
  return grid;
}

}  // namespace

double remez_eval(const RemezResult& fit, double theta) {
  double v = 0.0;
  for (std::size_t n = 0; n < fit.cos_coeffs.size(); ++n)
    v += fit.cos_coeffs[n] * std::cos(static_cast<double>(n) * theta);
  return v;
}

RemezResult remez_exchange(const std::vector<RemezBand>& bands, int degree,
                           std::size_t dense_points, int max_iterations) {
  const int dof = degree + 1;
  const int m = dof + 1;  // reference size
  if (dense_points == 0)
    dense_points = std::max<std::size_t>(4096, 64 * static_cast<std::size_t>(dof));

  const DenseGrid grid = build_grid(bands, dense_points);
  const std::vector<GridPoint>& pts = grid.pts;
  if (static_cast<int>(pts.size()) < 2 * m)
    throw RemezDiverged("bands too narrow for the requested degree");

  auto basis = [&](double theta, int k) -> double {
    return std::cos(static_cast<double>(k) * theta);
  };

  // initial reference: allocate per band proportionally to length (at least
  // two per band), endpoints included
  std::vector<std::size_t> ref;
  {
    double len = 0.0;
    for (const auto& b : bands) len += b.hi - b.lo;
    std::vector<int> alloc(bands.size(), 2);
    int assigned = 2 * static_cast<int>(bands.size());
    for (std::size_t bi = 0; bi + 1 < bands.size() && assigned < m; ++bi) {
      const int extra = std::min<int>(
          m - assigned,
          static_cast<int>(std::floor((m - 2.0 * static_cast<double>(bands.size())) *
                                      (bands[bi].hi - bands[bi].lo) / len)));
      alloc[bi] += std::max(extra, 0);
      assigned += std::max(extra, 0);
    }
    alloc.back() += std::max(m - assigned, 0);
    for (std::size_t bi = 0; bi < bands.size(); ++bi) {
      const auto [first, last] = grid.band_ranges[bi];
      const int n_b = alloc[bi];
      for (int i = 0; i < n_b; ++i)
        ref.push_back(first + (last - first) * static_cast<std::size_t>(i) /
                                  static_cast<std::size_t>(std::max(n_b - 1, 1)));
    }
    std::sort(ref.begin(), ref.end());
    ref.erase(std::unique(ref.begin(), ref.end()), ref.end());
    while (static_cast<int>(ref.size()) > m) ref.pop_back();
    // top up from unused grid points if deduplication lost entries
    for (std::size_t i = 0; static_cast<int>(ref.size()) < m && i < pts.size(); ++i)
      if (std::find(ref.begin(), ref.end(), i) == ref.end()) ref.push_back(i);
    std::sort(ref.begin(), ref.end());
  }

  RemezResult fit;
  fit.cos_coeffs.assign(static_cast<std::size_t>(degree) + 1, 0.0);

  double delta = 0.0;
  std::vector<double> err(pts.size());

  for (int iter = 1; iter <= max_iterations; ++iter) {
    fit.iterations = iter;

    // coefficients plus signed ripple from the current reference
    Eigen::MatrixXd A(m, m);
    Eigen::VectorXd rhs(m);
    for (int i = 0; i < m; ++i) {
      const GridPoint& g = pts[ref[static_cast<std::size_t>(i)]];
      for (int k = 0; k < dof; ++k) A(i, k) = basis(g.theta, k);
      A(i, dof) = ((i % 2 == 0) ? 1.0 : -1.0) / g.weight;
      rhs(i) = g.target;
    }
    const Eigen::VectorXd sol = A.partialPivLu().solve(rhs);
    for (int k = 0; k <= degree; ++k)
      fit.cos_coeffs[static_cast<std::size_t>(k)] = sol(k);
    delta = sol(dof);

    for (std::size_t i = 0; i < pts.size(); ++i)
      err[i] = pts[i].weight * (remez_eval(fit, pts[i].theta) - pts[i].target);

    // local maxima of |err| within each band (endpoints included)
    std::vector<std::size_t> cand;
    for (const auto& [lo, hi] : grid.band_ranges) {
      for (std::size_t i = lo; i <= hi; ++i) {
        const double a = std::abs(err[i]);
        const bool up = (i == lo) || a >= std::abs(err[i - 1]);
        const bool down = (i == hi) || a > std::abs(err[i + 1]);
        if (up && down && a > 0.0) cand.push_back(i);
      }
    }

    // enforce sign alternation, keeping the stronger of same-sign runs
    std::vector<std::size_t> alt;
    for (const auto i : cand) {
      if (!alt.empty() && std::signbit(err[alt.back()]) == std::signbit(err[i])) {
        if (std::abs(err[i]) > std::abs(err[alt.back()])) alt.back() = i;
      } else {
        alt.push_back(i);
      }
    }
    while (static_cast<int>(alt.size()) > m) {
      if (std::abs(err[alt.front()]) < std::abs(err[alt.back()]))
        alt.erase(alt.begin());
      else
        alt.pop_back();
    }

    double emax = 0.0;
    for (const auto i : cand) emax = std::max(emax, std::abs(err[i]));

    bool same = false;
    if (static_cast<int>(alt.size()) == m) {
      same = true;
      for (int i = 0; i < m; ++i)
        if (ref[static_cast<std::size_t>(i)] != alt[static_cast<std::size_t>(i)])
          same = false;
      ref.assign(alt.begin(), alt.end());
      fit.alternations = static_cast<int>(alt.size());
    } else {
      // deficient extremal set: classical single-point exchange of the
      // worst offender, which keeps the reference alternating
      std::size_t worst = cand.empty() ? 0 : cand.front();
      for (const auto i : cand)
        if (std::abs(err[i]) > std::abs(err[worst])) worst = i;
      auto pos = std::lower_bound(ref.begin(), ref.end(), worst);
      if (pos == ref.end()) {
        if (std::signbit(err[ref.back()]) == std::signbit(err[worst]))
          ref.back() = worst;
        else {
          ref.erase(ref.begin());
          ref.push_back(worst);
        }
      } else if (pos == ref.begin()) {
        if (std::signbit(err[ref.front()]) == std::signbit(err[worst]))
          ref.front() = worst;
        else {
          ref.pop_back();
          ref.insert(ref.begin(), worst);
        }
      } else if (*pos == worst) {
        // already a reference point
      } else {
        // replace the like-signed neighbor
        auto left = pos - 1;
        if (std::signbit(err[*left]) == std::signbit(err[worst]))
          *left = worst;
        else
          *pos = worst;
      }
      fit.alternations = m;
    }

    if (same || emax - std::abs(delta) <= 1e-12 * std::max(1.0, emax)) {
      fit.delta = std::abs(delta);
      return fit;
    }
  }
  throw RemezDiverged("no convergence within the iteration cap");
}

}  // namespace zs
