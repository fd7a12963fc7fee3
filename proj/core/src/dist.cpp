#include "zspulse/dist.hpp"

#include <algorithm>
#include <cmath>

#include "zspulse/errors.hpp"

namespace zs {

KernelSeq::KernelSeq(std::int64_t lo, std::vector<Complex> vals)
    : lo_(lo), vals_(std::move(vals)) {}

Complex KernelSeq::at(std::int64_t m) const {
  const std::int64_t i = m - lo_;
  if (i < 0 || i >= static_cast<std::int64_t>(vals_.size())) return {};
  return vals_[static_cast<std::size_t>(i)];
}

double KernelSeq::tail_below(std::int64_t m) const {
  double s = 0.0;
  for (std::int64_t i = lo_; i <= std::min(m, hi()); ++i) s += std::abs(at(i));
  return s;
}

FgSequences build_fg(const LaurentSeries& r_hat,
                     const std::vector<ReducedBoundState>& right_constants,
                     const LaurentSeries& s_hat,
                     const std::vector<ReducedBoundState>& left_constants,
                     std::int64_t lo, std::int64_t hi) {
  if (hi < lo) throw ConfigError("empty kernel index range");
  auto guard = [&](const ReducedBoundState& bs, std::int64_t exponent) {
    const double logmag = std::log(std::abs(bs.c)) +
                          static_cast<double>(exponent) * std::log(std::abs(bs.w));
    if (logmag > std::log(1e12))
      throw BoundStateRangeOverflow("bound-state term exceeds 1e12 in the requested range");
  };
  for (const auto& bs : right_constants) guard(bs, -hi - 1);
  for (const auto& bs : left_constants) guard(bs, -hi);

  const std::size_t n = static_cast<std::size_t>(hi - lo + 1);
  CVector f(n), g(n);
  for (std::int64_t m = lo; m <= hi; ++m) {
    f[static_cast<std::size_t>(m - lo)] = r_hat.coeff(m);
    g[static_cast<std::size_t>(m - lo)] = s_hat.coeff(m);
  }
  // bound-state tails by stable downward recurrence: each decrement of m
  // multiplies the term by w_k
  for (const auto& bs : right_constants) {
    Complex term = bs.c * std::pow(bs.w, Complex(static_cast<double>(-hi - 1), 0.0));
    for (std::int64_t m = hi; m >= lo; --m) {
      f[static_cast<std::size_t>(m - lo)] -= term;
      term *= bs.w;
    }
  }
  for (const auto& bs : left_constants) {
    Complex term = bs.c * std::pow(bs.w, Complex(static_cast<double>(-hi), 0.0));
    for (std::int64_t m = hi; m >= lo; --m) {
      g[static_cast<std::size_t>(m - lo)] -= term;
      term *= bs.w;
    }
  }
  return {KernelSeq(lo, std::move(f)), KernelSeq(lo, std::move(g))};
}

LaurentSeries right_kernel(const KernelSeq& f, std::int64_t j) {
  // r_j(n) = f(n - j + 1) for n <= -1
  const std::int64_t n_lo = f.lo() + j - 1;
  if (n_lo > -1) return {};
  CVector coeffs(static_cast<std::size_t>(-1 - n_lo + 1));
  for (std::int64_t n = n_lo; n <= -1; ++n)
    coeffs[static_cast<std::size_t>(n - n_lo)] = f.at(n - j + 1);
  return LaurentSeries(n_lo, std::move(coeffs));
}

LaurentSeries left_kernel(const KernelSeq& g, std::int64_t j) {
  // s_j(n) = g(n + j) for n <= -1
  const std::int64_t n_lo = g.lo() - j;
  if (n_lo > -1) return {};
  CVector coeffs(static_cast<std::size_t>(-1 - n_lo + 1));
  for (std::int64_t n = n_lo; n <= -1; ++n)
    coeffs[static_cast<std::size_t>(n - n_lo)] = g.at(n + j);
  return LaurentSeries(n_lo, std::move(coeffs));
}

namespace {

struct PolyPair {
  // P = conj(A+), S = w conj(B+) on the right; P = A-, S = B- on the left.
  LaurentSeries P = LaurentSeries::constant(1.0);
  LaurentSeries S;
};

Complex dot_with_kernel(const KernelSeq& seq, std::int64_t base,
                        const LaurentSeries& poly) {
  // sum_m seq(base - m) poly_hat(m)
  Complex acc{};
  for (std::int64_t m = std::max<std::int64_t>(0, poly.min_index());
       m <= poly.max_index(); ++m)
    acc += seq.at(base - m) * poly.coeff(m);
  return acc;
}

}  // namespace

CVector dist_right(const DistWorkspace& ws) {
  const std::int64_t m_plus = ws.m_plus;
  CVector gammas(static_cast<std::size_t>(m_plus));
  PolyPair st;
  for (std::int64_t j = m_plus - 1; j >= 0; --j) {
    // -conj(gamma_j) = <f, P_{j+1}> / (P_{j+1}(0) - <f, S_{j+1}>)
    const Complex num = dot_with_kernel(ws.fg.f, -j, st.P);
    const Complex den = st.P.coeff(0) - dot_with_kernel(ws.fg.f, -j, st.S);
    if (std::abs(den) < 1e-14)
      throw DistBreakdown("right recursion denominator vanished at step " +
                          std::to_string(j));
    const Complex gamma = -std::conj(num / den);
    gammas[static_cast<std::size_t>(j)] = gamma;

    const double c = 1.0 / std::sqrt(1.0 + std::norm(gamma));
    LaurentSeries p_next = (st.P - st.S.scaled(std::conj(gamma))).scaled(c);
    LaurentSeries s_next = (st.P.scaled(gamma) + st.S).shifted(1).scaled(c);
    st.P = std::move(p_next);
    st.S = std::move(s_next);
  }
  return gammas;
}

DistLeft dist_left(const DistWorkspace& ws) {
  DistLeft out;
  const std::int64_t m_minus = ws.m_minus;
  out.gammas.resize(static_cast<std::size_t>(m_minus));
  PolyPair st;
  for (std::int64_t j = -m_minus; j <= 0; ++j) {
    // gamma_j = <g_j, P_j> / (P_j(0) - <g_j, S_j>)  with g_j(m) = g(j - m)
    const Complex num = dot_with_kernel(ws.fg.g, j, st.P);
    const Complex den = st.P.coeff(0) - dot_with_kernel(ws.fg.g, j, st.S);
    if (std::abs(den) < 1e-14)
      throw DistBreakdown("left recursion denominator vanished at step " +
                          std::to_string(j));
    const Complex gamma = num / den;
    if (j == 0) {
      out.gamma0_check = gamma;
      break;
    }
    out.gammas[static_cast<std::size_t>(j + m_minus)] = gamma;

    const double c = 1.0 / std::sqrt(1.0 + std::norm(gamma));
    LaurentSeries p_next = (st.P + st.S.scaled(gamma)).scaled(c);
    LaurentSeries s_next = (st.S - st.P.scaled(std::conj(gamma))).shifted(1).scaled(c);
    st.P = std::move(p_next);
    st.S = std::move(s_next);
  }
  return out;
}

namespace {

std::int64_t right_seed_index(const KernelSeq& f) {
  // smallest M >= 1 with f negligible at every m <= -M
  std::int64_t m = -f.lo() + 1;
  while (m > 1 && f.tail_below(-(m - 1)) < kTailTol) --m;
  return std::max<std::int64_t>(m, 1);
}

std::int64_t left_seed_index(const KernelSeq& g) {
  // smallest M >= 1 with g negligible at every m <= -M-1
  std::int64_t m = -g.lo();
  while (m > 1 && g.tail_below(-m) < kTailTol) --m;
  return std::max<std::int64_t>(m, 1);
}

}  // namespace

DistWorkspace make_workspace(const ReducedScatteringData& data,
                             std::size_t grid_size, int doublings) {
  for (std::size_t i = 0; i < data.bound_states.size(); ++i)
    for (std::size_t l = i + 1; l < data.bound_states.size(); ++l)
      if (std::abs(data.bound_states[i].w - data.bound_states[l].w) < 1e-6)
        throw NonSimpleZero("bound-state energies must be distinct");

  const AbFromR ab = ab_from_r(data, grid_size);
  const LeftData left = left_data(data, ab);
  const LaurentSeries s_hat = left.s.to_series(1e-16);

  // negative reach: enough to push every kernel tail below threshold; the
  // series reach discards cumulative mass under one percent of the tail rule
  auto mass_cutoff = [](const LaurentSeries& f) {
    if (f.is_zero()) return std::int64_t{0};
    double acc = 0.0;
    std::int64_t m = f.min_index();
    for (; m <= f.max_index(); ++m) {
      acc += std::abs(f.coeff(m));
      if (acc > 0.01 * kTailTol) break;
    }
    return std::min<std::int64_t>(m, 0);
  };
  std::int64_t lo = std::min<std::int64_t>({mass_cutoff(data.r), mass_cutoff(s_hat), -8});
  auto reach = [](const ReducedBoundState& bs) {
    const double mag = std::max(std::abs(bs.w), 0.05);
    const double scale = std::max(std::abs(bs.c), 1.0);
    return static_cast<std::int64_t>(
        std::ceil(std::log(0.01 * kTailTol / scale) / std::log(mag)));
  };
  for (const auto& bs : data.bound_states) lo = std::min(lo, -reach(bs));
  for (const auto& bs : left.tilde) lo = std::min(lo, -reach(bs));
  lo *= (1 << doublings);
  // slowly decaying data may ask for more window than the grid resolves;
  // clamp and let the step-0 consistency check judge the truncation
  const std::int64_t lo_min = -static_cast<std::int64_t>(grid_size / 2) + 8;
  lo = std::max(lo, lo_min);

  DistWorkspace ws;
  ws.fg = build_fg(data.r, data.bound_states, s_hat, left.tilde, lo, 0);
  ws.m_plus = right_seed_index(ws.fg.f) * (1 << doublings);
  ws.m_minus = left_seed_index(ws.fg.g) * (1 << doublings);
  ws.m_plus = std::min<std::int64_t>(ws.m_plus, -lo + 1);
  ws.m_minus = std::min<std::int64_t>(ws.m_minus, -lo);
  return ws;
}

DistInversion dist_invert(const ReducedScatteringData& data,
                          std::size_t grid_size, double delta) {
  DistInversion out;
  for (int doublings = 0;; ++doublings) {
    const DistWorkspace ws = make_workspace(data, grid_size, doublings);
    const CVector right = dist_right(ws);
    const DistLeft left = dist_left(ws);
    const Complex gamma0_right = right.empty() ? Complex{} : right.front();
    const double gap = std::abs(gamma0_right - left.gamma0_check);

    out.diag = {gap, ws.m_plus, ws.m_minus, doublings};
    if (gap <= 1e-6) {
      CVector omegas;
      omegas.reserve(left.gammas.size() + right.size());
      for (const auto& g : left.gammas) omegas.push_back(omega_of_gamma(g));
      for (const auto& g : right) omegas.push_back(omega_of_gamma(g));
      out.pulse = HardPulse(delta, -ws.m_minus, std::move(omegas));
      return out;
    }
    if (doublings >= 2)
      throw TruncationInsufficient(
          "left/right step-0 weights disagree after doubling the truncation twice");
  }
}

Complex oracle_gamma_right(const DistWorkspace& ws, std::int64_t j) {
  const LaurentSeries kernel = right_kernel(ws.fg.f, j);
  if (kernel.is_zero()) return {};
  const auto sol = marchenko_solve(kernel, kernel.support_width());
  return gamma_from_marchenko(sol);
}

Complex oracle_gamma_left(const DistWorkspace& ws, std::int64_t j) {
  const LaurentSeries kernel = left_kernel(ws.fg.g, j + 1);
  if (kernel.is_zero()) return {};
  const auto sol = marchenko_solve(kernel, kernel.support_width());
  return -std::conj(sol.h.coeff(1));
}

}  // namespace zs
