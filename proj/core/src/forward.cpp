#include "zspulse/forward.hpp"

#include <algorithm>
#include <cmath>

#include "zspulse/errors.hpp"
#include "zspulse/poly.hpp"

namespace zs {

CVector pulse_gammas(const HardPulse& p) {
  CVector mus = to_potential(p);
  CVector gam(mus.size());
  for (std::size_t i = 0; i < mus.size(); ++i) gam[i] = gamma_of_mu(mus[i]);
  return gam;
}

namespace {

struct MinusState {
  LaurentSeries A = LaurentSeries::constant(1.0);
  LaurentSeries B;  // zero
};

// [A; B] <- (1+|g|^2)^{-1/2} [[1, g], [-conj(g) w, w]] [A; B]
void minus_step(MinusState& st, Complex g) {
  const double c = 1.0 / std::sqrt(1.0 + std::norm(g));
  LaurentSeries a_next = (st.A + st.B.scaled(g)).scaled(c);
  LaurentSeries b_next = (st.B - st.A.scaled(std::conj(g))).shifted(1).scaled(c);
  st.A = std::move(a_next);
  st.B = std::move(b_next);
}

struct PlusState {
  // P = conj(A+), S = w conj(B+); both analytic with nonnegative support.
  LaurentSeries P = LaurentSeries::constant(1.0);
  LaurentSeries S;
};

// Downward step j+1 -> j:
// [P; S] <- (1+|g|^2)^{-1/2} [[1, -conj(g)], [g w, w]] [P; S]
void plus_step_down(PlusState& st, Complex g) {
  const double c = 1.0 / std::sqrt(1.0 + std::norm(g));
  LaurentSeries p_next = (st.P - st.S.scaled(std::conj(g))).scaled(c);
  LaurentSeries s_next = (st.P.scaled(g) + st.S).shifted(1).scaled(c);
  st.P = std::move(p_next);
  st.S = std::move(s_next);
}

CVector series_to_poly(const LaurentSeries& f) {
  // nonnegative-support series as a dense polynomial
  CVector out(static_cast<std::size_t>(std::max<std::int64_t>(f.max_index() + 1, 0)));
  for (std::int64_t n = std::max<std::int64_t>(f.min_index(), 0); n <= f.max_index(); ++n)
    out[static_cast<std::size_t>(n)] = f.coeff(n);
  return out;
}

}  // namespace

ForwardScattering forward_scatter(const HardPulse& p, bool keep_trail) {
  ForwardScattering out;
  const CVector gam = pulse_gammas(p);
  MinusState st;
  if (keep_trail)
    out.minus_trail.push_back({JostSide::minus, p.start(), st.A, st.B});
  for (std::size_t i = 0; i < gam.size(); ++i) {
    minus_step(st, gam[i]);
    if (keep_trail) {
      const std::int64_t j = p.start() + static_cast<std::int64_t>(i) + 1;
      out.minus_trail.push_back({JostSide::minus, j, st.A, st.B});
    }
  }
  out.a = st.A;
  out.b = st.B.shifted(-p.end());
  return out;
}

BoundStateScan find_bound_states(const HardPulse& p) {
  BoundStateScan scan;
  if (p.is_zero()) return scan;

  const ForwardScattering fw = forward_scatter(p);
  // trailing coefficients at roundoff scale would poison the companion
  // normalization
  const CVector a_poly = poly::trimmed(series_to_poly(fw.a), 1e-14);
  CVector disk_roots;
  for (const auto& root : poly::roots(a_poly)) {
    const double m = std::abs(root);
    if (m < 1.0 - kBoundaryTol)
      disk_roots.push_back(root);
    else if (m < 1.0)
      scan.near_boundary.push_back(root);
  }
  if (disk_roots.empty()) return scan;

  for (std::size_t i = 0; i < disk_roots.size(); ++i)
    for (std::size_t l = i + 1; l < disk_roots.size(); ++l)
      if (std::abs(disk_roots[i] - disk_roots[l]) < 1e-6)
        throw NonSimpleZero("multiple zero of a detected; only simple bound states are supported");

  // Jost pairs at j = 0 and j = 1.
  const CVector gam = pulse_gammas(p);
  auto minus_at = [&](std::int64_t j) {
    MinusState st;
    for (std::int64_t k = p.start(); k < std::min<std::int64_t>(j, p.end()); ++k)
      minus_step(st, gam[static_cast<std::size_t>(k - p.start())]);
    if (j > p.end()) st.B = st.B.shifted(j - p.end());
    return st;
  };
  auto plus_at = [&](std::int64_t j) {
    PlusState st;
    for (std::int64_t k = p.end() - 1; k >= std::max<std::int64_t>(j, p.start()); --k)
      plus_step_down(st, gam[static_cast<std::size_t>(k - p.start())]);
    if (j < p.start()) st.S = st.S.shifted(p.start() - j);
    return st;
  };

  auto c_prime_at = [&](std::int64_t j, Complex wk) -> Complex {
    const MinusState mn = minus_at(j);
    const PlusState pl = plus_at(j);
    Complex wk_pow{1.0, 0.0};
    for (std::int64_t n = 0; n < j; ++n) wk_pow *= wk;
    // two equivalent routes; take the better-conditioned denominator
    const Complex s_val = pl.S.evaluate(wk);
    const Complex p_val = pl.P.evaluate(wk);
    if (std::abs(s_val) >= std::abs(p_val))
      return -wk * mn.A.evaluate(wk) / (s_val * wk_pow);
    return mn.B.evaluate(wk) / (p_val * wk_pow);
  };

  for (const auto& wk : disk_roots) {
    const Complex c0 = c_prime_at(0, wk);
    const Complex c1 = c_prime_at(1, wk);
    if (std::abs(c0 - c1) > 1e-6 * (1.0 + std::abs(c0)))
      throw IllConditionedBoundState("norming constant is not step-independent");
    scan.states.push_back({wk, c0});
  }
  std::sort(scan.states.begin(), scan.states.end(),
            [](const BoundState& x, const BoundState& y) {
              if (x.w.real() != y.w.real()) return x.w.real() < y.w.real();
              return x.w.imag() < y.w.imag();
            });
  return scan;
}

double energy_residual(const HardPulse& p, const DiscreteScatteringData& data,
                       std::size_t grid_size) {
  const CircleGrid ag = sample(data.a, grid_size);
  const CircleGrid bg = sample(data.b, grid_size);
  double integral = 0.0;
  for (std::size_t k = 0; k < grid_size; ++k) {
    const double r2 = std::norm(bg[k]) / std::norm(ag[k]);
    integral += std::log1p(r2);
  }
  integral /= static_cast<double>(grid_size);
  double soliton = 0.0;
  for (const auto& bs : data.bound_states) soliton += std::log(std::abs(bs.w));
  return std::abs(p.log_energy_sum() - (integral - 2.0 * soliton));
}

MagnetizationProfile profile_from_r(const CVector& r_samples,
                                    const std::vector<double>& freqs) {
  MagnetizationProfile out;
  out.freqs = freqs;
  out.vecs.resize(r_samples.size());
  for (std::size_t k = 0; k < r_samples.size(); ++k) {
    const Complex r = r_samples[k];
    const double d = 1.0 + std::norm(r);
    out.vecs[k] = {2.0 * r.real() / d, 2.0 * r.imag() / d, (2.0 - d) / d};
  }
  return out;
}

MagnetizationProfile profile_from_r(const CircleGrid& r, double delta) {
  std::vector<double> freqs(r.size());
  for (std::size_t k = 0; k < r.size(); ++k) freqs[k] = r.angle(k) / delta;
  return profile_from_r(r.values(), freqs);
}

}  // namespace zs
