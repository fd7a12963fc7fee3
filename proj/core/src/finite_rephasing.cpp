#include "zspulse/finite_rephasing.hpp"

#include <algorithm>
#include <cmath>

#include "zspulse/circle_grid.hpp"
#include "zspulse/errors.hpp"
#include "zspulse/poly.hpp"
#include "zspulse/spectral.hpp"

namespace zs {

namespace {

constexpr double kDegreeTrim = 1e-13;

CVector shift_down(const CVector& p) {
  // w^{-1} p for polynomials with vanishing constant term
  if (p.size() <= 1) return {};
  return CVector(p.begin() + 1, p.end());
}

CVector axpy(Complex c, const CVector& x, const CVector& y) {
  CVector out(std::max(x.size(), y.size()));
  for (std::size_t i = 0; i < x.size(); ++i) out[i] += c * x[i];
  for (std::size_t i = 0; i < y.size(); ++i) out[i] += y[i];
  return out;
}

}  // namespace

FrtResult frt_invert(const RationalR& data, std::int64_t j_min, bool use_j_min) {
  if (!data.P.empty() && std::abs(data.P[0]) > 1e-12)
    throw ConfigError("rational numerator must vanish at the origin");
  if (data.Q.empty() || std::abs(data.Q[0]) == 0.0)
    throw ConfigError("rational denominator must not vanish at the origin");

  CVector p = poly::trimmed(data.P, kDegreeTrim);
  CVector q = poly::trimmed(data.Q, kDegreeTrim);

  FrtResult res;
  if (poly::degree(p) < 0) {  // r = 0
    res.pulse = HardPulse(1.0, 0, {});
    return res;
  }

  std::vector<Complex> gammas_desc;  // j = rho-1 downward
  int quiet_run = 0;
  const std::int64_t max_steps = 1 << 16;
  for (std::int64_t step = 0;; ++step) {
    const std::int64_t j = data.rho - 1 - step;
    if (use_j_min && j < j_min) break;
    if (!use_j_min && quiet_run >= 16) break;
    if (step >= max_steps)
      throw FrtBreakdown("rational recursion does not decay");

    const Complex q0 = q.empty() ? Complex{} : q[0];
    double qscale = 0.0;
    for (const auto& c : q) qscale = std::max(qscale, std::abs(c));
    if (std::abs(q0) < 1e-14 * std::max(qscale, 1.0))
      throw FrtBreakdown("denominator vanished at the origin at step " +
                         std::to_string(j));
    const Complex p1 = (p.size() > 1) ? p[1] : Complex{};
    const Complex gamma = -std::conj(p1 / q0);
    gammas_desc.push_back(gamma);
    quiet_run = (std::abs(gamma) < 1e-12) ? quiet_run + 1 : 0;

    // P_j = conj(gamma) Q_{j+1} + w^{-1} P_{j+1},  Q_j = Q_{j+1} - gamma w^{-1} P_{j+1}
    const CVector pw = shift_down(p);
    CVector p_next = axpy(std::conj(gamma), q, pw);
    CVector q_next = axpy(-gamma, pw, q);
    p = poly::trimmed(std::move(p_next), kDegreeTrim);
    q = poly::trimmed(std::move(q_next), kDegreeTrim);
    if (!p.empty()) p[0] = Complex{};  // exact vanishing at the origin
    if (poly::degree(p) < 0 && !use_j_min) break;
  }

  // geometric estimate of the dropped tail from the last gamma run
  if (gammas_desc.size() >= 16) {
    const double g_end = std::abs(gammas_desc.back());
    const double g_prev = std::abs(gammas_desc[gammas_desc.size() - 16]);
    if (g_end > 0.0 && g_prev > g_end) {
      const double ratio = std::pow(g_end / g_prev, 1.0 / 15.0);
      res.truncated_tail = 2.0 * g_end * ratio / (1.0 - ratio);
    }
  }

  CVector omegas(gammas_desc.size());
  for (std::size_t i = 0; i < gammas_desc.size(); ++i)
    omegas[omegas.size() - 1 - i] = omega_of_gamma(gammas_desc[i]);
  const std::int64_t start = data.rho - static_cast<std::int64_t>(omegas.size());
  res.pulse = HardPulse(1.0, start, std::move(omegas));
  return res;
}

double unitarity_defect(const SlrPair& pair, std::size_t probe) {
  double worst = 0.0;
  for (std::size_t k = 0; k < probe; ++k) {
    const double th = kTwoPi * static_cast<double>(k) / static_cast<double>(probe);
    const Complex w{std::cos(th), std::sin(th)};
    const double s = std::norm(poly::eval(pair.A, w)) + std::norm(poly::eval(pair.B, w));
    worst = std::max(worst, std::abs(s - 1.0));
  }
  return worst;
}

HardPulse slr_invert(const SlrPair& pair_in) {
  SlrPair pair = pair_in;
  if (unitarity_defect(pair) > 1e-6)
    throw NotUnitary("|A|^2+|B|^2 deviates from 1 on the circle");
  if (pair.A.empty() || std::abs(pair.A[0]) == 0.0)
    throw NotUnitary("A(0) must be nonzero");
  // rotate the pair so that A(0) > 0 (the canonical scattering normalization)
  const Complex phase = std::abs(pair.A[0]) / pair.A[0];
  for (auto& c : pair.A) c *= phase;

  CVector a = poly::trimmed(pair.A, kDegreeTrim);
  CVector b_shift = poly::trimmed(pair.B, kDegreeTrim);
  // B-(rho) = w B
  CVector b(b_shift.size() + 1);
  std::copy(b_shift.begin(), b_shift.end(), b.begin() + 1);

  std::vector<Complex> gammas_desc;
  const std::int64_t t = std::max(poly::degree(pair.B), 0);
  for (std::int64_t step = 0; step <= t; ++step) {
    if (poly::degree(b) < 1) break;  // B- exhausted
    const Complex b1 = b[1];
    const Complex a0 = a[0];
    const Complex gamma = -std::conj(b1 / a0);
    gammas_desc.push_back(gamma);

    const double c = 1.0 / std::sqrt(1.0 + std::norm(gamma));
    const CVector bw = shift_down(b);
    CVector a_next = axpy(-gamma, bw, a);
    CVector b_next = axpy(std::conj(gamma), a, bw);
    for (auto& v : a_next) v *= c;
    for (auto& v : b_next) v *= c;
    a = poly::trimmed(std::move(a_next), kDegreeTrim);
    b = poly::trimmed(std::move(b_next), kDegreeTrim);
    if (!b.empty()) b[0] = Complex{};  // exact by the gamma choice
  }

  CVector omegas(gammas_desc.size());
  for (std::size_t i = 0; i < gammas_desc.size(); ++i)
    omegas[omegas.size() - 1 - i] = omega_of_gamma(gammas_desc[i]);
  const std::int64_t start = pair.rho - static_cast<std::int64_t>(omegas.size());
  return HardPulse(1.0, start, std::move(omegas));
}

CVector spectral_factor_A_from_B(const CVector& B, double* root_margin) {
  const int t = poly::degree(B);
  // modulus check on a fine circle grid
  double max_b = 0.0;
  const std::size_t probe = std::max<std::size_t>(1024, 8 * static_cast<std::size_t>(t + 1));
  for (std::size_t k = 0; k < probe; ++k) {
    const double th = kTwoPi * static_cast<double>(k) / static_cast<double>(probe);
    max_b = std::max(max_b, std::abs(poly::eval(B, {std::cos(th), std::sin(th)})));
  }
  if (max_b >= 1.0 - 1e-9)
    throw FactorizationSingular("|B| reaches 1 on the circle");
  if (t < 0) return {Complex{1.0, 0.0}};

  // D(w) = w^T (1 - B(w) conj(B)(1/w)): degree 2T, roots in (lambda, 1/conj(lambda)) pairs
  const std::size_t tt = static_cast<std::size_t>(t);
  CVector d(2 * tt + 1);
  d[tt] = 1.0;
  for (std::size_t n = 0; n <= 2 * tt; ++n) {
    Complex acc{};
    // coefficient of w^{n-T} in B B*: sum_m B[n-T+m] conj(B[m])
    for (std::size_t m = 0; m <= tt; ++m) {
      const std::int64_t idx = static_cast<std::int64_t>(n) - static_cast<std::int64_t>(tt) +
                               static_cast<std::int64_t>(m);
      if (idx >= 0 && idx <= t) acc += B[static_cast<std::size_t>(idx)] * std::conj(B[m]);
    }
    d[n] -= acc;
  }

  const CVector rts = poly::roots(d);
  double margin = 1.0;
  for (const auto& rt : rts) margin = std::min(margin, std::abs(std::abs(rt) - 1.0));
  if (root_margin) *root_margin = margin;

  CVector outside;
  for (const auto& rt : rts)
    if (std::abs(rt) > 1.0) outside.push_back(rt);

  if (margin < 1e-7 || outside.size() != tt) {
    // cepstral fallback: outer function of sqrt(1-|B|^2), truncated to degree T
    std::size_t n = 512;
    while (n < 8 * tt) n <<= 1;
    std::vector<double> log_mod(n);
    CircleGrid shape = CircleGrid::constant(n, Complex{});
    for (std::size_t k = 0; k < n; ++k) {
      const double bb = std::norm(poly::eval(B, shape.point(k)));
      log_mod[k] = 0.5 * std::log1p(-bb);
    }
    const OuterFunction outer = outer_from_log_modulus(log_mod);
    const LaurentSeries series = outer.boundary.to_series();
    CVector a(tt + 1);
    for (std::size_t i = 0; i <= tt; ++i) a[i] = series.coeff(static_cast<std::int64_t>(i));
    return a;
  }

  CVector a{Complex{1.0, 0.0}};
  for (const auto& rt : outside) a = poly::multiply(a, {Complex{1.0, 0.0}, -1.0 / rt});
  // normalize |A| against 1-|B|^2 on the circle; the ratio is constant
  double num = 0.0, den = 0.0;
  for (std::size_t k = 0; k < probe; ++k) {
    const double th = kTwoPi * static_cast<double>(k) / static_cast<double>(probe);
    const Complex w{std::cos(th), std::sin(th)};
    num += 1.0 - std::norm(poly::eval(B, w));
    den += std::norm(poly::eval(a, w));
  }
  const double kappa = std::sqrt(num / den);
  for (auto& c : a) c *= kappa;
  // the product form already has positive constant term: a(0) = kappa
  return a;
}

SlrDesign slr_design_b(double mz_in_slice, double band_hi, double tau,
                       std::int64_t degree_t, double stop_weight,
                       std::int64_t rho) {
  if (degree_t < 2 || degree_t % 2 != 0)
    throw ConfigError("amplitude design needs an even degree T >= 2");
  const double amp = std::sqrt(0.5 * (1.0 - mz_in_slice));
  const int half = static_cast<int>(degree_t / 2);

  std::vector<RemezBand> bands;
  bands.push_back({0.0, band_hi, amp, 1.0});
  if (band_hi + tau < kPi) bands.push_back({band_hi + tau, kPi, 0.0, stop_weight});
  const RemezResult fit = remez_exchange(bands, half);

  // linear-phase polynomial: B = w^half * amplitude
  CVector b(static_cast<std::size_t>(degree_t) + 1);
  b[static_cast<std::size_t>(half)] = fit.cos_coeffs[0];
  for (int k = 1; k <= half; ++k) {
    b[static_cast<std::size_t>(half + k)] += 0.5 * fit.cos_coeffs[static_cast<std::size_t>(k)];
    b[static_cast<std::size_t>(half - k)] += 0.5 * fit.cos_coeffs[static_cast<std::size_t>(k)];
  }

  SlrDesign out;
  out.achieved_ripple_pass = fit.delta;
  out.achieved_ripple_stop = fit.delta / stop_weight;
  out.pair.B = std::move(b);
  out.pair.A = spectral_factor_A_from_B(out.pair.B);
  out.pair.rho = rho;
  return out;
}

}  // namespace zs
