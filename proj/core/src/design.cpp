#include "zspulse/design.hpp"

#include <algorithm>
#include <cmath>

#include "zspulse/errors.hpp"

namespace zs {

CVector r_from_profile(const MagnetizationProfile& m) {
  CVector r(m.vecs.size());
  for (std::size_t k = 0; k < m.vecs.size(); ++k) {
    const auto& v = m.vecs[k];
    if (v[2] <= -1.0 + 1e-9)
      throw FullInversionUnrepresentable(
          "profile reaches full inversion; use the polynomial-pair path");
    r[k] = Complex{v[0], v[1]} / (1.0 + v[2]);
  }
  return r;
}

Complex AbFromR::a_disk(Complex w) const {
  return blaschke_eval(energies, w) * outer.eval(w);
}

Complex AbFromR::a_prime_at(std::size_t k) const {
  return blaschke_derivative_at_zero(energies, k) * outer.eval(energies[k]);
}

AbFromR ab_from_r(const CircleGrid& r, const CVector& energies) {
  validate_energies(energies);
  const std::size_t n = r.size();
  std::vector<double> log_mod(n);
  for (std::size_t k = 0; k < n; ++k) log_mod[k] = -0.5 * std::log1p(std::norm(r[k]));

  AbFromR out;
  out.r = r;
  out.energies = energies;
  out.outer = outer_from_log_modulus(log_mod);
  const CircleGrid blas = energies.empty() ? CircleGrid::constant(n, Complex{1.0, 0.0})
                                           : blaschke_samples(energies, n);
  out.a = blas * out.outer.boundary;
  out.b = r * out.a;
  return out;
}

AbFromR ab_from_r(const ReducedScatteringData& data, std::size_t grid_size) {
  CVector energies;
  for (const auto& bs : data.bound_states) energies.push_back(bs.w);
  return ab_from_r(sample(data.r, grid_size), energies);
}

LeftData left_data(const ReducedScatteringData& data, const AbFromR& ab) {
  LeftData out;
  out.s = ab.b.pointwise_conj() / ab.a;
  for (auto& v : out.s.values()) v = -v;
  for (std::size_t k = 0; k < data.bound_states.size(); ++k) {
    const auto& bs = data.bound_states[k];
    const Complex ap = ab.a_prime_at(k);
    if (std::abs(ap) < 1e-12)
      throw IllConditionedBoundState("a'(w_k) vanishes to working precision");
    out.tilde.push_back({bs.w, -1.0 / (bs.c * ap * ap * bs.w)});
  }
  return out;
}

double delta2_trans_from_ist(double d) { return 2.0 * d / (1.0 + d * d); }
double delta2_trans_from_slr(double d) { return 2.0 * d * std::sqrt(1.0 - d * d); }
double delta1_long_from_ist(double d) {
  const double u = d - 0.5 * d * d;
  return u / (1.0 - u);
}
double delta1_long_from_slr(double d) { return 2.0 * std::sqrt(2.0) * d + 2.0 * d * d; }

double delta2_ist_from_trans(double t) {
  // smaller root of t d^2 - 2 d + t = 0
  if (t <= 0.0) return 0.0;
  return (1.0 - std::sqrt(1.0 - t * t)) / t;
}

double delta2_slr_from_trans(double t) {
  // smaller root of 4 d^2 (1 - d^2) = t^2
  if (t <= 0.0) return 0.0;
  return std::sqrt(0.5 * (1.0 - std::sqrt(1.0 - t * t)));
}

namespace {

LaurentSeries series_from_fit(const RemezResult& fit) {
  const std::int64_t d = static_cast<std::int64_t>(fit.cos_coeffs.size()) - 1;
  CVector coeffs(static_cast<std::size_t>(2 * d + 1));
  auto at = [&](std::int64_t n) -> Complex& {
    return coeffs[static_cast<std::size_t>(n + d)];
  };
  at(0) = fit.cos_coeffs[0];
  for (std::int64_t n = 1; n <= d; ++n) {
    const double a = fit.cos_coeffs[static_cast<std::size_t>(n)];
    at(n) = Complex{0.5 * a, 0.0};
    at(-n) = Complex{0.5 * a, 0.0};
  }
  return LaurentSeries(-d, std::move(coeffs));
}

}  // namespace

EquirippleResult equiripple_r(const EquirippleSpec& spec, std::size_t grid_size) {
  (void)grid_size;
  EquirippleResult out;
  if (spec.rho < 1) throw ConfigError("equiripple design needs rho >= 1");
  if (spec.tau <= 0.0) throw ConfigError("equiripple design needs tau > 0");
  if (spec.delta1.has_value() == spec.delta2.has_value() &&
      !spec.delta1.has_value())
    throw ConfigError("at least one ripple target must be given");

  const double lo = spec.band_lo, hi = spec.band_hi;
  if (hi <= lo) {  // empty band: the minimax fit of zero is zero
    out.r = LaurentSeries::zero();
    return out;
  }

  // rotate the slice to the origin: the problem becomes even, which is the
  // reliable exchange configuration; realness survives the rotation
  const double center = 0.5 * (lo + hi);
  const double edge = 0.5 * (hi - lo);
  const int degree = static_cast<int>(spec.rho) - 1;

  auto run = [&](double w_pass, double w_stop) {
    std::vector<RemezBand> bands;
    bands.push_back({0.0, edge, 1.0, w_pass});
    if (edge + spec.tau < kPi) bands.push_back({edge + spec.tau, kPi, 0.0, w_stop});
    return remez_exchange(bands, degree);
  };

  RemezResult fit;
  if (spec.delta1 && spec.delta2) {
    // both targets given: weights 1/target make the weighted ripple a common
    // feasibility factor
    fit = run(1.0 / *spec.delta1, 1.0 / *spec.delta2);
    out.achieved_delta1 = fit.delta * *spec.delta1;
    out.achieved_delta2 = fit.delta * *spec.delta2;
  } else {
    // one target given: secant search on the weight ratio so that the
    // constrained band lands on its target, the free band is reported
    const bool solve_delta1 = !spec.delta1.has_value();
    const double target = solve_delta1 ? *spec.delta2 : *spec.delta1;
    double log_kappa = 0.0, step = 1.0;
    double achieved_fixed = 0.0;
    for (int it = 0; it < 60; ++it) {
      const double kappa = std::exp(log_kappa);
      fit = solve_delta1 ? run(1.0, kappa) : run(kappa, 1.0);
      achieved_fixed = fit.delta / kappa;
      const double gap = std::log(achieved_fixed / target);
      if (std::abs(gap) < 1e-6) break;
      log_kappa += std::clamp(gap, -step, step);
    }
    if (solve_delta1) {
      out.achieved_delta1 = fit.delta;
      out.achieved_delta2 = achieved_fixed;
    } else {
      out.achieved_delta1 = achieved_fixed;
      out.achieved_delta2 = fit.delta;
    }
  }
  out.alternations = fit.alternations;
  out.r = series_from_fit(fit);
  if (center != 0.0) {
    // undo the rotation: coefficient n picks up e^{-i n c}
    CVector coeffs(out.r.support_width());
    for (std::int64_t n = out.r.min_index(); n <= out.r.max_index(); ++n)
      coeffs[static_cast<std::size_t>(n - out.r.min_index())] =
          out.r.coeff(n) * std::exp(Complex{0.0, -center * static_cast<double>(n)});
    out.r = LaurentSeries(out.r.min_index(), std::move(coeffs));
  }
  return out;
}

namespace {

// raised-cosine step from y0 (at x0) to y1 (at x1)
double ramp(double x, double x0, double x1, double y0, double y1) {
  if (x <= x0) return y0;
  if (x >= x1) return y1;
  const double u = (x - x0) / (x1 - x0);
  return y0 + (y1 - y0) * 0.5 * (1.0 - std::cos(kPi * u));
}

double wrap_angle(double th) {
  while (th > kPi) th -= kTwoPi;
  while (th <= -kPi) th += kTwoPi;
  return th;
}

}  // namespace

SelfRefocusedResult self_refocused_r(double k1, double k2, double tau,
                                     double band_lo, double band_hi,
                                     std::size_t grid_size) {
  if (k1 < 0.0 || k2 < 0.0) throw ConfigError("depth parameters must be nonnegative");
  SelfRefocusedResult out;

  std::vector<double> re_r(grid_size);
  CircleGrid shape = CircleGrid::constant(grid_size, Complex{});
  for (std::size_t k = 0; k < grid_size; ++k) {
    const double th = wrap_angle(shape.angle(k));
    double v;
    if (th >= band_lo && th <= band_hi) {
      v = k1;
    } else if (th > band_hi) {
      v = ramp(th, band_hi, band_hi + tau, k1, -k2);
    } else {
      v = ramp(-th, -band_lo, -band_lo + tau, k1, -k2);
    }
    re_r[k] = v;
  }

  out.completion = analytic_completion(re_r);
  const CircleGrid big_r = sample(out.completion, grid_size);
  CVector r_vals(grid_size);
  for (std::size_t k = 0; k < grid_size; ++k) {
    const Complex e = std::exp(big_r[k]);
    r_vals[k] = e / (1.0 + e);
  }

  // shift the off-band mean to zero so the reflection dies away from the slice
  if (k2 > 0.0) {
    Complex mean{};
    std::size_t count = 0;
    for (std::size_t k = 0; k < grid_size; ++k) {
      const double th = wrap_angle(shape.angle(k));
      if (th < band_lo - tau || th > band_hi + tau) {
        mean += r_vals[k];
        ++count;
      }
    }
    if (count > 0) {
      mean /= static_cast<double>(count);
      for (auto& v : r_vals) v -= mean;
    }
  }
  out.r = CircleGrid(std::move(r_vals));

  // disk poles of r: zeros of 1 + e^R, located by winding numbers on nested
  // circles and polished by Newton
  auto phi = [&](Complex w) { return 1.0 + std::exp(out.completion.evaluate(w)); };
  CVector dcomp_coeffs;
  for (std::int64_t nidx = 1; nidx <= out.completion.max_index(); ++nidx)
    dcomp_coeffs.push_back(out.completion.coeff(nidx) * static_cast<double>(nidx));
  const LaurentSeries dcomp(0, std::move(dcomp_coeffs));
  auto dphi = [&](Complex w) {
    return dcomp.evaluate(w) * std::exp(out.completion.evaluate(w));
  };
  const std::size_t nsamp = 512;
  int prev_winding = 0;
  for (int ring = 1; ring <= 9; ++ring) {
    const double rad = 0.1 * ring;
    double arg_acc = 0.0;
    Complex prev = phi(Complex{rad, 0.0});
    double min_abs = std::abs(prev);
    double min_theta = 0.0;
    for (std::size_t i = 1; i <= nsamp; ++i) {
      const double th = kTwoPi * static_cast<double>(i) / nsamp;
      const Complex cur = phi(rad * Complex{std::cos(th), std::sin(th)});
      arg_acc += std::arg(cur / prev);
      if (std::abs(cur) < min_abs) {
        min_abs = std::abs(cur);
        min_theta = th;
      }
      prev = cur;
    }
    const int winding = static_cast<int>(std::lround(arg_acc / kTwoPi));
    for (int new_zero = 0; new_zero < winding - prev_winding; ++new_zero) {
      // Newton from the ring point of smallest |phi|; offset repeats slightly
      Complex w = (rad - 0.05) *
                  Complex{std::cos(min_theta + 0.2 * new_zero), std::sin(min_theta + 0.2 * new_zero)};
      for (int it = 0; it < 60; ++it) {
        const Complex f = phi(w);
        const Complex d = dphi(w);
        if (std::abs(d) < 1e-300) break;
        const Complex step = f / d;
        w -= step;
        if (std::abs(step) < 1e-13) break;
      }
      if (std::abs(w) < 1.0 && std::abs(phi(w)) < 1e-8) {
        bool dup = false;
        for (const auto& p : out.disk_poles)
          if (std::abs(p - w) < 1e-8) dup = true;
        if (!dup) out.disk_poles.push_back(w);
      }
    }
    prev_winding = winding;
  }
  return out;
}

CircleGrid ideal_profile_r(const IdealProfileSpec& spec, double delta, double tau,
                           std::size_t grid_size) {
  if (spec.theta0 < 0.0 || spec.theta0 > kPi)
    throw ConfigError("flip angle must lie in [0, pi]");
  CVector vals(grid_size);
  const double s = std::max(tau, 1e-9) / 4.0;
  const double lo = spec.z0 - spec.c0, hi = spec.z0 + spec.c0;
  for (std::size_t k = 0; k < grid_size; ++k) {
    double th = kTwoPi * static_cast<double>(k) / static_cast<double>(grid_size);
    if (th > kPi) th -= kTwoPi;
    const double z = th / delta;
    const double window = 0.5 * (std::erf((hi - z) / s) - std::erf((lo - z) / s));
    vals[k] = Complex{0.0, std::tan(0.5 * spec.theta0 * window)};
  }
  return CircleGrid(std::move(vals));
}

CircleGrid half_pulse_r(const std::vector<double>& mx) {
  std::vector<double> log_mod(mx.size());
  for (std::size_t k = 0; k < mx.size(); ++k) {
    if (std::abs(mx[k]) >= 1.0)
      throw InfeasibleHalfPulse("|Mx| must stay strictly below 1");
    log_mod[k] = 0.5 * std::log((1.0 - mx[k]) / (1.0 + mx[k]));
  }
  const OuterFunction R = outer_from_log_modulus(log_mod);
  CVector r(mx.size());
  for (std::size_t k = 0; k < mx.size(); ++k)
    r[k] = (1.0 - R.boundary[k]) / (1.0 + R.boundary[k]);
  return CircleGrid(std::move(r));
}

}  // namespace zs
