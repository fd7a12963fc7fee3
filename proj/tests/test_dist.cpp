#include <doctest.h>

#include <cmath>

#include "test_support.hpp"
#include "zspulse/dist.hpp"
#include "zspulse/errors.hpp"
#include "zspulse/io.hpp"

using namespace zs;

namespace {

// reduced data of a finite pulse: r from the exact polynomials, bound states
// from the root scan with c = c'/a'(w_k)
ReducedScatteringData reduced_of_pulse(const HardPulse& p, std::size_t grid) {
  const ForwardScattering fw = forward_scatter(p);
  ReducedScatteringData data;
  data.r = (sample(fw.b, grid) / sample(fw.a, grid)).to_series(1e-15);
  for (const auto& bs : find_bound_states(p).states) {
    Complex ap{};
    for (std::int64_t n = std::max<std::int64_t>(fw.a.min_index(), 1);
         n <= fw.a.max_index(); ++n)
      ap += fw.a.coeff(n) * static_cast<double>(n) *
            std::pow(bs.w, Complex(static_cast<double>(n - 1), 0.0));
    data.bound_states.push_back({bs.w, bs.c_prime / ap});
  }
  return data;
}

double pulse_distance(const HardPulse& a, const HardPulse& b) {
  const std::int64_t lo = std::min(a.start(), b.start());
  const std::int64_t hi = std::max(a.end(), b.end());
  double worst = 0.0;
  for (std::int64_t j = lo; j < hi; ++j)
    worst = std::max(worst, std::abs(a.omega(j) - b.omega(j)));
  return worst;
}

ReducedBoundState random_state(testing::Rng& rng, double max_mag = 0.8) {
  std::uniform_real_distribution<double> rad(0.15, max_mag), ang(0.0, kTwoPi);
  const double m = rad(rng), th = ang(rng);
  return {m * Complex{std::cos(th), std::sin(th)}, testing::random_complex(rng, 1.0)};
}

}  // namespace

TEST_CASE("marchenko closed forms") {
  SUBCASE("zero kernel gives the zero solution") {
    CHECK(marchenko_solve(LaurentSeries::zero(), 8).h.is_zero());
  }
  SUBCASE("one-coefficient kernel") {
    // kernel c/w: the projected product annihilates h, so h = -conj(c) w
    const Complex c{0.4, -0.7};
    const auto sol = marchenko_solve(LaurentSeries::monomial(-1, c), 4);
    CHECK(sol.h.almost_equal(LaurentSeries::monomial(1, -std::conj(c)), 1e-14));
    CHECK(gamma_from_marchenko(sol) == sol.h.coeff(1));
  }
  SUBCASE("norm bound and positivity") {
    testing::Rng rng(83);
    for (int rep = 0; rep < 15; ++rep) {
      const LaurentSeries kernel = testing::random_series(rng, -12, -1, 0.8);
      const auto sol = marchenko_solve(kernel, 24);
      CHECK(sol.h.h1_norm() <= kernel.h1_norm() + 1e-12);
      CHECK(sol.residual < 1e-10);
      CHECK(marchenko_min_eigenvalue(kernel, 24) >= 1.0 - 1e-10);
    }
  }
}

TEST_CASE("kernel sequences match the geometric expansion") {
  testing::Rng rng(89);
  const LaurentSeries r = testing::random_series(rng, -6, 6, 0.5);
  const LaurentSeries s = testing::random_series(rng, -6, 6, 0.5);
  std::vector<ReducedBoundState> right{random_state(rng), random_state(rng)};
  std::vector<ReducedBoundState> left{random_state(rng), random_state(rng)};

  const FgSequences fg = build_fg(r, right, s, left, -40, 0);

  // no bound states: f is the plain coefficient sequence
  const FgSequences plain = build_fg(r, {}, s, {}, -40, 0);
  for (std::int64_t m = -40; m <= 0; ++m) {
    CHECK(plain.f.at(m) == r.coeff(m));
    CHECK(plain.g.at(m) == s.coeff(m));
  }

  // r = 0, one state: f(m) = -c w^{-m-1}
  const FgSequences pure = build_fg(LaurentSeries::zero(), {right[0]},
                                    LaurentSeries::zero(), {}, -30, 0);
  for (std::int64_t m = -30; m <= 0; ++m) {
    const Complex expect = -right[0].c *
        std::pow(right[0].w, Complex(static_cast<double>(-m - 1), 0.0));
    CHECK(std::abs(pure.f.at(m) - expect) < 1e-12 * (1.0 + std::abs(expect)));
  }

  // step-j kernels agree with the direct pole expansion
  //   r_j(n) = r(n-j+1) - sum_k c_k w_k^{j-1} w_k^{-n-1}
  for (const std::int64_t j : {0, 2, 5}) {
    const LaurentSeries rj = right_kernel(fg.f, j);
    for (std::int64_t n = std::max<std::int64_t>(rj.min_index(), -25); n <= -1; ++n) {
      Complex expect = r.coeff(n - j + 1);
      for (const auto& bs : right)
        expect -= bs.c * std::pow(bs.w, Complex(static_cast<double>(j - 1), 0.0)) *
                  std::pow(bs.w, Complex(static_cast<double>(-n - 1), 0.0));
      CHECK(std::abs(rj.coeff(n) - expect) < 1e-12 * (1.0 + std::abs(expect)));
    }
  }

  CHECK_THROWS_AS(build_fg(r, right, s, left, 0, 400), BoundStateRangeOverflow);
}

TEST_CASE("trivial inversions") {
  SUBCASE("zero data gives the zero pulse") {
    const DistInversion inv = dist_invert({LaurentSeries::zero(), {}}, 256);
    CHECK(inv.pulse.is_zero());
    CHECK(inv.diag.gamma0_gap < 1e-14);
  }
  SUBCASE("constant reflection gives a single impulse at step zero") {
    const double theta = 1.1;
    const Complex r0{0.0, std::tan(0.5 * theta)};
    const DistInversion inv = dist_invert({LaurentSeries::constant(r0), {}}, 512);
    CHECK(inv.pulse.impulse_count() == 1);
    CHECK(inv.pulse.start() == 0);
    CHECK(std::abs(inv.pulse.omega(0)) == doctest::Approx(theta).epsilon(1e-10));
    // and the reflection comes back
    const ForwardScattering fw = forward_scatter(inv.pulse);
    CHECK(std::abs(fw.b.coeff(0) / fw.a.coeff(0) - r0) < 1e-10);
  }
}

TEST_CASE("recursion agrees with the linear-system oracle") {
  testing::Rng rng(97);
  for (int rep = 0; rep < 6; ++rep) {
    ReducedScatteringData data;
    data.r = testing::random_series(rng, -10, 6, 0.35);
    if (rep % 2 == 1) {
      data.bound_states.push_back(random_state(rng, 0.7));
      data.bound_states.push_back(random_state(rng, 0.5));
    }
    const DistWorkspace ws = make_workspace(data, 2048);
    const CVector right = dist_right(ws);
    const DistLeft left = dist_left(ws);
    for (std::int64_t j = 0; j < ws.m_plus; ++j) {
      const Complex rec = right[static_cast<std::size_t>(j)];
      const Complex orc = oracle_gamma_right(ws, j);
      CHECK(std::abs(rec - orc) < 1e-8);
    }
    for (std::int64_t j = -ws.m_minus; j < 0; ++j) {
      const Complex rec = left.gammas[static_cast<std::size_t>(j + ws.m_minus)];
      const Complex orc = oracle_gamma_left(ws, j);
      CHECK(std::abs(rec - orc) < 1e-8);
    }
  }
}

TEST_CASE("pulse-level round trip through inverse then forward") {
  testing::Rng rng(101);
  for (int rep = 0; rep < 4; ++rep) {
    const HardPulse p = testing::random_pulse(rng, 10, 1.2, -5, 2);
    const ReducedScatteringData data = reduced_of_pulse(p, 2048);
    const DistInversion inv = dist_invert(data, 2048);
    CHECK(pulse_distance(inv.pulse, p) < 1e-8);
  }
}

TEST_CASE("reflection round trip with injected bound states") {
  testing::Rng rng(103);
  ReducedScatteringData data;
  data.r = testing::random_series(rng, -6, 4, 0.3);
  data.bound_states.push_back({Complex{0.4, 0.0}, Complex{0.8, 0.3}});
  data.bound_states.push_back({Complex{-0.2, 0.45}, Complex{-0.5, 1.1}});

  const DistInversion inv = dist_invert(data, 2048);
  CHECK(inv.diag.gamma0_gap < 1e-6);

  const ForwardScattering fw = forward_scatter(inv.pulse);
  const std::size_t n = 2048;
  const CircleGrid rr = sample(fw.b, n) / sample(fw.a, n);
  const CircleGrid want = sample(data.r, n);
  double worst = 0.0;
  for (std::size_t k = 0; k < n; ++k)
    worst = std::max(worst, std::abs(rr[k] - want[k]));
  CHECK(worst < 1e-5);

  const BoundStateScan scan = find_bound_states(inv.pulse);
  REQUIRE(scan.states.size() == 2);
  for (const auto& bs : data.bound_states) {
    double best = 1e9;
    for (const auto& got : scan.states) best = std::min(best, std::abs(got.w - bs.w));
    CHECK(best < 1e-6);
  }

  // energy identity on the inversion output
  const double lhs = inv.pulse.log_energy_sum();
  const double res = energy_residual(inv.pulse, {fw.a, fw.b, scan.states});
  CHECK(res < 1e-8 * (1.0 + lhs));
}

TEST_CASE("rephasing support is exact") {
  // coefficient support within [1-rho, rho-1] forces omega_j = 0 for j >= rho
  testing::Rng rng(107);
  for (const std::int64_t rho : {1, 2, 4}) {
    LaurentSeries r = rho == 1 ? LaurentSeries::constant(Complex{0.3, 0.1})
                               : testing::random_series(rng, 1 - rho, rho - 1, 0.3);
    const DistInversion inv = dist_invert({r, {}}, 1024);
    CHECK(inv.pulse.rephasing_steps() <= rho);
    for (std::int64_t j = rho; j < rho + 8; ++j) CHECK(inv.pulse.omega(j) == Complex{});
  }
}

TEST_CASE("time-reversed data swaps the two recursions") {
  testing::Rng rng(109);
  const HardPulse p = testing::random_pulse(rng, 8, 1.1, -4, 4);
  CVector rev(p.impulse_count());
  for (std::size_t i = 0; i < rev.size(); ++i)
    rev[i] = std::conj(p.omegas()[rev.size() - 1 - i]);
  const HardPulse q(p.delta(), -(p.end() - 1), std::move(rev));

  const DistInversion ip = dist_invert(reduced_of_pulse(p, 2048), 2048);
  const DistInversion iq = dist_invert(reduced_of_pulse(q, 2048), 2048);
  CHECK(pulse_distance(ip.pulse, p) < 1e-8);
  CHECK(pulse_distance(iq.pulse, q) < 1e-8);
}
