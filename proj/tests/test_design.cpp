#include <doctest.h>

#include <cmath>

#include "test_support.hpp"
#include "zspulse/design.hpp"
#include "zspulse/dist.hpp"
#include "zspulse/errors.hpp"

using namespace zs;

TEST_CASE("stereographic maps invert each other") {
  MagnetizationProfile m;
  m.freqs = {0.0, 1.0};
  m.vecs = {{0.0, 0.0, 1.0}, {0.0, std::sin(0.8), std::cos(0.8)}};
  const CVector r = r_from_profile(m);
  CHECK(std::abs(r[0]) < 1e-15);
  CHECK(std::abs(r[1] - Complex{0.0, std::tan(0.4)}) < 1e-14);

  testing::Rng rng(113);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  MagnetizationProfile rnd;
  for (int i = 0; i < 200; ++i) {
    double x = u(rng), y = u(rng), z = std::abs(u(rng));
    const double n = std::sqrt(x * x + y * y + z * z);
    if (n == 0.0) continue;
    rnd.freqs.push_back(static_cast<double>(i));
    rnd.vecs.push_back({x / n, y / n, z / n});
  }
  const CVector rr = r_from_profile(rnd);
  const MagnetizationProfile back = profile_from_r(rr, rnd.freqs);
  for (std::size_t i = 0; i < rnd.vecs.size(); ++i)
    for (int c = 0; c < 3; ++c)
      CHECK(std::abs(back.vecs[i][c] - rnd.vecs[i][c]) < 1e-12);

  MagnetizationProfile south;
  south.freqs = {0.0};
  south.vecs = {{0.0, 0.0, -1.0}};
  CHECK_THROWS_AS(r_from_profile(south), FullInversionUnrepresentable);
}

TEST_CASE("ab reconstruction is unitary with the requested zeros") {
  testing::Rng rng(127);
  const std::size_t n = 1024;

  SUBCASE("trivial data") {
    const AbFromR ab = ab_from_r({LaurentSeries::zero(), {}}, n);
    for (std::size_t k = 0; k < n; ++k) {
      CHECK(std::abs(ab.a[k] - Complex{1.0, 0.0}) < 1e-12);
      CHECK(std::abs(ab.b[k]) < 1e-12);
    }
  }

  SUBCASE("pure bound state gives the Blaschke factor") {
    ReducedScatteringData data;
    data.bound_states.push_back({Complex{0.5, 0.0}, Complex{1.0, 0.0}});
    const AbFromR ab = ab_from_r(data, n);
    CHECK(std::abs(ab.a_disk(Complex{0.5, 0.0})) < 1e-12);
    CHECK(std::abs(ab.a_disk(Complex{})-Complex{0.5, 0.0}) < 1e-12);
    for (std::size_t k = 0; k < n; ++k) CHECK(std::abs(ab.b[k]) < 1e-14);
  }

  SUBCASE("unimodular r gives constant |a| = 1/sqrt2") {
    ReducedScatteringData data;
    data.r = LaurentSeries::constant(1.0);
    const AbFromR ab = ab_from_r(data, n);
    for (std::size_t k = 0; k < n; ++k)
      CHECK(std::abs(ab.a[k] - Complex{std::sqrt(0.5), 0.0}) < 1e-12);
  }

  SUBCASE("random data: unitarity, b/a = r, interior zeros") {
    ReducedScatteringData data;
    data.r = testing::random_series(rng, -7, 7, 0.4);
    data.bound_states.push_back({Complex{0.3, 0.2}, Complex{1.0, 0.0}});
    data.bound_states.push_back({Complex{-0.5, 0.1}, Complex{0.2, -0.4}});
    const AbFromR ab = ab_from_r(data, n);
    double unit = 0.0, ratio = 0.0;
    const CircleGrid want = sample(data.r, n);
    for (std::size_t k = 0; k < n; ++k) {
      unit = std::max(unit, std::abs(std::norm(ab.a[k]) + std::norm(ab.b[k]) - 1.0));
      ratio = std::max(ratio, std::abs(ab.b[k] / ab.a[k] - want[k]));
    }
    CHECK(unit < 1e-9);
    CHECK(ratio < 1e-9);
    for (const auto& bs : data.bound_states)
      CHECK(std::abs(ab.a_disk(bs.w)) < 1e-8);
    CHECK(ab.a_disk(Complex{}).real() > 0.0);
  }
}

TEST_CASE("left data constants satisfy the product identity") {
  testing::Rng rng(131);
  ReducedScatteringData data;
  data.r = testing::random_series(rng, -5, 5, 0.3);
  data.bound_states.push_back({Complex{0.35, 0.25}, Complex{0.9, 0.4}});
  data.bound_states.push_back({Complex{-0.3, -0.4}, Complex{-0.2, 1.0}});
  const AbFromR ab = ab_from_r(data, 2048);
  const LeftData left = left_data(data, ab);

  // |s| = |r| pointwise
  const CircleGrid want = sample(data.r, 2048);
  for (std::size_t k = 0; k < left.s.size(); k += 37)
    CHECK(std::abs(std::abs(left.s[k]) - std::abs(want[k])) < 1e-9);

  // c_k c~_k a'(w_k)^2 w_k = -1
  for (std::size_t k = 0; k < data.bound_states.size(); ++k) {
    const Complex ap = ab.a_prime_at(k);
    const Complex prod = data.bound_states[k].c * left.tilde[k].c * ap * ap *
                         data.bound_states[k].w;
    CHECK(std::abs(prod + 1.0) < 1e-10);
  }
}

TEST_CASE("ripple conversion formulas") {
  CHECK(delta2_trans_from_ist(0.0) == 0.0);
  CHECK(delta2_trans_from_slr(0.0) == 0.0);
  CHECK(delta1_long_from_ist(0.0) == 0.0);
  CHECK(delta1_long_from_slr(0.0) == 0.0);

  CHECK(delta2_trans_from_ist(0.05) == doctest::Approx(0.1 / 1.0025));

  // small-ripple slopes 2, 2, 1, 2 sqrt 2
  const double eps = 1e-7;
  CHECK(delta2_trans_from_ist(eps) / eps == doctest::Approx(2.0));
  CHECK(delta2_trans_from_slr(eps) / eps == doctest::Approx(2.0));
  CHECK(delta1_long_from_ist(eps) / eps == doctest::Approx(1.0));
  CHECK(delta1_long_from_slr(eps) / eps == doctest::Approx(2.0 * std::sqrt(2.0)));

  // inverses on a sweep
  for (double d = 0.001; d < 0.5; d += 0.017) {
    CHECK(delta2_ist_from_trans(delta2_trans_from_ist(d)) == doctest::Approx(d));
    CHECK(delta2_slr_from_trans(delta2_trans_from_slr(d)) == doctest::Approx(d));
  }

  // strictly increasing
  for (double d = 0.0; d < 0.69; d += 0.023) {
    CHECK(delta2_trans_from_ist(d + 1e-3) > delta2_trans_from_ist(d));
    CHECK(delta2_trans_from_slr(d + 1e-3) > delta2_trans_from_slr(d));
    CHECK(delta1_long_from_ist(d + 1e-3) > delta1_long_from_ist(d));
    CHECK(delta1_long_from_slr(d + 1e-3) > delta1_long_from_slr(d));
  }
}

TEST_CASE("equiripple designs") {
  SUBCASE("empty band gives zero") {
    EquirippleSpec spec;
    spec.rho = 3;
    spec.tau = 0.3;
    spec.delta2 = 0.05;
    spec.band_lo = 0.4;
    spec.band_hi = 0.4;
    CHECK(equiripple_r(spec, 1024).r.is_zero());
  }

  SUBCASE("loose targets are met, support and alternations as promised") {
    EquirippleSpec spec;
    spec.rho = 8;
    spec.tau = 0.7;
    spec.delta1 = 0.2;
    spec.delta2 = 0.05;
    spec.band_lo = -0.9;
    spec.band_hi = 0.9;
    const EquirippleResult res = equiripple_r(spec, 1024);
    CHECK(res.achieved_delta1 <= 0.2);
    CHECK(res.achieved_delta2 <= 0.05);
    CHECK(res.r.min_index() >= -(spec.rho - 1));
    CHECK(res.r.max_index() <= spec.rho - 1);
    CHECK(res.alternations >= static_cast<int>(spec.rho) + 1);
    // real on the circle
    CHECK(res.r.conj_reflected().almost_equal(res.r, 1e-12));
    // the inverted pulse has exactly rho rephasing steps
    const DistInversion inv = dist_invert({res.r, {}}, 1024);
    CHECK(inv.pulse.rephasing_steps() <= spec.rho);
  }

  SUBCASE("solved-for in-slice ripple hits the out-of-slice target") {
    EquirippleSpec spec;
    spec.rho = 10;
    spec.tau = 0.5;
    spec.delta2 = 0.01;
    spec.band_lo = -0.8;
    spec.band_hi = 0.8;
    const EquirippleResult res = equiripple_r(spec, 1024);
    CHECK(res.achieved_delta2 == doctest::Approx(0.01).epsilon(1e-3));
    CHECK(res.achieved_delta1 < 1.0);
    CHECK(res.achieved_delta1 > res.achieved_delta2);
  }

  SUBCASE("off-center band is rotated onto the even problem") {
    EquirippleSpec spec;
    spec.rho = 9;
    spec.tau = 0.6;
    spec.delta1 = 0.3;
    spec.delta2 = 0.08;
    spec.band_lo = 0.2;
    spec.band_hi = 1.4;
    const EquirippleResult res = equiripple_r(spec, 1024);
    CHECK(res.achieved_delta2 <= 0.08 * 1.001);
    // still real on the circle, and selective at the shifted slice
    CHECK(res.r.conj_reflected().almost_equal(res.r, 1e-12));
    const CircleGrid g = sample(res.r, 1024);
    for (std::size_t k = 0; k < g.size(); ++k) {
      CHECK(std::abs(g[k].imag()) < 1e-12);
      double th = g.angle(k);
      if (th > kPi) th -= kTwoPi;
      if (th > 0.2 && th < 1.4) CHECK(g[k].real() > 0.6);
      if (th < 0.2 - 0.6 || th > 1.4 + 0.6) CHECK(std::abs(g[k]) < 0.081);
    }
  }
}

TEST_CASE("self refocused reflection") {
  SUBCASE("flat limit") {
    const SelfRefocusedResult res = self_refocused_r(0.0, 0.0, 0.4, -1.0, 1.0, 512);
    for (std::size_t k = 0; k < 512; ++k)
      CHECK(std::abs(res.r[k] - Complex{0.5, 0.0}) < 1e-12);
  }
  SUBCASE("depth five pins the band values") {
    const double k1 = 5.0, k2 = 5.0;
    const SelfRefocusedResult res = self_refocused_r(k1, k2, 0.5, -1.0, 1.0, 2048);
    const CircleGrid shape = CircleGrid::constant(2048, Complex{});
    const double bound = 2.0 * std::exp(-5.0);
    for (std::size_t k = 0; k < 2048; ++k) {
      double th = shape.angle(k);
      if (th > kPi) th -= kTwoPi;
      if (std::abs(th) < 0.95) CHECK(std::abs(res.r[k] - 1.0) < bound);
      if (std::abs(th) > 1.55) CHECK(std::abs(res.r[k]) < bound);
    }
  }
  SUBCASE("pole report stays inside the disk") {
    const SelfRefocusedResult res = self_refocused_r(6.0, 4.0, 0.6, -1.2, 1.2, 2048);
    for (const auto& p : res.disk_poles) {
      CHECK(std::abs(p) < 1.0);
      CHECK(std::abs(1.0 + std::exp(res.completion.evaluate(p))) < 1e-8);
    }
  }
}

TEST_CASE("half pulse realizes the x profile") {
  const std::size_t n = 1024;
  SUBCASE("zero target gives unimodular R and imaginary-axis r") {
    const CircleGrid r = half_pulse_r(std::vector<double>(n, 0.0));
    for (std::size_t k = 0; k < n; ++k) CHECK(std::abs(r[k].real()) < 1e-12);
  }
  SUBCASE("smooth bump with max 0.9") {
    std::vector<double> mx(n);
    for (std::size_t k = 0; k < n; ++k) {
      double th = kTwoPi * static_cast<double>(k) / n;
      if (th > kPi) th -= kTwoPi;
      mx[k] = 0.9 * std::exp(-th * th * 2.0);
    }
    const CircleGrid r = half_pulse_r(mx);
    for (std::size_t k = 0; k < n; ++k) {
      const double got = 2.0 * r[k].real() / (1.0 + std::norm(r[k]));
      CHECK(std::abs(got - mx[k]) < 1e-8);
    }
  }
  SUBCASE("infeasible target is rejected") {
    std::vector<double> mx(8, 0.0);
    mx[3] = 1.0;
    CHECK_THROWS_AS(half_pulse_r(mx), InfeasibleHalfPulse);
  }
}
