#include <doctest.h>

#include <cmath>

#include "test_support.hpp"
#include "zspulse/bloch.hpp"
#include "zspulse/errors.hpp"
#include "zspulse/pulse.hpp"

using namespace zs;

TEST_CASE("canonical pulse form trims zero impulses") {
  const HardPulse p(0.5, -2, {Complex{}, Complex{1.0, 0.0}, Complex{}, Complex{}});
  CHECK(p.start() == -1);
  CHECK(p.end() == 0);
  CHECK(p.rephasing_steps() == 0);
  CHECK(p.duration_steps() == 0);
  CHECK(p.impulse_count() == 1);
}

TEST_CASE("potential weights have half the impulse modulus") {
  CHECK(to_potential(HardPulse(1.0, 0, {Complex{0.7, 0.0}}))[0] ==
        Complex{0.0, -0.35});

  testing::Rng rng(21);
  const HardPulse p = testing::random_pulse(rng, 32, 1.5);
  const CVector mu = to_potential(p);
  for (std::size_t i = 0; i < mu.size(); ++i)
    CHECK(std::abs(mu[i]) == doctest::Approx(0.5 * std::abs(p.omegas()[i])));
}

TEST_CASE("gamma/mu conversions invert each other") {
  CHECK(mu_of_gamma(Complex{}) == Complex{});
  CHECK(gamma_of_mu(Complex{}) == Complex{});
  const Complex mu{0.0, -kPi / 8.0};
  CHECK(std::abs(gamma_of_mu(mu) - Complex{0.0, -std::tan(kPi / 8.0)}) < 1e-15);
  CHECK_THROWS_AS(gamma_of_mu(Complex{kPi / 2.0, 0.0}), FlipAngleOverflow);

  testing::Rng rng(23);
  for (int rep = 0; rep < 100; ++rep) {
    const Complex g = testing::random_complex(rng, 7.0);
    const Complex back = gamma_of_mu(mu_of_gamma(g));
    CHECK(std::abs(back - g) <= 1e-14 * (1.0 + std::abs(g)));
  }
}

TEST_CASE("softened pulse energy") {
  CHECK(HardPulse(0.1, 0, {}).soft_energy() == 0.0);
  const double th = kPi / 2.0;
  CHECK(HardPulse(0.1, 0, {Complex{th, 0.0}}).soft_energy() ==
        doctest::Approx(th * th / 0.1));
  // halving the step doubles the energy
  testing::Rng rng(29);
  const HardPulse p(0.2, 0, testing::random_pulse(rng, 16, 1.0).omegas());
  const HardPulse q(0.1, 0, p.omegas());
  CHECK(q.soft_energy() == doctest::Approx(2.0 * p.soft_energy()));
  const SoftPulse sp = soften(p);
  CHECK(sp.energy() == doctest::Approx(p.soft_energy()));
}

TEST_CASE("zero pulse leaves every frequency at equilibrium") {
  const std::vector<double> zs_grid{-3.0, -1.0, 0.0, 2.0, 5.0};
  const MagnetizationProfile hard = hard_simulate(HardPulse(1.0, 0, {}), zs_grid);
  for (const auto& v : hard.vecs) {
    CHECK(v[0] == doctest::Approx(0.0));
    CHECK(v[1] == doctest::Approx(0.0));
    CHECK(v[2] == doctest::Approx(1.0));
  }
}

TEST_CASE("on-resonance flip angle equals the pulse area") {
  // constant-amplitude pulse of total area pi/2 rotates equilibrium a
  // quarter turn about the x-axis at z = 0
  const int n = 16;
  const double area = kPi / 2.0;
  CVector omegas(n, Complex{area / n, 0.0});
  const HardPulse p(0.05, 0, omegas);
  const BlochResult soft = bloch_simulate(soften(p), {0.0});
  CHECK(std::abs(soft.profile.vecs[0][2]) < 1e-8);  // Mz -> cos(pi/2)
  CHECK(std::abs(soft.profile.vecs[0][1]) == doctest::Approx(1.0));
  CHECK(soft.max_norm_drift < 1e-8);

  // arbitrary area theta: Mz = cos theta on resonance
  for (const double theta : {0.3, 1.1, 2.4}) {
    CVector om(n, Complex{theta / n, 0.0});
    const BlochResult res = bloch_simulate(soften(HardPulse(0.05, 0, om)), {0.0});
    CHECK(std::abs(res.profile.vecs[0][2] - std::cos(theta)) < 1e-8);
  }
}

TEST_CASE("single hard impulse rotates by |omega| at every frequency") {
  const double th = 1.234;
  const HardPulse p(1.0, 0, {Complex{th, 0.0}});
  const MagnetizationProfile prof = hard_simulate(p, std::size_t{64});
  for (const auto& v : prof.vecs) CHECK(v[2] == doctest::Approx(std::cos(th)));
}

TEST_CASE("90-degree sinc pulse carves a boxcar slice") {
  // ten-lobe sinc, area pi/2: transverse magnetization approximates the band
  // indicator with sidelobes
  const int half = 40;  // 8 samples per lobe
  CVector om(2 * half + 1);
  double area = 0.0;
  for (int j = -half; j <= half; ++j) {
    const double x = kPi * j / 8.0;
    const double s = (j == 0) ? 1.0 : std::sin(x) / x;
    om[static_cast<std::size_t>(j + half)] = s;
    area += s;
  }
  for (auto& w : om) w *= 0.5 * kPi / area;
  const HardPulse p(1.0, -half, std::move(om));

  std::vector<double> zs_grid;
  for (int i = -120; i <= 120; ++i) zs_grid.push_back(0.01 * i);
  const MagnetizationProfile prof = hard_simulate(p, zs_grid);
  for (std::size_t i = 0; i < zs_grid.size(); ++i) {
    const double z = zs_grid[i];
    const double mt = std::hypot(prof.vecs[i][0], prof.vecs[i][1]);
    if (std::abs(z) < 0.25) CHECK(mt > 0.9);   // in the slice
    if (std::abs(z) > 0.65) CHECK(mt < 0.45);  // sidelobe region
  }
  CHECK(std::abs(prof.vecs.back()[2]) > 0.85);  // near equilibrium off-slice
}

TEST_CASE("hard evolution preserves unit norm") {
  testing::Rng rng(31);
  for (int rep = 0; rep < 10; ++rep) {
    const HardPulse p = testing::random_pulse(rng, 64, 1.5);
    const MagnetizationProfile prof = hard_simulate(p, std::size_t{128});
    CHECK(prof.max_norm_deviation() < 1e-12);
  }
}

TEST_CASE("rk4 order four against step halving") {
  testing::Rng rng(37);
  const HardPulse p = testing::random_pulse(rng, 8, 1.2, 0, 0);
  const SoftPulse s = soften(p);
  const double z = 1.7;

  auto run = [&](int substeps) { return bloch_simulate(s, {z}, substeps).profile.vecs[0]; };
  const Vec3 fine = run(512);  // Richardson reference
  const double e1 = geodesic_distance(run(16), fine);
  const double e2 = geodesic_distance(run(32), fine);
  CHECK(e1 / e2 > 12.0);  // ~16x per halving
  CHECK(e1 / e2 < 20.0);
}

TEST_CASE("softening discrepancy stays within the conjectured bound") {
  CHECK(softening_error_bound(HardPulse(1.0, 0, {}), 3.0) == 0.0);

  testing::Rng rng(41);
  for (int rep = 0; rep < 25; ++rep) {
    const HardPulse p = testing::random_pulse(rng, 12, 1.0, -4, 4);
    std::uniform_real_distribution<double> zd(-4.0, 4.0);
    const double z = zd(rng);
    const MagnetizationProfile hard = hard_simulate(p, std::vector<double>{z});
    const BlochResult soft = bloch_simulate(soften(p), {z});
    const double gap = geodesic_distance(hard.vecs[0], soft.profile.vecs[0]);
    CHECK(gap <= softening_error_bound(p, z) + 1e-9);
  }

  // on resonance the two evolutions coincide
  testing::Rng rng2(43);
  const HardPulse p = testing::random_pulse(rng2, 8, 1.0);
  const MagnetizationProfile hard = hard_simulate(p, std::vector<double>{0.0});
  const BlochResult soft = bloch_simulate(soften(p), {0.0});
  CHECK(geodesic_distance(hard.vecs[0], soft.profile.vecs[0]) < 1e-10);
}
