#include <doctest.h>

#include <cstdio>
#include <sstream>

#include "test_support.hpp"
#include "zspulse/errors.hpp"
#include "zspulse/io.hpp"

using namespace zs;

TEST_CASE("json round trips") {
  testing::Rng rng(163);

  SUBCASE("series") {
    const LaurentSeries f = testing::random_series(rng, -5, 9);
    CHECK(series_from_json(to_json(f)).almost_equal(f, 0.0));
  }
  SUBCASE("pulse") {
    const HardPulse p = testing::random_pulse(rng, 20, 1.0);
    const HardPulse q = pulse_from_json(to_json(p));
    CHECK(q.delta() == p.delta());
    CHECK(q.start() == p.start());
    CHECK(q.omegas() == p.omegas());
  }
  SUBCASE("scattering data") {
    DiscreteScatteringData d;
    d.a = testing::random_series(rng, 0, 6);
    d.b = testing::random_series(rng, -6, 0);
    d.bound_states.push_back({Complex{0.3, 0.2}, Complex{1.5, -0.5}});
    const DiscreteScatteringData e = scattering_from_json(to_json(d));
    CHECK(e.a.almost_equal(d.a, 0.0));
    CHECK(e.b.almost_equal(d.b, 0.0));
    REQUIRE(e.bound_states.size() == 1);
    CHECK(e.bound_states[0].w == d.bound_states[0].w);
    CHECK(e.bound_states[0].c_prime == d.bound_states[0].c_prime);
  }
  SUBCASE("reduced data") {
    ReducedScatteringData d;
    d.r = testing::random_series(rng, -4, 4);
    d.bound_states.push_back({Complex{-0.1, 0.4}, Complex{0.0, 2.0}});
    const ReducedScatteringData e = reduced_from_json(to_json(d));
    CHECK(e.r.almost_equal(d.r, 0.0));
    CHECK(e.bound_states[0].w == d.bound_states[0].w);
    CHECK(e.bound_states[0].c == d.bound_states[0].c);
  }
  SUBCASE("rational and pair data") {
    RationalR rat{{Complex{}, Complex{1.0, 2.0}}, {Complex{3.0, 0.0}}, 2};
    const RationalR rat2 = rational_from_json(to_json(rat));
    CHECK(rat2.P == rat.P);
    CHECK(rat2.Q == rat.Q);
    CHECK(rat2.rho == rat.rho);

    SlrPair pair{{Complex{0.8, 0.0}}, {Complex{0.6, 0.0}}, 1};
    const SlrPair pair2 = slr_pair_from_json(to_json(pair));
    CHECK(pair2.A == pair.A);
    CHECK(pair2.B == pair.B);
    CHECK(pair2.rho == pair.rho);
  }
  SUBCASE("continuum data") {
    ContinuumScatteringData d;
    d.delta = 0.2;
    d.start_index = -3;
    d.r_hat_samples = {Complex{1.0, 0.0}, Complex{0.5, 0.5}};
    d.energies = {Complex{0.0, 1.0}};
    d.constants = {Complex{2.0, 0.0}};
    const ContinuumScatteringData e = continuum_from_json(to_json(d));
    CHECK(e.delta == d.delta);
    CHECK(e.start_index == d.start_index);
    CHECK(e.r_hat_samples == d.r_hat_samples);
    CHECK(e.energies == d.energies);
    CHECK(e.constants == d.constants);
  }
  SUBCASE("malformed input") {
    CHECK_THROWS_AS(pulse_from_json("not json"), ConfigError);
    CHECK_THROWS_AS(series_from_json("{\"offset\": 0}"), std::exception);
  }
}

TEST_CASE("csv emitters") {
  const char* pulse_path = "io_test_pulse.csv";
  const char* prof_path = "io_test_profile.csv";

  write_pulse_csv(HardPulse(0.5, -1, {Complex{1.0, -2.0}, Complex{0.0, 3.0}}), pulse_path);
  const std::string pulse_text = read_text_file(pulse_path);
  CHECK(pulse_text.substr(0, 22) == "t,re_omega,im_omega\n-0");
  CHECK(pulse_text.find("\n0,0,3\n") != std::string::npos);

  MagnetizationProfile m;
  m.freqs = {0.0, 1.0};
  m.vecs = {{0.0, 0.0, 1.0}, {1.0, 0.0, 0.0}};
  write_profile_csv(m, prof_path);
  const std::string prof_text = read_text_file(prof_path);
  CHECK(prof_text.find("z,mx,my,mz\n") == 0);
  CHECK(prof_text.find("1,1,0,0") != std::string::npos);

  std::remove(pulse_path);
  std::remove(prof_path);
}
