#pragma once

#include <string>

#include "zspulse/bridge.hpp"
#include "zspulse/finite_rephasing.hpp"
#include "zspulse/forward.hpp"
#include "zspulse/laurent.hpp"
#include "zspulse/pulse.hpp"

namespace zs {

// JSON wire formats:
//   LaurentSeries  {"offset": int, "coeffs": [[re, im], ...]}
//   HardPulse      {"delta": float, "start": int, "omegas": [[re, im], ...]}
//   scattering     {"a": series, "b": series, "bound_states":
//                     [{"w": [re, im], "c_prime": [re, im]}]}
//   reduced data   {"r": series, "bound_states": [{"w": .., "c": ..}]}
//   polynomial     {"coeffs": [[re, im], ...]}
//   continuum      {"delta": f, "r_hat": [...], "r_hat_start_index": int,
//                   "energies": [...], "constants": [...]}

std::string to_json(const LaurentSeries& f);
LaurentSeries series_from_json(const std::string& text);

std::string to_json(const HardPulse& p);
HardPulse pulse_from_json(const std::string& text);

std::string to_json(const DiscreteScatteringData& d);
DiscreteScatteringData scattering_from_json(const std::string& text);

std::string to_json(const ReducedScatteringData& d);
ReducedScatteringData reduced_from_json(const std::string& text);

std::string to_json(const RationalR& d);
RationalR rational_from_json(const std::string& text);

std::string to_json(const SlrPair& d);
SlrPair slr_pair_from_json(const std::string& text);

std::string to_json(const ContinuumScatteringData& d);
ContinuumScatteringData continuum_from_json(const std::string& text);

// Plot-ready CSV pair: pulse.csv has t, Re omega, Im omega; profile.csv has
// z, Mx, My, Mz.
void write_pulse_csv(const HardPulse& p, const std::string& path);
void write_profile_csv(const MagnetizationProfile& m, const std::string& path);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace zs
