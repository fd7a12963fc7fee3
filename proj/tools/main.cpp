// Command-line front end: batch pulse design, inversion, simulation and
// analysis driven by a single JSON config per job.

#include <CLI11.hpp>
#include <cmath>
#include <filesystem>
#include <iostream>
#include <json.hpp>
#include <random>
#include <string>

#include "zspulse/bloch.hpp"
#include "zspulse/bridge.hpp"
#include "zspulse/design.hpp"
#include "zspulse/dist.hpp"
#include "zspulse/errors.hpp"
#include "zspulse/finite_rephasing.hpp"
#include "zspulse/forward.hpp"
#include "zspulse/io.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace zs;

namespace {

struct Job {
  std::string command;
  std::string method;
  std::size_t grid = 4096;
  std::uint64_t seed = 1;
  fs::path out = ".";
  bool quiet = false;
  json params;
};

void say(const Job& job, const std::string& line) {
  if (!job.quiet) std::cout << line << "\n";
}

void write_out(const Job& job, const std::string& name, const std::string& text) {
  fs::create_directories(job.out);
  write_text_file((job.out / name).string(), text);
}

// at least the requested size, and wide enough for the scattering support
std::size_t grid_for(const ForwardScattering& fw, std::size_t requested) {
  std::size_t need = std::max(fw.a.support_width(), fw.b.support_width());
  std::size_t g = std::max<std::size_t>(requested, 8);
  while (g < need) g <<= 1;
  return g;
}

double unitarity_defect_of(const ForwardScattering& fw, std::size_t grid) {
  grid = grid_for(fw, grid);
  const CircleGrid ag = sample(fw.a, grid);
  const CircleGrid bg = sample(fw.b, grid);
  double worst = 0.0;
  for (std::size_t k = 0; k < grid; ++k)
    worst = std::max(worst, std::abs(std::norm(ag[k]) + std::norm(bg[k]) - 1.0));
  return worst;
}

// fail-closed: no pulse reaches disk unless its scattering matrix is unitary
ForwardScattering write_pulse_checked(const Job& job, const HardPulse& p,
                                      const std::string& name = "pulse") {
  const ForwardScattering fw = forward_scatter(p);
  const double defect = unitarity_defect_of(fw, std::max<std::size_t>(job.grid, 1024));
  if (defect > 1e-8)
    throw NotUnitary("refusing to write a pulse with unitarity defect " +
                     std::to_string(defect));
  write_out(job, name + ".json", to_json(p));
  write_pulse_csv(p, (job.out / (name + ".csv")).string());
  return fw;
}

MagnetizationProfile profile_of(const ForwardScattering& fw, double delta,
                                std::size_t grid) {
  grid = grid_for(fw, grid);
  const CircleGrid r = sample(fw.b, grid) / sample(fw.a, grid);
  return profile_from_r(r, delta);
}

json diagnostics_of(const DistInversion& inv) {
  json d;
  d["gamma0_gap"] = inv.diag.gamma0_gap;
  d["m_plus"] = inv.diag.m_plus;
  d["m_minus"] = inv.diag.m_minus;
  d["doublings"] = inv.diag.doublings;
  return d;
}

double roundtrip_error(const ReducedScatteringData& data, const HardPulse& p,
                       std::size_t grid) {
  const ForwardScattering fw = forward_scatter(p);
  std::size_t g = grid_for(fw, grid);
  while (g < data.r.support_width()) g <<= 1;
  const CircleGrid got = sample(fw.b, g) / sample(fw.a, g);
  const CircleGrid want = sample(data.r, g);
  double worst = 0.0;
  for (std::size_t k = 0; k < g; ++k)
    worst = std::max(worst, std::abs(got[k] - want[k]));
  return worst;
}

json invert_and_emit(const Job& job, const ReducedScatteringData& data, double delta) {
  const DistInversion inv = dist_invert(data, job.grid, delta);
  const ForwardScattering fw = write_pulse_checked(job, inv.pulse);
  write_profile_csv(profile_of(fw, delta, job.grid),
                    (job.out / "profile.csv").string());

  json diag = diagnostics_of(inv);
  diag["roundtrip_error"] = roundtrip_error(data, inv.pulse, job.grid);
  // the energies are part of the design data; no root scan needed here
  DiscreteScatteringData sd{fw.a, fw.b, {}};
  for (const auto& bs : data.bound_states) sd.bound_states.push_back({bs.w, {}});
  diag["energy_residual"] = energy_residual(inv.pulse, sd, grid_for(fw, job.grid));
  diag["rephasing_steps"] = inv.pulse.rephasing_steps();
  diag["impulses"] = inv.pulse.impulse_count();
  diag["max_amplitude"] = inv.pulse.max_amplitude();
  return diag;
}

// ---------------------------------------------------------------- design --

void run_design_equiripple(const Job& job) {
  EquirippleSpec spec;
  spec.rho = job.params.at("rho").get<std::int64_t>();
  spec.tau = job.params.at("tau").get<double>();
  if (job.params.contains("delta1")) spec.delta1 = job.params["delta1"].get<double>();
  if (job.params.contains("delta2")) spec.delta2 = job.params["delta2"].get<double>();
  spec.band_lo = job.params.at("band")[0].get<double>();
  spec.band_hi = job.params.at("band")[1].get<double>();
  const double delta = job.params.value("delta", 1.0);

  const EquirippleResult res = equiripple_r(spec, job.grid);
  json achieved;
  achieved["achieved_delta1"] = res.achieved_delta1;
  achieved["achieved_delta2"] = res.achieved_delta2;
  achieved["alternations"] = res.alternations;
  write_out(job, "achieved.json", achieved.dump(2));
  write_out(job, "reflection.json", to_json(res.r));

  json diag = invert_and_emit(job, {res.r, {}}, delta);
  write_out(job, "diagnostics.json", diag.dump(2));
  say(job, "equiripple design: delta1=" + std::to_string(res.achieved_delta1) +
               " delta2=" + std::to_string(res.achieved_delta2));
}

void run_design_selfrefocused(const Job& job) {
  const double k1 = job.params.at("k1").get<double>();
  const double k2 = job.params.at("k2").get<double>();
  const double tau = job.params.at("tau").get<double>();
  const double lo = job.params.at("band")[0].get<double>();
  const double hi = job.params.at("band")[1].get<double>();
  const double delta = job.params.value("delta", 1.0);

  const SelfRefocusedResult res = self_refocused_r(k1, k2, tau, lo, hi, job.grid);
  ReducedScatteringData data;
  data.r = res.r.to_series(1e-13);
  // each disk pole is a bound state with the residue as constant
  CVector dcomp;
  for (std::int64_t n = 1; n <= res.completion.max_index(); ++n)
    dcomp.push_back(res.completion.coeff(n) * static_cast<double>(n));
  const LaurentSeries rprime(0, dcomp);
  for (const auto& p : res.disk_poles)
    data.bound_states.push_back({p, 1.0 / rprime.evaluate(p)});

  json diag = invert_and_emit(job, data, delta);
  diag["disk_poles"] = res.disk_poles.size();
  write_out(job, "diagnostics.json", diag.dump(2));
  say(job, "self-refocused design with " + std::to_string(res.disk_poles.size()) +
               " disk poles");
}

void run_design_halfpulse(const Job& job) {
  const double amplitude = job.params.value("amplitude", 0.9);
  const double width = job.params.value("width", 0.8);
  const double delta = job.params.value("delta", 1.0);
  std::vector<double> mx(job.grid);
  for (std::size_t k = 0; k < job.grid; ++k) {
    double th = kTwoPi * static_cast<double>(k) / static_cast<double>(job.grid);
    if (th > kPi) th -= kTwoPi;
    mx[k] = amplitude * std::exp(-(th * th) / (width * width));
  }
  const CircleGrid r = half_pulse_r(mx);
  json diag = invert_and_emit(job, {r.to_series(1e-13), {}}, delta);
  write_out(job, "diagnostics.json", diag.dump(2));
  say(job, "half pulse design done");
}

void run_design_slr(const Job& job) {
  const double mz = job.params.value("mz_in_slice", 0.0);
  const double band_hi = job.params.at("band_hi").get<double>();
  const double tau = job.params.at("tau").get<double>();
  const std::int64_t degree_t = job.params.at("degree").get<std::int64_t>();
  const double stop_weight = job.params.value("stop_weight", 4.0);
  const std::int64_t rho = job.params.value("rho", degree_t / 2);
  const double delta = job.params.value("delta", 1.0);

  const SlrDesign des = slr_design_b(mz, band_hi, tau, degree_t, stop_weight, rho);
  const HardPulse pulse = slr_invert(des.pair);
  const ForwardScattering fw = write_pulse_checked(job, pulse);
  write_profile_csv(profile_of(fw, delta, job.grid), (job.out / "profile.csv").string());
  write_out(job, "pair.json", to_json(des.pair));

  json achieved;
  achieved["achieved_ripple_pass"] = des.achieved_ripple_pass;
  achieved["achieved_ripple_stop"] = des.achieved_ripple_stop;
  achieved["impulses"] = pulse.impulse_count();
  write_out(job, "achieved.json", achieved.dump(2));
  write_out(job, "diagnostics.json",
            json{{"unitarity_defect", unitarity_defect(des.pair)}}.dump(2));
  say(job, "slr design done");
}

void run_design_dist(const Job& job) {
  // ideal slice profile with erf-smoothed flip-angle edges (fast coefficient
  // decay), inverted as a minimum-energy pulse plus any injected bound states
  const double theta0 = job.params.at("theta0").get<double>();
  const double lo = job.params.at("band")[0].get<double>();
  const double hi = job.params.at("band")[1].get<double>();
  const double tau = job.params.at("tau").get<double>();
  const double delta = job.params.value("delta", 1.0);

  CVector r_vals(job.grid);
  for (std::size_t k = 0; k < job.grid; ++k) {
    double th = kTwoPi * static_cast<double>(k) / static_cast<double>(job.grid);
    if (th > kPi) th -= kTwoPi;
    const double s = tau / 4.0;
    const double window = 0.5 * (std::erf((hi - th) / s) - std::erf((lo - th) / s));
    r_vals[k] = Complex{0.0, std::tan(0.5 * theta0 * window)};
  }
  ReducedScatteringData data;
  data.r = CircleGrid(std::move(r_vals)).to_series(1e-13);
  if (job.params.contains("bound_states"))
    for (const auto& s : job.params["bound_states"])
      data.bound_states.push_back(
          {Complex{s[0][0].get<double>(), s[0][1].get<double>()},
           Complex{s[1][0].get<double>(), s[1][1].get<double>()}});

  json diag = invert_and_emit(job, data, delta);
  write_out(job, "diagnostics.json", diag.dump(2));
  say(job, "ideal-profile design done");
}

// ---------------------------------------------------------------- invert --

void run_invert(const Job& job) {
  const std::string path = job.params.at("data").get<std::string>();
  const double delta = job.params.value("delta", 1.0);
  if (job.method == "dist") {
    const ReducedScatteringData data = reduced_from_json(read_text_file(path));
    const json diag = invert_and_emit(job, data, delta);
    write_out(job, "diagnostics.json", diag.dump(2));
  } else if (job.method == "frt") {
    const RationalR data = rational_from_json(read_text_file(path));
    const FrtResult res = frt_invert(data);
    const ForwardScattering fw = write_pulse_checked(job, res.pulse);
    write_profile_csv(profile_of(fw, delta, job.grid), (job.out / "profile.csv").string());
    json diag;
    diag["truncated_tail"] = res.truncated_tail;
    diag["impulses"] = res.pulse.impulse_count();
    diag["rephasing_steps"] = res.pulse.rephasing_steps();
    write_out(job, "diagnostics.json", diag.dump(2));
  } else if (job.method == "slr") {
    const SlrPair pair = slr_pair_from_json(read_text_file(path));
    const HardPulse pulse = slr_invert(pair);
    const ForwardScattering fw = write_pulse_checked(job, pulse);
    write_profile_csv(profile_of(fw, delta, job.grid), (job.out / "profile.csv").string());
    json diag;
    diag["impulses"] = pulse.impulse_count();
    diag["unitarity_defect"] = unitarity_defect(pair);
    write_out(job, "diagnostics.json", diag.dump(2));
  } else {
    throw ConfigError("unknown invert method: " + job.method);
  }
  say(job, "inversion done");
}

// ---------------------------------------------------- simulate / analyze --

void run_simulate(const Job& job) {
  const HardPulse p = pulse_from_json(read_text_file(job.params.at("pulse").get<std::string>()));
  const int substeps = job.params.value("substeps", 64);

  const MagnetizationProfile hard = hard_simulate(p, job.grid);
  write_profile_csv(hard, (job.out / "profile.csv").string());

  std::vector<double> zs_grid(job.grid);
  for (std::size_t k = 0; k < job.grid; ++k)
    zs_grid[k] = kTwoPi * static_cast<double>(k) / static_cast<double>(job.grid) / p.delta();
  const BlochResult soft = bloch_simulate(soften(p), zs_grid, substeps);
  write_profile_csv(soft.profile, (job.out / "profile_soft.csv").string());

  double worst_gap = 0.0, worst_bound = 0.0;
  for (std::size_t k = 0; k < job.grid; ++k) {
    worst_gap = std::max(worst_gap,
                         geodesic_distance(hard.vecs[k], soft.profile.vecs[k]));
    worst_bound = std::max(worst_bound, softening_error_bound(p, zs_grid[k]));
  }
  json diag;
  diag["hard_soft_gap"] = worst_gap;
  diag["softening_bound"] = worst_bound;
  diag["rk4_norm_drift"] = soft.max_norm_drift;
  write_out(job, "diagnostics.json", diag.dump(2));
  say(job, "simulate: hard/soft gap " + std::to_string(worst_gap));
}

void run_analyze(const Job& job) {
  const HardPulse p = pulse_from_json(read_text_file(job.params.at("pulse").get<std::string>()));
  const ForwardScattering fw = forward_scatter(p);
  const BoundStateScan scan = find_bound_states(p);

  DiscreteScatteringData data{fw.a, fw.b, scan.states};
  write_out(job, "scattering.json", to_json(data));
  write_profile_csv(profile_of(fw, p.delta(), job.grid), (job.out / "profile.csv").string());

  json diag;
  diag["unitarity_defect"] = unitarity_defect_of(fw, job.grid);
  diag["energy_residual"] = energy_residual(p, data, grid_for(fw, job.grid));
  diag["bound_states"] = scan.states.size();
  diag["near_boundary_roots"] = scan.near_boundary.size();
  diag["soft_energy"] = p.soft_energy();
  diag["log_energy_sum"] = p.log_energy_sum();
  diag["max_amplitude"] = p.max_amplitude();
  write_out(job, "diagnostics.json", diag.dump(2));
  say(job, "analyze: " + std::to_string(scan.states.size()) + " bound states");
}

void run_roundtrip(const Job& job) {
  std::mt19937_64 rng(job.seed);
  std::uniform_real_distribution<double> u(-0.4, 0.4);
  const std::int64_t lo = -8, hi = 6;
  CVector coeffs(static_cast<std::size_t>(hi - lo + 1));
  for (auto& c : coeffs) c = Complex{u(rng), u(rng)};
  ReducedScatteringData data;
  data.r = LaurentSeries(lo, std::move(coeffs));
  if (job.params.value("with_bound_state", true))
    data.bound_states.push_back({Complex{0.15 + 0.4 * std::abs(u(rng)), 0.3 * u(rng)},
                                 Complex{u(rng) + 0.5, u(rng)}});

  const json diag = invert_and_emit(job, data, 1.0);
  write_out(job, "diagnostics.json", diag.dump(2));
  const double err = diag.at("roundtrip_error").get<double>();
  say(job, "roundtrip error " + std::to_string(err));
  if (err > (data.bound_states.empty() ? 1e-6 : 1e-5))
    throw TruncationInsufficient("roundtrip error above tolerance");
}

void run(const Job& job) {
  if (job.command == "design") {
    if (job.method == "equiripple") return run_design_equiripple(job);
    if (job.method == "selfrefocused") return run_design_selfrefocused(job);
    if (job.method == "halfpulse") return run_design_halfpulse(job);
    if (job.method == "slr") return run_design_slr(job);
    if (job.method == "dist") return run_design_dist(job);
    throw ConfigError("unknown design method: " + job.method);
  }
  if (job.command == "invert") return run_invert(job);
  if (job.command == "simulate") return run_simulate(job);
  if (job.command == "analyze") return run_analyze(job);
  if (job.command == "roundtrip") return run_roundtrip(job);
  throw ConfigError("unknown command: " + job.command);
}

void report_error(const Job& job, const std::string& type, const std::string& what) {
  json e;
  e["error"]["type"] = type;
  e["error"]["message"] = what;
  std::cerr << e.dump() << "\n";
  try {
    write_out(job, "error.json", e.dump(2));
  } catch (...) {
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hard-pulse design by discrete inverse scattering"};
  std::string config_path;
  std::string out_dir;
  std::int64_t grid = 0;
  std::int64_t seed = -1;
  bool quiet = false;
  app.add_option("--config", config_path, "job config JSON")->required();
  app.add_option("--out", out_dir, "output directory (overrides config)");
  app.add_option("--grid", grid, "circle grid size, power of two (overrides config)");
  app.add_option("--seed", seed, "random seed (overrides config)");
  app.add_flag("--quiet", quiet, "suppress stdout (diagnostics files still written)");
  CLI11_PARSE(app, argc, argv);

  Job job;
  try {
    const json cfg = json::parse(read_text_file(config_path), nullptr, false);
    if (cfg.is_discarded()) throw ConfigError("config is not valid JSON");
    job.command = cfg.at("command").get<std::string>();
    job.method = cfg.value("method", "");
    job.grid = cfg.value("grid", std::size_t{4096});
    job.seed = cfg.value("seed", std::uint64_t{1});
    job.out = cfg.value("out", std::string{"."});
    job.params = cfg.value("params", json::object());
    if (!out_dir.empty()) job.out = out_dir;
    if (grid > 0) job.grid = static_cast<std::size_t>(grid);
    if (seed >= 0) job.seed = static_cast<std::uint64_t>(seed);
    job.quiet = quiet;
    if (!is_pow2(job.grid)) throw ConfigError("grid size must be a power of two");
  } catch (const std::exception& e) {
    report_error(job, "config", e.what());
    return 2;
  }

  try {
    fs::create_directories(job.out);
    run(job);
  } catch (const ConfigError& e) {
    report_error(job, "config", e.what());
    return 2;
  } catch (const Error& e) {
    report_error(job, "numerical", e.what());
    return 3;
  } catch (const std::exception& e) {
    report_error(job, "internal", e.what());
    return 3;
  }
  return 0;
}
