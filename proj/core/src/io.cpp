#include "zspulse/io.hpp"

#include <fstream>
#include <iomanip>
#include <json.hpp>
#include <sstream>

#include "zspulse/errors.hpp"

namespace zs {

using nlohmann::json;

namespace {

json complex_to_json(const Complex& c) { return json::array({c.real(), c.imag()}); }

Complex complex_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2) throw ConfigError("expected [re, im] pair");
  return {j[0].get<double>(), j[1].get<double>()};
}

json cvector_to_json(const CVector& v) {
  json arr = json::array();
  for (const auto& c : v) arr.push_back(complex_to_json(c));
  return arr;
}

CVector cvector_from_json(const json& j) {
  CVector out;
  for (const auto& e : j) out.push_back(complex_from_json(e));
  return out;
}

json series_to_obj(const LaurentSeries& f) {
  json o;
  o["offset"] = f.min_index();
  o["coeffs"] = cvector_to_json(f.raw_coeffs());
  return o;
}

LaurentSeries series_from_obj(const json& o) {
  return LaurentSeries(o.at("offset").get<std::int64_t>(),
                       cvector_from_json(o.at("coeffs")));
}

json parse(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw ConfigError("malformed JSON input");
  return j;
}

}  // namespace

std::string to_json(const LaurentSeries& f) { return series_to_obj(f).dump(); }

LaurentSeries series_from_json(const std::string& text) {
  return series_from_obj(parse(text));
}

std::string to_json(const HardPulse& p) {
  json o;
  o["delta"] = p.delta();
  o["start"] = p.start();
  o["omegas"] = cvector_to_json(p.omegas());
  return o.dump();
}

HardPulse pulse_from_json(const std::string& text) {
  const json o = parse(text);
  return HardPulse(o.at("delta").get<double>(), o.at("start").get<std::int64_t>(),
                   cvector_from_json(o.at("omegas")));
}

std::string to_json(const DiscreteScatteringData& d) {
  json o;
  o["a"] = series_to_obj(d.a);
  o["b"] = series_to_obj(d.b);
  json states = json::array();
  for (const auto& bs : d.bound_states) {
    json s;
    s["w"] = complex_to_json(bs.w);
    s["c_prime"] = complex_to_json(bs.c_prime);
    states.push_back(s);
  }
  o["bound_states"] = states;
  return o.dump();
}

DiscreteScatteringData scattering_from_json(const std::string& text) {
  const json o = parse(text);
  DiscreteScatteringData d;
  d.a = series_from_obj(o.at("a"));
  d.b = series_from_obj(o.at("b"));
  for (const auto& s : o.at("bound_states"))
    d.bound_states.push_back(
        {complex_from_json(s.at("w")), complex_from_json(s.at("c_prime"))});
  return d;
}

std::string to_json(const ReducedScatteringData& d) {
  json o;
  o["r"] = series_to_obj(d.r);
  json states = json::array();
  for (const auto& bs : d.bound_states) {
    json s;
    s["w"] = complex_to_json(bs.w);
    s["c"] = complex_to_json(bs.c);
    states.push_back(s);
  }
  o["bound_states"] = states;
  return o.dump();
}

ReducedScatteringData reduced_from_json(const std::string& text) {
  const json o = parse(text);
  ReducedScatteringData d;
  d.r = series_from_obj(o.at("r"));
  if (o.contains("bound_states"))
    for (const auto& s : o.at("bound_states"))
      d.bound_states.push_back(
          {complex_from_json(s.at("w")), complex_from_json(s.at("c"))});
  return d;
}

std::string to_json(const RationalR& d) {
  json o;
  o["P"] = cvector_to_json(d.P);
  o["Q"] = cvector_to_json(d.Q);
  o["rho"] = d.rho;
  return o.dump();
}

RationalR rational_from_json(const std::string& text) {
  const json o = parse(text);
  RationalR d;
  d.P = cvector_from_json(o.at("P"));
  d.Q = cvector_from_json(o.at("Q"));
  d.rho = o.at("rho").get<std::int64_t>();
  return d;
}

std::string to_json(const SlrPair& d) {
  json o;
  o["A"] = cvector_to_json(d.A);
  o["B"] = cvector_to_json(d.B);
  o["rho"] = d.rho;
  return o.dump();
}

SlrPair slr_pair_from_json(const std::string& text) {
  const json o = parse(text);
  SlrPair d;
  d.A = cvector_from_json(o.at("A"));
  d.B = cvector_from_json(o.at("B"));
  d.rho = o.at("rho").get<std::int64_t>();
  return d;
}

std::string to_json(const ContinuumScatteringData& d) {
  json o;
  o["delta"] = d.delta;
  o["r_hat"] = cvector_to_json(d.r_hat_samples);
  o["r_hat_start_index"] = d.start_index;
  o["energies"] = cvector_to_json(d.energies);
  o["constants"] = cvector_to_json(d.constants);
  return o.dump();
}

ContinuumScatteringData continuum_from_json(const std::string& text) {
  const json o = parse(text);
  ContinuumScatteringData d;
  d.delta = o.at("delta").get<double>();
  d.r_hat_samples = cvector_from_json(o.at("r_hat"));
  d.start_index = o.at("r_hat_start_index").get<std::int64_t>();
  d.energies = cvector_from_json(o.at("energies"));
  d.constants = cvector_from_json(o.at("constants"));
  return d;
}

void write_pulse_csv(const HardPulse& p, const std::string& path) {
  std::ostringstream out;
  out << "t,re_omega,im_omega\n" << std::setprecision(17);
  for (std::int64_t j = p.start(); j < p.end(); ++j) {
    const Complex w = p.omega(j);
    out << static_cast<double>(j) * p.delta() << "," << w.real() << ","
        << w.imag() << "\n";
  }
  write_text_file(path, out.str());
}

void write_profile_csv(const MagnetizationProfile& m, const std::string& path) {
  std::ostringstream out;
  out << "z,mx,my,mz\n" << std::setprecision(17);
  for (std::size_t i = 0; i < m.freqs.size(); ++i)
    out << m.freqs[i] << "," << m.vecs[i][0] << "," << m.vecs[i][1] << ","
        << m.vecs[i][2] << "\n";
  write_text_file(path, out.str());
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ConfigError("cannot write " + path);
  out << content;
}

}  // namespace zs
