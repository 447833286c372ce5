#include "qaoa/error_model.hpp"

#include <cmath>

#include <json.hpp>

#include "qaoa/error.hpp"
#include "qaoa/text.hpp"

namespace qaoa {

void validate(const DeviceParams& d) {
  if (!(d.t_cx_ns > 0.0) || !std::isfinite(d.t_cx_ns)) throw Error(Errc::InvalidDevice, "t_cx must be > 0");
  if (!(d.t1_ns > 0.0) || !std::isfinite(d.t1_ns)) throw Error(Errc::InvalidDevice, "T1 must be > 0");
  if (!(d.p_cx >= 0.0 && d.p_cx < 1.0)) throw Error(Errc::InvalidDevice, "p_cx must lie in [0,1)");
}

DeviceParams parse_device(const std::string& json_text) {
  DeviceParams d;
  try {
    const auto doc = nlohmann::json::parse(json_text);
    d.name = doc.at("name").get<std::string>();
    d.t_cx_ns = doc.at("t_cx_ns").get<double>();
    d.t1_ns = doc.at("T1_ns").get<double>();
    d.p_cx = doc.at("p_cx").get<double>();
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::InvalidDevice, std::string("device profile: ") + e.what());
  }
  validate(d);
  return d;
}

std::string device_to_json(const DeviceParams& d) {
  const nlohmann::json doc{{"name", d.name}, {"t_cx_ns", d.t_cx_ns}, {"T1_ns", d.t1_ns}, {"p_cx", d.p_cx}};
  return doc.dump(2) + "\n";
}

DeviceParams read_device_file(const std::string& path) { return parse_device(text::read_file(path)); }

double p_success(long long k, long long n_layers, const DeviceParams& d) {
  validate(d);
  if (k < 0 || n_layers < 0) throw Error(Errc::InvalidReduction, "k and N must be non-negative");
  return std::pow(1.0 - d.p_cx, static_cast<double>(k)) *
         std::exp(-static_cast<double>(n_layers) * d.t_cx_ns / d.t1_ns);
}

double p_success_opt(long long k, long long n_layers, long long k1, long long n1,
                     const DeviceParams& d) {
  if (k1 < 0 || k1 > k) throw Error(Errc::InvalidReduction, "need 0 <= k1 <= k");
  if (n_layers + n1 < 0) throw Error(Errc::InvalidReduction, "need N + N1 >= 0");
  return p_success(k - k1, n_layers + n1, d);
}

double lambda(const DeviceParams& d) {
  validate(d);
  return -std::log1p(-d.p_cx) * d.t1_ns / d.t_cx_ns;
}

int dfs_worst_case_extra_layers(int n) { return n - 2; }

double dfs_lambda_threshold(int n) {
  if (n < 2) throw Error(Errc::InvalidParams, "need n >= 2");
  return static_cast<double>(n - 2) / static_cast<double>(n - 1);
}

bool dfs_beneficial(int n, const DeviceParams& d) { return lambda(d) >= dfs_lambda_threshold(n); }

CircuitCounts measure(const Circuit& c) {
  return {static_cast<long long>(cnot_count(c)), depth_profile(c).cnot_depth};
}

ErrorReport report(const CircuitCounts& baseline, const CircuitCounts& optimized,
                   const DeviceParams& d) {
  ErrorReport r;
  r.k = baseline.cnots;
  r.n_layers = baseline.cnot_layers;
  r.k1 = baseline.cnots - optimized.cnots;
  r.n1 = optimized.cnot_layers - baseline.cnot_layers;
  r.lambda = lambda(d);
  r.p_success_base = p_success(r.k, r.n_layers, d);
  r.p_success_opt = p_success_opt(r.k, r.n_layers, r.k1, r.n1, d);
  r.beneficial = static_cast<double>(r.n1) <= r.lambda * static_cast<double>(r.k1) + kBoundaryTolerance;
  return r;
}

ErrorReport report(const Circuit& baseline, const Circuit& optimized, const DeviceParams& d) {
  return report(measure(baseline), measure(optimized), d);
}

std::string report_to_json(const ErrorReport& r) {
  const nlohmann::json doc{{"k", r.k},
                           {"N", r.n_layers},
                           {"k1", r.k1},
                           {"N1", r.n1},
                           {"lambda", r.lambda},
                           {"p_success", r.p_success_base},
                           {"p_success_opt", r.p_success_opt},
                           {"beneficial", r.beneficial}};
  return doc.dump(2) + "\n";
}

}  // namespace qaoa
