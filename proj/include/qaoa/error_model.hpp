#pragma once

#include <string>

#include "qaoa/circuit.hpp"
#include "qaoa/graph.hpp"

namespace qaoa {

/// Device figures used by the success-probability model. Times in ns.
struct DeviceParams {
  std::string name = "device";
  double t_cx_ns = 300.0;
  double t1_ns = 100'000.0;
  double p_cx = 0.01;
};

/// Throws InvalidDevice unless t_cx > 0, T1 > 0 and 0 <= p_cx < 1.
void validate(const DeviceParams& d);

DeviceParams parse_device(const std::string& json_text);
std::string device_to_json(const DeviceParams& d);
DeviceParams read_device_file(const std::string& path);

/// Probability that k CNOTs spread over n_layers CNOT layers run error free:
/// (1 - p_cx)^k * exp(-n_layers * t_cx / T1).
double p_success(long long k, long long n_layers, const DeviceParams& d);

/// Same model after removing k1 CNOTs and adding n1 layers (n1 may be
/// negative). Throws InvalidReduction unless 0 <= k1 <= k and N + N1 >= 0.
double p_success_opt(long long k, long long n_layers, long long k1, long long n1,
                     const DeviceParams& d);

/// -ln(1 - p_cx) * T1 / t_cx: CNOT layers that one removed CNOT pays for.
double lambda(const DeviceParams& d);

/// Worst-case extra edge-operator layers of the DFS variant, n - 2.
int dfs_worst_case_extra_layers(int n);

/// (n - 2) / (n - 1).
double dfs_lambda_threshold(int n);

bool dfs_beneficial(int n, const DeviceParams& d);

/// Absolute slack on the N1 <= lambda * k1 comparison.
inline constexpr double kBoundaryTolerance = 1e-12;

struct ErrorReport {
  long long k = 0;
  long long n_layers = 0;
  long long k1 = 0;
  long long n1 = 0;
  double lambda = 0.0;
  double p_success_base = 1.0;
  double p_success_opt = 1.0;
  bool beneficial = true;
};

/// Counts for one circuit: CNOT count and CNOT depth.
struct CircuitCounts {
  long long cnots = 0;
  long long cnot_layers = 0;
};

CircuitCounts measure(const Circuit& c);

ErrorReport report(const CircuitCounts& baseline, const CircuitCounts& optimized,
                   const DeviceParams& d);
ErrorReport report(const Circuit& baseline, const Circuit& optimized, const DeviceParams& d);

std::string report_to_json(const ErrorReport& r);

}  // namespace qaoa
