#include "qstab/metrics.hpp"

namespace qstab {

const std::array<MetricDescriptor, kNumMetrics>& metric_catalog() {
  static const std::array<MetricDescriptor, kNumMetrics> catalog = [] {
    std::array<MetricDescriptor, kNumMetrics> c;
    int i = 0;
    for (int reg = 0; reg < 4; ++reg, ++i) {
      c[i] = {i, MetricClass::kSpam, {reg},
              "SPAM fidelity, register " + std::to_string(reg)};
    }
    c[i++] = {4, MetricClass::kCnot, {0, 1}, "CNOT fidelity, control 0, target 1"};
    c[i++] = {5, MetricClass::kCnot, {2, 1}, "CNOT fidelity, control 2, target 1"};
    for (int reg = 0; reg < 5; ++reg, ++i) {
      c[i] = {i, MetricClass::kT2, {reg},
              "T2 time (ns), register " + std::to_string(reg)};
    }
    for (int reg = 0; reg < 5; ++reg, ++i) {
      c[i] = {i, MetricClass::kHGate, {reg},
              "Hadamard fidelity, register " + std::to_string(reg)};
    }
    return c;
  }();
  return catalog;
}

Family family_for(MetricClass c) {
  return c == MetricClass::kT2 ? Family::kGamma : Family::kBeta;
}

bool value_in_domain(MetricClass c, double value) {
  if (c == MetricClass::kT2) return value > 0.0;
  return value >= 0.0 && value <= 1.0;
}

std::string metric_id_string(int index) {
  return "x" + std::to_string(index);
}

int parse_metric_id(const std::string& id) {
  if (id.size() < 2 || id.size() > 3 || id[0] != 'x') return -1;
  int v = 0;
  for (std::size_t i = 1; i < id.size(); ++i) {
    if (id[i] < '0' || id[i] > '9') return -1;
    v = v * 10 + (id[i] - '0');
  }
  if (id.size() == 3 && id[1] == '0') return -1;  // no leading zeros
  return v < kNumMetrics ? v : -1;
}

}  // namespace qstab
