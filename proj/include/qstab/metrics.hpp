#ifndef QSTAB_METRICS_HPP
#define QSTAB_METRICS_HPP

#include <array>
#include <string>
#include <vector>

#include "qstab/marginals.hpp"

namespace qstab {

inline constexpr int kNumMetrics = 16;

enum class MetricClass { kSpam, kCnot, kT2, kHGate };

/// One row of the 16-metric device characterization catalog.
struct MetricDescriptor {
  int index;                    // 0..15, the "x<index>" id
  MetricClass metric_class;
  std::vector<int> registers;   // 1 register, or {control, target} for CNOT
  std::string description;
};

/// The fixed 16-metric catalog: x0-x3 SPAM fidelity on registers 0-3,
/// x4 CNOT fidelity (control 0, target 1), x5 CNOT fidelity (control 2,
/// target 1), x6-x10 T2 time on registers 0-4, x11-x15 Hadamard fidelity
/// on registers 0-4.
const std::array<MetricDescriptor, kNumMetrics>& metric_catalog();

/// Marginal family used for a metric class: Beta for fidelity-like metrics
/// (bounded in [0,1]), Gamma for T2 times (positive, unbounded).
Family family_for(MetricClass c);

/// Physical-domain check for raw observations of a metric.
bool value_in_domain(MetricClass c, double value);

std::string metric_id_string(int index);          // "x0".."x15"
/// Parses "x0".."x15"; returns -1 if not a valid metric id.
int parse_metric_id(const std::string& id);

}  // namespace qstab

#endif
