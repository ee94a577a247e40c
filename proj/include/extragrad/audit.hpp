#pragma once

#include <string>
#include <utility>

#include "extragrad/core.hpp"

namespace extragrad {

/// Outcome of one sampled property check. Violations are stored
/// scale-normalized: raw_violation / (1 + scale^2) for quadratic
/// properties, raw_violation / (1 + scale) for norm-level ones, so the
/// pass rule is simply max_violation <= slack.
struct AuditReport {
    std::string property_name;
    long samples = 0;
    double max_violation = 0.0;
    std::pair<Vector, Vector> worst_witness;
    long worst_index = -1;  // sample (or iteration) index of the worst case
    double slack = 0.0;
    bool passed = false;
};

// Keeps a running worst case and finalizes the pass/fail verdict.
class AuditAccumulator {
  public:
    AuditAccumulator(std::string property_name, double slack)
        : report_{std::move(property_name), 0, 0.0, {}, -1, slack, false} {}

    void observe(double normalized_violation, const Vector& a, const Vector& b,
                 long index = -1) {
        ++report_.samples;
        if (report_.samples == 1 || normalized_violation > report_.max_violation) {
            report_.max_violation = normalized_violation;
            report_.worst_witness = {a, b};
            report_.worst_index = index >= 0 ? index : report_.samples - 1;
        }
    }

    AuditReport finish() {
        report_.passed = report_.max_violation <= report_.slack;
        return report_;
    }

  private:
    AuditReport report_;
};

std::string describe(const AuditReport& r);

}  // namespace extragrad
