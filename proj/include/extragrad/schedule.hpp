#pragma once

#include <optional>
#include <string>
#include <vector>

#include "extragrad/core.hpp"

namespace extragrad {

/// Step-size / averaging-weight sequence with declared bounds. Every
/// emitted value is guaranteed to lie in [low, high]; the convergence
/// hypotheses are checked against the bounds, not the stream.
class Schedule {
  public:
    enum class Kind { constant, table };

    static Schedule constant(double value);
    static Schedule constant(double value, double low, double high);
    // Table emits values[n] and holds the last entry forever after.
    static Schedule table(std::vector<double> values);
    static Schedule table(std::vector<double> values, double low, double high);

    double at(long n) const;
    double low() const { return low_; }
    double high() const { return high_; }
    Kind kind() const { return kind_; }
    double constant_value() const { return values_.front(); }
    const std::vector<double>& table_values() const { return values_; }

    friend bool operator==(const Schedule& a, const Schedule& b) {
        return a.kind_ == b.kind_ && a.values_ == b.values_ && a.low_ == b.low_ &&
               a.high_ == b.high_;
    }

  private:
    Schedule(Kind kind, std::vector<double> values, double low, double high);

    Kind kind_;
    std::vector<double> values_;
    double low_, high_;
};

// Hypothesis check for the weak-convergence theorem:
//   lambda bounds inside (0, 2 alpha_ism), alpha_n bounds inside (0, 1).
// Returns the list of named bound violations; empty means ok.
std::vector<std::string> validate_schedule(const Schedule& lambda, const Schedule& alpha_sched,
                                           double alpha_ism);

// Just the alpha_n half, for schemes that take no lambda.
std::vector<std::string> validate_alpha_schedule(const Schedule& alpha_sched);

}  // namespace extragrad
