#include "extragrad/schedule.hpp"

#include <algorithm>

namespace extragrad {

Schedule::Schedule(Kind kind, std::vector<double> values, double low, double high)
    : kind_(kind), values_(std::move(values)), low_(low), high_(high) {
    if (values_.empty()) throw ContractViolation("Schedule: needs at least one value");
    if (!(low_ <= high_)) throw ContractViolation("Schedule: low <= high required");
    for (double v : values_) {
        if (!std::isfinite(v)) throw ContractViolation("Schedule: non-finite value");
        if (v < low_ || v > high_)
            throw ContractViolation("Schedule: value outside declared bounds");
    }
}

Schedule Schedule::constant(double value) { return {Kind::constant, {value}, value, value}; }

Schedule Schedule::constant(double value, double low, double high) {
    return {Kind::constant, {value}, low, high};
}

Schedule Schedule::table(std::vector<double> values) {
    if (values.empty()) throw ContractViolation("Schedule: needs at least one value");
    const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
    const double low = *lo, high = *hi;
    return {Kind::table, std::move(values), low, high};
}

Schedule Schedule::table(std::vector<double> values, double low, double high) {
    return {Kind::table, std::move(values), low, high};
}

double Schedule::at(long n) const {
    if (n < 0) throw ContractViolation("Schedule::at: negative index");
    if (kind_ == Kind::constant) return values_.front();
    const auto idx = std::min<std::size_t>(static_cast<std::size_t>(n), values_.size() - 1);
    return values_[idx];
}

std::vector<std::string> validate_schedule(const Schedule& lambda, const Schedule& alpha_sched,
                                           double alpha_ism) {
    if (!(alpha_ism > 0.0)) throw ContractViolation("validate_schedule: alpha_ism must be > 0");
    std::vector<std::string> violations;
    if (!(lambda.low() > 0.0)) violations.push_back("lambda.low <= 0");
    if (!(lambda.high() < 2.0 * alpha_ism)) violations.push_back("lambda.high >= 2*alpha");
    for (const auto& v : validate_alpha_schedule(alpha_sched)) violations.push_back(v);
    return violations;
}

std::vector<std::string> validate_alpha_schedule(const Schedule& alpha_sched) {
    std::vector<std::string> violations;
    if (!(alpha_sched.low() > 0.0)) violations.push_back("alpha_n.low <= 0");
    if (!(alpha_sched.high() < 1.0)) violations.push_back("alpha_n.high >= 1");
    return violations;
}

}  // namespace extragrad
