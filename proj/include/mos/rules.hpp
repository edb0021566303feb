#pragma once

#include <cstddef>
#include <set>
#include <string>
#include <string_view>

namespace mos {

enum class RuleKind { Maximal, Minimal, Equivalency, Fuzzy };

std::string_view to_string(RuleKind rule);
RuleKind parse_rule(std::string_view name);

// Acceptance gates applied to a candidate mode's aggregate probability.
//   Maximal      p > ts1
//   Minimal      p < ts2
//   Equivalency  |p - 1| <= equivalency_tolerance
//   Fuzzy        0.5 < p < 1
class RuleConfig {
public:
    static constexpr double default_equivalency_tolerance = 1e-9;

    // Requires 0 < ts2 <= ts1 < 1 and a non-empty rule set.
    RuleConfig(double ts1, double ts2, std::set<RuleKind> active_rules,
               double equivalency_tolerance = default_equivalency_tolerance);

    // ts1 = 1/n, ts2 = 1/(2n). For n = 1 the upper threshold would reach 1,
    // so it falls back to 1/2 and 1/4.
    static RuleConfig defaults_for(std::size_t n, std::set<RuleKind> active_rules = {RuleKind::Maximal});

    // Every rule active with thresholds that let any probability in (0, 1] through
    // at least one of them.
    static RuleConfig accept_all();

    double ts1() const noexcept { return ts1_; }
    double ts2() const noexcept { return ts2_; }
    double equivalency_tolerance() const noexcept { return tolerance_; }
    const std::set<RuleKind>& active_rules() const noexcept { return active_; }

    // True if at least one active rule fires for p.
    bool accepts(double p) const;

private:
    double ts1_;
    double ts2_;
    std::set<RuleKind> active_;
    double tolerance_;
};

bool rule_fires(double p, RuleKind rule, const RuleConfig& config);

// Parses "maximal,fuzzy" or "all".
std::set<RuleKind> parse_rule_set(std::string_view list);
std::string format_rule_set(const std::set<RuleKind>& rules);

}  // namespace mos
