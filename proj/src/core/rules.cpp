#include "mos/rules.hpp"

#include <cmath>
#include <sstream>

#include "mos/error.hpp"

namespace mos {

std::string_view to_string(RuleKind rule)
{
    switch (rule) {
    case RuleKind::Maximal: return "maximal";
    case RuleKind::Minimal: return "minimal";
    case RuleKind::Equivalency: return "equivalency";
    case RuleKind::Fuzzy: return "fuzzy";
    }
    return "unknown";
}

RuleKind parse_rule(std::string_view name)
{
    if (name == "maximal") return RuleKind::Maximal;
    if (name == "minimal") return RuleKind::Minimal;
    if (name == "equivalency") return RuleKind::Equivalency;
    if (name == "fuzzy") return RuleKind::Fuzzy;
    throw Error(ErrorCode::InvalidArgument,
                "unknown rule '" + std::string(name) +
                    "' (maximal, minimal, equivalency, fuzzy, all)");
}

RuleConfig::RuleConfig(double ts1, double ts2, std::set<RuleKind> active_rules,
                       double equivalency_tolerance)
    : ts1_(ts1), ts2_(ts2), active_(std::move(active_rules)), tolerance_(equivalency_tolerance)
{
    // Written so that NaN thresholds fail too.
    if (!(ts2_ > 0.0 && ts2_ <= ts1_ && ts1_ < 1.0)) {
        std::ostringstream msg;
        msg << "thresholds must satisfy 0 < ts2 <= ts1 < 1, got ts1=" << ts1_ << " ts2=" << ts2_;
        throw Error(ErrorCode::InvalidArgument, msg.str());
    }
    if (active_.empty()) {
        throw Error(ErrorCode::InvalidArgument, "at least one rule must be active");
    }
    if (!(tolerance_ >= 0.0)) {
        throw Error(ErrorCode::InvalidArgument, "equivalency tolerance must be non-negative");
    }
}

RuleConfig RuleConfig::defaults_for(std::size_t n, std::set<RuleKind> active_rules)
{
    if (n == 0) {
        throw Error(ErrorCode::InvalidArgument, "n must be positive");
    }
    if (n == 1) {
        return RuleConfig(0.5, 0.25, std::move(active_rules));
    }
    const double ts1 = 1.0 / static_cast<double>(n);
    return RuleConfig(ts1, ts1 / 2.0, std::move(active_rules));
}

RuleConfig RuleConfig::accept_all()
{
    // With both thresholds one ulp above 1/2: Minimal covers [0, t), Fuzzy
    // covers (1/2, 1), Maximal covers (t, 1] and Equivalency covers 1.
    const double t = std::nextafter(0.5, 1.0);
    return RuleConfig(t, t,
                      {RuleKind::Maximal, RuleKind::Minimal, RuleKind::Equivalency, RuleKind::Fuzzy});
}

bool RuleConfig::accepts(double p) const
{
    for (const auto rule : active_) {
        if (rule_fires(p, rule, *this)) {
            return true;
        }
    }
    return false;
}

bool rule_fires(double p, RuleKind rule, const RuleConfig& config)
{
    switch (rule) {
    case RuleKind::Maximal: return p > config.ts1();
    case RuleKind::Minimal: return p < config.ts2();
    case RuleKind::Equivalency: return std::abs(p - 1.0) <= config.equivalency_tolerance();
    case RuleKind::Fuzzy: return p > 0.5 && p < 1.0;
    }
    return false;
}

std::set<RuleKind> parse_rule_set(std::string_view list)
{
    std::set<RuleKind> rules;
    std::size_t start = 0;
    while (start <= list.size()) {
        const auto comma = list.find(',', start);
        const auto end = comma == std::string_view::npos ? list.size() : comma;
        const auto token = list.substr(start, end - start);
        if (token == "all") {
            rules.insert({RuleKind::Maximal, RuleKind::Minimal, RuleKind::Equivalency,
                          RuleKind::Fuzzy});
        } else if (!token.empty()) {
            rules.insert(parse_rule(token));
        }
        if (comma == std::string_view::npos) {
            break;
        }
        start = comma + 1;
    }
    if (rules.empty()) {
        throw Error(ErrorCode::InvalidArgument, "empty rule list");
    }
    return rules;
}

std::string format_rule_set(const std::set<RuleKind>& rules)
{
    std::string out;
    for (const auto rule : rules) {
        if (!out.empty()) {
            out += ',';
        }
        out += to_string(rule);
    }
    return out;
}

}  // namespace mos
