#include "mos/distribution.hpp"

#include <cmath>
#include <numeric>
#include <string>

#include "mos/error.hpp"

namespace mos {

Accumulator accumulate(const Accumulator& acc, std::uint64_t mass)
{
    Accumulator next = acc;
    next.masses.push_back(mass);
    return next;
}

std::uint64_t net_sum(const Accumulator& acc)
{
    if (acc.empty()) {
        throw Error(ErrorCode::EmptyAccumulator, "net sum of an empty accumulator");
    }
    return std::accumulate(acc.masses.begin(), acc.masses.end(), std::uint64_t{0});
}

ModeDistribution normalize(const Accumulator& acc)
{
    ModeDistribution dist;
    dist.net_sum = net_sum(acc);
    if (dist.net_sum == 0) {
        throw Error(ErrorCode::DegenerateMass,
                    "all " + std::to_string(acc.size()) + " masses are zero");
    }
    const auto total = static_cast<double>(dist.net_sum);
    dist.probs.reserve(acc.size());
    for (const auto m : acc.masses) {
        dist.probs.push_back(static_cast<double>(m) / total);
    }
    return dist;
}

std::vector<double> hidden_activation(const ModeDistribution& dist, double bias)
{
    std::vector<double> out;
    out.reserve(dist.probs.size());
    for (const double p : dist.probs) {
        out.push_back(ReconstructionParams::weight * p + bias);
    }
    return out;
}

std::string_view to_string(TransferKind kind)
{
    switch (kind) {
    case TransferKind::Logistic: return "logistic";
    case TransferKind::Linear: return "linear";
    case TransferKind::HyperbolicTangent: return "tanh";
    }
    return "unknown";
}

TransferKind parse_transfer(std::string_view name)
{
    if (name == "logistic" || name == "sigmoid") return TransferKind::Logistic;
    if (name == "linear") return TransferKind::Linear;
    if (name == "tanh") return TransferKind::HyperbolicTangent;
    throw Error(ErrorCode::InvalidArgument,
                "unknown transfer '" + std::string(name) + "' (logistic, linear, tanh)");
}

double transfer(double value, TransferKind kind)
{
    switch (kind) {
    case TransferKind::Logistic: return 1.0 / (1.0 + std::exp(-value));
    case TransferKind::Linear: return value;
    case TransferKind::HyperbolicTangent: return std::tanh(value);
    }
    return value;
}

std::vector<double> transfer(std::span<const double> values, TransferKind kind)
{
    std::vector<double> out;
    out.reserve(values.size());
    for (const double v : values) {
        out.push_back(transfer(v, kind));
    }
    return out;
}

}  // namespace mos
