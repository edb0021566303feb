#pragma once

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace mos {

// Per-sample masses in stream order; entry i belongs to source_index i + 1.
struct Accumulator {
    std::vector<std::uint64_t> masses;

    std::size_t size() const noexcept { return masses.size(); }
    bool empty() const noexcept { return masses.empty(); }

    friend bool operator==(const Accumulator&, const Accumulator&) = default;
};

// Returns a copy of acc with mass appended.
Accumulator accumulate(const Accumulator& acc, std::uint64_t mass);

// Throws EmptyAccumulator on an empty accumulator.
std::uint64_t net_sum(const Accumulator& acc);

// Masses divided by their net sum.
struct ModeDistribution {
    std::vector<double> probs;
    std::uint64_t net_sum = 0;

    friend bool operator==(const ModeDistribution&, const ModeDistribution&) = default;
};

// Throws EmptyAccumulator, or DegenerateMass when every mass is zero.
ModeDistribution normalize(const Accumulator& acc);

// probs + bias, element-wise.
std::vector<double> hidden_activation(const ModeDistribution& dist, double bias);

enum class TransferKind { Logistic, Linear, HyperbolicTangent };

std::string_view to_string(TransferKind kind);
TransferKind parse_transfer(std::string_view name);

double transfer(double value, TransferKind kind);
std::vector<double> transfer(std::span<const double> values, TransferKind kind);

// Weights are pinned to one; only the bias and the transfer are tunable.
struct ReconstructionParams {
    static constexpr double weight = 1.0;
    double bias = 0.0;
    TransferKind transfer = TransferKind::Logistic;
};

}  // namespace mos
