#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "mos/distribution.hpp"
#include "mos/mode_memory.hpp"
#include "mos/reconstruction.hpp"
#include "mos/rules.hpp"
#include "mos/sample.hpp"

namespace mos {

struct RunResult {
    Accumulator accumulator;
    ModeDistribution distribution;
    std::vector<double> hidden;       // probs + bias
    std::vector<double> activations;  // transfer(hidden)
    ModeMemory memory;
    // Absent when no candidate passed the active rules.
    std::optional<Reconstruction> reconstruction;
    std::optional<LossReport> loss;

    friend bool operator==(const RunResult&, const RunResult&) = default;
};

// Masses -> accumulator -> normalization -> biased activations -> transfer,
// then up to `generations` rounds of mode selection. In each round the
// ranked candidates are tried in order and the first one whose aggregate
// probability passes an active rule is stored; rejected candidates are
// skipped. The run ends early once nothing is left to accept. Accepted
// samples are pooled, tiled and scored against the first pooled sample.
//
// Throws DegenerateMass for an all-zero stream.
RunResult run_generations(const SampleStream& stream, const ReconstructionParams& params,
                          const RuleConfig& rules, std::size_t generations);

}  // namespace mos
