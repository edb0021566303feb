#include "mos/pipeline.hpp"

#include <algorithm>

#include "mos/error.hpp"

namespace mos {

RunResult run_generations(const SampleStream& stream, const ReconstructionParams& params,
                          const RuleConfig& rules, std::size_t generations)
{
    if (generations == 0) {
        throw Error(ErrorCode::InvalidArgument, "generations must be at least 1");
    }

    RunResult result;
    // In-place equivalent of folding accumulate() over the stream.
    result.accumulator.masses.reserve(stream.n());
    for (const auto& s : stream.samples()) {
        result.accumulator.masses.push_back(sample_mass(s));
    }
    result.distribution = normalize(result.accumulator);
    result.hidden = hidden_activation(result.distribution, params.bias);
    result.activations = transfer(result.hidden, params.transfer);

    for (std::size_t g = 0; g < generations; ++g) {
        auto ranked = rank_candidates(result.accumulator, result.distribution, result.memory);
        auto accepted = std::find_if(ranked.begin(), ranked.end(), [&](const ModeRecord& r) {
            return rules.accepts(r.aggregate_prob);
        });
        if (accepted == ranked.end()) {
            break;
        }
        result.memory.append(std::move(*accepted));
    }

    if (!result.memory.empty()) {
        const auto pooled = pool_modes(result.memory, stream);
        result.reconstruction = reconstruct(pooled);
        result.loss = reconstruction_loss(stream, pooled.front());
    }
    return result;
}

}  // namespace mos
