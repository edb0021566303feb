#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "mos/distribution.hpp"
#include "mos/sample.hpp"

namespace mos {

// One learned mode: a mass value shared by `frequency` samples.
struct ModeRecord {
    std::size_t generation = 0;
    std::uint64_t mode_value = 0;
    std::size_t frequency = 0;
    std::vector<std::size_t> indices;  // 1-based, ascending
    double aggregate_prob = 0.0;

    friend bool operator==(const ModeRecord&, const ModeRecord&) = default;
};

// Accepted records in generation order. append() enforces the memory
// discipline: consecutive generations from 1, pairwise-disjoint index sets
// and non-increasing frequency.
class ModeMemory {
public:
    void append(ModeRecord record);

    std::span<const ModeRecord> records() const noexcept { return records_; }
    bool empty() const noexcept { return records_.empty(); }
    std::size_t size() const noexcept { return records_.size(); }
    std::size_t next_generation() const noexcept { return records_.size() + 1; }

    bool contains_index(std::size_t index) const;
    std::size_t learned_count() const;

    friend bool operator==(const ModeMemory&, const ModeMemory&) = default;

private:
    std::vector<ModeRecord> records_;
};

// Mass classes over the indices not yet in memory, most frequent first and
// ties toward the smaller value. Each record is stamped with the next
// generation and its aggregate probability under `dist`.
std::vector<ModeRecord> rank_candidates(const Accumulator& acc, const ModeDistribution& dist,
                                        const ModeMemory& memory);

// The top-ranked candidate. Throws Exhausted when every index is learned and
// propagates DegenerateMass from normalization.
ModeRecord mode_select(const Accumulator& acc, const ModeMemory& memory);

// Samples referenced by memory, generation-major, ascending within a
// generation. Throws IndexOutOfRange for indices beyond the stream.
std::vector<Sample> pool_modes(const ModeMemory& memory, const SampleStream& stream);

// Flattened ascending union of learned indices, padded with nullopt ("none")
// up to `rows` entries. Never truncates.
std::vector<std::optional<std::size_t>> learned_indices(const ModeMemory& memory,
                                                        std::size_t rows);

}  // namespace mos
