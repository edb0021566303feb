#include "mos/mode_memory.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <unordered_set>

#include "mos/error.hpp"

namespace mos {

void ModeMemory::append(ModeRecord record)
{
    if (record.generation != next_generation()) {
        throw Error(ErrorCode::InvalidArgument,
                    "record generation " + std::to_string(record.generation) +
                        ", expected " + std::to_string(next_generation()));
    }
    if (record.frequency == 0 || record.indices.size() != record.frequency) {
        throw Error(ErrorCode::InvalidArgument, "record frequency must equal its index count");
    }
    if (!std::is_sorted(record.indices.begin(), record.indices.end()) ||
        std::adjacent_find(record.indices.begin(), record.indices.end()) !=
            record.indices.end()) {
        throw Error(ErrorCode::InvalidArgument, "record indices must be strictly ascending");
    }
    if (record.indices.front() == 0) {
        throw Error(ErrorCode::IndexOutOfRange, "record indices are 1-based");
    }
    if (!records_.empty() && record.frequency > records_.back().frequency) {
        throw Error(ErrorCode::InvalidArgument, "frequencies must not increase across generations");
    }
    for (const auto idx : record.indices) {
        if (contains_index(idx)) {
            throw Error(ErrorCode::InvalidArgument,
                        "index " + std::to_string(idx) + " already learned");
        }
    }
    records_.push_back(std::move(record));
}

bool ModeMemory::contains_index(std::size_t index) const
{
    return std::any_of(records_.begin(), records_.end(), [index](const ModeRecord& r) {
        return std::binary_search(r.indices.begin(), r.indices.end(), index);
    });
}

std::size_t ModeMemory::learned_count() const
{
    std::size_t total = 0;
    for (const auto& r : records_) {
        total += r.indices.size();
    }
    return total;
}

std::vector<ModeRecord> rank_candidates(const Accumulator& acc, const ModeDistribution& dist,
                                        const ModeMemory& memory)
{
    if (dist.probs.size() != acc.size()) {
        throw Error(ErrorCode::DimensionMismatch, "distribution does not match accumulator");
    }
    std::unordered_set<std::size_t> learned;
    for (const auto& r : memory.records()) {
        learned.insert(r.indices.begin(), r.indices.end());
    }

    // Ordered by value, so a stable sort on frequency keeps ties value-ascending.
    std::map<std::uint64_t, std::vector<std::size_t>> classes;
    for (std::size_t i = 0; i < acc.size(); ++i) {
        const std::size_t index = i + 1;
        if (!learned.contains(index)) {
            classes[acc.masses[i]].push_back(index);
        }
    }

    std::vector<ModeRecord> ranked;
    ranked.reserve(classes.size());
    for (auto& [value, indices] : classes) {
        ModeRecord rec;
        rec.generation = memory.next_generation();
        rec.mode_value = value;
        rec.frequency = indices.size();
        for (const auto idx : indices) {
            rec.aggregate_prob += dist.probs[idx - 1];
        }
        rec.indices = std::move(indices);
        ranked.push_back(std::move(rec));
    }
    std::stable_sort(ranked.begin(), ranked.end(), [](const ModeRecord& a, const ModeRecord& b) {
        return a.frequency > b.frequency;
    });
    return ranked;
}

ModeRecord mode_select(const Accumulator& acc, const ModeMemory& memory)
{
    const auto dist = normalize(acc);
    auto ranked = rank_candidates(acc, dist, memory);
    if (ranked.empty()) {
        throw Error(ErrorCode::Exhausted,
                    "all " + std::to_string(acc.size()) + " indices already learned");
    }
    return std::move(ranked.front());
}

std::vector<Sample> pool_modes(const ModeMemory& memory, const SampleStream& stream)
{
    std::vector<Sample> pooled;
    pooled.reserve(memory.learned_count());
    for (const auto& r : memory.records()) {
        for (const auto idx : r.indices) {
            pooled.push_back(stream.at(idx));
        }
    }
    return pooled;
}

std::vector<std::optional<std::size_t>> learned_indices(const ModeMemory& memory,
                                                        std::size_t rows)
{
    std::vector<std::size_t> all;
    for (const auto& r : memory.records()) {
        all.insert(all.end(), r.indices.begin(), r.indices.end());
    }
    std::sort(all.begin(), all.end());

    std::vector<std::optional<std::size_t>> out(all.begin(), all.end());
    if (out.size() < rows) {
        out.resize(rows, std::nullopt);
    }
    return out;
}

}  // namespace mos
