#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

#include "mos/sample.hpp"

namespace mos::idx {

inline constexpr std::uint32_t kImagesMagic = 0x00000803;
inline constexpr std::uint32_t kLabelsMagic = 0x00000801;

struct IdxImages {
    std::uint32_t count = 0;
    std::uint32_t rows = 0;
    std::uint32_t cols = 0;
    std::vector<std::uint8_t> data;  // count * rows * cols, row-major per image

    std::span<const std::uint8_t> image(std::size_t i) const;  // 0-based

    friend bool operator==(const IdxImages&, const IdxImages&) = default;
};

struct IdxLabels {
    std::uint32_t count = 0;
    std::vector<std::uint8_t> labels;

    friend bool operator==(const IdxLabels&, const IdxLabels&) = default;
};

// Both parsers are total: they return a complete value or throw exactly one
// of BadMagic, Truncated, TrailingBytes (and InvalidLabel for labels).
IdxImages parse_idx_images(std::span<const std::uint8_t> bytes);
IdxLabels parse_idx_labels(std::span<const std::uint8_t> bytes);

// Throws IoFailure.
std::vector<std::uint8_t> read_file(const std::filesystem::path& path);

// First n images in file order labelled `digit`, re-indexed 1..n.
// Throws CountMismatch, InvalidDigit, NotEnoughSamples.
SampleStream select_class(const IdxImages& images, const IdxLabels& labels, int digit,
                          std::size_t n);

}  // namespace mos::idx
