#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace mos {

// A grayscale image tagged with its 1-based position in a stream.
class Sample {
public:
    Sample(std::vector<std::uint8_t> pixels, std::size_t height, std::size_t width,
           std::size_t source_index);

    std::span<const std::uint8_t> pixels() const noexcept { return pixels_; }
    std::size_t height() const noexcept { return height_; }
    std::size_t width() const noexcept { return width_; }
    std::size_t source_index() const noexcept { return source_index_; }

    bool same_shape(const Sample& other) const noexcept
    {
        return height_ == other.height_ && width_ == other.width_;
    }

    Sample reindexed(std::size_t source_index) const;

    friend bool operator==(const Sample&, const Sample&) = default;

private:
    std::vector<std::uint8_t> pixels_;
    std::size_t height_;
    std::size_t width_;
    std::size_t source_index_;
};

// Ordered, class-homogeneous, non-empty collection of equally sized samples
// indexed densely from 1.
class SampleStream {
public:
    SampleStream(std::vector<Sample> samples, int class_digit);

    std::span<const Sample> samples() const noexcept { return samples_; }
    const Sample& at(std::size_t source_index) const;  // 1-based
    int class_digit() const noexcept { return class_digit_; }
    std::size_t n() const noexcept { return samples_.size(); }
    std::size_t height() const noexcept { return samples_.front().height(); }
    std::size_t width() const noexcept { return samples_.front().width(); }

private:
    std::vector<Sample> samples_;
    int class_digit_;
};

// Sum of all pixel intensities.
std::uint64_t sample_mass(const Sample& sample);

}  // namespace mos
