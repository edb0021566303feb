#include "mos/sample.hpp"

#include <numeric>
#include <string>

#include "mos/error.hpp"

namespace mos {

Sample::Sample(std::vector<std::uint8_t> pixels, std::size_t height, std::size_t width,
               std::size_t source_index)
    : pixels_(std::move(pixels)), height_(height), width_(width), source_index_(source_index)
{
    if (height_ == 0 || width_ == 0) {
        throw Error(ErrorCode::InvalidArgument, "sample dimensions must be positive");
    }
    if (pixels_.size() != height_ * width_) {
        throw Error(ErrorCode::DimensionMismatch,
                    "sample holds " + std::to_string(pixels_.size()) + " pixels, expected " +
                        std::to_string(height_ * width_));
    }
    if (source_index_ == 0) {
        throw Error(ErrorCode::InvalidArgument, "source_index is 1-based");
    }
}

Sample Sample::reindexed(std::size_t source_index) const
{
    return Sample(pixels_, height_, width_, source_index);
}

SampleStream::SampleStream(std::vector<Sample> samples, int class_digit)
    : samples_(std::move(samples)), class_digit_(class_digit)
{
    if (samples_.empty()) {
        throw Error(ErrorCode::InvalidArgument, "sample stream must not be empty");
    }
    if (class_digit_ < 0 || class_digit_ > 9) {
        throw Error(ErrorCode::InvalidDigit,
                    "class digit " + std::to_string(class_digit_) + " outside 0..9");
    }
    for (std::size_t i = 0; i < samples_.size(); ++i) {
        if (!samples_[i].same_shape(samples_.front())) {
            throw Error(ErrorCode::DimensionMismatch,
                        "sample " + std::to_string(i + 1) + " differs in shape from sample 1");
        }
        if (samples_[i].source_index() != i + 1) {
            throw Error(ErrorCode::InvalidArgument,
                        "sample at position " + std::to_string(i + 1) + " carries source_index " +
                            std::to_string(samples_[i].source_index()));
        }
    }
}

const Sample& SampleStream::at(std::size_t source_index) const
{
    if (source_index == 0 || source_index > samples_.size()) {
        throw Error(ErrorCode::IndexOutOfRange, "index " + std::to_string(source_index) +
                                                    " outside [1, " +
                                                    std::to_string(samples_.size()) + "]");
    }
    return samples_[source_index - 1];
}

std::uint64_t sample_mass(const Sample& sample)
{
    const auto px = sample.pixels();
    return std::accumulate(px.begin(), px.end(), std::uint64_t{0});
}

}  // namespace mos
