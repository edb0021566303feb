#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "mos/sample.hpp"

namespace mos {

// Pooled samples tiled left to right into one strip.
struct Reconstruction {
    std::vector<std::uint8_t> canvas;  // row-major, height x width
    std::size_t height = 0;
    std::size_t width = 0;
    std::vector<std::size_t> pooled_indices;

    friend bool operator==(const Reconstruction&, const Reconstruction&) = default;
};

// Throws EmptyPool or DimensionMismatch.
Reconstruction reconstruct(std::span<const Sample> pooled);

struct LossReport {
    std::vector<double> per_sample;
    double mean_loss = 0.0;

    friend bool operator==(const LossReport&, const LossReport&) = default;
};

// Mean squared error between equally long vectors. Throws DimensionMismatch.
double mean_squared_error(std::span<const double> x, std::span<const double> z);

// Mean squared error on intensities scaled to [0, 1].
double mse(const Sample& x, const Sample& z);

// Per-sample MSE of every stream sample against `representative`, plus the
// mean over the stream. Throws DimensionMismatch.
LossReport reconstruction_loss(const SampleStream& stream, const Sample& representative);

}  // namespace mos
