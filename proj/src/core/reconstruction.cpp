#include "mos/reconstruction.hpp"

#include <algorithm>
#include <string>

#include "mos/error.hpp"

namespace mos {

Reconstruction reconstruct(std::span<const Sample> pooled)
{
    if (pooled.empty()) {
        throw Error(ErrorCode::EmptyPool, "nothing to reconstruct");
    }
    const Sample& first = pooled.front();
    for (const auto& s : pooled) {
        if (!s.same_shape(first)) {
            throw Error(ErrorCode::DimensionMismatch,
                        "pooled sample " + std::to_string(s.source_index()) + " is " +
                            std::to_string(s.height()) + "x" + std::to_string(s.width()) +
                            ", expected " + std::to_string(first.height()) + "x" +
                            std::to_string(first.width()));
        }
    }

    Reconstruction out;
    out.height = first.height();
    out.width = first.width() * pooled.size();
    out.canvas.resize(out.height * out.width);
    out.pooled_indices.reserve(pooled.size());

    const std::size_t tile = first.width();
    for (std::size_t k = 0; k < pooled.size(); ++k) {
        const auto px = pooled[k].pixels();
        for (std::size_t row = 0; row < out.height; ++row) {
            std::copy_n(px.begin() + static_cast<std::ptrdiff_t>(row * tile), tile,
                        out.canvas.begin() +
                            static_cast<std::ptrdiff_t>(row * out.width + k * tile));
        }
        out.pooled_indices.push_back(pooled[k].source_index());
    }
    return out;
}

double mean_squared_error(std::span<const double> x, std::span<const double> z)
{
    if (x.size() != z.size() || x.empty()) {
        throw Error(ErrorCode::DimensionMismatch, "loss operands differ in length");
    }
    double total = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double d = x[i] - z[i];
        total += d * d;
    }
    return total / static_cast<double>(x.size());
}

double mse(const Sample& x, const Sample& z)
{
    if (!x.same_shape(z)) {
        throw Error(ErrorCode::DimensionMismatch, "loss operands differ in shape");
    }
    const auto a = x.pixels();
    const auto b = z.pixels();
    double total = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double d = (static_cast<double>(a[i]) - static_cast<double>(b[i])) / 255.0;
        total += d * d;
    }
    return total / static_cast<double>(a.size());
}

LossReport reconstruction_loss(const SampleStream& stream, const Sample& representative)
{
    LossReport report;
    report.per_sample.reserve(stream.n());
    double total = 0.0;
    for (const auto& s : stream.samples()) {
        report.per_sample.push_back(mse(s, representative));
        total += report.per_sample.back();
    }
    report.mean_loss = total / static_cast<double>(stream.n());
    return report;
}

}  // namespace mos
