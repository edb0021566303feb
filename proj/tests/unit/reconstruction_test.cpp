#include "mos/reconstruction.hpp"

#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "mos/error.hpp"
#include "test_support.hpp"

using namespace mos;
using mos::testing::filled;
using mos::testing::make_sample;

TEST(ReconstructTest, tiles_left_to_right)
{
    const std::vector<Sample> pooled{
        make_sample({1, 2, 3, 4}, 2, 2, 3),
        make_sample({5, 6, 7, 8}, 2, 2, 1),
    };
    const auto r = reconstruct(pooled);
    EXPECT_EQ(2u, r.height);
    EXPECT_EQ(4u, r.width);
    EXPECT_EQ((std::vector<std::uint8_t>{1, 2, 5, 6, 3, 4, 7, 8}), r.canvas);
    EXPECT_EQ((std::vector<std::size_t>{3, 1}), r.pooled_indices);
}

TEST(ReconstructTest, mnist_sized_strip)
{
    const std::vector<Sample> pooled{filled(28, 28, 1, 1), filled(28, 28, 2, 2),
                                     filled(28, 28, 3, 3)};
    const auto r = reconstruct(pooled);
    EXPECT_EQ(28u, r.height);
    EXPECT_EQ(84u, r.width);
    EXPECT_EQ(28u * 84u, r.canvas.size());
}

TEST(ReconstructTest, single_sample_is_identity)
{
    std::mt19937 rng(1);
    std::vector<std::uint8_t> px(28 * 28);
    for (auto& p : px) {
        p = static_cast<std::uint8_t>(rng());
    }
    const auto s = make_sample(px, 28, 28, 5);
    const std::vector<Sample> pooled{s};
    const auto r = reconstruct(pooled);
    EXPECT_EQ(28u, r.width);
    EXPECT_EQ(px, r.canvas);
}

TEST(ReconstructTest, errors)
{
    try {
        (void)reconstruct(std::vector<Sample>{});
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(ErrorCode::EmptyPool, e.code());
    }
    const std::vector<Sample> mixed{filled(2, 2, 0, 1), filled(3, 2, 0, 2)};
    try {
        (void)reconstruct(mixed);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(ErrorCode::DimensionMismatch, e.code());
    }
}

TEST(LossTest, identical_is_zero)
{
    const auto s = make_sample({9, 200, 13, 77}, 2, 2, 1);
    const SampleStream stream({s}, 0);
    const auto report = reconstruction_loss(stream, s);
    EXPECT_EQ(std::vector<double>{0.0}, report.per_sample);
    EXPECT_EQ(0.0, report.mean_loss);
}

TEST(LossTest, swapped_extremes)
{
    const auto x = make_sample({0, 255}, 1, 2, 1);
    const auto z = make_sample({255, 0}, 1, 2, 1);
    EXPECT_EQ(1.0, mse(x, z));
    EXPECT_EQ(1.0, mean_squared_error(std::vector<double>{0.0, 1.0}, std::vector<double>{1.0, 0.0}));
}

TEST(LossTest, constant_offset)
{
    const std::vector<double> x{0.0, 0.1, 0.25, 0.5};
    std::vector<double> z;
    for (const double v : x) {
        z.push_back(v + 0.5);
    }
    EXPECT_NEAR(0.25, mean_squared_error(x, z), 1e-12);

    // Integer-intensity version: an offset of 51 is exactly 0.2 after scaling.
    const auto xs = make_sample({0, 10, 100, 204}, 2, 2, 1);
    const auto zs = make_sample({51, 61, 151, 255}, 2, 2, 1);
    EXPECT_NEAR(0.04, mse(xs, zs), 1e-12);
}

TEST(LossTest, mean_is_average_of_entries)
{
    std::mt19937 rng(4);
    std::vector<Sample> samples;
    for (std::size_t i = 1; i <= 9; ++i) {
        std::vector<std::uint8_t> px(16);
        for (auto& p : px) {
            p = static_cast<std::uint8_t>(rng());
        }
        samples.emplace_back(px, 4, 4, i);
    }
    const SampleStream stream(samples, 2);
    const auto report = reconstruction_loss(stream, samples[3]);
    ASSERT_EQ(9u, report.per_sample.size());
    EXPECT_EQ(0.0, report.per_sample[3]);
    for (const double l : report.per_sample) {
        EXPECT_GE(l, 0.0);
    }
    const double mean =
        std::accumulate(report.per_sample.begin(), report.per_sample.end(), 0.0) / 9.0;
    EXPECT_NEAR(mean, report.mean_loss, 1e-12);
}

TEST(LossTest, dimension_mismatch)
{
    const SampleStream stream({filled(2, 2, 1, 1)}, 0);
    try {
        (void)reconstruction_loss(stream, filled(2, 3, 1, 1));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(ErrorCode::DimensionMismatch, e.code());
    }
}
