#include "mos/sample.hpp"

#include <gtest/gtest.h>

#include "mos/error.hpp"
#include "test_support.hpp"

using namespace mos;
using mos::testing::filled;
using mos::testing::make_sample;

TEST(SampleTest, mass_small)
{
    EXPECT_EQ(6u, sample_mass(make_sample({0, 1, 2, 3}, 2, 2)));
    EXPECT_EQ(0u, sample_mass(filled(2, 2, 0)));
}

TEST(SampleTest, mass_full_white_digit)
{
    const auto s = filled(28, 28, 255);
    // Exhaustive per-pixel summation.
    std::uint64_t expected = 0;
    for (std::size_t r = 0; r < 28; ++r) {
        for (std::size_t c = 0; c < 28; ++c) {
            expected += s.pixels()[r * 28 + c];
        }
    }
    EXPECT_EQ(199920u, expected);
    EXPECT_EQ(expected, sample_mass(s));
}

TEST(SampleTest, rejects_bad_shapes)
{
    EXPECT_THROW(make_sample({1, 2, 3}, 2, 2), Error);
    EXPECT_THROW(make_sample({}, 0, 0), Error);
    EXPECT_THROW(make_sample({1}, 1, 1, 0), Error);
}

TEST(SampleStreamTest, enforces_dense_indices_and_shape)
{
    std::vector<Sample> ok{filled(2, 2, 1, 1), filled(2, 2, 2, 2)};
    const SampleStream stream(ok, 3);
    EXPECT_EQ(2u, stream.n());
    EXPECT_EQ(3, stream.class_digit());
    EXPECT_EQ(8u, sample_mass(stream.at(2)));

    std::vector<Sample> gap{filled(2, 2, 1, 1), filled(2, 2, 2, 3)};
    EXPECT_THROW(SampleStream(gap, 0), Error);

    std::vector<Sample> mixed{filled(2, 2, 1, 1), filled(2, 3, 2, 2)};
    try {
        SampleStream(mixed, 0);
        FAIL() << "expected DimensionMismatch";
    } catch (const Error& e) {
        EXPECT_EQ(ErrorCode::DimensionMismatch, e.code());
    }

    EXPECT_THROW(SampleStream({}, 0), Error);
    EXPECT_THROW(SampleStream(ok, 10), Error);
}

TEST(SampleStreamTest, at_is_one_based)
{
    const auto stream = mos::testing::stream_of_pixels({4, 5, 6});
    EXPECT_EQ(4u, sample_mass(stream.at(1)));
    EXPECT_EQ(6u, sample_mass(stream.at(3)));
    try {
        (void)stream.at(4);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(ErrorCode::IndexOutOfRange, e.code());
    }
    EXPECT_THROW((void)stream.at(0), Error);
}
