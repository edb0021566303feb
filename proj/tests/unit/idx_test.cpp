#include "mos/idx.hpp"

#include <gtest/gtest.h>

#include <random>

#include "mos/error.hpp"
#include "test_support.hpp"

using namespace mos;
using namespace mos::idx;

namespace {

ErrorCode code_of(auto&& fn)
{
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    ADD_FAILURE() << "no error raised";
    return ErrorCode::InvalidArgument;
}

// magic 0x00000803, count 2, rows 2, cols 2, then the payload.
const std::vector<std::uint8_t> kTwoImages{
    0x00, 0x00, 0x08, 0x03, 0x00, 0x00, 0x00, 0x02, 0x00, 0x00, 0x00, 0x02,
    0x00, 0x00, 0x00, 0x02, 0, 1, 2, 3, 10, 20, 30, 40,
};

// magic 0x00000801, count 3, payload [0, 7, 9].
const std::vector<std::uint8_t> kThreeLabels{
    0x00, 0x00, 0x08, 0x01, 0x00, 0x00, 0x00, 0x03, 0, 7, 9,
};

}  // namespace

TEST(IdxImagesTest, hand_encoded_fixture)
{
    const auto images = parse_idx_images(kTwoImages);
    EXPECT_EQ(2u, images.count);
    EXPECT_EQ(2u, images.rows);
    EXPECT_EQ(2u, images.cols);
    const auto a = images.image(0);
    const auto b = images.image(1);
    EXPECT_EQ((std::vector<std::uint8_t>{0, 1, 2, 3}), std::vector<std::uint8_t>(a.begin(), a.end()));
    EXPECT_EQ((std::vector<std::uint8_t>{10, 20, 30, 40}),
              std::vector<std::uint8_t>(b.begin(), b.end()));
}

TEST(IdxImagesTest, corrupt_fixtures)
{
    auto wrong_magic = kTwoImages;
    wrong_magic[3] = 0x01;
    EXPECT_EQ(ErrorCode::BadMagic, code_of([&] { (void)parse_idx_images(wrong_magic); }));

    auto short_payload = kTwoImages;
    short_payload.pop_back();
    EXPECT_EQ(ErrorCode::Truncated, code_of([&] { (void)parse_idx_images(short_payload); }));

    auto long_payload = kTwoImages;
    long_payload.push_back(0);
    EXPECT_EQ(ErrorCode::TrailingBytes, code_of([&] { (void)parse_idx_images(long_payload); }));

    const std::vector<std::uint8_t> short_header(kTwoImages.begin(), kTwoImages.begin() + 10);
    EXPECT_EQ(ErrorCode::Truncated, code_of([&] { (void)parse_idx_images(short_header); }));

    // A header whose declared size overflows 64 bits cannot be satisfied.
    std::vector<std::uint8_t> huge{0x00, 0x00, 0x08, 0x03};
    for (int i = 0; i < 3; ++i) {
        mos::testing::put_u32(huge, 0xFFFFFFFFu);
    }
    EXPECT_EQ(ErrorCode::Truncated, code_of([&] { (void)parse_idx_images(huge); }));
}

TEST(IdxLabelsTest, hand_encoded_fixture)
{
    const auto labels = parse_idx_labels(kThreeLabels);
    EXPECT_EQ(3u, labels.count);
    EXPECT_EQ((std::vector<std::uint8_t>{0, 7, 9}), labels.labels);
}

TEST(IdxLabelsTest, corrupt_fixtures)
{
    auto bad_label = kThreeLabels;
    bad_label[9] = 12;
    EXPECT_EQ(ErrorCode::InvalidLabel, code_of([&] { (void)parse_idx_labels(bad_label); }));

    auto short_payload = kThreeLabels;
    short_payload.pop_back();
    EXPECT_EQ(ErrorCode::Truncated, code_of([&] { (void)parse_idx_labels(short_payload); }));

    EXPECT_EQ(ErrorCode::BadMagic, code_of([&] { (void)parse_idx_labels(kTwoImages); }));
    EXPECT_EQ(ErrorCode::BadMagic, code_of([&] { (void)parse_idx_images(kThreeLabels); }));

    auto trailing = kThreeLabels;
    trailing.push_back(1);
    EXPECT_EQ(ErrorCode::TrailingBytes, code_of([&] { (void)parse_idx_labels(trailing); }));
}

TEST(IdxTest, round_trip_random)
{
    std::mt19937 rng(21);
    for (int trial = 0; trial < 50; ++trial) {
        IdxImages images;
        images.count = rng() % 6;
        images.rows = 1 + rng() % 5;
        images.cols = 1 + rng() % 5;
        images.data.resize(std::size_t{images.count} * images.rows * images.cols);
        for (auto& b : images.data) {
            b = static_cast<std::uint8_t>(rng());
        }
        EXPECT_EQ(images, parse_idx_images(mos::testing::encode_images(images)));

        IdxLabels labels;
        labels.count = rng() % 20;
        for (std::uint32_t i = 0; i < labels.count; ++i) {
            labels.labels.push_back(static_cast<std::uint8_t>(rng() % 10));
        }
        EXPECT_EQ(labels, parse_idx_labels(mos::testing::encode_labels(labels)));
    }
}

TEST(IdxTest, parser_is_total_on_random_bytes)
{
    std::mt19937 rng(99);
    for (int trial = 0; trial < 2000; ++trial) {
        std::vector<std::uint8_t> bytes(rng() % 40);
        for (auto& b : bytes) {
            b = static_cast<std::uint8_t>(rng() % 4);
        }
        // Bias half the inputs towards a valid magic so deeper paths run.
        if (bytes.size() >= 4 && trial % 2 == 0) {
            bytes[0] = 0;
            bytes[1] = 0;
            bytes[2] = 8;
            bytes[3] = (trial % 4 == 0) ? 3 : 1;
        }
        for (const bool as_images : {true, false}) {
            try {
                if (as_images) {
                    (void)parse_idx_images(bytes);
                } else {
                    (void)parse_idx_labels(bytes);
                }
            } catch (const Error& e) {
                const auto c = e.code();
                const bool declared = c == ErrorCode::BadMagic || c == ErrorCode::Truncated ||
                                      c == ErrorCode::TrailingBytes ||
                                      c == ErrorCode::InvalidLabel ||
                                      c == ErrorCode::InvalidArgument;
                EXPECT_TRUE(declared) << to_string(c);
            }
        }
    }
}

TEST(SelectClassTest, filters_in_file_order)
{
    IdxImages images;
    images.count = 4;
    images.rows = 1;
    images.cols = 2;
    images.data = {1, 1, 2, 2, 3, 3, 4, 4};
    IdxLabels labels;
    labels.count = 4;
    labels.labels = {0, 1, 0, 2};

    const auto stream = select_class(images, labels, 0, 2);
    EXPECT_EQ(2u, stream.n());
    EXPECT_EQ(0, stream.class_digit());
    EXPECT_EQ(1u, stream.at(1).source_index());
    EXPECT_EQ(1, stream.at(1).pixels()[0]);
    EXPECT_EQ(2u, stream.at(2).source_index());
    EXPECT_EQ(3, stream.at(2).pixels()[0]);

    EXPECT_EQ(ErrorCode::NotEnoughSamples, code_of([&] { (void)select_class(images, labels, 0, 3); }));
    EXPECT_EQ(ErrorCode::InvalidDigit, code_of([&] { (void)select_class(images, labels, 10, 1); }));
    EXPECT_EQ(ErrorCode::InvalidDigit, code_of([&] { (void)select_class(images, labels, -1, 1); }));

    labels.count = 3;
    labels.labels.pop_back();
    EXPECT_EQ(ErrorCode::CountMismatch, code_of([&] { (void)select_class(images, labels, 0, 1); }));
}

TEST(ReadFileTest, missing_file)
{
    EXPECT_EQ(ErrorCode::IoFailure,
              code_of([] { (void)read_file("/nonexistent/definitely/not/here"); }));
}
