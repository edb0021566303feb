#include "mos/idx.hpp"

#include <fstream>
#include <iterator>
#include <sstream>
#include <string>

#include "mos/error.hpp"

namespace mos::idx {

namespace {

class Reader {
public:
    explicit Reader(std::span<const std::uint8_t> bytes) : bytes_(bytes) {}

    std::uint32_t u32(const char* what)
    {
        require(4, what);
        std::uint32_t v = 0;
        for (int i = 0; i < 4; ++i) {
            v = (v << 8) | bytes_[pos_++];
        }
        return v;
    }

    std::span<const std::uint8_t> take(std::size_t n, const char* what)
    {
        require(n, what);
        auto out = bytes_.subspan(pos_, n);
        pos_ += n;
        return out;
    }

    void expect_end() const
    {
        if (pos_ != bytes_.size()) {
            throw Error(ErrorCode::TrailingBytes,
                        std::to_string(bytes_.size() - pos_) + " bytes after declared payload");
        }
    }

private:
    void require(std::size_t n, const char* what) const
    {
        if (bytes_.size() - pos_ < n) {
            throw Error(ErrorCode::Truncated, std::string(what) + " needs " + std::to_string(n) +
                                                  " bytes, " +
                                                  std::to_string(bytes_.size() - pos_) + " left");
        }
    }

    std::span<const std::uint8_t> bytes_;
    std::size_t pos_ = 0;
};

void check_magic(std::uint32_t got, std::uint32_t want)
{
    if (got != want) {
        std::ostringstream msg;
        msg << std::hex << "magic 0x" << got << ", expected 0x" << want;
        throw Error(ErrorCode::BadMagic, msg.str());
    }
}

}  // namespace

std::span<const std::uint8_t> IdxImages::image(std::size_t i) const
{
    const std::size_t size = std::size_t{rows} * cols;
    if (i >= count) {
        throw Error(ErrorCode::IndexOutOfRange, "image " + std::to_string(i) + " of " +
                                                    std::to_string(count));
    }
    return std::span<const std::uint8_t>(data).subspan(i * size, size);
}

IdxImages parse_idx_images(std::span<const std::uint8_t> bytes)
{
    Reader in(bytes);
    check_magic(in.u32("magic"), kImagesMagic);
    IdxImages out;
    out.count = in.u32("image count");
    out.rows = in.u32("row count");
    out.cols = in.u32("column count");
    if (out.rows == 0 || out.cols == 0) {
        throw Error(ErrorCode::InvalidArgument, "image dimensions must be positive");
    }
    const std::size_t image_size = std::size_t{out.rows} * out.cols;  // < 2^64
    if (out.count != 0 && image_size > bytes.size() / out.count) {
        throw Error(ErrorCode::Truncated, "header declares more payload than the buffer holds");
    }
    const auto payload = in.take(image_size * out.count, "image payload");
    in.expect_end();
    out.data.assign(payload.begin(), payload.end());
    return out;
}

IdxLabels parse_idx_labels(std::span<const std::uint8_t> bytes)
{
    Reader in(bytes);
    check_magic(in.u32("magic"), kLabelsMagic);
    IdxLabels out;
    out.count = in.u32("label count");
    const auto payload = in.take(out.count, "label payload");
    in.expect_end();
    for (std::size_t i = 0; i < payload.size(); ++i) {
        if (payload[i] > 9) {
            throw Error(ErrorCode::InvalidLabel, "label " + std::to_string(payload[i]) +
                                                     " at position " + std::to_string(i));
        }
    }
    out.labels.assign(payload.begin(), payload.end());
    return out;
}

std::vector<std::uint8_t> read_file(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error(ErrorCode::IoFailure, "cannot open " + path.string());
    }
    std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                    std::istreambuf_iterator<char>());
    if (in.bad()) {
        throw Error(ErrorCode::IoFailure, "read error on " + path.string());
    }
    return bytes;
}

SampleStream select_class(const IdxImages& images, const IdxLabels& labels, int digit,
                          std::size_t n)
{
    if (images.count != labels.count) {
        throw Error(ErrorCode::CountMismatch, std::to_string(images.count) + " images but " +
                                                  std::to_string(labels.count) + " labels");
    }
    if (digit < 0 || digit > 9) {
        throw Error(ErrorCode::InvalidDigit, "digit " + std::to_string(digit) + " outside 0..9");
    }
    if (n == 0) {
        throw Error(ErrorCode::InvalidArgument, "n must be at least 1");
    }

    std::vector<Sample> picked;
    picked.reserve(n);
    for (std::size_t i = 0; i < labels.count && picked.size() < n; ++i) {
        if (labels.labels[i] == digit) {
            const auto px = images.image(i);
            picked.emplace_back(std::vector<std::uint8_t>(px.begin(), px.end()), images.rows,
                                images.cols, picked.size() + 1);
        }
    }
    if (picked.size() < n) {
        throw Error(ErrorCode::NotEnoughSamples,
                    "digit " + std::to_string(digit) + " has " + std::to_string(picked.size()) +
                        " samples, " + std::to_string(n) + " requested");
    }
    return SampleStream(std::move(picked), digit);
}

}  // namespace mos::idx
