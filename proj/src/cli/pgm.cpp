#include "mos/pgm.hpp"

#include <fstream>

#include "mos/error.hpp"

namespace mos::pgm {

std::string encode(std::span<const std::uint8_t> pixels, std::size_t height, std::size_t width)
{
    if (pixels.size() != height * width) {
        throw Error(ErrorCode::DimensionMismatch, "pixel count does not match " +
                                                      std::to_string(width) + "x" +
                                                      std::to_string(height));
    }
    std::string out = "P5\n" + std::to_string(width) + " " + std::to_string(height) + "\n255\n";
    out.append(reinterpret_cast<const char*>(pixels.data()), pixels.size());
    return out;
}

void write(const std::filesystem::path& path, std::span<const std::uint8_t> pixels,
           std::size_t height, std::size_t width)
{
    const auto bytes = encode(pixels, height, width);
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw Error(ErrorCode::IoFailure, "cannot open " + path.string() + " for writing");
    }
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    out.flush();
    if (!out) {
        throw Error(ErrorCode::IoFailure, "write failed on " + path.string());
    }
}

}  // namespace mos::pgm
