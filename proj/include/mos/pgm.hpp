#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <span>
#include <string>

namespace mos::pgm {

// Binary P5: "P5\n<width> <height>\n255\n" followed by the row-major bytes.
std::string encode(std::span<const std::uint8_t> pixels, std::size_t height, std::size_t width);

// Throws IoFailure.
void write(const std::filesystem::path& path, std::span<const std::uint8_t> pixels,
           std::size_t height, std::size_t width);

}  // namespace mos::pgm
