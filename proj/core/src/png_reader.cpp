#include "png_reader.hpp"

#include "fhga/error.hpp"

#include <png.h>

#include <string>
#include <vector>

namespace fhga::detail {

namespace {

// IHDR is required to be the first chunk: signature(8) len(4) type(4) w(4) h(4) depth(1) color(1)
constexpr std::size_t kIhdrDepth = 24;
constexpr std::size_t kIhdrColor = 25;
constexpr std::uint8_t kColorGray = 0;

} // namespace

GrayImage decode_png_gray8(std::span<const std::uint8_t> bytes) {
    if (bytes.size() <= kIhdrColor || std::string(bytes.begin() + 12, bytes.begin() + 16) != "IHDR") {
        throw Error(Errc::CorruptFile, "PNG missing IHDR");
    }
    if (bytes[kIhdrColor] != kColorGray) throw Error(Errc::UnsupportedFormat, "PNG is not single-channel grayscale");
    if (bytes[kIhdrDepth] != 8) {
        throw Error(Errc::UnsupportedFormat, "PNG bit depth " + std::to_string(bytes[kIhdrDepth]) + " (need 8)");
    }

    png_image image{};
    image.version = PNG_IMAGE_VERSION;
    if (png_image_begin_read_from_memory(&image, bytes.data(), bytes.size()) == 0) {
        throw Error(Errc::CorruptFile, std::string("PNG header: ") + image.message);
    }
    image.format = PNG_FORMAT_GRAY;
    std::vector<std::uint8_t> pixels(PNG_IMAGE_SIZE(image));
    if (png_image_finish_read(&image, nullptr, pixels.data(), 0, nullptr) == 0) {
        const std::string msg = image.message;
        png_image_free(&image);
        throw Error(Errc::CorruptFile, "PNG raster: " + msg);
    }
    return GrayImage(image.width, image.height, std::move(pixels));
}

} // namespace fhga::detail
