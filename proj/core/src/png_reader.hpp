#pragma once

#include "fhga/imaging.hpp"

#include <cstdint>
#include <span>

namespace fhga::detail {

/// Decodes an 8-bit single-channel grayscale PNG; anything else is rejected.
GrayImage decode_png_gray8(std::span<const std::uint8_t> bytes);

} // namespace fhga::detail
