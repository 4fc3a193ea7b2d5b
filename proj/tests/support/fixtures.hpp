#pragma once

#include "fhga/imaging.hpp"
#include "fhga/random.hpp"

#include <cstdint>
#include <vector>

namespace fhga::testkit {

/// Pixels drawn from equal-weight Gaussian modes, rounded and clipped to [0,255].
GrayImage gaussian_modes_image(std::size_t width, std::size_t height, const std::vector<double>& means, double sigma,
                               std::uint64_t seed);

GrayImage random_image(std::size_t width, std::size_t height, Rng& rng);

/// Histogram with `levels` distinct gray levels, each with count in [1, max_count].
Histogram random_histogram(int levels, std::uint64_t max_count, Rng& rng);

GrayImage three_mode_fixture(std::uint64_t seed = 7);
GrayImage bimodal_fixture(std::uint64_t seed = 11);

/// Natural test photograph shipped in tests/data.
GrayImage camera_fixture();

} // namespace fhga::testkit
