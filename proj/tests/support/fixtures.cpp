#include "fixtures.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#ifndef FHGA_TEST_DATA_DIR
#error "FHGA_TEST_DATA_DIR must be defined"
#endif

namespace fhga::testkit {

namespace {

double standard_normal(Rng& rng) {
    // Box-Muller; one value per call is enough here.
    const double u1 = rng.uniform_open01();
    const double u2 = rng.uniform01();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

} // namespace

GrayImage gaussian_modes_image(std::size_t width, std::size_t height, const std::vector<double>& means, double sigma,
                               std::uint64_t seed) {
    Rng rng(seed);
    GrayImage img(width, height);
    for (auto& p : img.pixels()) {
        const double mean = means[rng.below(means.size())];
        const double v = std::clamp(std::round(mean + sigma * standard_normal(rng)), 0.0, 255.0);
        p = static_cast<std::uint8_t>(v);
    }
    return img;
}

GrayImage random_image(std::size_t width, std::size_t height, Rng& rng) {
    GrayImage img(width, height);
    for (auto& p : img.pixels()) p = static_cast<std::uint8_t>(rng.below(256));
    return img;
}

Histogram random_histogram(int levels, std::uint64_t max_count, Rng& rng) {
    std::vector<int> all(256);
    for (int i = 0; i < 256; ++i) all[static_cast<std::size_t>(i)] = i;
    std::vector<LevelCount> entries;
    for (int i = 0; i < levels; ++i) {
        const auto j = static_cast<std::size_t>(i) + rng.below(256 - static_cast<std::uint64_t>(i));
        std::swap(all[static_cast<std::size_t>(i)], all[j]);
        entries.push_back({all[static_cast<std::size_t>(i)], 1 + rng.below(max_count)});
    }
    return Histogram(std::span<const LevelCount>(entries));
}

GrayImage three_mode_fixture(std::uint64_t seed) { return gaussian_modes_image(128, 128, {30, 128, 220}, 5.0, seed); }

GrayImage bimodal_fixture(std::uint64_t seed) { return gaussian_modes_image(128, 128, {50, 200}, 4.0, seed); }

GrayImage camera_fixture() { return load_image(FHGA_TEST_DATA_DIR "/camera_256.pgm"); }

} // namespace fhga::testkit
