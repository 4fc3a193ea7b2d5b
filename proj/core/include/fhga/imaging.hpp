#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

namespace fhga {

inline constexpr int kLevels = 256;
inline constexpr int kMaxIntensity = 255;

/// Row-major 8-bit grayscale raster.
class GrayImage {
public:
    GrayImage() = default;
    GrayImage(std::size_t width, std::size_t height, std::vector<std::uint8_t> pixels);
    GrayImage(std::size_t width, std::size_t height, std::uint8_t fill = 0);

    [[nodiscard]] std::size_t width() const noexcept { return width_; }
    [[nodiscard]] std::size_t height() const noexcept { return height_; }
    [[nodiscard]] std::size_t size() const noexcept { return pixels_.size(); }
    [[nodiscard]] bool empty() const noexcept { return pixels_.empty(); }

    [[nodiscard]] std::span<const std::uint8_t> pixels() const noexcept { return pixels_; }
    [[nodiscard]] std::span<std::uint8_t> pixels() noexcept { return pixels_; }

    std::uint8_t& operator()(std::size_t x, std::size_t y) { return pixels_[y * width_ + x]; }
    std::uint8_t operator()(std::size_t x, std::size_t y) const { return pixels_[y * width_ + x]; }

    friend bool operator==(const GrayImage&, const GrayImage&) = default;

private:
    std::size_t width_ = 0;
    std::size_t height_ = 0;
    std::vector<std::uint8_t> pixels_;
};

struct LevelCount {
    int level;
    std::uint64_t count;
};

/// Dense 256-bin gray-level histogram.
class Histogram {
public:
    Histogram() { counts_.fill(0); }
    explicit Histogram(const std::array<std::uint64_t, kLevels>& counts);
    Histogram(std::initializer_list<LevelCount> entries);
    explicit Histogram(std::span<const LevelCount> entries);

    [[nodiscard]] std::uint64_t operator[](int level) const { return counts_[static_cast<std::size_t>(level)]; }
    [[nodiscard]] const std::array<std::uint64_t, kLevels>& counts() const noexcept { return counts_; }
    [[nodiscard]] std::uint64_t total() const noexcept { return total_; }
    [[nodiscard]] bool empty() const noexcept { return total_ == 0; }

    /// Levels with a nonzero count, ascending.
    [[nodiscard]] std::vector<int> support() const;
    [[nodiscard]] int distinct_levels() const;

    friend bool operator==(const Histogram&, const Histogram&) = default;

private:
    std::array<std::uint64_t, kLevels> counts_{};
    std::uint64_t total_ = 0;
};

struct LabelMap {
    std::size_t width = 0;
    std::size_t height = 0;
    std::size_t k = 0;
    std::vector<std::uint32_t> labels;

    friend bool operator==(const LabelMap&, const LabelMap&) = default;
};

struct Rendering {
    LabelMap labels;
    GrayImage image;
};

/// Reads binary PGM (P5, maxval 255) or 8-bit single-channel PNG.
GrayImage load_image(const std::filesystem::path& path);

/// Writes binary PGM (P5).
void save_image(const GrayImage& img, const std::filesystem::path& path);

GrayImage decode_pgm(std::span<const std::uint8_t> bytes);
std::vector<std::uint8_t> encode_pgm(const GrayImage& img);

Histogram compute_histogram(const GrayImage& img);

/// Index of the center nearest to `value`; ties go to the lowest index.
std::size_t nearest_center(int value, std::span<const int> centers);

/// Per-level lookup of nearest_center over all 256 intensities.
std::array<std::uint32_t, kLevels> nearest_center_table(std::span<const int> centers);

/// Assigns every pixel to its nearest center and paints it with that center.
Rendering render_segmentation(const GrayImage& img, std::span<const int> centers);

/// Paints each pixel with `centers[label_of_level[pixel]]`.
Rendering render_with_table(const GrayImage& img, std::span<const int> centers,
                            const std::array<std::uint32_t, kLevels>& label_of_level);

} // namespace fhga
