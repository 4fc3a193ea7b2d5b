#include "fhga/imaging.hpp"

#include "fhga/error.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iterator>
#include <string>

#include "png_reader.hpp"

namespace fhga {

GrayImage::GrayImage(std::size_t width, std::size_t height, std::vector<std::uint8_t> pixels)
    : width_(width), height_(height), pixels_(std::move(pixels)) {
    if (pixels_.size() != width_ * height_) {
        throw Error(Errc::InvalidDimensions, "pixel count " + std::to_string(pixels_.size()) +
                                                 " does not match " + std::to_string(width_) + "x" +
                                                 std::to_string(height_));
    }
}

GrayImage::GrayImage(std::size_t width, std::size_t height, std::uint8_t fill)
    : width_(width), height_(height), pixels_(width * height, fill) {}

Histogram::Histogram(const std::array<std::uint64_t, kLevels>& counts) : counts_(counts) {
    for (auto c : counts_) total_ += c;
}

Histogram::Histogram(std::initializer_list<LevelCount> entries)
    : Histogram(std::span<const LevelCount>(entries.begin(), entries.size())) {}

Histogram::Histogram(std::span<const LevelCount> entries) {
    counts_.fill(0);
    for (const auto& [level, count] : entries) {
        if (level < 0 || level > kMaxIntensity) {
            throw Error(Errc::InvalidArgument, "gray level " + std::to_string(level) + " out of range");
        }
        counts_[static_cast<std::size_t>(level)] += count;
        total_ += count;
    }
}

std::vector<int> Histogram::support() const {
    std::vector<int> levels;
    for (int v = 0; v < kLevels; ++v) {
        if (counts_[static_cast<std::size_t>(v)] > 0) levels.push_back(v);
    }
    return levels;
}

int Histogram::distinct_levels() const {
    return static_cast<int>(std::count_if(counts_.begin(), counts_.end(), [](auto c) { return c > 0; }));
}

namespace {

std::vector<std::uint8_t> read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(Errc::IoFailure, "cannot open " + path.string());
    std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    if (in.bad()) throw Error(Errc::IoFailure, "read failed for " + path.string());
    return bytes;
}

bool is_space(std::uint8_t c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' || c == '\f'; }

// Cursor over a PNM header: skips whitespace and '#' comments between tokens.
class HeaderReader {
public:
    explicit HeaderReader(std::span<const std::uint8_t> bytes) : bytes_(bytes) {}

    std::size_t next_number() {
        skip_separators();
        const std::size_t start = pos_;
        while (pos_ < bytes_.size() && bytes_[pos_] >= '0' && bytes_[pos_] <= '9') ++pos_;
        if (start == pos_) {
            throw Error(pos_ >= bytes_.size() ? Errc::CorruptFile : Errc::UnsupportedFormat,
                        "malformed PGM header");
        }
        std::size_t value = 0;
        const auto* first = reinterpret_cast<const char*>(bytes_.data() + start);
        const auto* last = reinterpret_cast<const char*>(bytes_.data() + pos_);
        if (auto [p, ec] = std::from_chars(first, last, value); ec != std::errc{}) {
            throw Error(Errc::UnsupportedFormat, "PGM header value out of range");
        }
        return value;
    }

    // Exactly one whitespace byte separates maxval from the raster.
    std::size_t raster_offset() {
        if (pos_ >= bytes_.size()) throw Error(Errc::CorruptFile, "PGM header truncated");
        if (!is_space(bytes_[pos_])) throw Error(Errc::UnsupportedFormat, "expected whitespace after maxval");
        return pos_ + 1;
    }

private:
    void skip_separators() {
        while (pos_ < bytes_.size()) {
            if (is_space(bytes_[pos_])) {
                ++pos_;
            } else if (bytes_[pos_] == '#') {
                while (pos_ < bytes_.size() && bytes_[pos_] != '\n' && bytes_[pos_] != '\r') ++pos_;
            } else {
                break;
            }
        }
    }

    std::span<const std::uint8_t> bytes_;
    std::size_t pos_ = 2;
};

bool has_png_signature(std::span<const std::uint8_t> bytes) {
    static constexpr std::array<std::uint8_t, 8> sig{0x89, 'P', 'N', 'G', '\r', '\n', 0x1A, '\n'};
    return bytes.size() >= sig.size() && std::equal(sig.begin(), sig.end(), bytes.begin());
}

} // namespace

GrayImage decode_pgm(std::span<const std::uint8_t> bytes) {
    if (bytes.size() < 2 || bytes[0] != 'P') throw Error(Errc::UnsupportedFormat, "not a PNM file");
    if (bytes[1] != '5') {
        throw Error(Errc::UnsupportedFormat, std::string("PNM variant P") + static_cast<char>(bytes[1]) +
                                                 " is not binary grayscale");
    }
    HeaderReader header(bytes);
    const std::size_t width = header.next_number();
    const std::size_t height = header.next_number();
    const std::size_t maxval = header.next_number();
    if (maxval != 255) throw Error(Errc::UnsupportedFormat, "maxval " + std::to_string(maxval) + " (need 255)");
    if (width == 0 || height == 0) throw Error(Errc::UnsupportedFormat, "zero image dimension");
    const std::size_t offset = header.raster_offset();
    const std::size_t n = width * height;
    if (bytes.size() - offset < n) throw Error(Errc::CorruptFile, "PGM raster truncated");
    std::vector<std::uint8_t> pixels(bytes.begin() + static_cast<std::ptrdiff_t>(offset),
                                     bytes.begin() + static_cast<std::ptrdiff_t>(offset + n));
    return GrayImage(width, height, std::move(pixels));
}

std::vector<std::uint8_t> encode_pgm(const GrayImage& img) {
    const std::string header = "P5\n" + std::to_string(img.width()) + " " + std::to_string(img.height()) + "\n255\n";
    std::vector<std::uint8_t> out(header.begin(), header.end());
    out.insert(out.end(), img.pixels().begin(), img.pixels().end());
    return out;
}

GrayImage load_image(const std::filesystem::path& path) {
    const auto bytes = read_file(path);
    if (has_png_signature(bytes)) return detail::decode_png_gray8(bytes);
    return decode_pgm(bytes);
}

void save_image(const GrayImage& img, const std::filesystem::path& path) {
    const auto bytes = encode_pgm(img);
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(Errc::IoFailure, "cannot open " + path.string() + " for writing");
    out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
    out.flush();
    if (!out) throw Error(Errc::IoFailure, "write failed for " + path.string());
}

Histogram compute_histogram(const GrayImage& img) {
    if (img.empty()) throw Error(Errc::EmptyImage, "cannot build a histogram of an empty image");
    std::array<std::uint64_t, kLevels> counts{};
    for (auto v : img.pixels()) ++counts[v];
    return Histogram(counts);
}

std::size_t nearest_center(int value, std::span<const int> centers) {
    if (centers.empty()) throw Error(Errc::EmptyCenters, "no centers to assign to");
    std::size_t best = 0;
    int best_dist = std::abs(value - centers[0]);
    for (std::size_t j = 1; j < centers.size(); ++j) {
        const int d = std::abs(value - centers[j]);
        if (d < best_dist) {
            best = j;
            best_dist = d;
        }
    }
    return best;
}

std::array<std::uint32_t, kLevels> nearest_center_table(std::span<const int> centers) {
    if (centers.empty()) throw Error(Errc::EmptyCenters, "no centers to assign to");
    std::array<std::uint32_t, kLevels> table{};
    for (int v = 0; v < kLevels; ++v) table[static_cast<std::size_t>(v)] = static_cast<std::uint32_t>(nearest_center(v, centers));
    return table;
}

Rendering render_with_table(const GrayImage& img, std::span<const int> centers,
                            const std::array<std::uint32_t, kLevels>& label_of_level) {
    if (centers.empty()) throw Error(Errc::EmptyCenters, "no centers to render");
    for (int c : centers) {
        if (c < 0 || c > kMaxIntensity) throw Error(Errc::InvalidArgument, "center " + std::to_string(c) + " out of range");
    }
    Rendering out{LabelMap{img.width(), img.height(), centers.size(), {}}, GrayImage(img.width(), img.height())};
    out.labels.labels.reserve(img.size());
    auto dst = out.image.pixels();
    const auto src = img.pixels();
    for (std::size_t i = 0; i < src.size(); ++i) {
        const auto label = label_of_level[src[i]];
        out.labels.labels.push_back(label);
        dst[i] = static_cast<std::uint8_t>(centers[label]);
    }
    return out;
}

Rendering render_segmentation(const GrayImage& img, std::span<const int> centers) {
    return render_with_table(img, centers, nearest_center_table(centers));
}

} // namespace fhga
