#include "fhga/validity.hpp"

#include "fhga/error.hpp"

#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>

namespace fhga {

double intra_measure(const Histogram& hist, std::span<const int> centers) {
    if (hist.empty()) throw Error(Errc::EmptyHistogram, "histogram has no pixels");
    if (centers.empty()) throw Error(Errc::EmptyCenters, "no centers");
    const auto label = nearest_center_table(centers);
    std::uint64_t sum = 0;
    for (int z = 0; z < kLevels; ++z) {
        const auto n = hist[z];
        if (n == 0) continue;
        const auto d = static_cast<std::uint64_t>(std::abs(z - centers[label[static_cast<std::size_t>(z)]]));
        sum += n * d * d;
    }
    return static_cast<double>(sum) / static_cast<double>(hist.total());
}

double inter_measure(std::span<const int> centers) {
    if (centers.size() < 2) throw Error(Errc::TooFewClusters, "inter-cluster distance needs at least two centers");
    long best = std::numeric_limits<long>::max();
    for (std::size_t i = 0; i + 1 < centers.size(); ++i) {
        for (std::size_t j = i + 1; j < centers.size(); ++j) {
            const long d = centers[i] - centers[j];
            best = std::min(best, d * d);
        }
    }
    return static_cast<double>(best);
}

double y_factor(std::size_t k, const ValidityConfig& cfg) {
    const double x = static_cast<double>(k) - 2.0;
    const double density = std::exp(-0.5 * x * x) / std::sqrt(2.0 * std::numbers::pi);
    return cfg.c_param * density + 1.0;
}

ValidityReport validity_index(const Histogram& hist, std::span<const int> centers, const ValidityConfig& cfg) {
    if (centers.size() < 2) throw Error(Errc::TooFewClusters, "validity index needs K >= 2");
    ValidityReport r;
    r.k = centers.size();
    r.intra = intra_measure(hist, centers);
    r.inter = inter_measure(centers);
    r.y = y_factor(r.k, cfg);
    r.v = r.inter > 0.0 ? r.y * r.intra / r.inter : std::numeric_limits<double>::infinity();
    return r;
}

} // namespace fhga
