#pragma once

// Turi's validity index V = y * intra / inter. Lower is better; the Gaussian
// weight y (peak at k = 2) counters the usual bias toward very small k.

#include "fhga/imaging.hpp"

#include <cstddef>
#include <span>

namespace fhga {

struct ValidityConfig {
    double c_param = 25.0;
};

struct ValidityReport {
    std::size_t k = 0;
    double intra = 0.0;
    double inter = 0.0;
    double y = 0.0;
    /// +infinity when two centers coincide.
    double v = 0.0;
};

/// Mean squared distance from each pixel to its nearest center.
double intra_measure(const Histogram& hist, std::span<const int> centers);

/// Smallest squared gap between two centers.
double inter_measure(std::span<const int> centers);

double y_factor(std::size_t k, const ValidityConfig& cfg);

ValidityReport validity_index(const Histogram& hist, std::span<const int> centers, const ValidityConfig& cfg);

} // namespace fhga
