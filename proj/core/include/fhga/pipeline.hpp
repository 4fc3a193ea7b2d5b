#pragma once

#include "fhga/fhnn.hpp"
#include "fhga/ga.hpp"
#include "fhga/imaging.hpp"
#include "fhga/validity.hpp"

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <utility>
#include <vector>

namespace fhga {

inline constexpr std::size_t kMinSweepK = 2;

struct SweepConfig {
    std::size_t k_max = 10;
    FhnnConfig fhnn;
    GaConfig ga;
    ValidityConfig validity;
    std::uint64_t master_seed = 0;

    void validate() const;
};

/// Seeds used for one K. Derived from the master seed and K alone, so the
/// run for a given K does not depend on which other K values are swept.
struct KSeeds {
    std::uint64_t fhnn;
    std::uint64_t ga;
};

KSeeds derive_seeds(std::uint64_t master_seed, std::size_t k);

struct SegmentationResult {
    std::size_t k = 0;
    std::vector<int> centers;
    LabelMap label_map;
    GrayImage rendered;
    ValidityReport validity;
    /// Absent for the FHNN-only baseline.
    std::optional<EvolutionResult> ga_result;
    FhnnResult fhnn_result;
    double metric = 0.0;
};

struct SweepEntry {
    ValidityReport validity;
    double best_metric = 0.0;
};

struct SweepRecord {
    std::vector<SweepEntry> entries;
};

/// FHNN clustering seeds a GA that refines K centers; scored by the validity index.
SegmentationResult segment_k(const GrayImage& img, std::size_t k, const SweepConfig& cfg,
                             const FhnnObserver& fhnn_observer = {}, const GaObserver& ga_observer = {});

/// segment_k for every K in [2, min(k_max, distinct levels)]; keeps the minimum-V result.
std::pair<SegmentationResult, SweepRecord> sweep(const GrayImage& img, const SweepConfig& cfg);

struct KMeansResult {
    std::vector<int> centers;
    double metric = 0.0;
    int iterations = 0;
};

/// Lloyd iterations on the histogram with integer centers.
KMeansResult kmeans_baseline(const Histogram& hist, std::size_t k, std::uint64_t seed, int max_iterations = 1000);

SegmentationResult kmeans_segment(const GrayImage& img, std::size_t k, std::uint64_t seed, const ValidityConfig& vcfg);

/// FHNN alone, defuzzified by maximum membership.
SegmentationResult fhnn_only_segment(const GrayImage& img, std::size_t k, const FhnnConfig& cfg,
                                     const ValidityConfig& vcfg = {});

void write_sweep_csv(const SweepRecord& record, std::ostream& out);
void export_sweep_csv(const SweepRecord& record, const std::filesystem::path& path);

} // namespace fhga
