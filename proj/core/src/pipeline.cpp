#include "fhga/pipeline.hpp"

#include "fhga/error.hpp"
#include "fhga/random.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <locale>
#include <ostream>
#include <sstream>
#include <string>

namespace fhga {

namespace {

constexpr std::uint64_t kSeedStride = 0x9E3779B97F4A7C15ULL;

void check_k(const Histogram& hist, std::size_t k) {
    if (k < kMinSweepK) throw Error(Errc::InvalidK, "K must be at least 2, got " + std::to_string(k));
    const auto distinct = static_cast<std::size_t>(hist.distinct_levels());
    if (k > distinct) {
        throw Error(Errc::TooManyClasses, "K = " + std::to_string(k) + " exceeds the " + std::to_string(distinct) +
                                              " distinct gray levels present");
    }
}

Histogram histogram_of(const GrayImage& img) {
    if (img.empty()) throw Error(Errc::EmptyImage, "input image is empty");
    return compute_histogram(img);
}

std::vector<int> rounded(std::span<const double> centers) {
    std::vector<int> out;
    out.reserve(centers.size());
    for (double c : centers) out.push_back(static_cast<int>(std::lround(c)));
    return out;
}

} // namespace

void SweepConfig::validate() const {
    if (k_max < kMinSweepK) throw Error(Errc::InvalidArgument, "k_max must be at least 2");
    if (!(validity.c_param >= 0.0)) throw Error(Errc::InvalidArgument, "validity c parameter must be non-negative");
    fhnn.validate();
    ga.validate();
}

KSeeds derive_seeds(std::uint64_t master_seed, std::size_t k) {
    const std::uint64_t seed_k = master_seed ^ (static_cast<std::uint64_t>(k) * kSeedStride);
    return {mix_seed(seed_k), mix_seed(seed_k ^ 0xD1B54A32D192ED03ULL)};
}

SegmentationResult segment_k(const GrayImage& img, std::size_t k, const SweepConfig& cfg,
                             const FhnnObserver& fhnn_observer, const GaObserver& ga_observer) {
    cfg.validate();
    const auto hist = histogram_of(img);
    check_k(hist, k);

    const auto seeds = derive_seeds(cfg.master_seed, k);
    FhnnConfig fcfg = cfg.fhnn;
    fcfg.seed = seeds.fhnn;
    GaConfig gcfg = cfg.ga;
    gcfg.seed = seeds.ga;

    SegmentationResult out;
    out.k = k;
    out.fhnn_result = fhnn_cluster(hist, k, fcfg, fhnn_observer);
    out.ga_result = evolve(hist, out.fhnn_result.centers, gcfg, ga_observer);
    out.centers = out.ga_result->best.genes;
    out.metric = out.ga_result->best_metric;
    out.validity = validity_index(hist, out.centers, cfg.validity);
    auto rendering = render_segmentation(img, out.centers);
    out.label_map = std::move(rendering.labels);
    out.rendered = std::move(rendering.image);
    return out;
}

std::pair<SegmentationResult, SweepRecord> sweep(const GrayImage& img, const SweepConfig& cfg) {
    cfg.validate();
    const auto hist = histogram_of(img);
    const auto distinct = static_cast<std::size_t>(hist.distinct_levels());
    if (distinct < kMinSweepK) throw Error(Errc::DegenerateImage, "image has a single gray level");

    const std::size_t k_hi = std::min(cfg.k_max, distinct);
    SweepRecord record;
    std::optional<SegmentationResult> best;
    for (std::size_t k = kMinSweepK; k <= k_hi; ++k) {
        auto result = segment_k(img, k, cfg);
        record.entries.push_back({result.validity, result.metric});
        // strict '<' keeps the smaller K on ties
        if (!best || result.validity.v < best->validity.v) best = std::move(result);
    }
    return {std::move(*best), std::move(record)};
}

KMeansResult kmeans_baseline(const Histogram& hist, std::size_t k, std::uint64_t seed, int max_iterations) {
    if (hist.empty()) throw Error(Errc::EmptyHistogram, "histogram has no pixels");
    if (k == 0) throw Error(Errc::InvalidK, "K must be at least 1");
    auto levels = hist.support();
    if (k > levels.size()) throw Error(Errc::TooManyClasses, "K exceeds distinct gray levels");

    Rng rng(seed);
    for (std::size_t i = 0; i < k; ++i) {
        const auto j = i + static_cast<std::size_t>(rng.below(levels.size() - i));
        std::swap(levels[i], levels[j]);
    }
    Chromosome centers{std::vector<int>(levels.begin(), levels.begin() + static_cast<std::ptrdiff_t>(k))};

    KMeansResult out;
    auto labels = nearest_center_table(centers.genes);
    while (out.iterations < max_iterations) {
        ++out.iterations;
        centers = assign_and_adjust(hist, centers).adjusted;
        const auto next = nearest_center_table(centers.genes);
        bool stable = true;
        for (int z : hist.support()) stable = stable && next[static_cast<std::size_t>(z)] == labels[static_cast<std::size_t>(z)];
        labels = next;
        if (stable) break;
    }
    out.centers = centers.genes;
    out.metric = clustering_metric(hist, centers);
    return out;
}

SegmentationResult kmeans_segment(const GrayImage& img, std::size_t k, std::uint64_t seed, const ValidityConfig& vcfg) {
    const auto hist = histogram_of(img);
    check_k(hist, k);
    const auto km = kmeans_baseline(hist, k, seed);
    SegmentationResult out;
    out.k = k;
    out.centers = km.centers;
    out.metric = km.metric;
    out.validity = validity_index(hist, out.centers, vcfg);
    auto rendering = render_segmentation(img, out.centers);
    out.label_map = std::move(rendering.labels);
    out.rendered = std::move(rendering.image);
    return out;
}

SegmentationResult fhnn_only_segment(const GrayImage& img, std::size_t k, const FhnnConfig& cfg,
                                     const ValidityConfig& vcfg) {
    const auto hist = histogram_of(img);
    check_k(hist, k);
    SegmentationResult out;
    out.k = k;
    out.fhnn_result = fhnn_cluster(hist, k, cfg);
    out.centers = rounded(out.fhnn_result.centers);
    out.metric = clustering_metric(hist, Chromosome{out.centers});
    out.validity = validity_index(hist, out.centers, vcfg);
    auto rendering = render_with_table(img, out.centers, defuzzify(out.fhnn_result.memberships));
    out.label_map = std::move(rendering.labels);
    out.rendered = std::move(rendering.image);
    return out;
}

void write_sweep_csv(const SweepRecord& record, std::ostream& out) {
    if (record.entries.empty()) throw Error(Errc::InvalidArgument, "sweep record is empty");
    std::ostringstream buf;
    buf.imbue(std::locale::classic());
    buf << std::fixed << std::setprecision(6);
    buf << "k,validity,intra,inter,y,best_metric\n";
    for (const auto& e : record.entries) {
        buf << e.validity.k << ',' << e.validity.v << ',' << e.validity.intra << ',' << e.validity.inter << ','
            << e.validity.y << ',' << e.best_metric << '\n';
    }
    out << buf.str();
}

void export_sweep_csv(const SweepRecord& record, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(Errc::IoFailure, "cannot open " + path.string() + " for writing");
    write_sweep_csv(record, out);
    out.flush();
    if (!out) throw Error(Errc::IoFailure, "write failed for " + path.string());
}

} // namespace fhga
