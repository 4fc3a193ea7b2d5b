#include "fhga/error.hpp"
#include "fhga/pipeline.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace fhga;

namespace {

Errc error_code_of(const std::function<void()>& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    ADD_FAILURE() << "expected fhga::Error";
    return Errc::InvalidArgument;
}

std::vector<int> sorted(std::vector<int> v) {
    std::sort(v.begin(), v.end());
    return v;
}

} // namespace

TEST(DeriveSeeds, DependsOnlyOnMasterAndK) {
    const auto a = derive_seeds(1, 3);
    EXPECT_EQ(a.fhnn, derive_seeds(1, 3).fhnn);
    EXPECT_NE(a.fhnn, a.ga);
    EXPECT_NE(a.fhnn, derive_seeds(1, 4).fhnn);
    EXPECT_NE(a.fhnn, derive_seeds(2, 3).fhnn);
}

TEST(SegmentK, BimodalMatchesThresholdOracle) {
    const auto img = testkit::bimodal_fixture();
    const auto oracle = testkit::best_contiguous_centers(compute_histogram(img), 2);
    const auto r = segment_k(img, 2, SweepConfig{});
    const auto c = sorted(r.centers);
    EXPECT_LE(std::abs(c[0] - 50), 3);
    EXPECT_LE(std::abs(c[1] - 200), 3);
    EXPECT_LE(std::abs(c[0] - oracle[0]), 3);
    EXPECT_LE(std::abs(c[1] - oracle[1]), 3);
    ASSERT_EQ(r.label_map.labels.size(), img.size());
    EXPECT_EQ(r.rendered, render_segmentation(img, r.centers).image);
}

TEST(SegmentK, Preconditions) {
    const GrayImage flat(8, 8, std::uint8_t{90});
    EXPECT_EQ(error_code_of([&] { segment_k(flat, 2, SweepConfig{}); }), Errc::TooManyClasses);
    EXPECT_EQ(error_code_of([] { segment_k(testkit::bimodal_fixture(), 1, SweepConfig{}); }), Errc::InvalidK);
    EXPECT_EQ(error_code_of([] { segment_k(GrayImage{}, 2, SweepConfig{}); }), Errc::EmptyImage);
}

TEST(Sweep, SingleCandidateWhenKmaxIsTwo) {
    SweepConfig cfg;
    cfg.k_max = 2;
    const auto [best, record] = sweep(testkit::three_mode_fixture(), cfg);
    EXPECT_EQ(best.k, 2u);
    ASSERT_EQ(record.entries.size(), 1u);
}

TEST(Sweep, PerfectTwoLevelImagePicksTwo) {
    GrayImage img(16, 16);
    for (std::size_t i = 0; i < img.size(); ++i) img.pixels()[i] = i % 3 == 0 ? 40 : 210;
    SweepConfig cfg;
    cfg.k_max = 6;
    const auto [best, record] = sweep(img, cfg);
    EXPECT_EQ(best.k, 2u);
    EXPECT_EQ(best.validity.v, 0.0);
    EXPECT_EQ(sorted(best.centers), (std::vector<int>{40, 210}));
    // only two distinct levels, so K = 2 is the sole candidate
    EXPECT_EQ(record.entries.size(), 1u);
    EXPECT_NEAR(testkit::reference_validity(compute_histogram(img), {40, 210}, 25.0), 0.0, 1e-12);
}

TEST(Sweep, ThreeModesPickThree) {
    const auto img = testkit::three_mode_fixture();
    const auto hist = compute_histogram(img);
    // oracle: the planted centers beat the best 2- and 4-run fits on the validity index
    const double v3 = testkit::reference_validity(hist, {30, 128, 220}, 25.0);
    EXPECT_LT(v3, testkit::reference_validity(hist, testkit::best_contiguous_centers(hist, 2), 25.0));
    EXPECT_LT(v3, testkit::reference_validity(hist, testkit::best_contiguous_centers(hist, 4), 25.0));

    SweepConfig cfg;
    cfg.k_max = 6;
    cfg.master_seed = 21;
    const auto [best, record] = sweep(img, cfg);
    EXPECT_EQ(best.k, 3u);
    for (const auto& e : record.entries) {
        if (e.validity.k != 3) EXPECT_LT(best.validity.v, e.validity.v);
    }
}

TEST(Sweep, SelectedKBoundedByDistinctLevels) {
    GrayImage img(6, 1, {10, 10, 60, 60, 140, 140});
    SweepConfig cfg;
    cfg.k_max = 10;
    const auto [best, record] = sweep(img, cfg);
    EXPECT_LE(best.k, 3u);
    EXPECT_EQ(record.entries.size(), 2u);
}

TEST(Sweep, DegenerateImages) {
    EXPECT_EQ(error_code_of([] { sweep(GrayImage(4, 4, std::uint8_t{3}), SweepConfig{}); }), Errc::DegenerateImage);
    EXPECT_EQ(error_code_of([] { sweep(GrayImage{}, SweepConfig{}); }), Errc::EmptyImage);
}

TEST(Sweep, AddingLargerKDoesNotPerturbSmallerK) {
    const auto img = testkit::three_mode_fixture(3);
    SweepConfig small;
    small.k_max = 3;
    small.master_seed = 77;
    SweepConfig large = small;
    large.k_max = 5;
    const auto a = sweep(img, small).second;
    const auto b = sweep(img, large).second;
    for (std::size_t i = 0; i < a.entries.size(); ++i) {
        EXPECT_EQ(a.entries[i].validity.v, b.entries[i].validity.v);
        EXPECT_EQ(a.entries[i].best_metric, b.entries[i].best_metric);
    }
}

TEST(KMeans, TwoPointData) {
    const auto r = kmeans_baseline(Histogram{{50, 10}, {200, 10}}, 2, 4);
    EXPECT_EQ(sorted(r.centers), (std::vector<int>{50, 200}));
    EXPECT_EQ(r.metric, 0.0);
}

TEST(KMeans, OneCenterPerLevel) {
    const Histogram h{{3, 2}, {70, 1}, {71, 5}, {250, 9}};
    EXPECT_EQ(kmeans_baseline(h, 4, 1).metric, 0.0);
    EXPECT_EQ(error_code_of([&] { kmeans_baseline(h, 5, 1); }), Errc::TooManyClasses);
}

TEST(KMeans, NeverBeatsExhaustiveOptimum) {
    Rng rng(606);
    for (int t = 0; t < 25; ++t) {
        const auto h = testkit::random_histogram(2 + static_cast<int>(rng.below(7)), 60, rng);
        const auto r = kmeans_baseline(h, 2, rng.next());
        EXPECT_GE(r.metric, testkit::exhaustive_assignment_optimum(h, 2, testkit::MeanRounding::Nearest));
    }
    // well separated: equality
    const Histogram sep{{10, 4}, {12, 4}, {200, 3}, {204, 3}};
    EXPECT_EQ(kmeans_baseline(sep, 2, 1).metric, testkit::exhaustive_assignment_optimum(sep, 2, testkit::MeanRounding::Nearest));
}

TEST(FhnnOnly, BimodalSplitsAtMidpoint) {
    const auto img = testkit::bimodal_fixture();
    const auto r = fhnn_only_segment(img, 2, FhnnConfig{});
    const auto c = sorted(r.centers);
    const double mid = (c[0] + c[1]) / 2.0;
    const auto lo_label = r.centers[0] < r.centers[1] ? 0u : 1u;
    for (std::size_t i = 0; i < img.size(); ++i) {
        const bool low = img.pixels()[i] < mid;
        EXPECT_EQ(r.label_map.labels[i] == lo_label, low) << "pixel " << int(img.pixels()[i]);
    }
    EXPECT_FALSE(r.ga_result.has_value());
}

TEST(FhnnOnly, LabelsCoverAllModes) {
    const auto img = testkit::three_mode_fixture();
    const auto r = fhnn_only_segment(img, 3, FhnnConfig{});
    std::vector<bool> seen(3, false);
    for (auto l : r.label_map.labels) seen[l] = true;
    EXPECT_TRUE(std::all_of(seen.begin(), seen.end(), [](bool b) { return b; }));
    const auto oracle = testkit::weighted_fcm_oracle(testkit::support_points(compute_histogram(img)), 3, 2.0);
    // Hopfield-mode updates are crisper than classical FCM, but land on the same modes
    const auto c = sorted(r.centers);
    for (std::size_t i = 0; i < 3; ++i) EXPECT_NEAR(c[i], oracle[i], 3.0);
}

TEST(FhnnOnly, RejectsKOne) {
    EXPECT_EQ(error_code_of([] { fhnn_only_segment(testkit::bimodal_fixture(), 1, FhnnConfig{}); }), Errc::InvalidK);
}

TEST(SweepCsv, LayoutAndInfinity) {
    SweepRecord rec;
    rec.entries.push_back({ValidityReport{2, 25.0, 100.0, 10.5, 2.625}, 40.0});
    rec.entries.push_back({ValidityReport{3, 1.0, 0.0, 7.0, std::numeric_limits<double>::infinity()}, 12.5});
    std::ostringstream out;
    write_sweep_csv(rec, out);
    EXPECT_EQ(out.str(),
              "k,validity,intra,inter,y,best_metric\n"
              "2,2.625000,25.000000,100.000000,10.500000,40.000000\n"
              "3,inf,1.000000,0.000000,7.000000,12.500000\n");
}

TEST(SweepCsv, ExportIsReproducible) {
    SweepConfig cfg;
    cfg.k_max = 4;
    const auto rec = sweep(testkit::bimodal_fixture(), cfg).second;
    const auto dir = std::filesystem::temp_directory_path();
    export_sweep_csv(rec, dir / "fhga_curve_a.csv");
    export_sweep_csv(rec, dir / "fhga_curve_b.csv");
    auto slurp = [](const std::filesystem::path& p) {
        std::ifstream in(p, std::ios::binary);
        return std::string(std::istreambuf_iterator<char>(in), {});
    };
    EXPECT_EQ(slurp(dir / "fhga_curve_a.csv"), slurp(dir / "fhga_curve_b.csv"));
    EXPECT_EQ(error_code_of([&] { export_sweep_csv(rec, "/nonexistent/dir/c.csv"); }), Errc::IoFailure);
}
