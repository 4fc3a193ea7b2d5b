// fhga: gray-level image segmentation with FHNN-seeded genetic clustering.
//
//   fhga segment  --input in.pgm --k 3 --output out.pgm
//   fhga sweep    --input in.pgm --kmax 8 --output out.pgm --curve curve.csv
//   fhga baseline --method kmeans|fhnn --input in.pgm --k 3 --output out.pgm

#include "fhga/error.hpp"
#include "fhga/pipeline.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <optional>
#include <string>

namespace {

enum ExitCode : int { kOk = 0, kBadArgs = 2, kInputError = 3, kDegenerate = 4 };

int exit_code_for(fhga::Errc code) {
    using fhga::Errc;
    switch (code) {
    case Errc::UnsupportedFormat:
    case Errc::CorruptFile:
    case Errc::IoFailure: return kInputError;
    case Errc::EmptyImage:
    case Errc::EmptyHistogram:
    case Errc::DegenerateImage:
    case Errc::DegenerateClass:
    case Errc::TooManyClasses: return kDegenerate;
    default: return kBadArgs;
    }
}

struct CommonOptions {
    std::string input;
    std::string output;
    std::uint64_t seed = 0;
    fhga::SweepConfig cfg;
    std::string fhnn_trace;
    std::string ga_trace;
};

void add_common(CLI::App* cmd, CommonOptions& o) {
    static const std::map<std::string, fhga::ExponentMode> modes{
        {"hopfield", fhga::ExponentMode::Hopfield}, {"fcm", fhga::ExponentMode::StandardFcm}};
    cmd->add_option("--input", o.input, "Input image (binary PGM or 8-bit grayscale PNG)")->required()->check(CLI::ExistingFile);
    cmd->add_option("--output", o.output, "Rendered segmentation (binary PGM)")->required();
    cmd->add_option("--seed", o.seed, "Master RNG seed");
    cmd->add_option("--m", o.cfg.fhnn.m, "FHNN fuzzification exponent (> 1)")->capture_default_str();
    cmd->add_option("--epsilon", o.cfg.fhnn.epsilon, "FHNN convergence threshold")->capture_default_str();
    cmd->add_option("--max-iterations", o.cfg.fhnn.max_iterations, "FHNN iteration cap")->capture_default_str();
    cmd->add_option("--exponent-mode", o.cfg.fhnn.exponent_mode, "Membership exponent: hopfield = 2/(m-1), fcm = 1/(m-1)")
        ->transform(CLI::CheckedTransformer(modes, CLI::ignore_case));
    cmd->add_option("--pop", o.cfg.ga.population_size, "GA population size")->capture_default_str();
    cmd->add_option("--crossover", o.cfg.ga.crossover_prob, "Crossover probability")->capture_default_str();
    cmd->add_option("--mutation", o.cfg.ga.mutation_prob, "Mutation probability")->capture_default_str();
    cmd->add_option("--generations", o.cfg.ga.generations, "GA generations")->capture_default_str();
    cmd->add_option("--jitter", o.cfg.ga.fhnn_jitter, "Population seeding jitter radius")->capture_default_str();
    cmd->add_option("--c-param", o.cfg.validity.c_param, "Validity index Gaussian multiplier")->capture_default_str();
}

std::string join_centers(const std::vector<int>& centers) {
    std::string out;
    for (std::size_t i = 0; i < centers.size(); ++i) {
        if (i) out += ' ';
        out += std::to_string(centers[i]);
    }
    return out;
}

void print_summary(const fhga::SegmentationResult& r) {
    std::cout << "k,centers,metric,validity\n"
              << r.k << ',' << join_centers(r.centers) << ',' << std::fixed << std::setprecision(6) << r.metric << ','
              << r.validity.v << '\n';
}

std::ofstream open_trace(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw fhga::Error(fhga::Errc::IoFailure, "cannot open trace file " + path);
    return out;
}

int run_segment(const CommonOptions& o, std::size_t k) {
    auto cfg = o.cfg;
    cfg.master_seed = o.seed;
    const auto img = fhga::load_image(o.input);
    std::optional<std::ofstream> ftrace;
    std::optional<std::ofstream> gtrace;
    fhga::FhnnObserver fobs;
    fhga::GaObserver gobs;
    if (!o.fhnn_trace.empty()) fobs = fhga::fhnn_csv_trace(ftrace.emplace(open_trace(o.fhnn_trace)));
    if (!o.ga_trace.empty()) gobs = fhga::ga_csv_trace(gtrace.emplace(open_trace(o.ga_trace)));
    const auto result = fhga::segment_k(img, k, cfg, fobs, gobs);
    fhga::save_image(result.rendered, o.output);
    print_summary(result);
    if (!result.fhnn_result.converged) std::cerr << "warning: FHNN hit the iteration cap before converging\n";
    return kOk;
}

int run_sweep(const CommonOptions& o, std::size_t k_max, const std::string& curve) {
    auto cfg = o.cfg;
    cfg.master_seed = o.seed;
    cfg.k_max = k_max;
    const auto img = fhga::load_image(o.input);
    const auto [result, record] = fhga::sweep(img, cfg);
    fhga::save_image(result.rendered, o.output);
    fhga::export_sweep_csv(record, curve);
    print_summary(result);
    return kOk;
}

int run_baseline(const CommonOptions& o, const std::string& method, std::size_t k) {
    const auto img = fhga::load_image(o.input);
    const auto seeds = fhga::derive_seeds(o.seed, k);
    fhga::SegmentationResult result;
    if (method == "kmeans") {
        result = fhga::kmeans_segment(img, k, seeds.ga, o.cfg.validity);
    } else {
        auto fcfg = o.cfg.fhnn;
        fcfg.seed = seeds.fhnn;
        result = fhga::fhnn_only_segment(img, k, fcfg, o.cfg.validity);
    }
    fhga::save_image(result.rendered, o.output);
    print_summary(result);
    return kOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Gray-level image segmentation: fuzzy Hopfield clustering refined by a genetic algorithm"};
    app.require_subcommand(1);

    CommonOptions seg_opts;
    std::size_t seg_k = 0;
    auto* seg = app.add_subcommand("segment", "Segment with a fixed number of clusters");
    add_common(seg, seg_opts);
    seg->add_option("--k", seg_k, "Number of clusters (>= 2)")->required();
    seg->add_option("--fhnn-trace", seg_opts.fhnn_trace, "Write per-iteration FHNN trace CSV");
    seg->add_option("--ga-trace", seg_opts.ga_trace, "Write per-generation GA trace CSV");

    CommonOptions sweep_opts;
    std::size_t k_max = 10;
    std::string curve;
    auto* swp = app.add_subcommand("sweep", "Choose K in [2, kmax] by minimum validity index");
    add_common(swp, sweep_opts);
    swp->add_option("--kmax", k_max, "Largest K to try")->capture_default_str();
    swp->add_option("--curve", curve, "Validity curve CSV output")->required();

    CommonOptions base_opts;
    std::size_t base_k = 0;
    std::string method;
    auto* base = app.add_subcommand("baseline", "Run a comparison method at fixed K");
    add_common(base, base_opts);
    base->add_option("--method", method, "kmeans or fhnn")->required()->check(CLI::IsMember({"kmeans", "fhnn"}));
    base->add_option("--k", base_k, "Number of clusters (>= 2)")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kBadArgs;
    }

    try {
        if (*seg) return run_segment(seg_opts, seg_k);
        if (*swp) return run_sweep(sweep_opts, k_max, curve);
        return run_baseline(base_opts, method, base_k);
    } catch (const fhga::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_code_for(e.code());
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kInputError;
    }
}
