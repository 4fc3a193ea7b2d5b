#pragma once

#include "fhga/imaging.hpp"
#include "fhga/random.hpp"

#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <span>
#include <utility>
#include <vector>

namespace fhga {

/// K integer cluster centers, one gene per center.
struct Chromosome {
    std::vector<int> genes;

    [[nodiscard]] std::size_t size() const noexcept { return genes.size(); }
    friend bool operator==(const Chromosome&, const Chromosome&) = default;
};

struct GaConfig {
    int population_size = 30;
    double crossover_prob = 0.9;
    double mutation_prob = 0.01;
    int generations = 20;
    std::uint64_t seed = 0;
    int fhnn_jitter = 10;

    void validate() const;
};

/// Below this the metric is treated as zero when taking its reciprocal.
inline constexpr double kMetricFloor = 1e-12;

struct EvolutionResult {
    Chromosome best;
    double best_metric = 0.0;
    double best_fitness = 0.0;
    /// Entry 0 is the seeded population, then one entry per generation.
    std::vector<double> fitness_history;
};

struct GenerationStats {
    int generation;
    double best_fitness;
    double best_metric;
    double mean_fitness;
};

using GaObserver = std::function<void(const GenerationStats&)>;

/// Observer that writes `generation,best_fitness,best_metric,mean_fitness` lines.
GaObserver ga_csv_trace(std::ostream& out);

struct Adjustment {
    Chromosome adjusted;
    std::vector<std::uint64_t> cluster_sizes;
};

std::vector<Chromosome> seed_population(std::span<const double> fhnn_centers, const GaConfig& cfg);
std::vector<Chromosome> seed_population(std::span<const double> fhnn_centers, const GaConfig& cfg, Rng& rng);

/// Nearest-gene assignment followed by replacing every gene with the rounded
/// mean of its cluster. Genes whose cluster is empty are kept.
Adjustment assign_and_adjust(const Histogram& hist, const Chromosome& chrom);

/// Sum over pixels of |z - assigned gene|.
double clustering_metric(const Histogram& hist, const Chromosome& chrom);

double fitness(double metric);

std::size_t roulette_select(std::span<const double> fitnesses, Rng& rng);

/// Swaps the suffixes of `a` and `b` starting at gene `point`.
std::pair<Chromosome, Chromosome> crossover_at(const Chromosome& a, const Chromosome& b, std::size_t point);

std::pair<Chromosome, Chromosome> crossover(const Chromosome& a, const Chromosome& b, double prob, Rng& rng);

/// v + sign*delta*v (or v + sign*delta at v == 0), rounded and clamped to [0,255].
int perturb_gene(int value, double delta, bool positive);

Chromosome mutate(const Chromosome& chrom, double prob, Rng& rng);

EvolutionResult evolve(const Histogram& hist, std::span<const double> fhnn_centers, const GaConfig& cfg,
                       const GaObserver& observer = {});

} // namespace fhga
