#include "fhga/ga.hpp"

#include "fhga/error.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numeric>
#include <ostream>
#include <string>

namespace fhga {

void GaConfig::validate() const {
    if (population_size < 2) throw Error(Errc::InvalidArgument, "population size must be at least 2");
    if (!(crossover_prob >= 0.0 && crossover_prob <= 1.0)) throw Error(Errc::InvalidArgument, "crossover probability outside [0,1]");
    if (!(mutation_prob >= 0.0 && mutation_prob <= 1.0)) throw Error(Errc::InvalidArgument, "mutation probability outside [0,1]");
    if (generations < 1) throw Error(Errc::InvalidArgument, "generations must be positive");
    if (fhnn_jitter < 0) throw Error(Errc::InvalidArgument, "jitter radius must be non-negative");
}

GaObserver ga_csv_trace(std::ostream& out) {
    out << "generation,best_fitness,best_metric,mean_fitness\n";
    return [&out](const GenerationStats& s) {
        out << s.generation << ',' << s.best_fitness << ',' << s.best_metric << ',' << s.mean_fitness << '\n';
    };
}

namespace {

int clamp_intensity(long v) { return static_cast<int>(std::clamp<long>(v, 0, kMaxIntensity)); }

void check_chromosome(const Chromosome& chrom) {
    if (chrom.genes.empty()) throw Error(Errc::InvalidK, "chromosome has no genes");
    for (int g : chrom.genes) {
        if (g < 0 || g > kMaxIntensity) throw Error(Errc::InvalidArgument, "gene " + std::to_string(g) + " out of range");
    }
}

// Round-half-up of sum / n for non-negative integers.
int rounded_mean(std::uint64_t sum, std::uint64_t n) { return static_cast<int>((2 * sum + n) / (2 * n)); }

struct Scored {
    Chromosome chrom;
    double metric = 0.0;
    double fit = 0.0;
};

Scored score(const Histogram& hist, const Chromosome& chrom) {
    Scored s{assign_and_adjust(hist, chrom).adjusted, 0.0, 0.0};
    s.metric = clustering_metric(hist, s.chrom);
    s.fit = fitness(s.metric);
    return s;
}

} // namespace

std::vector<Chromosome> seed_population(std::span<const double> fhnn_centers, const GaConfig& cfg, Rng& rng) {
    cfg.validate();
    if (fhnn_centers.empty()) throw Error(Errc::InvalidK, "no centers to seed from");
    Chromosome base;
    for (double c : fhnn_centers) {
        if (!(c >= 0.0 && c <= kMaxIntensity)) throw Error(Errc::InvalidArgument, "seed center outside [0,255]");
        base.genes.push_back(static_cast<int>(std::lround(c)));
    }
    std::vector<Chromosome> pop;
    pop.reserve(static_cast<std::size_t>(cfg.population_size));
    pop.push_back(base);
    for (int p = 1; p < cfg.population_size; ++p) {
        Chromosome child = base;
        for (int& g : child.genes) g = clamp_intensity(g + rng.uniform_int(-cfg.fhnn_jitter, cfg.fhnn_jitter));
        pop.push_back(std::move(child));
    }
    return pop;
}

std::vector<Chromosome> seed_population(std::span<const double> fhnn_centers, const GaConfig& cfg) {
    Rng rng(cfg.seed);
    return seed_population(fhnn_centers, cfg, rng);
}

Adjustment assign_and_adjust(const Histogram& hist, const Chromosome& chrom) {
    check_chromosome(chrom);
    const std::size_t k = chrom.size();
    const auto label = nearest_center_table(chrom.genes);
    std::vector<std::uint64_t> sums(k, 0);
    Adjustment out{chrom, std::vector<std::uint64_t>(k, 0)};
    for (int z = 0; z < kLevels; ++z) {
        const auto n = hist[z];
        if (n == 0) continue;
        const auto j = label[static_cast<std::size_t>(z)];
        out.cluster_sizes[j] += n;
        sums[j] += n * static_cast<std::uint64_t>(z);
    }
    for (std::size_t j = 0; j < k; ++j) {
        if (out.cluster_sizes[j] > 0) out.adjusted.genes[j] = rounded_mean(sums[j], out.cluster_sizes[j]);
    }
    return out;
}

double clustering_metric(const Histogram& hist, const Chromosome& chrom) {
    check_chromosome(chrom);
    std::uint64_t total = 0;
    for (int z = 0; z < kLevels; ++z) {
        const auto n = hist[z];
        if (n == 0) continue;
        const int gene = chrom.genes[nearest_center(z, chrom.genes)];
        total += n * static_cast<std::uint64_t>(std::abs(z - gene));
    }
    return static_cast<double>(total);
}

double fitness(double metric) { return 1.0 / std::max(metric, kMetricFloor); }

std::size_t roulette_select(std::span<const double> fitnesses, Rng& rng) {
    if (fitnesses.empty()) throw Error(Errc::InvalidArgument, "cannot select from an empty population");
    const double total = std::accumulate(fitnesses.begin(), fitnesses.end(), 0.0);
    if (!(total > 0.0)) return static_cast<std::size_t>(rng.below(fitnesses.size()));
    const double target = rng.uniform01() * total;
    double running = 0.0;
    for (std::size_t i = 0; i < fitnesses.size(); ++i) {
        running += fitnesses[i];
        if (target < running) return i;
    }
    // Rounding can leave target == running at the end; take the last positive entry.
    for (std::size_t i = fitnesses.size(); i-- > 0;) {
        if (fitnesses[i] > 0.0) return i;
    }
    return fitnesses.size() - 1;
}

std::pair<Chromosome, Chromosome> crossover_at(const Chromosome& a, const Chromosome& b, std::size_t point) {
    if (a.size() != b.size()) throw Error(Errc::LengthMismatch, "parents differ in length");
    std::pair<Chromosome, Chromosome> kids{a, b};
    for (std::size_t i = point; i < a.size(); ++i) std::swap(kids.first.genes[i], kids.second.genes[i]);
    return kids;
}

std::pair<Chromosome, Chromosome> crossover(const Chromosome& a, const Chromosome& b, double prob, Rng& rng) {
    if (a.size() != b.size()) throw Error(Errc::LengthMismatch, "parents differ in length");
    if (a.size() < 2 || !rng.bernoulli(prob)) return {a, b};
    const auto point = 1 + static_cast<std::size_t>(rng.below(a.size() - 1));
    return crossover_at(a, b, point);
}

int perturb_gene(int value, double delta, bool positive) {
    const double step = value == 0 ? delta : delta * value;
    const double moved = positive ? value + step : value - step;
    return clamp_intensity(std::lround(moved));
}

Chromosome mutate(const Chromosome& chrom, double prob, Rng& rng) {
    if (chrom.genes.empty() || !rng.bernoulli(prob)) return chrom;
    Chromosome out = chrom;
    const auto pos = static_cast<std::size_t>(rng.below(out.size()));
    const double delta = rng.uniform01();
    const bool positive = rng.bernoulli(0.5);
    out.genes[pos] = perturb_gene(out.genes[pos], delta, positive);
    return out;
}

EvolutionResult evolve(const Histogram& hist, std::span<const double> fhnn_centers, const GaConfig& cfg,
                       const GaObserver& observer) {
    cfg.validate();
    if (hist.empty()) throw Error(Errc::EmptyHistogram, "histogram has no pixels");
    if (fhnn_centers.empty()) throw Error(Errc::InvalidK, "K must be at least 1");

    Rng rng(cfg.seed);
    const auto pop_size = static_cast<std::size_t>(cfg.population_size);

    std::vector<Scored> pop;
    pop.reserve(pop_size);
    for (const auto& c : seed_population(fhnn_centers, cfg, rng)) pop.push_back(score(hist, c));

    Scored elite = *std::max_element(pop.begin(), pop.end(), [](const Scored& a, const Scored& b) { return a.fit < b.fit; });
    EvolutionResult result;

    auto record = [&](int generation) {
        for (const auto& s : pop) {
            if (s.fit > elite.fit) elite = s;
        }
        result.fitness_history.push_back(elite.fit);
        if (observer) {
            double mean = 0.0;
            for (const auto& s : pop) mean += s.fit;
            observer(GenerationStats{generation, elite.fit, elite.metric, mean / static_cast<double>(pop.size())});
        }
    };
    record(0);

    std::vector<double> fits(pop_size);
    std::vector<Chromosome> offspring;
    offspring.reserve(pop_size);
    for (int g = 1; g <= cfg.generations; ++g) {
        std::transform(pop.begin(), pop.end(), fits.begin(), [](const Scored& s) { return s.fit; });

        offspring.clear();
        while (offspring.size() < pop_size) {
            const auto& a = pop[roulette_select(fits, rng)].chrom;
            if (offspring.size() + 1 == pop_size) {
                offspring.push_back(a);
                break;
            }
            const auto& b = pop[roulette_select(fits, rng)].chrom;
            auto [x, y] = crossover(a, b, cfg.crossover_prob, rng);
            offspring.push_back(std::move(x));
            offspring.push_back(std::move(y));
        }
        for (auto& c : offspring) c = mutate(c, cfg.mutation_prob, rng);

        // Scoring is a pure per-index map; results land at the offspring's index.
        for (std::size_t i = 0; i < pop_size; ++i) pop[i] = score(hist, offspring[i]);

        auto worst = std::min_element(pop.begin(), pop.end(), [](const Scored& a, const Scored& b) { return a.fit < b.fit; });
        *worst = elite;
        record(g);
    }

    result.best = elite.chrom;
    result.best_metric = elite.metric;
    result.best_fitness = elite.fit;
    return result;
}

} // namespace fhga
