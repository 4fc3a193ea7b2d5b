#include "fhga/fhnn.hpp"

#include "fhga/error.hpp"
#include "fhga/random.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <string>

namespace fhga {

void FhnnConfig::validate() const {
    if (!(m > 1.0) || !std::isfinite(m)) throw Error(Errc::InvalidArgument, "fuzzification exponent m must be > 1");
    if (!(epsilon > 0.0)) throw Error(Errc::InvalidArgument, "epsilon must be positive");
    if (max_iterations < 1) throw Error(Errc::InvalidArgument, "max_iterations must be positive");
}

FhnnObserver fhnn_csv_trace(std::ostream& out) {
    out << "iter,delta,energy\n";
    return [&out](const FhnnIteration& it) {
        out << it.iteration << ',' << it.delta << ',' << it.energy << '\n';
    };
}

double membership_exponent(double m, ExponentMode mode) {
    return (mode == ExponentMode::Hopfield ? 2.0 : 1.0) / (m - 1.0);
}

MembershipMatrix init_membership(std::size_t n, std::size_t c, std::uint64_t seed) {
    if (n == 0 || c == 0) throw Error(Errc::InvalidDimensions, "membership matrix needs n >= 1 and c >= 1");
    Rng rng(seed);
    MembershipMatrix u(n, c);
    for (std::size_t x = 0; x < n; ++x) {
        auto row = u.row(x);
        double sum = 0.0;
        for (auto& v : row) {
            v = rng.uniform_open01();
            sum += v;
        }
        for (auto& v : row) v /= sum;
    }
    return u;
}

std::vector<double> compute_centers(const Histogram& hist, const MembershipMatrix& u, double m) {
    if (u.rows() != kLevels) throw Error(Errc::DimensionMismatch, "membership rows must cover all 256 levels");
    std::vector<double> num(u.cols(), 0.0);
    std::vector<double> den(u.cols(), 0.0);
    for (int z = 0; z < kLevels; ++z) {
        const auto p = static_cast<double>(hist[z]);
        if (p == 0.0) continue;
        const auto row = u.row(static_cast<std::size_t>(z));
        for (std::size_t i = 0; i < row.size(); ++i) {
            const double w = p * std::pow(row[i], m);
            num[i] += w * z;
            den[i] += w;
        }
    }
    std::vector<double> centers(u.cols());
    for (std::size_t i = 0; i < centers.size(); ++i) {
        if (!(den[i] > 0.0)) throw Error(Errc::DegenerateClass, "class " + std::to_string(i) + " has no weighted mass");
        centers[i] = std::clamp(num[i] / den[i], 0.0, static_cast<double>(kMaxIntensity));
    }
    return centers;
}

NetMatrix compute_net(std::span<const double> centers) {
    if (centers.empty()) throw Error(Errc::EmptyCenters, "net input needs at least one class center");
    NetMatrix net(kLevels, centers.size());
    for (std::size_t z = 0; z < kLevels; ++z) {
        auto row = net.row(z);
        for (std::size_t i = 0; i < centers.size(); ++i) {
            const double d = static_cast<double>(z) - centers[i];
            row[i] = d * d;
        }
    }
    return net;
}

MembershipMatrix update_membership(const NetMatrix& net, double m, ExponentMode mode) {
    const double e = membership_exponent(m, mode);
    MembershipMatrix u(net.rows(), net.cols());
    for (std::size_t x = 0; x < net.rows(); ++x) {
        const auto in = net.row(x);
        auto out = u.row(x);
        const auto zeros = static_cast<std::size_t>(std::count(in.begin(), in.end(), 0.0));
        if (zeros > 0) {
            const double share = 1.0 / static_cast<double>(zeros);
            for (std::size_t i = 0; i < in.size(); ++i) out[i] = in[i] == 0.0 ? share : 0.0;
            continue;
        }
        for (std::size_t i = 0; i < in.size(); ++i) {
            double sum = 0.0;
            for (std::size_t j = 0; j < in.size(); ++j) sum += std::pow(in[i] / in[j], e);
            out[i] = 1.0 / sum;
        }
    }
    return u;
}

double compute_energy(const Histogram& hist, const MembershipMatrix& u, std::span<const double> centers, double m) {
    if (u.rows() != kLevels || u.cols() != centers.size()) {
        throw Error(Errc::DimensionMismatch, "energy needs a 256 x c partition and c centers");
    }
    double energy = 0.0;
    for (int z = 0; z < kLevels; ++z) {
        const auto p = static_cast<double>(hist[z]);
        if (p == 0.0) continue;
        const auto row = u.row(static_cast<std::size_t>(z));
        for (std::size_t i = 0; i < centers.size(); ++i) {
            const double d = z - centers[i];
            energy += p * std::pow(row[i], m) * d * d;
        }
    }
    return 0.5 * energy;
}

double max_abs_change(const MembershipMatrix& a, const MembershipMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw Error(Errc::DimensionMismatch, "partition shapes differ");
    double delta = 0.0;
    const auto da = a.data();
    const auto db = b.data();
    for (std::size_t k = 0; k < da.size(); ++k) delta = std::max(delta, std::abs(da[k] - db[k]));
    return delta;
}

bool is_fuzzy_partition(const MembershipMatrix& u, double tol) {
    for (std::size_t x = 0; x < u.rows(); ++x) {
        double sum = 0.0;
        for (double v : u.row(x)) {
            if (!(v >= 0.0 && v <= 1.0)) return false;
            sum += v;
        }
        if (std::abs(sum - 1.0) > tol) return false;
    }
    return true;
}

FhnnResult fhnn_iterate(const Histogram& hist, MembershipMatrix initial, const FhnnConfig& cfg,
                        const FhnnObserver& observer) {
    cfg.validate();
    if (hist.empty()) throw Error(Errc::EmptyHistogram, "histogram has no pixels");
    if (initial.rows() != kLevels) throw Error(Errc::DimensionMismatch, "initial partition must have 256 rows");
    const std::size_t c = initial.cols();
    if (c == 0) throw Error(Errc::InvalidDimensions, "need at least one class");
    if (c > static_cast<std::size_t>(hist.distinct_levels())) {
        throw Error(Errc::TooManyClasses, std::to_string(c) + " classes for " +
                                              std::to_string(hist.distinct_levels()) + " distinct levels");
    }

    FhnnResult result;
    result.memberships = std::move(initial);
    result.centers = compute_centers(hist, result.memberships, cfg.m);
    for (int t = 1; t <= cfg.max_iterations; ++t) {
        auto next = update_membership(compute_net(result.centers), cfg.m, cfg.exponent_mode);
        result.final_delta = max_abs_change(next, result.memberships);
        result.memberships = std::move(next);
        result.centers = compute_centers(hist, result.memberships, cfg.m);
        result.energy_trace.push_back(compute_energy(hist, result.memberships, result.centers, cfg.m));
        result.iterations = t;
        if (observer) {
            observer(FhnnIteration{t, result.final_delta, result.energy_trace.back(), result.memberships, result.centers});
        }
        if (result.final_delta <= cfg.epsilon) {
            result.converged = true;
            break;
        }
    }
    return result;
}

FhnnResult fhnn_cluster(const Histogram& hist, std::size_t c, const FhnnConfig& cfg, const FhnnObserver& observer) {
    if (hist.empty()) throw Error(Errc::EmptyHistogram, "histogram has no pixels");
    if (c == 0) throw Error(Errc::InvalidDimensions, "need at least one class");
    return fhnn_iterate(hist, init_membership(kLevels, c, cfg.seed), cfg, observer);
}

std::array<std::uint32_t, kLevels> defuzzify(const MembershipMatrix& u) {
    if (u.rows() != kLevels || u.cols() == 0) throw Error(Errc::DimensionMismatch, "defuzzify needs a 256 x c partition");
    std::array<std::uint32_t, kLevels> labels{};
    for (std::size_t x = 0; x < kLevels; ++x) {
        const auto row = u.row(x);
        labels[x] = static_cast<std::uint32_t>(std::max_element(row.begin(), row.end()) - row.begin());
    }
    return labels;
}

} // namespace fhga
