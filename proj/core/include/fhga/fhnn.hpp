#pragma once

// Fuzzy Hopfield network clustering of a gray-level histogram.
//
// The network is a (gray level x class) grid of neurons whose states form a
// fuzzy c-partition U. One synchronous sweep computes the class centers from
// U, feeds each neuron the squared distance of its level to its class center
// (zero external bias), and resets every state from those inputs. The energy
// 1/2 sum_x sum_i p_x u_xi^m (z_x - v_i)^2 is reported after each sweep.

#include "fhga/imaging.hpp"

#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <span>
#include <vector>

namespace fhga {

/// Dense row-major matrix of doubles.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, double fill = 0.0) : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
    [[nodiscard]] std::size_t cols() const noexcept { return cols_; }

    double& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    double operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    [[nodiscard]] std::span<double> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
    [[nodiscard]] std::span<const double> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
    [[nodiscard]] std::span<const double> data() const noexcept { return data_; }

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> data_;
};

/// Rows are gray levels, columns are classes.
using MembershipMatrix = Matrix;
using NetMatrix = Matrix;

/// Which exponent the membership update applies to ratios of squared distances.
enum class ExponentMode {
    Hopfield, ///< 2 / (m - 1)
    StandardFcm,  ///< 1 / (m - 1), the classical fuzzy c-means update
};

struct FhnnConfig {
    double m = 2.0;
    double epsilon = 1e-4;
    int max_iterations = 500;
    ExponentMode exponent_mode = ExponentMode::Hopfield;
    std::uint64_t seed = 0;
    // External neuron bias is held at zero; there is no knob for it.

    void validate() const;
};

struct FhnnResult {
    MembershipMatrix memberships;
    std::vector<double> centers;
    int iterations = 0;
    double final_delta = 0.0;
    bool converged = false;
    std::vector<double> energy_trace;
};

struct FhnnIteration {
    int iteration;
    double delta;
    double energy;
    const MembershipMatrix& memberships;
    std::span<const double> centers;
};

using FhnnObserver = std::function<void(const FhnnIteration&)>;

/// Observer that writes `iter,delta,energy` lines (header first) to `out`.
FhnnObserver fhnn_csv_trace(std::ostream& out);

double membership_exponent(double m, ExponentMode mode);

/// Random fuzzy partition: each row is c uniform(0,1) draws normalized to sum 1.
MembershipMatrix init_membership(std::size_t n, std::size_t c, std::uint64_t seed);

/// Histogram-weighted fuzzy means: v_i = sum_y p_y u_yi^m z_y / sum_h p_h u_hi^m.
std::vector<double> compute_centers(const Histogram& hist, const MembershipMatrix& u, double m);

/// Net_xi = (z_x - v_i)^2 for all 256 levels.
NetMatrix compute_net(std::span<const double> centers);

/// Synchronous membership reset from the net inputs. A row containing zero
/// inputs becomes crisp, split equally across its zero-input classes.
MembershipMatrix update_membership(const NetMatrix& net, double m, ExponentMode mode);

double compute_energy(const Histogram& hist, const MembershipMatrix& u, std::span<const double> centers, double m);

/// Largest absolute element-wise change between two partitions.
double max_abs_change(const MembershipMatrix& a, const MembershipMatrix& b);

/// True when all entries are in [0,1] and every row sums to 1 within `tol`.
bool is_fuzzy_partition(const MembershipMatrix& u, double tol = 1e-9);

/// Runs the network from a given initial partition (256 x c).
FhnnResult fhnn_iterate(const Histogram& hist, MembershipMatrix initial, const FhnnConfig& cfg,
                        const FhnnObserver& observer = {});

/// Random initialization from cfg.seed followed by fhnn_iterate.
FhnnResult fhnn_cluster(const Histogram& hist, std::size_t c, const FhnnConfig& cfg,
                        const FhnnObserver& observer = {});

/// Class with maximum membership per gray level; ties go to the lowest index.
std::array<std::uint32_t, kLevels> defuzzify(const MembershipMatrix& u);

} // namespace fhga
