// blp.hpp — trace distance between evolved state pairs and the BLP
// non-Markovianity measure: the integral of the positive part of dD/dt,
// maximized over a family of initial state pairs. On a discrete grid the
// integral becomes the sum of positive increments of D.

#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <cstddef>
#include <numbers>
#include <vector>

#include "ccq/model.hpp"
#include "ccq/propagator.hpp"
#include "ccq/qubit_dynamics.hpp"

namespace ccq {

struct StatePair {
    QubitState rho1;
    QubitState rho2;
};

// D = (1/2) * sum of singular values of rho1 - rho2; for the Hermitian
// difference these are the |eigenvalues|
inline double trace_distance(const StatePair& pair) {
    const Eigen::Matrix2cd diff = pair.rho1.rho - pair.rho2.rho;
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix2cd> es(diff, Eigen::EigenvaluesOnly);
    return 0.5 * es.eigenvalues().cwiseAbs().sum();
}

// Candidate initial pairs for the maximization.
struct PairGrid {
    std::vector<StatePair> pairs;

    // Antipodal pure-state pairs at Bloch angles theta = k*pi/16, k = 0..n-1.
    // The map's symmetry makes the azimuth irrelevant, so phi = 0 throughout;
    // theta = 0 is the poles pair (|1>, |0>), the last entry is equatorial.
    static PairGrid bloch_antipodal(std::size_t n_theta = 9) {
        PairGrid g;
        g.pairs.reserve(n_theta);
        for (std::size_t k = 0; k < n_theta; ++k) {
            const double theta = static_cast<double>(k) * std::numbers::pi / 16.0;
            const double a = std::cos(theta), b = std::sin(theta);
            Eigen::Matrix2cd r1, r2;
            r1 << (1.0 + a) / 2.0, b / 2.0, b / 2.0, (1.0 - a) / 2.0;
            r2 << (1.0 - a) / 2.0, -b / 2.0, -b / 2.0, (1.0 + a) / 2.0;
            g.pairs.push_back({QubitState{r1}, QubitState{r2}});
        }
        return g;
    }
};

struct BlpOptions {
    double increment_floor = 1e-12; // discard rises below quadrature noise
    bool check_grid = true;         // re-run on a 2x grid and compare
    double grid_rel_tol = 0.01;
};

struct BlpResult {
    double n_value = 0.0;
    StatePair argmax_pair;
    std::vector<double> d_trace; // D(t) samples of the argmax pair
    std::size_t argmax_index = 0;
};

// Evolutions below this N are classified as Markovian (finite-grid cutoff
// for the sharp N = 0 of exact Markovian maps).
inline constexpr double markovian_threshold = 1e-6;

inline bool is_markovian(double n_value) { return n_value < markovian_threshold; }

namespace detail {

inline std::vector<double> distance_trace(const StatePair& pair,
                                          const std::vector<PropagatorSample>& props) {
    std::vector<double> d;
    d.reserve(props.size());
    for (const auto& s : props)
        d.push_back(trace_distance({evolve_qubit(pair.rho1, s), evolve_qubit(pair.rho2, s)}));
    return d;
}

inline double positive_increments(const std::vector<double>& d, double floor) {
    double n = 0.0;
    for (std::size_t i = 1; i < d.size(); ++i) {
        const double inc = d[i] - d[i - 1];
        if (inc > floor) n += inc;
    }
    return n;
}

inline BlpResult blp_on_grid(const SiteParams& p, const TimeGrid& grid,
                             const PairGrid& family, const BlpOptions& opt) {
    const auto props = propagator_trace(p, grid, Backend::analytic);
    BlpResult best;
    bool first = true;
    for (std::size_t i = 0; i < family.pairs.size(); ++i) {
        auto d = distance_trace(family.pairs[i], props);
        const double n = positive_increments(d, opt.increment_floor);
        if (first || n > best.n_value) {
            best = {n, family.pairs[i], std::move(d), i};
            first = false;
        }
    }
    return best;
}

} // namespace detail

inline BlpResult blp_measure(const SiteParams& p, const TimeGrid& grid,
                             const PairGrid& family, const BlpOptions& opt = {}) {
    validate_params(p);
    grid.validate();
    if (family.pairs.empty())
        throw ValidationError("blp_measure: pair family must be nonempty");

    BlpResult result = detail::blp_on_grid(p, grid, family, opt);
    if (opt.check_grid) {
        const TimeGrid fine{grid.t_start, grid.t_end, 2 * grid.n_points - 1};
        const double n_fine = detail::blp_on_grid(p, fine, family, opt).n_value;
        const double rel = std::abs(n_fine - result.n_value) /
                           std::max(n_fine, markovian_threshold);
        if (rel > opt.grid_rel_tol)
            throw GridTooCoarse("blp_measure: N changes by more than 1% under 2x refinement");
    }
    return result;
}

// For the antipodal equatorial pair D(t) = |z_t| exactly, so N reduces to the
// positive increments of |z_t| with no state evolution at all.
inline double equatorial_pair_shortcut(const SiteParams& p, const TimeGrid& grid,
                                       const BlpOptions& opt = {}) {
    validate_params(p);
    grid.validate();
    const auto sum_abs_z = [&](const TimeGrid& g) {
        std::vector<double> d;
        d.reserve(g.n_points);
        for (const auto& s : propagator_trace(p, g, Backend::analytic))
            d.push_back(std::abs(s.z));
        return detail::positive_increments(d, opt.increment_floor);
    };
    const double n = sum_abs_z(grid);
    if (opt.check_grid) {
        const double n_fine = sum_abs_z({grid.t_start, grid.t_end, 2 * grid.n_points - 1});
        if (std::abs(n_fine - n) / std::max(n_fine, markovian_threshold) > opt.grid_rel_tol)
            throw GridTooCoarse("equatorial_pair_shortcut: grid too coarse");
    }
    return n;
}

// default grid for N: long enough for the slowest Fig-3 parameter sets
inline TimeGrid default_blp_grid() { return TimeGrid{0.0, 50.0, 20001}; }

} // namespace ccq
