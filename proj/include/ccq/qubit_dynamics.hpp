// qubit_dynamics.hpp — the single-qubit density-matrix map driven by (u, z)
// samples, the off-diagonal coherence measure, and its long-time asymptotics.

#pragma once

#include <cmath>
#include <optional>
#include <span>
#include <vector>

#include "ccq/amplitudes.hpp"
#include "ccq/model.hpp"
#include "ccq/propagator.hpp"

namespace ccq {

// rho11 -> u*rho11, rho10 -> z*rho10, trace preserved
inline QubitState evolve_qubit(const QubitState& rho0, const PropagatorSample& prop) {
    Eigen::Matrix2cd m;
    m(0, 0) = prop.u * rho0.rho(0, 0);
    m(0, 1) = prop.z * rho0.rho(0, 1);
    m(1, 0) = std::conj(m(0, 1));
    m(1, 1) = 1.0 - m(0, 0);
    return {m};
}

// sum of |off-diagonal| elements: 2|rho10| for a qubit
inline double coherence(const QubitState& rho) {
    return std::abs(rho.rho(0, 1)) + std::abs(rho.rho(1, 0));
}

struct CoherenceTrace {
    TimeGrid grid;
    std::vector<double> values;
};

inline CoherenceTrace coherence_trace(const PureQubitInit& init, const SiteParams& p,
                                      const TimeGrid& grid,
                                      Backend backend = Backend::analytic) {
    init.validate();
    const double c0 = 2.0 * std::abs(init.alpha * init.beta);
    CoherenceTrace out{grid, {}};
    out.values.reserve(grid.n_points);
    for (const auto& s : propagator_trace(p, grid, backend))
        out.values.push_back(c0 * std::abs(s.z));
    return out;
}

// Closed-form coherence limit 2|alpha*beta| * J^2/(J^2+kappa^2), which exists
// only on resonance with a perfect second cavity; nullopt means not trapped
// (any leakage or detuning lets the coherence decay to zero).
inline std::optional<double> asymptotic_coherence(const PureQubitInit& init,
                                                  const SiteParams& p) {
    init.validate();
    validate_params(p);
    if (p.gamma2 != 0.0 || p.detuning != 0.0) return std::nullopt;
    const double J2 = p.j_coupling * p.j_coupling;
    const double k2 = p.kappa * p.kappa;
    // kappa = J = 0 is the fully decoupled qubit: the coherence never moves
    const double weight = (J2 + k2 == 0.0) ? 1.0 : J2 / (J2 + k2);
    return 2.0 * std::abs(init.alpha * init.beta) * weight;
}

// Stationarity test over the trailing `window_fraction` of a sampled trace:
// relative spread below rel_tol. This is the operational meaning of "trapped".
inline bool tail_stationary(std::span<const double> values, double rel_tol = 1e-3,
                            double window_fraction = 0.1) {
    if (values.size() < 2) return false;
    const auto start = static_cast<std::size_t>(
        static_cast<double>(values.size()) * (1.0 - window_fraction));
    double lo = values[start], hi = values[start];
    for (std::size_t i = start; i < values.size(); ++i) {
        lo = std::min(lo, values[i]);
        hi = std::max(hi, values[i]);
    }
    return (hi - lo) <= rel_tol * std::max(std::abs(hi), 1e-12);
}

} // namespace ccq
