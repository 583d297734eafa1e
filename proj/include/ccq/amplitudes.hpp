// amplitudes.hpp — single-excitation amplitude vectors, sampled trajectories,
// and the (u, z) propagator sample defining the single-qubit dynamical map.

#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <vector>

#include "ccq/model.hpp"

namespace ccq {

// Unnormalized amplitudes of |100>, |010>, |001>. The vacuum weight
// lambda(t) = 1 - |amplitudes|^2 is implied and never grows negative.
struct AmplitudeVector {
    complexd h{};  // qubit excited
    complexd c1{}; // photon in C1
    complexd c2{}; // photon in C2

    double norm_sq() const { return std::norm(h) + std::norm(c1) + std::norm(c2); }

    // the paper's initial condition h(0)=1, c1(0)=c2(0)=0
    static AmplitudeVector excited() { return {complexd(1.0, 0.0), {}, {}}; }
};

struct AmplitudeTrajectory {
    TimeGrid grid;
    std::vector<AmplitudeVector> samples;

    // vacuum weight at sample i
    double lambda_at(std::size_t i) const { return 1.0 - samples[i].norm_sq(); }
};

enum class Backend { analytic, ode };

inline const char* backend_name(Backend b) {
    return b == Backend::analytic ? "analytic" : "ode";
}

// One evaluation of the dynamical map: rho11 -> u*rho11, rho10 -> z*rho10,
// with u = |z|^2. `source` records which backend actually produced it
// (the analytic backend transparently falls back to the ODE on repeated roots).
struct PropagatorSample {
    double u = 1.0;
    complexd z{1.0, 0.0};
    Backend source = Backend::analytic;

    static PropagatorSample from_z(complexd z, Backend source) {
        double n = std::norm(z);
        if (n > 1.0) { // rounding-level excess only; keep |z| <= 1 exact
            z /= std::sqrt(n);
            n = 1.0;
        }
        return {n, z, source};
    }
};

} // namespace ccq
