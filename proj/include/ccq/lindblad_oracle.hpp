// lindblad_oracle.hpp — brute-force validation backend: the full master
// equation on the 4-dimensional basis {|100>, |010>, |001>, |000>} (single
// excitation plus vacuum), integrated in the lab frame with fixed-step RK4.
//
// Deliberately shares nothing with the other two backends: no rotating frame,
// no Laplace transform. Used by the test suites to cross-validate them.
//
// The density matrix keeps the pure-projector-plus-vacuum structure, so the
// amplitudes are recovered from the single-excitation block up to a global
// phase; the returned trajectory fixes the gauge by making the dominant
// component real positive. Moduli and relative phases are exact.

#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <cstddef>
#include <vector>

#include "ccq/amplitudes.hpp"
#include "ccq/model.hpp"

namespace ccq {

struct LindbladRun {
    AmplitudeTrajectory trajectory;
    std::vector<double> rho_trace;  // Tr rho at each sample (should stay 1)
    std::vector<double> vacuum_pop; // <000|rho|000> at each sample
};

inline LindbladRun lindblad_run(const SiteParams& p, const AmplitudeVector& init,
                                const TimeGrid& grid, double max_step = 1e-3) {
    using Matrix4cd = Eigen::Matrix4cd;

    validate_params(p);
    grid.validate();
    if (grid.t_start != 0.0)
        throw ValidationError("lindblad_run: trajectories start at t = 0");
    if (init.norm_sq() > 1.0 + 1e-12)
        throw ValidationError("lindblad_run: initial amplitude norm must be <= 1");
    const double step_cap = 1e-3 / p.gamma1; // fixed-step RK4 accuracy bound
    if (!(max_step > 0.0) || max_step > step_cap) max_step = step_cap;

    const double w0 = p.omega + p.detuning;
    Matrix4cd H = Matrix4cd::Zero();
    H(0, 0) = w0 / 2.0;
    H(1, 1) = p.omega - w0 / 2.0;
    H(2, 2) = p.omega - w0 / 2.0;
    H(3, 3) = -w0 / 2.0;
    H(0, 1) = H(1, 0) = p.kappa;
    H(1, 2) = H(2, 1) = p.j_coupling;

    const complexd I(0.0, 1.0);
    // dissipators a_n = |000><0..1..0|: photon loss from C1 (rate g1) and C2 (g2)
    const auto rhs = [&](const Matrix4cd& rho) -> Matrix4cd {
        Matrix4cd d = -I * (H * rho - rho * H);
        for (int n : {1, 2}) {
            const double rate = (n == 1) ? p.gamma1 : p.gamma2;
            d(3, 3) += rate * rho(n, n);
            d.row(n) -= (rate / 2.0) * rho.row(n);
            d.col(n) -= (rate / 2.0) * rho.col(n);
        }
        return d;
    };

    Eigen::Vector4cd psi0;
    psi0 << init.h, init.c1, init.c2, complexd{};
    Matrix4cd rho = psi0 * psi0.adjoint();
    rho(3, 3) += 1.0 - init.norm_sq();

    LindbladRun out;
    out.trajectory.grid = grid;
    out.trajectory.samples.reserve(grid.n_points);
    out.rho_trace.reserve(grid.n_points);
    out.vacuum_pop.reserve(grid.n_points);

    const auto record = [&](const Matrix4cd& r) {
        out.rho_trace.push_back(r.trace().real());
        out.vacuum_pop.push_back(r(3, 3).real());
        // gauge: dominant excitation component real positive
        int m = 0;
        for (int k = 1; k < 3; ++k)
            if (r(k, k).real() > r(m, m).real()) m = k;
        AmplitudeVector a{};
        const double pop = r(m, m).real();
        if (pop > 0.0) {
            const double root = std::sqrt(pop);
            a = {r(0, m) / root, r(1, m) / root, r(2, m) / root};
        }
        out.trajectory.samples.push_back(a);
    };

    record(rho);
    for (std::size_t i = 1; i < grid.n_points; ++i) {
        const double span = grid.at(i) - grid.at(i - 1);
        const auto nsub = static_cast<std::size_t>(std::ceil(span / max_step));
        const double h = span / static_cast<double>(nsub);
        for (std::size_t s = 0; s < nsub; ++s) {
            const Matrix4cd k1 = rhs(rho);
            const Matrix4cd k2 = rhs(rho + (h / 2.0) * k1);
            const Matrix4cd k3 = rhs(rho + (h / 2.0) * k2);
            const Matrix4cd k4 = rhs(rho + h * k3);
            rho += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
        }
        record(rho);
    }
    out.trajectory.samples[0] = init;
    return out;
}

inline AmplitudeTrajectory lindblad_oracle(const SiteParams& p, const AmplitudeVector& init,
                                           const TimeGrid& grid, double max_step = 1e-3) {
    return lindblad_run(p, init, grid, max_step).trajectory;
}

} // namespace ccq
