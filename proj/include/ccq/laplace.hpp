// laplace.hpp — analytic propagator backend.
//
// In the frame rotating at the common cavity frequency omega, the Laplace
// transform of the qubit amplitude with initial condition (1, 0, 0) is the
// rational function N(s)/D(s) with
//
//   N(s) = (s + g1/2)(s + g2/2) + J^2                       (monic quadratic)
//   D(s) = (s + i*delta) * N(s) + kappa^2 * (s + g2/2)      (monic cubic)
//
// so z(t) is a sum of three exponentials res_k * exp(s_k t) over the simple
// roots s_k of D. A nonzero omega only shifts every pole by -i*omega.
// The monic normalization makes the residues sum to z(0) = 1.

#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <numbers>

#include "ccq/amplitudes.hpp"
#include "ccq/model.hpp"

namespace ccq {

namespace detail {

// Roots of s^3 + c2 s^2 + c1 s + c0 with complex coefficients: Cardano on the
// depressed cubic, then Newton polishing on the original polynomial (residues
// at long times are sensitive to root accuracy).
inline std::array<complexd, 3> solve_monic_cubic(complexd c2, complexd c1, complexd c0) {
    const complexd shift = c2 / 3.0;
    const complexd p = c1 - c2 * c2 / 3.0;
    const complexd q = 2.0 * c2 * c2 * c2 / 27.0 - c2 * c1 / 3.0 + c0;

    std::array<complexd, 3> roots;
    const complexd w = std::sqrt(q * q / 4.0 + p * p * p / 27.0);
    // pick the cube-root argument with the larger magnitude to avoid cancellation
    complexd u3 = -q / 2.0 + w;
    if (std::abs(-q / 2.0 - w) > std::abs(u3)) u3 = -q / 2.0 - w;

    if (std::abs(u3) == 0.0 && std::abs(p) == 0.0) {
        roots = {-shift, -shift, -shift}; // triple root
    } else {
        const complexd u = std::pow(u3, 1.0 / 3.0);
        const complexd rot(-0.5, 0.5 * std::numbers::sqrt3);
        complexd uk = u;
        for (int k = 0; k < 3; ++k) {
            roots[k] = uk - p / (3.0 * uk) - shift;
            uk *= rot;
        }
    }

    for (auto& s : roots) { // two Newton steps
        for (int it = 0; it < 2; ++it) {
            const complexd f = ((s + c2) * s + c1) * s + c0;
            const complexd df = (3.0 * s + 2.0 * c2) * s + c1;
            if (std::abs(df) == 0.0) break;
            s -= f / df;
        }
    }
    return roots;
}

} // namespace detail

// Poles of D(s) and residues of N(s)/D(s); evaluates z(t) in O(1).
struct LaplacePoles {
    std::array<complexd, 3> poles{};
    std::array<complexd, 3> residues{};

    complexd z_at(double t) const {
        complexd z{};
        for (int k = 0; k < 3; ++k) z += residues[k] * std::exp(poles[k] * t);
        return z;
    }

    complexd residue_sum() const { return residues[0] + residues[1] + residues[2]; }
};

// Separation below which partial fractions are ill-conditioned; callers fall
// back to the ODE backend instead of using confluent residue formulas.
inline constexpr double repeated_root_tol = 1e-8;

inline LaplacePoles laplace_poles(const SiteParams& p) {
    validate_params(p);
    const double a1 = p.gamma1 / 2.0;
    const double a2 = p.gamma2 / 2.0;
    const double k2 = p.kappa * p.kappa;
    const double J2 = p.j_coupling * p.j_coupling;
    const complexd id(0.0, p.detuning);

    const complexd c2 = complexd(a1 + a2, 0.0) + id;
    const complexd c1 = complexd(a1 * a2 + J2 + k2, 0.0) + id * (a1 + a2);
    const complexd c0 = complexd(k2 * a2, 0.0) + id * (a1 * a2 + J2);

    std::array<complexd, 3> roots;
    if (c0 == 0.0) {
        // exact bound-state pole at s = 0 (delta = 0 and gamma2 = 0, or the
        // decoupled corner); factor it out so trapping asymptotics are exact
        const complexd disc = std::sqrt(c2 * c2 - 4.0 * c1);
        complexd r = (std::abs(c2 + disc) >= std::abs(c2 - disc)) ? -(c2 + disc) / 2.0
                                                                  : -(c2 - disc) / 2.0;
        roots = {complexd{}, r, std::abs(r) > 0.0 ? c1 / r : -c2 - r};
    } else {
        roots = detail::solve_monic_cubic(c2, c1, c0);
    }

    const double scale = std::max({1.0, std::abs(roots[0]), std::abs(roots[1]),
                                   std::abs(roots[2])});
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
            if (std::abs(roots[i] - roots[j]) < repeated_root_tol * scale)
                throw RepeatedRoots("poles of G(s) closer than 1e-8: use the ode backend");

    LaplacePoles out;
    for (int k = 0; k < 3; ++k) {
        const complexd s = roots[k];
        const complexd N = (s + a1) * (s + a2) + J2;
        const complexd dD = (3.0 * s + 2.0 * c2) * s + c1;
        out.poles[k] = s - complexd(0.0, p.omega); // lab frame
        out.residues[k] = N / dD;
    }
    return out;
}

} // namespace ccq
