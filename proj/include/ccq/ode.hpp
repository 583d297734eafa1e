// ode.hpp — adaptive integration of the three coupled amplitude equations.
//
// The equations are integrated in the frame rotating at omega, which removes
// the fast common frequency exactly and leaves the generator
//
//   d/dt (h, c1, c2) = -i * [[delta, kappa, 0          ],
//                            [kappa, -i*g1/2, J        ],
//                            [0,     J,       -i*g2/2  ]] (h, c1, c2)
//
// Lab-frame amplitudes are phase-restored afterwards when omega != 0.

#pragma once

#include <boost/numeric/odeint.hpp>

#include <array>
#include <cmath>
#include <complex>
#include <vector>

#include "ccq/amplitudes.hpp"
#include "ccq/model.hpp"

namespace ccq {

inline AmplitudeTrajectory evolve_ode(const SiteParams& p, const AmplitudeVector& init,
                                      const TimeGrid& grid, double rtol = 1e-10,
                                      double atol = 1e-12) {
    namespace odeint = boost::numeric::odeint;
    using state = std::array<complexd, 3>;

    validate_params(p);
    grid.validate();
    if (grid.t_start != 0.0)
        throw ValidationError("evolve_ode: trajectories start at t = 0");
    if (init.norm_sq() > 1.0 + 1e-12)
        throw ValidationError("evolve_ode: initial amplitude norm must be <= 1");

    const complexd I(0.0, 1.0);
    const double hg1 = p.gamma1 / 2.0;
    const double hg2 = p.gamma2 / 2.0;
    const auto rhs = [&](const state& y, state& dy, double) {
        dy[0] = -I * (p.detuning * y[0] + p.kappa * y[1]);
        dy[1] = -I * (p.kappa * y[0] + p.j_coupling * y[2]) - hg1 * y[1];
        dy[2] = -I * (p.j_coupling * y[1]) - hg2 * y[2];
    };

    state y{init.h, init.c1, init.c2};
    const std::vector<double> times = grid.times();
    std::vector<state> raw;
    raw.reserve(grid.n_points);

    auto stepper = odeint::make_controlled<odeint::runge_kutta_dopri5<state>>(atol, rtol);
    try {
        odeint::integrate_times(stepper, rhs, y, times.begin(), times.end(),
                                grid.dt() / 16.0,
                                [&raw](const state& s, double) { raw.push_back(s); },
                                odeint::max_step_checker(10000));
    } catch (const odeint::no_progress_error& e) {
        throw StepSizeUnderflow(std::string("evolve_ode: ") + e.what());
    } catch (const std::overflow_error& e) {
        throw StepSizeUnderflow(std::string("evolve_ode: ") + e.what());
    }

    AmplitudeTrajectory traj{grid, {}};
    traj.samples.resize(grid.n_points);
    for (std::size_t i = 0; i < grid.n_points; ++i) {
        complexd phase(1.0, 0.0);
        if (p.omega != 0.0) phase = std::exp(-complexd(0.0, p.omega * times[i]));
        traj.samples[i] = {raw[i][0] * phase, raw[i][1] * phase, raw[i][2] * phase};
    }
    traj.samples[0] = init;
    return traj;
}

} // namespace ccq
