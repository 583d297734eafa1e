// propagator.hpp — the (u_t, z_t) functions of the single-qubit map, served by
// either backend. The analytic backend is the default: long-horizon evaluation
// is O(1) per time point. When its partial fractions are ill-conditioned
// (repeated roots) it falls back to the ODE backend and flags the switch in
// PropagatorSample::source.

#pragma once

#include <cmath>
#include <cstddef>
#include <optional>
#include <vector>

#include "ccq/amplitudes.hpp"
#include "ccq/laplace.hpp"
#include "ccq/model.hpp"
#include "ccq/ode.hpp"

namespace ccq {

// Reusable evaluator: computes the pole decomposition once, falls back to
// integrating the amplitude equations when the poles are not simple.
class Propagator {
public:
    static Propagator make(const SiteParams& p, Backend backend = Backend::analytic) {
        Propagator prop;
        prop.params_ = validate_params(p);
        if (backend == Backend::analytic) {
            try {
                prop.poles_ = laplace_poles(p);
            } catch (const RepeatedRoots&) {
                // fall back silently; samples report source = ode
            }
        }
        return prop;
    }

    Backend source() const { return poles_ ? Backend::analytic : Backend::ode; }

    PropagatorSample at(double t) const {
        if (t < 0.0) throw ValidationError("Propagator: t must be >= 0");
        if (t == 0.0) return PropagatorSample{1.0, complexd(1.0, 0.0), source()};
        if (poles_) return PropagatorSample::from_z(poles_->z_at(t), Backend::analytic);
        const auto traj = evolve_ode(params_, AmplitudeVector::excited(), TimeGrid{0.0, t, 2});
        return PropagatorSample::from_z(traj.samples.back().h, Backend::ode);
    }

    std::vector<PropagatorSample> trace(const TimeGrid& grid) const {
        grid.validate();
        std::vector<PropagatorSample> out;
        out.reserve(grid.n_points);
        if (poles_) {
            for (std::size_t i = 0; i < grid.n_points; ++i)
                out.push_back(PropagatorSample::from_z(poles_->z_at(grid.at(i)),
                                                       Backend::analytic));
        } else {
            const auto traj = evolve_ode(params_, AmplitudeVector::excited(), grid);
            for (const auto& s : traj.samples)
                out.push_back(PropagatorSample::from_z(s.h, Backend::ode));
        }
        return out;
    }

    const std::optional<LaplacePoles>& poles() const { return poles_; }

private:
    SiteParams params_;
    std::optional<LaplacePoles> poles_;
};

inline PropagatorSample propagator(const SiteParams& p, double t,
                                   Backend backend = Backend::analytic) {
    return Propagator::make(p, backend).at(t);
}

inline std::vector<PropagatorSample> propagator_trace(const SiteParams& p,
                                                      const TimeGrid& grid,
                                                      Backend backend = Backend::analytic) {
    return Propagator::make(p, backend).trace(grid);
}

} // namespace ccq
