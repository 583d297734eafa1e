// model.hpp — domain types shared by all modules: site parameters, time grids,
// qubit/two-qubit density matrices, and the PSD check.
//
// Unit convention: gamma1 = 1 is the default unit; every rate is a
// dimensionless multiple of gamma1 and time carries units of 1/gamma1.
// All types are immutable value types.

#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <cstddef>
#include <vector>

#include "ccq/errors.hpp"

namespace ccq {

using complexd = std::complex<double>;

// Physical rates and frequencies of one qubit + two-cavity site.
struct SiteParams {
    double kappa = 0.0;      // qubit-C1 coupling
    double j_coupling = 0.0; // C1-C2 coupling
    double gamma1 = 1.0;     // C1 photon decay rate (> 0, the unit)
    double gamma2 = 0.0;     // C2 photon decay rate (0 = perfect cavity)
    double detuning = 0.0;   // qubit-cavity detuning omega0 - omega
    double omega = 0.0;      // common cavity frequency; observables do not depend on it
};

enum class CouplingRegime { weak, strong };

// weak iff kappa <= gamma1/4; depends on (kappa, gamma1) only
inline CouplingRegime regime(const SiteParams& p) noexcept {
    return p.kappa <= p.gamma1 / 4.0 ? CouplingRegime::weak : CouplingRegime::strong;
}

inline const SiteParams& validate_params(const SiteParams& p) {
    if (p.kappa < 0.0 || p.j_coupling < 0.0 || p.gamma1 < 0.0 || p.gamma2 < 0.0)
        throw NegativeRate("kappa, j_coupling, gamma1, gamma2 must all be nonnegative");
    if (p.gamma1 == 0.0)
        throw ZeroGamma1("gamma1 must be positive: it defines the unit system");
    return p;
}

// Uniform time grid starting at t_start (trajectory computations require 0).
struct TimeGrid {
    double t_start = 0.0;
    double t_end = 0.0;
    std::size_t n_points = 0;

    static TimeGrid uniform(double t_end, std::size_t n_points) {
        TimeGrid g{0.0, t_end, n_points};
        g.validate();
        return g;
    }

    void validate() const {
        if (n_points < 2)
            throw ValidationError("TimeGrid needs at least 2 points");
        if (!(t_end > t_start) || t_start < 0.0)
            throw ValidationError("TimeGrid needs 0 <= t_start < t_end");
    }

    double dt() const { return (t_end - t_start) / static_cast<double>(n_points - 1); }

    double at(std::size_t i) const {
        return i + 1 == n_points ? t_end : t_start + dt() * static_cast<double>(i);
    }

    std::vector<double> times() const {
        std::vector<double> t(n_points);
        for (std::size_t i = 0; i < n_points; ++i) t[i] = at(i);
        return t;
    }
};

// true iff m is Hermitian within tol and its smallest eigenvalue is >= -tol
inline bool psd_check(const Eigen::MatrixXcd& m, double tol = 1e-9) {
    if (m.rows() != m.cols()) throw NonSquare("psd_check requires a square matrix");
    if ((m - m.adjoint()).cwiseAbs().maxCoeff() > tol) return false;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(0.5 * (m + m.adjoint()),
                                                       Eigen::EigenvaluesOnly);
    return es.eigenvalues().minCoeff() >= -tol;
}

namespace detail {

template <typename Matrix>
void check_state(const Matrix& rho, const char* what) {
    if (std::abs(rho.trace().real() - 1.0) > 1e-12 || std::abs(rho.trace().imag()) > 1e-12)
        throw ValidationError(std::string(what) + ": trace must equal 1");
    if (!psd_check(rho, 1e-9))
        throw ValidationError(std::string(what) + ": matrix must be Hermitian and PSD");
}

} // namespace detail

// 2x2 density matrix in the basis {|1>, |0>}
struct QubitState {
    Eigen::Matrix2cd rho = Eigen::Matrix2cd::Zero();

    static QubitState from_matrix(const Eigen::Matrix2cd& m) {
        detail::check_state(m, "QubitState");
        return {m};
    }
};

// 4x4 density matrix in the basis {|11>, |10>, |01>, |00>}
struct TwoQubitState {
    Eigen::Matrix4cd rho = Eigen::Matrix4cd::Zero();

    static TwoQubitState from_matrix(const Eigen::Matrix4cd& m) {
        detail::check_state(m, "TwoQubitState");
        return {m};
    }
};

// Pure qubit state alpha|0> + beta|1>
struct PureQubitInit {
    complexd alpha{};
    complexd beta{};

    static PureQubitInit of(complexd alpha, complexd beta) {
        PureQubitInit s{alpha, beta};
        s.validate();
        return s;
    }

    void validate() const {
        if (std::abs(std::norm(alpha) + std::norm(beta) - 1.0) > 1e-12)
            throw ValidationError("PureQubitInit: |alpha|^2 + |beta|^2 must equal 1");
    }

    // density matrix in the {|1>, |0>} basis
    Eigen::Matrix2cd rho() const {
        Eigen::Matrix2cd m;
        m(0, 0) = std::norm(beta);
        m(0, 1) = beta * std::conj(alpha);
        m(1, 0) = std::conj(m(0, 1));
        m(1, 1) = std::norm(alpha);
        return m;
    }
};

} // namespace ccq
