#pragma once

#include "ssm/ode.hpp"
#include "ssm/polynomial.hpp"
#include "ssm/trajectory.hpp"

#include <Eigen/Dense>
#include <json.hpp>

#include <optional>
#include <vector>

namespace ssm {

// One polynomial contribution coefficient * prod q^a * prod qdot^b to the
// nonlinear force on `dof`.
struct ForceTerm {
    int dof = 0;
    std::vector<int> q_exponents;
    std::vector<int> qdot_exponents;
    double coefficient = 0.0;
};

/// M q'' + C q' + K q + f_nl(q, q') = g cos(Omega t)
struct MechSystem {
    Eigen::MatrixXd mass;
    Eigen::MatrixXd stiffness;
    Eigen::MatrixXd damping;
    std::vector<ForceTerm> nonlinear;

    int dofs() const noexcept { return static_cast<int>(mass.rows()); }

    // Shape checks, mass symmetry and definiteness, term degrees >= 2.
    void validate() const;

    Eigen::VectorXd nonlinear_force(const Eigen::Ref<const Eigen::VectorXd>& q,
                                    const Eigen::Ref<const Eigen::VectorXd>& qdot) const;
};

enum class ChainBoundary { FixedFree, FixedFixed };

/// Masses coupled by unit springs, first mass grounded; the last one is also
/// grounded for FixedFixed. Rayleigh damping C = mass_prop M + stiff_prop K.
MechSystem build_oscillator_chain(int n_masses, double first_mass, double other_mass, double mass_prop,
                                  double stiff_prop, std::vector<ForceTerm> nl_terms,
                                  ChainBoundary boundary = ChainBoundary::FixedFree);

// The five-mass benchmark chain with cubic nonlinearity on the first mass.
MechSystem reference_chain(bool velocity_factor_on_first_dof = true);

struct Spectrum {
    // Decreasing real part, each pair stored as (lambda, conj lambda) with Im >= 0 first.
    Eigen::VectorXcd eigenvalues;
    // Unit norm, largest-magnitude entry real positive.
    Eigen::MatrixXcd eigenvectors;
    double max_residual = 0.0;
    double eigenvector_condition = 1.0;
    bool near_defective = false;

    int modes() const noexcept { return static_cast<int>(eigenvalues.size() / 2); }
    Complex mode_eigenvalue(int j) const { return eigenvalues[2 * j]; }
    Eigen::VectorXcd mode_vector(int j) const { return eigenvectors.col(2 * j); }
};

Spectrum compute_spectrum(const Eigen::MatrixXd& A);

// Fixes the arbitrary phase and scale of an eigenvector.
Eigen::VectorXcd normalize_eigenvector(const Eigen::VectorXcd& v);

struct Linearization {
    Eigen::MatrixXd A;
    Spectrum spectrum;
};

Linearization linearize(const MechSystem& sys);

struct HarmonicForcing {
    Eigen::VectorXd shape;
    double omega = 0.0;
    double phase = 0.0;  // force = shape * cos(omega t + phase)
};

/// First-order right-hand side x = (q, q').
ode::Rhs first_order_rhs(const MechSystem& sys, std::optional<HarmonicForcing> forcing = std::nullopt);

Trajectory integrate(const MechSystem& sys, const Eigen::VectorXd& x0, double t0, double t1, double dt_out,
                     std::optional<HarmonicForcing> forcing = std::nullopt, const ode::Options& opt = {});

std::vector<std::string> state_labels(int dofs);

/// sum_j Re(a_j v_j) over 0-based mode indices (slowest first).
Eigen::VectorXd slow_eigenspace_ic(const Spectrum& spec, const std::vector<int>& modes,
                                   const std::vector<Complex>& amplitudes);

/// Kinetic plus elastic energy, including the potential of nonlinear terms that
/// depend on their own coordinate only. Other terms contribute nothing.
double mechanical_energy(const MechSystem& sys, const Eigen::VectorXd& x);

nlohmann::json to_json(const MechSystem& sys);
MechSystem mech_system_from_json(const nlohmann::json& j);

}  // namespace ssm
