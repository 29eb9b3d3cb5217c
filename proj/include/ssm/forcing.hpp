#pragma once

#include "ssm/analysis.hpp"
#include "ssm/kernels.hpp"
#include "ssm/mechsys.hpp"
#include "ssm/normalform.hpp"

#include <Eigen/Dense>

#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace ssm {

// Forced normal form: z_j' = n_j(z) - i f_j exp(i c_j Omega t). In the
// co-rotating frame w_j = z_j exp(-i c_j Omega t), psi_j = arg w_j, a single
// forced mode obeys
//   rho' = -alpha rho - f sin psi,  psi' = omega - Omega - (f / rho) cos psi,
// so the response peak sits at psi = -pi/2.

struct ForcingConfig {
    double omega_min = 0.0;
    double omega_max = 0.0;
    std::vector<double> f;    // per mode, >= 0
    std::vector<int> ratios;  // c_j, default 1

    void validate(int modes) const;
};

struct FrcPoint {
    double omega = 0.0;
    std::vector<double> rho;
    std::vector<double> psi;
    double amp = 0.0;
    bool stable = false;
    bool fold = false;
    int segment = 0;
    Eigen::VectorXcd jacobian_eigenvalues;
};

struct FrcBranch {
    std::vector<FrcPoint> points;
    std::vector<int> fold_indices;
    std::string termination;
    std::vector<std::string> warnings;

    // Index of the largest response amplitude.
    int peak_index() const;
};

/// Amplitude of a co-rotating state w (complex per mode).
using BranchAmplitude = std::function<double(const Eigen::VectorXcd& w)>;

/// Closed-form single-mode FRC on a rho grid: Omega = omega -+ sqrt(f^2/rho^2 - alpha^2),
/// sin psi = -alpha rho / f. The exact peak f = alpha(rho) rho is inserted.
/// Points run along the lower-Omega side with rising rho, then back down the
/// upper side; disjoint admissible rho intervals get separate segment ids.
FrcBranch frc_closed_form_2d(const PolarModel& pm, double f, const std::vector<double>& rho_grid,
                             const AmplitudeFunction& amp = {});

/// Every closed-form fixed point at one forcing frequency: roots of
/// (Omega - omega)^2 + alpha^2 - f^2/rho^2 on (0, rho_max].
std::vector<FrcPoint> frc_points_at_omega(const PolarModel& pm, double f, double omega, double rho_max,
                                          const AmplitudeFunction& amp = {});

/// Jacobian of (rho', psi') at a single-mode fixed point.
Eigen::Matrix2d polar_forced_jacobian(const PolarModel& pm, double f, double rho, double psi);

// Real co-rotating system x = (Re w_1, Im w_1, ...): G_j = n_j(w) - i c_j Omega w_j - i f_j.
Eigen::VectorXd corotating_residual(const PolarModel& pm, const ForcingConfig& cfg, const Eigen::VectorXd& x,
                                    double omega);
// d G / d x (2m x 2m) and d G / d Omega as the last column.
Eigen::MatrixXd corotating_jacobian(const PolarModel& pm, const ForcingConfig& cfg, const Eigen::VectorXd& x,
                                    double omega);

struct ContinuationOptions {
    double newton_tolerance = 1e-11;
    int max_newton_iterations = 12;
    double max_step_fraction = 0.01;  // of the Omega range
    double min_step_fraction = 1e-9;
    int max_points = 200000;
    double rho_max = 0.0;  // validity bound on every rho_j; 0 disables
    bool refine_peak = true;
};

/// Pseudo-arclength continuation in Omega from a low-amplitude seed at omega_min.
std::vector<FrcBranch> frc_continuation(const PolarModel& pm, const ForcingConfig& cfg,
                                        const BranchAmplitude& amp = {}, const ContinuationOptions& opt = {});

void write_frc_csv(const FrcBranch& branch, const std::filesystem::path& path);

/// Inverts amp(rho) = measured on [0, rho_max] and returns f. At the sweep
/// peak (no Omega given) f = alpha(rho*) rho*; otherwise the closed-form
/// relation is solved at (Omega*, rho*).
double calibrate_forcing(const PolarModel& pm, int mode, const AmplitudeFunction& amp, double measured_amp,
                         double rho_max, std::optional<double> omega = std::nullopt);

/// f exceeding 20% of max alpha(rho) rho over [0, rho_max] leaves the O(f rho) regime.
std::optional<std::string> forcing_validity_warning(const PolarModel& pm, int mode, double f, double rho_max);

// ---------------------------------------------------------------- full-model oracle

/// amplitude * M phi_j / |M phi_j| with phi_j the displacement part of mode j.
Eigen::VectorXd modal_force_shape(const MechSystem& sys, const Spectrum& spec, int mode, double amplitude);

struct SweepOptions {
    int samples_per_period = 128;
    int max_periods = 2000;
    double relative_change = 1e-6;
    ode::Options integrator{};
};

struct SweepResult {
    std::vector<double> omega;
    std::vector<double> amp_up;
    std::vector<double> amp_down;
    std::vector<bool> settled_up;
    std::vector<bool> settled_down;
    std::vector<int> periods_up;
    std::vector<int> periods_down;

    // Omega values where the two sweeps differ by more than rel_gap.
    std::vector<double> hysteresis(double rel_gap = 0.05) const;
};

/// Steady-state amplitude of state component `observable` (0-based over
/// (q, qdot)) under g cos(Omega t), sweeping upward and downward with the
/// state carried between frequencies. The two sweeps run concurrently.
SweepResult forced_sweep_oracle(const MechSystem& sys, const Eigen::VectorXd& shape,
                                const std::vector<double>& omega_grid, int observable,
                                const SweepOptions& opt = {}, Exec exec = Exec::Parallel);

/// Steady-state amplitude at one frequency starting from x (updated to the final state).
double forced_steady_amplitude(const MechSystem& sys, const Eigen::VectorXd& shape, double omega, int observable,
                               Eigen::VectorXd& x, const SweepOptions& opt = {}, bool* settled = nullptr);

struct OraclePeak {
    double omega = 0.0;
    double amp = 0.0;
};

/// Refines the up-sweep maximum by Brent's method between its grid neighbours.
OraclePeak refine_oracle_peak(const MechSystem& sys, const Eigen::VectorXd& shape, const SweepResult& sweep,
                              int observable, const SweepOptions& opt = {});

void write_sweep_csv(const SweepResult& sweep, const std::filesystem::path& path);

}  // namespace ssm
