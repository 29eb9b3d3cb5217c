#pragma once

#include "ssm/kernels.hpp"
#include "ssm/manifold.hpp"
#include "ssm/normalform.hpp"
#include "ssm/trajectory.hpp"

#include <Eigen/Dense>

#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace ssm {

/// Scalar functional of an observable-space point.
using Observable = std::function<double(const Eigen::VectorXd&)>;

Observable coordinate_observable(int index);
Observable norm_observable();
// y^T Q y, e.g. a kinetic-energy proxy over velocity channels.
Observable quadratic_observable(Eigen::MatrixXd Q);

struct BackboneCurve {
    int mode = 0;
    std::vector<double> rho;
    std::vector<double> alpha;
    std::vector<double> omega;
    std::vector<double> damping_ratio_pct;  // 100 alpha / omega
    std::vector<double> amp;
};

using AmplitudeFunction = std::function<double(double rho)>;

/// alpha_j, omega_j on a uniform rho grid with the other modes at zero.
/// Without an amplitude function amp = rho.
BackboneCurve backbone(const PolarModel& pm, int mode, double rho_max, const AmplitudeFunction& amp = {},
                       int points = 200, Exec exec = Exec::Parallel);

void write_backbone_csv(const BackboneCurve& curve, const std::filesystem::path& path);

/// max over phi of |g(lift(Re T h(z)))| with z_j = z_modes_j exp(i c_j phi).
/// ratios c default to 1; a 256-point scan refined by Brent's method.
double amplitude_map(const ManifoldModel& mani, const NormalFormModel& nf, const Observable& g,
                     const Eigen::VectorXcd& z_modes, const std::vector<int>& ratios = {});

/// Single-mode amplitude on a rho grid; rows independent.
std::vector<double> amplitude_grid(const ManifoldModel& mani, const NormalFormModel& nf, const Observable& g,
                                   int mode, const std::vector<double>& rho, Exec exec = Exec::Parallel);

AmplitudeFunction single_mode_amplitude(const ManifoldModel& mani, const NormalFormModel& nf, Observable g,
                                        int mode);

struct Prediction {
    Trajectory trajectory;
    Eigen::MatrixXcd z;  // normal-form coordinates per sample
    std::vector<std::string> warnings;
};

/// project -> normal form -> evolve -> back -> lift, sampled at `times`.
Prediction predict_trajectory(const ManifoldModel& mani, const NormalFormModel& nf, const Eigen::VectorXd& y0,
                              const std::vector<double>& times, std::vector<std::string> labels = {});

/// Mean of ||y_i - yhat_i|| over samples divided by the norm of the
/// normalization vector (default: the reference sample with largest norm).
/// A predicted trajectory on a different grid is resampled by cubic splines
/// and `resampled` is set.
double nmte(const Trajectory& reference, const Trajectory& predicted,
            const std::optional<Eigen::VectorXd>& normalization = std::nullopt, bool* resampled = nullptr);

}  // namespace ssm
