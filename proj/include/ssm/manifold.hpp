#pragma once

#include "ssm/embed.hpp"
#include "ssm/polynomial.hpp"
#include "ssm/trajectory.hpp"

#include <Eigen/Dense>
#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace ssm {

/// Graph-style parametrization y = y_eq + V xi + v_nl(xi), xi = V^T (y - y_eq),
/// with V^T V = I and V^T v_nl = 0.
struct ManifoldModel {
    Eigen::MatrixXd tangent;        // p x 2m
    MonomialBasis basis;            // degrees 2..order in 2m variables
    Eigen::MatrixXd coeffs;         // p x basis.size()
    int order = 1;
    Eigen::VectorXd equilibrium;    // p
    std::string equilibrium_source = "zero";
    double training_rms = 0.0;

    int ambient_dim() const noexcept { return static_cast<int>(tangent.rows()); }
    int dim() const noexcept { return static_cast<int>(tangent.cols()); }

    Eigen::VectorXd project(const Eigen::VectorXd& y) const;
    Eigen::VectorXd lift(const Eigen::VectorXd& xi) const;
    // d lift / d xi, p x 2m
    Eigen::MatrixXd lift_jacobian(const Eigen::VectorXd& xi) const;

    // Row-wise versions: one sample per row.
    Eigen::MatrixXd project_rows(const Eigen::MatrixXd& Y) const;
    Eigen::MatrixXd lift_rows(const Eigen::MatrixXd& Xi) const;

    // Max of |V^T V - I| and of |V^T c| over graph coefficient vectors.
    double orthonormality_error() const;
    double constraint_error() const;
};

struct ManifoldFitOptions {
    int order = 3;
    bool refine = false;
    int max_iterations = 200;
    double relative_tolerance = 1e-9;
    double condition_limit = 1e12;
    double fold_fraction = 0.3;
    // Unset: zero, or tail-mean estimate when estimate_equilibrium is set.
    std::optional<Eigen::VectorXd> equilibrium;
    bool estimate_equilibrium = false;
};

struct ManifoldFitReport {
    double initial_cost = 0.0;
    double final_cost = 0.0;
    int iterations = 0;
    double condition = 0.0;
};

ManifoldModel fit_manifold(const std::vector<Trajectory>& data, int ssm_dim, const ManifoldFitOptions& opt = {},
                           ManifoldFitReport* report = nullptr);

inline ManifoldModel fit_manifold(const EmbeddedDataset& data, int ssm_dim, const ManifoldFitOptions& opt = {},
                                  ManifoldFitReport* report = nullptr) {
    return fit_manifold(data.trajectories, ssm_dim, opt, report);
}

// Mean of the final 5% of samples pooled over trajectories.
Eigen::VectorXd estimate_equilibrium(const std::vector<Trajectory>& data);

/// Sum of squared graph residuals over all samples.
double manifold_cost(const ManifoldModel& model, const std::vector<Trajectory>& data);

/// Copy with V replaced by V Q and coefficients re-expressed in the rotated chart.
ManifoldModel rotate_chart(const ManifoldModel& model, const Eigen::MatrixXd& Q);

nlohmann::json to_json(const ManifoldModel& model);
ManifoldModel manifold_from_json(const nlohmann::json& j);

}  // namespace ssm
