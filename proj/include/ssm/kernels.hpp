#pragma once

#include "ssm/mechsys.hpp"
#include "ssm/polynomial.hpp"
#include "ssm/trajectory.hpp"

#include <Eigen/Dense>

#include <vector>

namespace ssm {

// Data-parallel kernels come in two variants computing identical results: a
// serial reference and an OpenMP version. Only independent rows or tasks are
// distributed, never reductions, so both agree bit for bit.
enum class Exec { Serial, Parallel };

namespace kernels {

/// Rows: samples; columns: basis monomials evaluated at each row of X.
Eigen::MatrixXd design_matrix(const MonomialBasis& basis, const Eigen::MatrixXd& X, Exec exec = Exec::Parallel);

/// Independent free or forced integrations of one system.
std::vector<Trajectory> integrate_batch(const MechSystem& sys, const std::vector<Eigen::VectorXd>& x0s, double t0,
                                        double t1, double dt_out, Exec exec = Exec::Parallel,
                                        const ode::Options& opt = {});

}  // namespace kernels
}  // namespace ssm
