#pragma once

#include <Eigen/Dense>

#include <functional>
#include <memory>
#include <vector>

namespace ssm::ode {

using State = std::vector<double>;
using Rhs = std::function<void(const State& x, State& dxdt, double t)>;

struct Options {
    double rtol = 1e-9;
    double atol = 1e-12;
    double initial_step = 1e-3;
    // Step sizes below min_step_rel * max(1, |t|) count as underflow.
    double min_step_rel = 1e-14;
    // Non-finite states or states with infinity-norm above this abort the run.
    double max_norm = 1e300;
};

/// Adaptive Dormand-Prince 5(4) with continuous extension. Samples must be
/// requested in non-decreasing time order.
class DenseIntegrator {
public:
    DenseIntegrator(Rhs rhs, Options opt = {});
    ~DenseIntegrator();
    DenseIntegrator(DenseIntegrator&&) noexcept;
    DenseIntegrator& operator=(DenseIntegrator&&) noexcept;

    void reset(const State& x0, double t0);
    State state_at(double t);
    double time() const;
    long steps() const noexcept { return steps_; }

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
    long steps_ = 0;
};

/// Integrates from (t0, x0) and returns one row per requested time.
Eigen::MatrixXd solve(const Rhs& rhs, const State& x0, double t0, const std::vector<double>& times,
                      const Options& opt = {});

/// Classical fixed-step RK4; reference for order checks.
Eigen::MatrixXd solve_rk4(const Rhs& rhs, const State& x0, double t0, const std::vector<double>& times, double h);

}  // namespace ssm::ode
