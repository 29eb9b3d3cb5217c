#pragma once

#include <Eigen/Dense>

#include <filesystem>
#include <string>
#include <vector>

namespace ssm {

/// Uniformly sampled multichannel signal: one row of `states` per time.
struct Trajectory {
    std::vector<double> times;
    Eigen::MatrixXd states;
    std::vector<std::string> labels;

    int samples() const noexcept { return static_cast<int>(times.size()); }
    int channels() const noexcept { return static_cast<int>(states.cols()); }
    double dt() const;

    // Throws InvalidArgument if rows/labels/times disagree or sampling is not uniform.
    void validate() const;

    static Trajectory uniform(double t0, double dt, Eigen::MatrixXd states, std::vector<std::string> labels);
};

std::vector<double> uniform_times(double t0, double dt, int count);

// CSV: header `t,<label1>,...`, one row per sample, %.17g.
void write_csv(const Trajectory& traj, const std::filesystem::path& path);
Trajectory read_csv(const std::filesystem::path& path);

std::string format_double(double v);

}  // namespace ssm
