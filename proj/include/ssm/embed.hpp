#pragma once

#include "ssm/mechsys.hpp"
#include "ssm/trajectory.hpp"

#include <filesystem>
#include <string>
#include <vector>

namespace ssm {

struct EmbeddingConfig {
    int delay_dimension = 1;   // p
    int delay_step = 1;        // delay in samples
    std::vector<int> channels;  // empty: all channels
    double trim_time = 0.0;
};

/// Per selected channel c the output holds s_c(t), s_c(t + D), ..., s_c(t + (p-1) D),
/// channels concatenated in selection order. Applies cfg.trim_time first.
Trajectory delay_embed(const Trajectory& traj, const EmbeddingConfig& cfg);

/// Takens: p delayed copies of one scalar embed a 2m-dimensional SSM when p > 4m.
bool check_embedding_dimension(int m, int p);

Trajectory trim_transient(const Trajectory& traj, double trim_time);

/// k / |Re lambda_{m+1}|: time for the first neglected mode to decay by e^-k.
double default_trim_time(const Spectrum& spec, int m, double k = 3.0);

struct EmbeddedDataset {
    std::vector<Trajectory> trajectories;
    EmbeddingConfig config;
    double dt = 0.0;
    bool takens_sufficient = true;

    int dimension() const { return trajectories.empty() ? 0 : trajectories.front().channels(); }
    void validate() const;
};

EmbeddedDataset embed_all(const std::vector<Trajectory>& trajs, const EmbeddingConfig& cfg, int m);

struct PowerSpectrum {
    std::vector<double> frequency;  // [Hz]
    std::vector<double> power;
};

/// Welch average with a Blackman window and 50% overlap; each segment has its
/// mean removed.
PowerSpectrum welch_psd(const std::vector<double>& signal, double dt, int segment = 0);

/// Local maxima of the Welch spectrum exceeding (max - threshold_db).
int count_dominant_frequencies(const Trajectory& traj, int channel, double threshold_db = 30.0);

/// Short-time power spectrum as long-format CSV `t,frequency_hz,power_db`.
void write_spectrogram_csv(const Trajectory& traj, int channel, int window, int hop,
                           const std::filesystem::path& path);

/// Warnings when the delay D*dt sits within 1% of half a period of one of the
/// given angular frequencies.
std::vector<std::string> delay_nondegeneracy_warnings(double delay_time, const std::vector<double>& omegas);

}  // namespace ssm
