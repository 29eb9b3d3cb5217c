// Serial reference vs OpenMP variants of the data-parallel kernels.
// Arg 0 selects Exec::Serial, 1 Exec::Parallel.

#include "ssm/analysis.hpp"
#include "ssm/forcing.hpp"
#include "ssm/kernels.hpp"
#include "ssm/manifold.hpp"
#include "ssm/normalform.hpp"

#include <benchmark/benchmark.h>

#include <optional>

using namespace ssm;

namespace {

Exec exec_of(const benchmark::State& st) { return st.range(0) ? Exec::Parallel : Exec::Serial; }

const MechSystem& chain() {
    static const MechSystem sys = reference_chain();
    return sys;
}

std::vector<Eigen::VectorXd> slow_ics(int n) {
    const auto lin = linearize(chain());
    std::vector<Eigen::VectorXd> x0s;
    for (int i = 0; i < n; ++i) x0s.push_back(slow_eigenspace_ic(lin.spectrum, {0}, {Complex(2.0 + i, 0.3 * i)}));
    return x0s;
}

struct Identified {
    ManifoldModel man;
    NormalFormModel nf;
};

const Identified& identified() {
    static std::optional<Identified> m;
    if (!m) {
        const auto lin = linearize(chain());
        std::vector<Trajectory> data;
        for (auto& t : kernels::integrate_batch(chain(), slow_ics(2), 0.0, 2500.0, 0.1))
            data.push_back(trim_transient(t, default_trim_time(lin.spectrum, 1)));
        Identified x;
        x.man = fit_manifold(data, 2);
        std::vector<Trajectory> red;
        for (const auto& t : data)
            red.push_back(Trajectory::uniform(t.times.front(), t.dt(), x.man.project_rows(t.states), {"a", "b"}));
        x.nf = fit_normal_form(fit_reduced_field(red, 3), red);
        m = std::move(x);
    }
    return *m;
}

void BM_design_matrix(benchmark::State& st) {
    const MonomialBasis basis(4, 1, 5);
    const Eigen::MatrixXd X = Eigen::MatrixXd::Random(20000, 4);
    for (auto _ : st) benchmark::DoNotOptimize(kernels::design_matrix(basis, X, exec_of(st)));
}

void BM_integrate_batch(benchmark::State& st) {
    const auto x0s = slow_ics(8);
    for (auto _ : st) benchmark::DoNotOptimize(kernels::integrate_batch(chain(), x0s, 0.0, 300.0, 0.1, exec_of(st)));
}

void BM_amplitude_grid(benchmark::State& st) {
    const auto& m = identified();
    std::vector<double> rho;
    for (int i = 1; i <= 64; ++i) rho.push_back(0.005 * i);
    const auto g = coordinate_observable(4);
    for (auto _ : st) benchmark::DoNotOptimize(amplitude_grid(m.man, m.nf, g, 0, rho, exec_of(st)));
}

void BM_forced_sweep_pair(benchmark::State& st) {
    const auto lin = linearize(chain());
    const auto shape = modal_force_shape(chain(), lin.spectrum, 0, 0.38e-3);
    const std::vector<double> grid = {0.278, 0.281, 0.284, 0.287};
    SweepOptions opt;
    opt.max_periods = 300;
    for (auto _ : st) benchmark::DoNotOptimize(forced_sweep_oracle(chain(), shape, grid, 4, opt, exec_of(st)));
}

}  // namespace

BENCHMARK(BM_design_matrix)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_integrate_batch)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_amplitude_grid)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_forced_sweep_pair)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond)->Iterations(1);

BENCHMARK_MAIN();
