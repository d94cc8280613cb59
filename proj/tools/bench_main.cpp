// Benchmark: serial pipeline vs OpenMP-parallel pipeline on random
// connected graphs, verifying that both produce identical spectra.

#include <chrono>
#include <cstdio>
#include <random>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "blowup/engine.hpp"
#include "blowup/graph.hpp"

using namespace blowup;

namespace {

Graph random_connected_graph(int n, double p, unsigned seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    while (true) {
        Graph g(n);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (coin(rng) < p) g.add_edge(u, v);
        if (is_connected(g)) return g;
    }
}

double run_once(const Graph& g, int s, int workers, size_t* value_count) {
    EngineOptions opts;
    opts.worker_count = workers;
    auto t0 = std::chrono::steady_clock::now();
    SpectrumReport rep = blowup_spectrum(g, s, opts);
    auto t1 = std::chrono::steady_clock::now();
    *value_count = rep.values.size();
    return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
    int n = argc > 1 ? std::atoi(argv[1]) : 10;
    int s = argc > 2 ? std::atoi(argv[2]) : 2;
    unsigned seed = argc > 3 ? static_cast<unsigned>(std::strtoul(argv[3], nullptr, 10)) : 42;

    Graph g = random_connected_graph(n, 0.5, seed);
    std::printf("graph: n=%d m=%d, s=%d, seed=%u\n", n, g.edge_count(), s, seed);

#ifdef _OPENMP
    int max_workers = omp_get_max_threads();
#else
    int max_workers = 1;
    std::printf("built without OpenMP; parallel runs fall back to serial\n");
#endif

    size_t serial_values = 0;
    double t_serial = run_once(g, s, 1, &serial_values);
    std::printf("%-10s %8.1f ms   %zu values\n", "serial", t_serial, serial_values);

    for (int w = 2; w <= max_workers; w *= 2) {
        size_t values = 0;
        double t = run_once(g, s, w, &values);
        std::printf("threads=%-2d %8.1f ms   %zu values   speedup %.2fx%s\n", w, t, values,
                    t_serial / t, values == serial_values ? "" : "   MISMATCH");
        if (values != serial_values) return 1;
    }
    return 0;
}
