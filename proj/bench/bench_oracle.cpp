#include <chrono>
#include <cstdio>
#include <tuple>
#include <vector>

#include <CLI11.hpp>
#include <omp.h>

#include "twistlab/oracle.hpp"

using namespace twistlab;

namespace {

double seconds_for(int n, int m, std::uint32_t p, const SearchOptions& opt, int reps, GridSet& out)
{
    double best = 1e300;
    for (int r = 0; r < reps; ++r) {
        auto t0 = std::chrono::steady_clock::now();
        out = brute_force_twisting_maps(n, m, p, opt);
        std::chrono::duration<double> dt = std::chrono::steady_clock::now() - t0;
        best = std::min(best, dt.count());
    }
    return best;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Serial against parallel brute-force oracle"};
    int reps = 3, threads = 0;
    bool no_prune = false;
    std::vector<std::string> sizes{"2,3,3", "2,4,2", "3,3,2", "2,4,3", "3,3,3"};
    app.add_option("--reps", reps, "Repetitions per size (best time is reported)");
    app.add_option("--threads", threads, "Threads for the parallel run (0 = all)");
    app.add_option("--size", sizes, "n,m,p triples");
    app.add_flag("--no-prune", no_prune, "Exhaustive search without pruning");
    CLI11_PARSE(app, argc, argv);

    std::printf("threads available: %d\n", omp_get_max_threads());
    std::printf("%-10s %8s %12s %12s %8s %s\n", "n,m,p", "grids", "serial s", "parallel s", "speedup", "same");
    for (const auto& s : sizes) {
        int n = 0, m = 0;
        unsigned p = 0;
        if (std::sscanf(s.c_str(), "%d,%d,%u", &n, &m, &p) != 3) {
            std::fprintf(stderr, "bad size %s\n", s.c_str());
            return 2;
        }
        GridSet a, b;
        SearchOptions serial{!no_prune, 1, kDefaultBudget};
        SearchOptions parallel{!no_prune, threads, kDefaultBudget};
        double ts = seconds_for(n, m, p, serial, reps, a);
        double tp = seconds_for(n, m, p, parallel, reps, b);
        std::printf("%-10s %8zu %12.4f %12.4f %8.2f %s\n", s.c_str(), a.size(), ts, tp, ts / tp,
                    a == b ? "yes" : "NO");
        if (!(a == b))
            return 1;
    }
    return 0;
}
