// Serial vs OpenMP frontier expansion and picture search.
#include "peiffer/moves.hpp"
#include "peiffer/search.hpp"

#include "../tests/support/enumerate.hpp"
#include "../tests/support/random.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <iostream>

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace peiffer;

namespace {

template <class F>
double best_of(int reps, F&& f) {
    double best = 1e100;
    for (int k = 0; k < reps; ++k) {
        const auto t0 = std::chrono::steady_clock::now();
        f();
        best = std::min(best, std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
    }
    return best;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"frontier benchmark"};
    std::size_t frontier_size = 2000;
    int reps = 3;
    std::uint64_t seed = 1;
    app.add_option("--frontier", frontier_size, "sequences per frontier");
    app.add_option("--reps", reps, "repetitions, best time kept");
    app.add_option("--seed", seed, "generator seed");
    CLI11_PARSE(app, argc, argv);

    const auto p = parse_presentation("gens: a b\nrel 1: aa\nrel 1: abAB\nrel 2: bbb\n");
    std::mt19937 g(static_cast<std::mt19937::result_type>(seed));
    std::vector<Sequence> frontier;
    for (std::size_t k = 0; k < frontier_size; ++k) frontier.push_back(testing::random_identity_sequence(g, p, 3));

    std::vector<Child> cs, cp;
    const double ts = best_of(reps, [&] { cs = expand_frontier_serial(p, frontier, true); });
    const double tp = best_of(reps, [&] { cp = expand_frontier_parallel(p, frontier, true); });
    const std::size_t n_serial = cs.size();
    bool same = cs.size() == cp.size();
    for (std::size_t k = 0; same && k < cs.size(); ++k)
        same = cs[k].key == cp[k].key && cs[k].parent == cp[k].parent && cs[k].sequence == cp[k].sequence;
    int threads = 1;
#ifdef _OPENMP
    threads = omp_get_max_threads();
#endif
    std::cout << "threads " << threads << "\n";
    std::cout << "frontier expansion: " << frontier.size() << " states, " << n_serial << " children\n";
    std::cout << "  serial   " << ts * 1e3 << " ms\n  parallel " << tp * 1e3 << " ms  (speedup " << ts / tp << ")\n";
    if (!same) {
        std::cerr << "mismatch: serial and parallel children differ\n";
        return 1;
    }

    const auto a3 = parse_presentation("gens: a\nrel 1: aaa\n");
    PictureLibrary lib(a3);
    lib.add_primitive_dipoles();
    const auto pics = testing::connected_power_pictures(a3, 2);
    for (bool parallel : {false, true}) {
        MoveBudget b;
        b.parallel = parallel;
        std::size_t found = 0;
        const double t = best_of(reps, [&] {
            found = 0;
            for (const auto& pic : pics) found += search_to_empty(pic, lib, b).found;
        });
        std::cout << "picture search (" << (parallel ? "parallel" : "serial") << "): " << found << "/" << pics.size()
                  << " reduced in " << t * 1e3 << " ms\n";
    }
    return 0;
}
