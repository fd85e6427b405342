/* Benchmark harness comparing the serial reference implementations against
 * the OpenMP kernels, checking agreement as it goes.
 *
 * Two kernels have both paths:
 *   - finite-quotient counting: count_homs_serial (raw enumeration) vs
 *     count_homs with threads > 1 (Tietze + OpenMP odometer reduction);
 *   - Hurwitz BFS: hurwitz_equivalent with threads == 1 (serial frontier)
 *     vs threads > 1 (parallel frontier expansion).
 */

#include "bmcalc/vankampen.hpp"

#include <chrono>
#include <iostream>

using namespace bmc;

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

Factorization cusp_fact() {
    return make_factorization(3, {make_factor(3, BraidWord(3, {}), 1, 3),
                                  make_factor(3, BraidWord(3, {-1}), 2, 1),
                                  make_factor(3, BraidWord(3, {}), 1, 1),
                                  make_factor(3, BraidWord(3, {}), 2, 1)});
}

void report(const std::string& kernel, double serial_ms, double parallel_ms, bool agree) {
    std::cout << "kernel=" << kernel << " serial_ms=" << serial_ms
              << " parallel_ms=" << parallel_ms << " speedup=" << serial_ms / parallel_ms
              << " agree=" << (agree ? "yes" : "NO") << "\n";
}

bool bench_hom_counting() {
    // Affine cusp-curve group (3 generators, 8 relators) into S5: 120^3
    // assignments for the raw serial path; the parallel path also gets the
    // benefit of Tietze simplification, which is part of its pipeline.
    Presentation p = presentation(cusp_fact(), false);
    Permutation c5 = Permutation::identity(5);
    c5.map = {1, 2, 3, 4, 0};
    FiniteGroup s5 = group_from_permutations(5, {Permutation::transposition(5, 1, 2), c5});

    Clock::time_point t0 = Clock::now();
    unsigned long long serial = count_homs_serial(p, s5);
    double serial_ms = ms_since(t0);

    t0 = Clock::now();
    unsigned long long parallel = count_homs(p, s5, 120, 4).count;
    double parallel_ms = ms_since(t0);

    report("hom_counting", serial_ms, parallel_ms, serial == parallel);
    std::cout << "  homs=" << serial << " (raw serial) vs " << parallel << " (tietze+omp)\n";
    return serial == parallel;
}

bool bench_hom_enumeration() {
    // Z/2 * Z/3 * Z/4 into S5: Tietze cannot shrink this presentation, so the
    // two timings run the identical 120^3 odometer and differ only in the
    // OpenMP schedule.  Expected count: 26 * 21 * 56 = 30576.
    Presentation p = make_presentation(
        3, {reduce(3, {1, 1}), reduce(3, {2, 2, 2}), reduce(3, {3, 3, 3, 3})});
    Permutation c5 = Permutation::identity(5);
    c5.map = {1, 2, 3, 4, 0};
    FiniteGroup s5 = group_from_permutations(5, {Permutation::transposition(5, 1, 2), c5});

    Clock::time_point t0 = Clock::now();
    unsigned long long one = count_homs(p, s5, 120, 1).count;
    double serial_ms = ms_since(t0);

    t0 = Clock::now();
    unsigned long long four = count_homs(p, s5, 120, 4).count;
    double parallel_ms = ms_since(t0);

    report("hom_enumeration", serial_ms, parallel_ms, one == four);
    std::cout << "  homs=" << one << "/" << four << " over 120^3 assignments\n";
    return one == four;
}

bool bench_hurwitz_bfs() {
    Factorization f = cusp_fact();
    Factorization g = f;
    // Deterministic 6-move scramble.
    const long moves[6] = {0, 2, 1, 0, 2, 1};
    for (long m : moves) g = hurwitz_move(g, m, true);

    SearchOptions serial_opt;
    serial_opt.max_states = 60000;
    serial_opt.threads = 1;
    Clock::time_point t0 = Clock::now();
    SearchResult serial = hurwitz_equivalent(f, g, serial_opt);
    double serial_ms = ms_since(t0);

    SearchOptions par_opt = serial_opt;
    par_opt.threads = 4;
    t0 = Clock::now();
    SearchResult parallel = hurwitz_equivalent(f, g, par_opt);
    double parallel_ms = ms_since(t0);

    bool agree = serial.status == parallel.status;
    report("hurwitz_bfs", serial_ms, parallel_ms, agree);
    std::cout << "  status=" << (serial.status == SearchResult::Found ? "found" : "other")
              << " path=" << serial.path.size() << "/" << parallel.path.size()
              << " states=" << serial.states_explored << "/" << parallel.states_explored << "\n";
    return agree && serial.status == SearchResult::Found;
}

} // namespace

int main() {
    bool ok = true;
    ok &= bench_hom_counting();
    ok &= bench_hom_enumeration();
    ok &= bench_hurwitz_bfs();
    if (!ok) {
        std::cerr << "benchmark detected a serial/parallel disagreement\n";
        return 1;
    }
    return 0;
}
