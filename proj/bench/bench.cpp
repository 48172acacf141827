// Serial reference vs OpenMP kernels on the independent work units.
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include <omp.h>

#include "psym/equivalence/pra_equivalence.hpp"
#include "psym/fixtures/fixtures.hpp"
#include "psym/symmetry/checks.hpp"
#include "psym/symmetry/falsify.hpp"

using namespace psym;

namespace {

double time_ms(const std::function<void()>& f, int reps = 3) {
    double best = 1e300;
    for (int r = 0; r < reps; ++r) {
        auto t0 = std::chrono::steady_clock::now();
        f();
        best = std::min(best, std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count());
    }
    return best;
}

void row(const std::string& name, const std::function<void(Execution)>& f) {
    double s = time_ms([&] { f(Execution::Serial); });
    double p = time_ms([&] { f(Execution::Parallel); });
    std::printf("%-40s %10.2f %10.2f %7.2fx\n", name.c_str(), s, p, p > 0 ? s / p : 0.0);
}

}  // namespace

int main() {
    std::printf("threads: %d\n", omp_get_max_threads());
    std::printf("%-40s %10s %10s %8s\n", "kernel", "serial ms", "omp ms", "speedup");

    Transducer rr5 = gen_round_robin(5, RoundRobinInit::make_uniform());
    row("group check exact, rr k=5, 3 gens", [&](Execution e) {
        CheckOptions o;
        o.execution = e;
        std::vector<Permutation> gens{Permutation::parse("(1 2 3 4 5)", 5), Permutation::parse("(1 3 5 2 4)", 5),
                                      Permutation::parse("(1 4 2 5 3)", 5)};
        check_group(rr5, GeneratorSet(gens), SymmetryKind::Exact, o);
    });

    Transducer rnd = gen_random_transducer(7, 4, 3, 5);
    Permutation swap3 = Permutation::parse("(1 2)", 3);
    row("parikh-exp, random n=4 k=3", [&](Execution e) {
        CheckOptions o;
        o.execution = e;
        check_parikh_expected(rnd, swap3, o);
    });
    row("parikh-dist randomized 8 trials, rr k=4", [&](Execution e) {
        CheckOptions o;
        o.execution = e;
        o.mode = ParikhMode::Randomized;
        o.trials = 8;
        check_parikh_distribution(gen_round_robin(4, RoundRobinInit::make_uniform()),
                                  Permutation::parse("(1 2 3 4)", 4), o);
    });

    Transducer sym = symmetrize(gen_random_transducer(3, 3, 2, 4), group_elements(GeneratorSet({Permutation::parse("(1 2)", 2)})));
    row("linf falsify len 6, symmetric n=6 k=2", [&](Execution e) {
        FalsifyOptions o;
        o.execution = e;
        falsify_linf(sym, Permutation::parse("(1 2)", 2), Rational(1, 100), 6, o);
    });
    return 0;
}
