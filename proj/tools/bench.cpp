// Benchmark the OpenMP kernels against their serial reference paths:
// isotropic-subspace enumeration over F_p and compound-matrix assembly.
// The outputs are compared entry for entry, so this doubles as a stress
// check that the parallel paths reproduce the serial results exactly.

#include <cstdio>

#include <omp.h>

#include "midext/forms.hpp"
#include "midext/isotropic.hpp"
#include "midext/random.hpp"

using namespace midext;

namespace {

template <class Fn>
double time_once(Fn&& fn) {
    double t0 = omp_get_wtime();
    fn();
    return omp_get_wtime() - t0;
}

void bench_enumeration(long long p, long long budget) {
    FpField f(p);
    TwistedForm<FpField> form = middle_exterior_form(f, 4);
    std::printf("enumeration: lagrangians of the rank-4 wedge form over F_%lld (space %s)\n", p,
                gaussian_binomial(6, 3, p).get_str().c_str());
    std::vector<Mat<FpField>> serial, parallel;
    double ts = time_once([&] { serial = brute_force_lagrangians(form, budget, Parallel::Serial); });
    double tp = time_once([&] { parallel = brute_force_lagrangians(form, budget, Parallel::ForceParallel); });
    bool same = serial.size() == parallel.size();
    for (size_t i = 0; same && i < serial.size(); ++i) same = serial[i] == parallel[i];
    std::printf("  found %zu, serial %.3fs, parallel %.3fs (%d threads), speedup %.2fx, outputs %s\n",
                serial.size(), ts, tp, omp_get_max_threads(), ts / tp, same ? "identical" : "DIFFER");
}

void bench_compound(int n, int s) {
    QField q;
    Rng rng(7);
    Mat<QField> a = rng.matrix(q, n, n);
    std::printf("compound: degree-%d compound of a random %dx%d rational matrix (%lldx%lld minors)\n",
                s, n, n, binomial(n, s), binomial(n, s));
    Mat<QField> serial(q, 0, 0), parallel(q, 0, 0);
    double ts = time_once([&] { serial = compound_matrix(a, s, Parallel::Serial); });
    double tp = time_once([&] { parallel = compound_matrix(a, s, Parallel::ForceParallel); });
    std::printf("  serial %.3fs, parallel %.3fs, speedup %.2fx, outputs %s\n", ts, tp, ts / tp,
                serial == parallel ? "identical" : "DIFFER");
}

} // namespace

int main(int argc, char** argv) {
    long long p = argc > 1 ? std::atoll(argv[1]) : 5;
    bench_enumeration(p, 100000000LL);
    bench_compound(10, 5);
    bench_compound(12, 6);
    return 0;
}
