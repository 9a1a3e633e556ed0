// Timing harness for the two parallel kernels: the symbolic Cauchy product
// (mul vs mul_omp) and the certificate pipeline (serial vs parallel rows).
// Results are checked for exact equality while timing, so this doubles as a
// smoke test of the OpenMP paths.

#include <chrono>
#include <cstdio>
#include <cstdlib>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "gammaq/gamma_symbolic.hpp"
#include "gammaq/series.hpp"
#include "gammaq/verifier.hpp"

using namespace gammaq;
using Clock = std::chrono::steady_clock;

namespace {

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

void bench_cauchy(std::size_t order) {
    const GammaTaylor t = taylor(HalfInteger::from_twice(Integer(5)), order); // q = 5/2
    const Series<ConstExpr> mirrored = compose_scale(t.series, ConstExpr(-1));

    auto t0 = Clock::now();
    const Series<ConstExpr> serial = mul(t.series, mirrored);
    const double t_serial = ms_since(t0);

    t0 = Clock::now();
    const Series<ConstExpr> parallel = mul_omp(t.series, mirrored);
    const double t_parallel = ms_since(t0);

    if (!(serial == parallel)) {
        std::fprintf(stderr, "FATAL: mul and mul_omp disagree at order %zu\n", order);
        std::exit(1);
    }
    std::printf("cauchy product  order %3zu   serial %8.2f ms   omp %8.2f ms   speedup %.2fx\n",
                order, t_serial, t_parallel, t_serial / t_parallel);
}

void bench_certificate(const HalfInteger& q, std::size_t jmax) {
    auto t0 = Clock::now();
    const CertificateReport serial = verify_theorem1(q, jmax, ExecMode::serial);
    const double t_serial = ms_since(t0);

    t0 = Clock::now();
    const CertificateReport parallel = verify_theorem1(q, jmax, ExecMode::parallel);
    const double t_parallel = ms_since(t0);

    if (serial.pass != parallel.pass || !(serial.rows == parallel.rows)) {
        std::fprintf(stderr, "FATAL: serial and parallel certificates disagree at q=%s\n",
                     q.to_string().c_str());
        std::exit(1);
    }
    std::printf("certificate     q=%-4s J=%2zu  serial %8.2f ms   omp %8.2f ms   speedup %.2fx  [%s]\n",
                q.to_string().c_str(), jmax, t_serial, t_parallel, t_serial / t_parallel,
                serial.pass ? "pass" : "FAIL");
}

} // namespace

int main() {
#ifdef _OPENMP
    std::printf("OpenMP enabled, max threads = %d\n", omp_get_max_threads());
#else
    std::printf("built without OpenMP; both columns run serially\n");
#endif
    for (std::size_t order : {16, 24, 32, 40}) bench_cauchy(order);
    bench_certificate(HalfInteger::from_twice(Integer(5)), 10);  // q = 5/2
    bench_certificate(HalfInteger::from_twice(Integer(-3)), 12); // q = -3/2
    bench_certificate(HalfInteger(3), 14);
    return 0;
}
