#pragma once

#include <vector>

namespace whd {

/// Kernel execution policy. Parallel kernels use OpenMP over fixed-size
/// blocks and merge partials in block order, so results are identical to the
/// serial path bit for bit, regardless of worker count.
enum class Exec { Serial, Parallel };

/// Worker count used by parallel kernels; 0 keeps the OpenMP default.
void set_workers(int n);
int worker_count();

inline constexpr long kBlock = 4096;

/// Sum of fn(begin, end) over [0, n) split into fixed blocks, merged in
/// block order.
template <class Fn>
double blocked_sum(long n, Exec exec, Fn&& fn) {
    if (n <= 0) return 0.0;
    const long nblocks = (n + kBlock - 1) / kBlock;
    std::vector<double> partial(nblocks, 0.0);
#pragma omp parallel for schedule(dynamic) if (exec == Exec::Parallel)
    for (long b = 0; b < nblocks; ++b) {
        const long lo = b * kBlock;
        const long hi = lo + kBlock < n ? lo + kBlock : n;
        partial[b] = fn(lo, hi);
    }
    double total = 0.0;
    for (double v : partial) total += v;
    return total;
}

/// Max of fn(begin, end) over [0, n), same blocking scheme.
template <class Fn>
double blocked_max(long n, Exec exec, Fn&& fn) {
    if (n <= 0) return 0.0;
    const long nblocks = (n + kBlock - 1) / kBlock;
    std::vector<double> partial(nblocks, 0.0);
#pragma omp parallel for schedule(dynamic) if (exec == Exec::Parallel)
    for (long b = 0; b < nblocks; ++b) {
        const long lo = b * kBlock;
        const long hi = lo + kBlock < n ? lo + kBlock : n;
        partial[b] = fn(lo, hi);
    }
    double best = partial[0];
    for (double v : partial)
        if (v > best) best = v;
    return best;
}

} // namespace whd
