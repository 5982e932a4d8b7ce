// parallel.hpp - deterministic OpenMP reductions and maps.
//
// Every reduction partitions the index range into fixed-size blocks, sums each
// block in index order, and combines block sums in block order. The result is
// therefore independent of the number of threads, and the serial reference
// kernels below produce bitwise-identical output to the OpenMP ones.

#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace semigibbs::par {

inline constexpr std::int64_t kBlock = 1024;

// Worker count used by all parallel kernels. Resolution order:
// set_thread_count() > SEMIGIBBS_THREADS > OpenMP default.
int thread_count();
void set_thread_count(int n);

namespace detail {
inline std::int64_t block_count(std::int64_t n) { return (n + kBlock - 1) / kBlock; }
}

// Serial reference. Same blocking as the parallel kernel so that the two are
// bitwise comparable.
template <class T, class F>
T reduce_blocked_serial(std::int64_t n, T zero, F&& term) {
    const std::int64_t nb = detail::block_count(n);
    T total = zero;
    for (std::int64_t b = 0; b < nb; ++b) {
        T part = zero;
        const std::int64_t hi = std::min(n, (b + 1) * kBlock);
        for (std::int64_t i = b * kBlock; i < hi; ++i) part += term(i);
        total += part;
    }
    return total;
}

// OpenMP kernel. Blocks are computed in parallel and combined in index order.
template <class T, class F>
T reduce_blocked(std::int64_t n, T zero, F&& term) {
    const std::int64_t nb = detail::block_count(n);
    if (nb <= 1) return reduce_blocked_serial(n, std::move(zero), std::forward<F>(term));
    std::vector<T> parts(static_cast<std::size_t>(nb), zero);
#pragma omp parallel for schedule(dynamic, 1)
    for (std::int64_t b = 0; b < nb; ++b) {
        T part = zero;
        const std::int64_t hi = std::min(n, (b + 1) * kBlock);
        for (std::int64_t i = b * kBlock; i < hi; ++i) part += term(i);
        parts[static_cast<std::size_t>(b)] = std::move(part);
    }
    T total = std::move(zero);
    for (auto& p : parts) total += p;
    return total;
}

// Parallel map with no reduction; body(i) writes to disjoint locations.
template <class F>
void parallel_for(std::int64_t n, F&& body) {
#pragma omp parallel for schedule(dynamic, 64)
    for (std::int64_t i = 0; i < n; ++i) body(i);
}

template <class F>
void serial_for(std::int64_t n, F&& body) {
    for (std::int64_t i = 0; i < n; ++i) body(i);
}

}  // namespace semigibbs::par
