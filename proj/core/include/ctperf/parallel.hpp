// Deterministic chunked parallel_for. Work items write to disjoint
// output slots, so results are bit-identical for any thread count.
#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <thread>
#include <vector>

namespace ctp {

/// Process set by the CLI `--threads` flag; 0 means hardware concurrency.
void set_default_thread_count(int n);
int default_thread_count();

/// Calls fn(i) for i in [begin, end). Each index is handled by exactly one
/// worker; fn must not share mutable state across indices.
template <typename Fn>
void parallel_for(std::size_t begin, std::size_t end, Fn&& fn, int threads = 0) {
    if (threads <= 0) threads = default_thread_count();
    const std::size_t n = end > begin ? end - begin : 0;
    if (n == 0) return;
    const std::size_t workers = std::min<std::size_t>(static_cast<std::size_t>(threads), n);
    if (workers <= 1) {
        for (std::size_t i = begin; i < end; ++i) fn(i);
        return;
    }
    const std::size_t chunk = (n + workers - 1) / workers;
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
        const std::size_t lo = begin + w * chunk;
        const std::size_t hi = std::min(end, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back([lo, hi, &fn] {
            for (std::size_t i = lo; i < hi; ++i) fn(i);
        });
    }
    for (auto& t : pool) t.join();
}

}  // namespace ctp
