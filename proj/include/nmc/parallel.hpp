#pragma once

#include <cstdint>
#include <cstdlib>
#include <thread>
#include <vector>

namespace nmc {

// Worker count for enumeration/sampling loops: NMC_THREADS if set
// (clamped to [1,64]), otherwise 1. Thread count only affects wall time;
// results are merged in chunk order and must be identical to a
// sequential run.
inline unsigned worker_count() {
    if (const char* env = std::getenv("NMC_THREADS")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end != env && v >= 1) return static_cast<unsigned>(v > 64 ? 64 : v);
    }
    return 1;
}

// Runs chunk_fn(begin, end) over a partition of [0, total) into contiguous
// chunks, one per worker, and folds the per-chunk results in chunk order:
// merge_fn(acc, chunk_result). Chunk results must combine associatively
// for the output to match a single-chunk run.
template <typename R, typename ChunkFn, typename MergeFn>
R run_chunked(uint64_t total, ChunkFn chunk_fn, MergeFn merge_fn) {
    const unsigned workers = worker_count();
    if (workers <= 1 || total < 2 * workers) return chunk_fn(uint64_t{0}, total);

    const uint64_t per = total / workers;
    const uint64_t extra = total % workers;
    std::vector<R> results(workers);
    std::vector<std::thread> threads;
    threads.reserve(workers);
    uint64_t begin = 0;
    for (unsigned w = 0; w < workers; ++w) {
        const uint64_t len = per + (w < extra ? 1 : 0);
        const uint64_t end = begin + len;
        threads.emplace_back([&results, w, begin, end, &chunk_fn] {
            results[w] = chunk_fn(begin, end);
        });
        begin = end;
    }
    for (auto& t : threads) t.join();

    R acc = std::move(results[0]);
    for (unsigned w = 1; w < workers; ++w) merge_fn(acc, results[w]);
    return acc;
}

}  // namespace nmc
