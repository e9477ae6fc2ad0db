#pragma once

#include <cstdlib>
#include <thread>
#include <vector>

namespace cikit {

// Worker cap: CIKIT_THREADS when set, hardware concurrency otherwise.
inline unsigned worker_count() {
    if (const char* env = std::getenv("CIKIT_THREADS")) {
        long n = std::strtol(env, nullptr, 10);
        if (n >= 1) return static_cast<unsigned>(n);
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

// Splits [0, n) into per-worker shards and runs `f(shard_begin, shard_end,
// shard_result&)` concurrently. Results come back indexed by shard so merges
// are deterministic regardless of scheduling. Work for a given index must
// depend only on the index (callers derive per-index seeds).
template <typename Result, typename F>
std::vector<Result> sharded_run(std::uint64_t n, F&& f) {
    unsigned workers = worker_count();
    if (n < workers) workers = n == 0 ? 1 : static_cast<unsigned>(n);
    std::vector<Result> results(workers);
    if (workers <= 1) {
        f(std::uint64_t{0}, n, results[0]);
        return results;
    }
    std::vector<std::thread> threads;
    threads.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        std::uint64_t begin = n * w / workers;
        std::uint64_t end = n * (w + 1) / workers;
        threads.emplace_back([&, begin, end, w] { f(begin, end, results[w]); });
    }
    for (auto& t : threads) t.join();
    return results;
}

}  // namespace cikit
