#include "quartic/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <thread>
#include <vector>

namespace quartic {

namespace {

std::atomic<int> g_thread_override{0};

int default_threads() {
    if (const char* env = std::getenv("QUARTIC_THREADS")) {
        int n = std::atoi(env);
        if (n > 0) return n;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

}  // namespace

void set_thread_count(int n) { g_thread_override.store(n < 0 ? 0 : n); }

int thread_count() {
    int n = g_thread_override.load();
    return n > 0 ? n : default_threads();
}

int chunk_count(u64 n) {
    int workers = thread_count();
    if (n < 2048 || workers <= 1) return 1;
    return static_cast<int>(std::min<u64>(workers, n / 1024));
}

void parallel_chunks(u64 n, const std::function<void(int, u64, u64)>& fn) {
    int chunks = chunk_count(n);
    if (chunks <= 1) {
        fn(0, 0, n);
        return;
    }
    std::vector<std::thread> workers;
    workers.reserve(chunks);
    u64 step = (n + chunks - 1) / chunks;
    for (int c = 0; c < chunks; ++c) {
        u64 begin = std::min<u64>(n, static_cast<u64>(c) * step);
        u64 end = std::min<u64>(n, begin + step);
        workers.emplace_back(fn, c, begin, end);
    }
    for (auto& w : workers) w.join();
}

}  // namespace quartic
