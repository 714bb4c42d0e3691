#pragma once

#include <atomic>
#include <cstdint>
#include <thread>
#include <vector>

namespace qift::detail {

inline int resolve_threads(int requested) {
    if (requested > 0) return requested;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

/// Run body(chunk_index) for every chunk in [0, chunk_count) across a worker
/// pool. Chunk-to-worker assignment is dynamic, so the body must write only
/// to per-chunk slots; callers merge slots in chunk order afterwards, which
/// keeps results independent of the thread count.
template <typename Body>
void for_each_chunk(std::uint64_t chunk_count, int threads, Body&& body) {
    threads = resolve_threads(threads);
    if (threads <= 1 || chunk_count <= 1) {
        for (std::uint64_t c = 0; c < chunk_count; ++c) body(c);
        return;
    }
    std::atomic<std::uint64_t> next{0};
    auto worker = [&] {
        for (;;) {
            const std::uint64_t c = next.fetch_add(1, std::memory_order_relaxed);
            if (c >= chunk_count) return;
            body(c);
        }
    };
    const int spawn = static_cast<int>(
        std::min<std::uint64_t>(chunk_count, static_cast<std::uint64_t>(threads)));
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(spawn));
    for (int i = 0; i < spawn; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
}

}  // namespace qift::detail
