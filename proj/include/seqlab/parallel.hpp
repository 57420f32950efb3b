#pragma once

// Deterministic parallel evaluation: work is split into fixed-size chunks,
// workers pick chunks dynamically, and per-chunk results are reduced in chunk
// order. Output is therefore identical for every worker count.

#include <atomic>
#include <thread>
#include <vector>

#include "seqlab/base.hpp"

namespace seqlab {

inline constexpr u64 kChunkSize = u64(1) << 16;

int worker_count();
void set_worker_count(int n);

namespace detail {
inline std::atomic<int>& worker_count_storage() {
    static std::atomic<int> count{1};
    return count;
}
}  // namespace detail

inline int worker_count() { return detail::worker_count_storage().load(); }
inline void set_worker_count(int n) { detail::worker_count_storage().store(n < 1 ? 1 : n); }

// Applies fn(chunk_begin, chunk_end, chunk_index) over [begin, end) split into
// kChunkSize chunks. fn must write only to its own chunk's outputs.
template <class Fn>
void for_chunks(u64 begin, u64 end, Fn fn) {
    if (end <= begin) return;
    u64 total = end - begin;
    u64 nchunks = (total + kChunkSize - 1) / kChunkSize;
    int workers = worker_count();
    if (workers <= 1 || nchunks == 1) {
        for (u64 c = 0; c < nchunks; ++c) {
            u64 lo = begin + c * kChunkSize;
            u64 hi = lo + kChunkSize < end ? lo + kChunkSize : end;
            fn(lo, hi, c);
        }
        return;
    }
    std::atomic<u64> next{0};
    auto run = [&] {
        for (;;) {
            u64 c = next.fetch_add(1);
            if (c >= nchunks) return;
            u64 lo = begin + c * kChunkSize;
            u64 hi = lo + kChunkSize < end ? lo + kChunkSize : end;
            fn(lo, hi, c);
        }
    };
    std::vector<std::thread> pool;
    for (int w = 1; w < workers; ++w) pool.emplace_back(run);
    run();
    for (auto& t : pool) t.join();
}

// Chunked map-reduce; per-chunk values are combined in chunk order.
template <class T, class ChunkFn>
T reduce_chunks(u64 begin, u64 end, T init, ChunkFn fn) {
    if (end <= begin) return init;
    u64 total = end - begin;
    u64 nchunks = (total + kChunkSize - 1) / kChunkSize;
    std::vector<T> parts(nchunks, init);
    for_chunks(begin, end, [&](u64 lo, u64 hi, u64 c) { parts[c] = fn(lo, hi); });
    T acc = init;
    for (u64 c = 0; c < nchunks; ++c) acc += parts[c];
    return acc;
}

}  // namespace seqlab
