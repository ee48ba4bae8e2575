#ifndef F2COH_PARALLEL_HPP
#define F2COH_PARALLEL_HPP

#include <cstddef>
#include <thread>
#include <vector>

namespace f2coh {

inline int default_threads() {
    unsigned n = std::thread::hardware_concurrency();
    return n == 0 ? 1 : static_cast<int>(n);
}

// Splits [0, n) into contiguous shards and runs fn(shard, begin, end) on each.
// Shard indices are assigned in order, so callers can merge per-shard results
// deterministically regardless of the thread count.
template <class Fn>
void parallel_shards(std::size_t n, int threads, Fn&& fn) {
    if (threads < 1)
        threads = 1;
    std::size_t nshards = std::min<std::size_t>(static_cast<std::size_t>(threads), n ? n : 1);
    if (nshards <= 1) {
        fn(std::size_t{0}, std::size_t{0}, n);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(nshards);
    std::size_t chunk = (n + nshards - 1) / nshards;
    for (std::size_t s = 0; s < nshards; ++s) {
        std::size_t begin = s * chunk;
        std::size_t end = std::min(n, begin + chunk);
        pool.emplace_back([&fn, s, begin, end] { fn(s, begin, end); });
    }
    for (auto& t : pool)
        t.join();
}

} // namespace f2coh

#endif
