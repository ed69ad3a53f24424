#include "dillema/util/rng.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace dillema::util {

uint64_t StableRng::next_u64() {
    state_ += 0x9e3779b97f4a7c15ull;
    uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

uint64_t StableRng::bounded(uint64_t n) {
    if (n == 0) throw std::invalid_argument("StableRng::bounded: n must be > 0");
    // rejection sampling: discard the partial bucket at the top of the range
    uint64_t threshold = (~n + 1) % n; // 2^64 mod n
    for (;;) {
        uint64_t r = next_u64();
        if (r >= threshold) return r % n;
    }
}

std::vector<size_t> StableRng::sample_indices(size_t n, size_t m) {
    if (m > n) throw std::invalid_argument("StableRng::sample_indices: m > n");
    std::vector<size_t> pool(n);
    std::iota(pool.begin(), pool.end(), size_t{0});
    for (size_t i = 0; i < m; ++i) {
        size_t j = i + static_cast<size_t>(bounded(n - i));
        std::swap(pool[i], pool[j]);
    }
    pool.resize(m);
    std::sort(pool.begin(), pool.end());
    return pool;
}

} // namespace dillema::util
