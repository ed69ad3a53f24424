#pragma once

#include <cstdint>
#include <vector>

namespace dillema::util {

// splitmix64 counter generator. std::mt19937 + std::uniform_int_distribution
// is implementation-defined, so seeded sampling goes through this to keep
// plans and edit selections identical across platforms.
class StableRng {
public:
    explicit StableRng(uint64_t seed) : state_(seed) {}

    uint64_t next_u64();

    /// Unbiased integer in [0, n). n must be > 0.
    uint64_t bounded(uint64_t n);

    /// m distinct indices drawn uniformly from [0, n), returned in ascending
    /// order. Partial Fisher-Yates over an index table.
    std::vector<size_t> sample_indices(size_t n, size_t m);

private:
    uint64_t state_;
};

} // namespace dillema::util
