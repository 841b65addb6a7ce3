#pragma once

#include <cstdint>
#include <random>
#include <span>

namespace regspec {

// Reproducible random stream keyed by (master_seed, stream_index).
// Only the engine and hand-written draws are used so the stream does not
// depend on the standard library's distribution implementations.
class SeededRng {
public:
    SeededRng(std::uint64_t master_seed, std::uint64_t stream_index = 0);

    std::uint64_t master_seed() const { return master_seed_; }
    std::uint64_t stream_index() const { return stream_index_; }

    std::uint64_t next_u64() { return engine_(); }

    // Uniform integer in [0, bound), bound > 0.
    std::uint64_t uniform_index(std::uint64_t bound);

    // Uniform double in [0, 1).
    double uniform01();

    template <class T>
    void shuffle(std::span<T> items) {
        for (std::size_t i = items.size(); i > 1; --i) {
            std::size_t j = static_cast<std::size_t>(uniform_index(i));
            std::swap(items[i - 1], items[j]);
        }
    }

private:
    std::uint64_t master_seed_;
    std::uint64_t stream_index_;
    std::mt19937_64 engine_;
};

// Master seed from REGSPEC_SEED when set and parseable, otherwise `fallback`.
std::uint64_t default_master_seed(std::uint64_t fallback = 0x5eed);

} // namespace regspec
