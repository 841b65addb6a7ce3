#include "regspec/rng.hpp"

#include <cstdlib>
#include <string>

namespace regspec {

namespace {

std::mt19937_64 make_engine(std::uint64_t master, std::uint64_t stream) {
    std::seed_seq seq{
        static_cast<std::uint32_t>(master), static_cast<std::uint32_t>(master >> 32),
        static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
    return std::mt19937_64(seq);
}

} // namespace

SeededRng::SeededRng(std::uint64_t master_seed, std::uint64_t stream_index)
    : master_seed_(master_seed), stream_index_(stream_index),
      engine_(make_engine(master_seed, stream_index)) {}

std::uint64_t SeededRng::uniform_index(std::uint64_t bound) {
    // Rejection sampling on the top of the range to avoid modulo bias.
    const std::uint64_t limit = UINT64_MAX - (UINT64_MAX % bound);
    std::uint64_t x;
    do {
        x = engine_();
    } while (x >= limit);
    return x % bound;
}

double SeededRng::uniform01() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

std::uint64_t default_master_seed(std::uint64_t fallback) {
    const char* env = std::getenv("REGSPEC_SEED");
    if (env == nullptr || *env == '\0') {
        return fallback;
    }
    try {
        std::size_t pos = 0;
        std::uint64_t value = std::stoull(env, &pos, 0);
        if (pos == std::string(env).size()) {
            return value;
        }
    } catch (const std::exception&) {
    }
    return fallback;
}

} // namespace regspec
