#pragma once

#include <cstdint>

namespace circline {

// splitmix64; tiny and identical on every platform, unlike the standard
// library distributions.
struct SplitMix64 {
    std::uint64_t state;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // uniform in [0, 1)
    double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }
};

// Independent substream for sample `index`. Streams depend only on
// (seed, index, tag), never on evaluation order, so sampling stays
// deterministic under any parallel partitioning.
inline SplitMix64 substream(std::uint64_t seed, std::uint64_t index, std::uint64_t tag = 0) {
    SplitMix64 mixer(seed ^ (tag * 0xaf251af3b0f025b5ull));
    const std::uint64_t base = mixer.next();
    SplitMix64 out(base ^ ((index + 1) * 0xd1342543de82ef95ull));
    out.next();
    return out;
}

} // namespace circline
