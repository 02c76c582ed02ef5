#ifndef BERGMAN_RNG_HPP
#define BERGMAN_RNG_HPP

#include <cstdint>

namespace bergman {

// splitmix64: the usual seeding/stream-splitting generator. We avoid
// std::uniform_real_distribution because its output is implementation
// defined; sample clouds must be reproducible byte-for-byte.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // uniform in [0,1)
    double next_double() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

private:
    std::uint64_t state_;
};

// Stream for block b of a seeded computation; blocks can be processed in any
// order (or on any thread) without changing the sequence within a block.
inline SplitMix64 block_stream(std::uint64_t seed, std::uint64_t block) {
    SplitMix64 mix(seed ^ (0xd1342543de82ef95ULL * (block + 1)));
    return SplitMix64(mix.next_u64());
}

} // namespace bergman

#endif
