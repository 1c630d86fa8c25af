#ifndef BERGKERN_COUNTER_RNG_HPP
#define BERGKERN_COUNTER_RNG_HPP

#include <cstdint>

namespace bergkern {

// Counter-based uniform stream: every draw is a pure function of
// (seed, counter, slot), so parallel evaluation cannot reorder it.
class CounterRng {
public:
    explicit CounterRng(std::uint64_t seed) : seed_(seed) {}

    // Uniform in [0, 1).
    double uniform(std::uint64_t counter, std::uint32_t slot) const {
        std::uint64_t x = mix(seed_ ^ (counter * 0x9e3779b97f4a7c15ULL) ^
                              (static_cast<std::uint64_t>(slot) * 0xbf58476d1ce4e5b9ULL));
        return static_cast<double>(x >> 11) * 0x1.0p-53;
    }

private:
    static std::uint64_t mix(std::uint64_t z) {
        z += 0x9e3779b97f4a7c15ULL;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    std::uint64_t seed_;
};

} // namespace bergkern

#endif
