#ifndef TTTK_RNG_HPP
#define TTTK_RNG_HPP

#include <cstdint>
#include <random>

namespace tttk {

// splitmix64 finalizer; decorrelates (seed, stream) pairs so that every
// sample / purpose gets an independent generator regardless of scheduling.
inline std::uint64_t mix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

inline std::mt19937_64 make_rng(std::uint64_t seed, std::uint64_t stream = 0) {
    return std::mt19937_64(mix64(mix64(seed) ^ mix64(stream + 0x51ed270b3a4b1c2dULL)));
}

}  // namespace tttk

#endif
