#ifndef LOCALH_UTIL_HPP
#define LOCALH_UTIL_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace localh {

// Error raised for malformed user input (CLI exit code 1).
struct input_error : std::runtime_error {
    explicit input_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Error raised when an internal consistency check fails, e.g. the degree
// functional disagrees across facets (CLI exit code 2).
struct internal_error : std::runtime_error {
    explicit internal_error(const std::string& msg) : std::runtime_error(msg) {}
};

// splitmix64: used to derive independent substreams from one master seed so
// that (seed, attempt) pairs give reproducible, decorrelated streams.
inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
    std::uint64_t s = seed ^ (0x9e3779b97f4a7c15ULL * (stream + 1));
    splitmix64(s);
    return splitmix64(s);
}

// FNV-1a 64-bit hash; used only as a deterministic input-echo fingerprint in
// reports, never for security.
inline std::uint64_t fnv1a64(const std::string& data) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : data) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

// Number of set bits of a 64-bit mask.
inline int popcount64(std::uint64_t x) { return __builtin_popcountll(x); }

}  // namespace localh

#endif
