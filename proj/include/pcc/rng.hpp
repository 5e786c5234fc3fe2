#pragma once

#include <cstdint>

namespace pcc {

// splitmix64; stable across platforms so seeded runs reproduce byte-identically.
inline std::uint64_t splitmix64(std::uint64_t& state) {
    state += 0x9E3779B97F4A7C15ull;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() { return splitmix64(state_); }

    // Uniform in [0, bound); bound >= 1.
    std::uint64_t below(std::uint64_t bound) {
        return static_cast<std::uint64_t>(
            (static_cast<unsigned __int128>(next()) * bound) >> 64);
    }

    int range(int lo, int hi) {  // inclusive ends
        return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    // Independent stream for a subtask; stable derivation from the master seed.
    Rng fork(std::uint64_t stream) const {
        std::uint64_t s = state_ ^ (0x9E3779B97F4A7C15ull * (stream + 1));
        splitmix64(s);
        return Rng(s);
    }

private:
    std::uint64_t state_;
};

}  // namespace pcc
