#pragma once

#include <cmath>
#include <cstdint>

namespace jumphedge {

// splitmix64 finalizer (Vigna). Full-avalanche 64-bit mixer.
inline std::uint64_t mix_bits(std::uint64_t z) noexcept {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Deterministic per-path random stream. The state is a strong hash of
// (seed, path_index), so draws depend only on that pair — never on
// execution order or thread count. The generator itself is the
// splitmix64 sequence; run metadata records it as "splitmix64".
class PathRng {
public:
    PathRng(std::uint64_t seed, std::uint64_t path_index) noexcept
        : state_(mix_bits(mix_bits(seed + 0x9e3779b97f4a7c15ULL) ^
                          (path_index + 0x517cc1b727220a95ULL))) {}

    std::uint64_t next_u64() noexcept {
        state_ += 0x9e3779b97f4a7c15ULL;
        return mix_bits(state_);
    }

    // Uniform on the open interval (0, 1); never returns 0 or 1, so logs
    // below are always finite and exponential draws strictly positive.
    double next_unit() noexcept {
        return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
    }

    // Exponential interarrival with the given rate, strictly positive.
    double next_exponential(double rate) noexcept {
        return -std::log(next_unit()) / rate;
    }

    // Standard normal via Box-Muller (no caching: one draw consumes two
    // uniforms, keeping the stream layout independent of call patterns).
    double next_normal() noexcept {
        const double u1 = next_unit();
        const double u2 = next_unit();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925286766559 * u2);
    }

private:
    std::uint64_t state_;
};

inline constexpr const char* kRngName = "splitmix64";

} // namespace jumphedge
