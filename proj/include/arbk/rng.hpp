#pragma once
#include <cstdint>
#include <random>

namespace arbk {

/**
 * Seeded pseudorandom source with a fully specified output stream.
 *
 * Engine: std::mt19937_64 (its output sequence is fixed by the C++ standard).
 * Uniforms: the top 53 bits of one engine word scaled by 2^-53, in [0, 1).
 * Normals: basic Box-Muller on two uniforms (u1 mapped to (0, 1] via 1 - u),
 * emitting r*cos(2 pi u2) first and caching r*sin(2 pi u2) for the next call.
 *
 * The standard library distributions are deliberately avoided because their
 * algorithms are implementation defined.
 */
class Rng
{
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    double normal();

private:
    std::mt19937_64 engine_;
    double cached_ = 0.0;
    bool has_cached_ = false;
};

} // namespace arbk
