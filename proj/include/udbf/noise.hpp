#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>

// Deterministic noise source for the comparison workflows. The generator is
// pinned so a given seed produces the same stream on every platform:
// xorshift64* (shifts 12/25/27, multiplier 2685821657736338717) mapped to
// [0, 1) with 53 bits, then Box-Muller.

namespace udbf {

class Xorshift64Star {
public:
    explicit Xorshift64Star(std::uint64_t seed) : state_(seed ? seed : 0x9e3779b97f4a7c15ull) {}

    std::uint64_t next_u64() {
        state_ ^= state_ >> 12;
        state_ ^= state_ << 25;
        state_ ^= state_ >> 27;
        return state_ * 2685821657736338717ull;
    }

    double next_uniform() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

private:
    std::uint64_t state_;
};

class GaussianNoise {
public:
    explicit GaussianNoise(std::uint64_t seed, double sigma = 1.0)
        : rng_(seed), sigma_(sigma) {}

    double next() {
        if (have_spare_) {
            have_spare_ = false;
            return sigma_ * spare_;
        }
        double u1 = rng_.next_uniform();
        double u2 = rng_.next_uniform();
        while (u1 <= 0.0) u1 = rng_.next_uniform();
        double radius = std::sqrt(-2.0 * std::log(u1));
        double angle = 2.0 * std::numbers::pi * u2;
        spare_ = radius * std::sin(angle);
        have_spare_ = true;
        return sigma_ * radius * std::cos(angle);
    }

private:
    Xorshift64Star rng_;
    double sigma_;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

}  // namespace udbf
