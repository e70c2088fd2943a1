#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>

namespace hardy {

/// Deterministic N(0,1) stream: mt19937_64 bits mapped to uniforms by hand and
/// fed through Box-Muller, so the sequence is identical across standard
/// libraries (std::normal_distribution is not).
class GaussianSource {
public:
    explicit GaussianSource(std::uint64_t seed) : engine_(seed) {}

    double uniform() {  // in (0, 1]
        return (static_cast<double>(engine_() >> 11) + 1.0) * 0x1.0p-53;
    }

    double normal() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        const double u1 = uniform();
        const double u2 = uniform();
        const double radius = std::sqrt(-2.0 * std::log(u1));
        const double angle = 2.0 * std::numbers::pi * u2;
        spare_ = radius * std::sin(angle);
        have_spare_ = true;
        return radius * std::cos(angle);
    }

    /// Uniform index in [0, bound). Modulo bias is irrelevant at these sizes.
    std::size_t index(std::size_t bound) { return static_cast<std::size_t>(engine_() % bound); }

private:
    std::mt19937_64 engine_;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

}  // namespace hardy
