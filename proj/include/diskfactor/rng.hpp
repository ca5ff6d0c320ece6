#ifndef DISKFACTOR_RNG_HPP
#define DISKFACTOR_RNG_HPP

#include <complex>
#include <cstdint>
#include <random>

namespace diskfactor {

// Seeded generator with explicit value mappings. The raw mt19937_64 stream is
// fully specified by the standard, and we avoid std:: distributions so the
// same seed yields the same values on every platform.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    double uniform01() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

    double uniform(double a, double b) { return a + (b - a) * uniform01(); }

    // inclusive range, rejection sampled
    std::uint64_t uniform_index(std::uint64_t bound) {
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
        std::uint64_t x;
        do {
            x = eng_();
        } while (x >= limit);
        return x % bound;
    }

    int uniform_int(int lo, int hi) {
        return lo + static_cast<int>(uniform_index(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    double angle() { return uniform(0.0, 6.283185307179586); }

    // uniform w.r.t. area on |z| <= radius
    std::complex<double> disk_point(double radius = 1.0) {
        const double r = radius * std::sqrt(uniform01());
        const double t = angle();
        return {r * std::cos(t), r * std::sin(t)};
    }

    std::uint64_t next() { return eng_(); }

  private:
    std::mt19937_64 eng_;
};

}  // namespace diskfactor

#endif
