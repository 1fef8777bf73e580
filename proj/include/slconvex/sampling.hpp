#pragma once

// Seeded, stream-splittable random sampling. Every draw is reproducible from
// (seed, stream index) alone, so a sampling loop can be partitioned across
// threads without changing the sequence any single sample sees.

#include <cmath>
#include <cstdint>
#include <utility>

#include "slconvex/tensor2.hpp"

namespace slconvex {

inline constexpr double kDefaultLogLambdaRange = 1.3862943611198906; // ln 4

inline std::uint64_t mix64(std::uint64_t z)
{
    z ^= z >> 30;
    z *= 0xbf58476d1ce4e5b9ull;
    z ^= z >> 27;
    z *= 0x94d049bb133111ebull;
    z ^= z >> 31;
    return z;
}

class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    // Independent generator for sample `stream` of a run seeded with `seed`.
    static Rng stream(std::uint64_t seed, std::uint64_t stream_index)
    {
        return Rng(mix64(seed + 0x9e3779b97f4a7c15ull * (stream_index + 1)));
    }

    std::uint64_t next_u64()
    {
        state_ += 0x9e3779b97f4a7c15ull;
        return mix64(state_);
    }

    // Uniform in [0, 1) with 53 random bits.
    double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * next_double(); }

    bool coin() { return (next_u64() & 1ull) != 0ull; }

    Vec2 unit_vector()
    {
        const double angle = uniform(0.0, 2.0 * M_PI);
        return {std::cos(angle), std::sin(angle)};
    }

    Mat2 rotation() { return Mat2::rotation(uniform(0.0, 2.0 * M_PI)); }

    // Rotation or rotation-times-reflection, each with probability 1/2.
    Mat2 orthogonal()
    {
        Mat2 q = rotation();
        if (coin()) {
            // right-multiply by diag(1, -1)
            q.a12 = -q.a12;
            q.a22 = -q.a22;
        }
        return q;
    }

    // Orthogonal pair with det(Q1) det(Q2) = +1, so Q1 F Q2 keeps the sign
    // of det F (both rotations, or both carrying a reflection).
    std::pair<Mat2, Mat2> orthogonal_pair()
    {
        Mat2 q1 = rotation();
        Mat2 q2 = rotation();
        if (coin()) {
            q1.a12 = -q1.a12;
            q1.a22 = -q1.a22;
            q2.a21 = -q2.a21;
            q2.a22 = -q2.a22;
        }
        return {q1, q2};
    }

    // Exact SL(2) sample: Q1 * diag(lambda, 1/lambda) * Q2 with rotations Q1,
    // Q2 and log(lambda) uniform in [-log_range, log_range].
    Mat2 sl2(double log_range = kDefaultLogLambdaRange)
    {
        const double lambda = std::exp(uniform(-log_range, log_range));
        return rotation() * Mat2::diagonal(lambda, 1.0 / lambda) * rotation();
    }

    // GL+(2) sample with independently drawn singular values.
    Mat2 glp2(double log_range = kDefaultLogLambdaRange)
    {
        const double l1 = std::exp(uniform(-log_range, log_range));
        const double l2 = std::exp(uniform(-log_range, log_range));
        return rotation() * Mat2::diagonal(l1, l2) * rotation();
    }

    Mat2 matrix(double lo, double hi)
    {
        return {uniform(lo, hi), uniform(lo, hi), uniform(lo, hi), uniform(lo, hi)};
    }

private:
    std::uint64_t state_;
};

} // namespace slconvex
