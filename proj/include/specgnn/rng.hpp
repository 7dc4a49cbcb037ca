#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace specgnn {

// Deterministic xoshiro256++ generator. Implemented in-repo instead of
// <random> so that streams are bit-identical across standard libraries.
//
// Stream splitting: every consumer derives its own child stream via
// Rng::split(label). Labels in use, in draw order:
//   "init"     parameter initialization (registration order, row-major)
//   "data"     synthetic signal generation
//   "split"    train/val/test shuffles
//   "dropout"  dropout masks (draw order: tape recording order)
//   "run<k>"   per-run reseeding in multi-run CLI commands
class Rng {
public:
    explicit Rng(std::uint64_t seed);

    std::uint64_t next_u64();

    // Uniform double in [0, 1) with 53 random bits.
    double uniform();

    // Uniform double in [lo, hi).
    double uniform(double lo, double hi);

    // Uniform integer in [0, n).
    std::uint64_t uniform_index(std::uint64_t n);

    // Child generator seeded from this stream's seed and the label; does not
    // consume state from the parent.
    Rng split(std::string_view label) const;

private:
    std::uint64_t state_[4];
    std::uint64_t seed_;
};

}  // namespace specgnn
