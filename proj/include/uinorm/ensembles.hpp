#pragma once
//
// Seeded random generators for the operator classes the verification
// campaign quantifies over: general (Ginibre), unitary (Haar), projection,
// positive, normal.
//
// Reproducibility contract: every trial gets its own substream, derived
// from (campaign seed, trial path string). The engine is mt19937_64 seeded
// with splitmix64(seed ^ fnv1a64(path)); gaussians come from a hand-rolled
// Box-Muller so draws are bit-identical across platforms.
//

#include <cstdint>
#include <random>
#include <string>
#include <string_view>

#include "uinorm/matrix.hpp"

namespace uinorm::ensembles {

inline constexpr const char* kGeneratorName =
    "mt19937_64[splitmix64(seed^fnv1a64(path))] + Box-Muller";

std::uint64_t fnv1a64(std::string_view s);
std::uint64_t splitmix64(std::uint64_t x);

// Seed text as decimal or 0x-hex.
std::uint64_t parse_seed(const std::string& text);

class RngStream {
public:
    explicit RngStream(std::uint64_t stream_seed) : engine_(stream_seed) {}

    double uniform01();            // [0, 1), 53-bit
    double gaussian();             // real N(0, 1)
    cplx complex_gaussian();       // CN(0, 1): E|z|^2 = 1
    std::uint64_t uniform_below(std::uint64_t n);  // {0, .., n-1}, unbiased

private:
    std::mt19937_64 engine_;
};

RngStream substream(std::uint64_t seed, std::string_view path);

// d x d with independent standard complex Gaussian entries.
ComplexMatrix ginibre(std::size_t d, RngStream& rng);

// Haar-distributed unitary: Gram-Schmidt of a Ginibre draw with the
// positive-diagonal convention. Restarts internally on a degenerate draw,
// errors after 5 attempts.
ComplexMatrix haar_unitary(std::size_t d, RngStream& rng);

// P = Q Q* for the first `rank` columns of a Haar unitary; 0 <= rank <= d.
ComplexMatrix random_projection(std::size_t d, std::size_t rank, RngStream& rng);

// G*G for a Ginibre draw.
ComplexMatrix random_positive(std::size_t d, RngStream& rng);

// U D U* with Haar U and independent complex Gaussian diagonal D.
ComplexMatrix random_normal_operator(std::size_t d, RngStream& rng);

}  // namespace uinorm::ensembles
