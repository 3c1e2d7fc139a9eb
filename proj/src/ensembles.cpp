#include "uinorm/ensembles.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace uinorm::ensembles {

std::uint64_t fnv1a64(std::string_view s) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    return h;
}

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

std::uint64_t parse_seed(const std::string& text) {
    if (text.empty()) {
        throw std::invalid_argument("empty seed");
    }
    const bool hex = text.size() > 2 && text[0] == '0' && (text[1] == 'x' || text[1] == 'X');
    std::size_t used = 0;
    std::uint64_t value = 0;
    try {
        value = std::stoull(hex ? text.substr(2) : text, &used, hex ? 16 : 10);
    } catch (const std::exception&) {
        throw std::invalid_argument("bad seed: " + text);
    }
    if (used != (hex ? text.size() - 2 : text.size())) {
        throw std::invalid_argument("bad seed: " + text);
    }
    return value;
}

double RngStream::uniform01() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double RngStream::gaussian() {
    const double u1 = uniform01();
    const double u2 = uniform01();
    return std::sqrt(-2.0 * std::log1p(-u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

cplx RngStream::complex_gaussian() {
    const double u1 = uniform01();
    const double u2 = uniform01();
    const double r = std::sqrt(-std::log1p(-u1));
    const double theta = 2.0 * std::numbers::pi * u2;
    return cplx(r * std::cos(theta), r * std::sin(theta));
}

std::uint64_t RngStream::uniform_below(std::uint64_t n) {
    if (n == 0) {
        throw std::invalid_argument("uniform_below(0)");
    }
    const std::uint64_t rem = (std::numeric_limits<std::uint64_t>::max() % n + 1) % n;
    for (;;) {
        const std::uint64_t x = engine_();
        if (rem == 0 || x < std::uint64_t(0) - rem) return x % n;
    }
}

RngStream substream(std::uint64_t seed, std::string_view path) {
    return RngStream(splitmix64(seed ^ fnv1a64(path)));
}

ComplexMatrix ginibre(std::size_t d, RngStream& rng) {
    if (d < 1) {
        throw std::invalid_argument("ginibre requires d >= 1");
    }
    std::vector<cplx> e(d * d);
    for (cplx& z : e) z = rng.complex_gaussian();
    return ComplexMatrix(d, d, std::move(e));
}

ComplexMatrix haar_unitary(std::size_t d, RngStream& rng) {
    if (d < 1) {
        throw std::invalid_argument("haar_unitary requires d >= 1");
    }
    for (int attempt = 0; attempt < 5; ++attempt) {
        std::vector<cplx> q = ginibre(d, rng).entries();  // columns orthonormalized in place
        bool degenerate = false;
        for (std::size_t j = 0; j < d && !degenerate; ++j) {
            // Two Gram-Schmidt passes keep orthogonality near machine precision.
            for (int pass = 0; pass < 2; ++pass) {
                for (std::size_t i = 0; i < j; ++i) {
                    cplx r(0.0, 0.0);
                    for (std::size_t row = 0; row < d; ++row) {
                        r += std::conj(q[row * d + i]) * q[row * d + j];
                    }
                    for (std::size_t row = 0; row < d; ++row) {
                        q[row * d + j] -= r * q[row * d + i];
                    }
                }
            }
            double nrm = 0.0;
            for (std::size_t row = 0; row < d; ++row) nrm += std::norm(q[row * d + j]);
            nrm = std::sqrt(nrm);
            if (nrm < 1e-8) {
                degenerate = true;
                break;
            }
            for (std::size_t row = 0; row < d; ++row) q[row * d + j] /= nrm;
        }
        if (!degenerate) {
            ComplexMatrix u(d, d, std::move(q));
            const ComplexMatrix gram = multiply(adjoint(u), u);
            double dev = 0.0;
            for (std::size_t i = 0; i < d; ++i) {
                for (std::size_t j = 0; j < d; ++j) {
                    dev = std::max(dev, std::abs(gram(i, j) - (i == j ? cplx(1, 0) : cplx(0, 0))));
                }
            }
            if (dev > 1e-10) {
                throw std::runtime_error("haar_unitary: draw failed the unitarity check");
            }
            return u;
        }
    }
    throw std::runtime_error("haar_unitary: degenerate draw after 5 attempts");
}

ComplexMatrix random_projection(std::size_t d, std::size_t rank, RngStream& rng) {
    if (rank > d) {
        throw std::invalid_argument("projection rank " + std::to_string(rank) +
                                    " out of range for dimension " + std::to_string(d));
    }
    if (rank == 0) return ComplexMatrix::zero(d, d);
    const ComplexMatrix u = haar_unitary(d, rng);
    std::vector<cplx> e(d * d);
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) {
            cplx s(0.0, 0.0);
            for (std::size_t k = 0; k < rank; ++k) {
                s += u(i, k) * std::conj(u(j, k));
            }
            e[i * d + j] = s;
        }
    }
    const ComplexMatrix p = hermitian_part(ComplexMatrix(d, d, std::move(e)));
    if (frobenius_norm(subtract(multiply(p, p), p)) > 1e-9 * static_cast<double>(d)) {
        throw std::runtime_error("random_projection: draw failed the idempotence check");
    }
    return p;
}

ComplexMatrix random_positive(std::size_t d, RngStream& rng) {
    const ComplexMatrix g = ginibre(d, rng);
    return multiply(adjoint(g), g);
}

ComplexMatrix random_normal_operator(std::size_t d, RngStream& rng) {
    const ComplexMatrix u = haar_unitary(d, rng);
    std::vector<cplx> diag(d);
    for (cplx& z : diag) z = rng.complex_gaussian();
    std::vector<cplx> e(d * d);
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) {
            cplx s(0.0, 0.0);
            for (std::size_t k = 0; k < d; ++k) {
                s += u(i, k) * diag[k] * std::conj(u(j, k));
            }
            e[i * d + j] = s;
        }
    }
    const ComplexMatrix a(d, d, std::move(e));
    const ComplexMatrix commutator =
        subtract(multiply(a, adjoint(a)), multiply(adjoint(a), a));
    const double scale = frobenius_norm(a);
    if (frobenius_norm(commutator) > 1e-9 * std::max(1.0, scale * scale)) {
        throw std::runtime_error("random_normal_operator: draw failed the normality check");
    }
    return a;
}

}  // namespace uinorm::ensembles
