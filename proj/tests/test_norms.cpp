#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "uinorm/ensembles.hpp"
#include "uinorm/matrix.hpp"
#include "uinorm/norms.hpp"
#include "uinorm/spectral.hpp"

using namespace uinorm;
using norms::NormFamily;
using spectral::singular_values;

namespace {

ComplexMatrix random_complex(std::size_t rows, std::size_t cols, std::uint32_t seed) {
    std::mt19937 gen(seed);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    std::vector<cplx> e(rows * cols);
    for (cplx& z : e) z = cplx(dist(gen), dist(gen));
    return ComplexMatrix(rows, cols, std::move(e));
}

}  // namespace

TEST_CASE("norm_eval on fixed matrices") {
    const ComplexMatrix eye = ComplexMatrix::identity(2);
    CHECK(norms::norm_eval(eye, NormFamily::schatten(2)) == doctest::Approx(std::sqrt(2.0)));
    CHECK(norms::norm_eval(eye, NormFamily::schatten(1)) == doctest::Approx(2.0));
    const ComplexMatrix a(2, 2, {cplx(0, 0), cplx(2, 0), cplx(0, 0), cplx(0, 0)});
    CHECK(norms::norm_eval(a, NormFamily::operator_norm()) == doctest::Approx(2.0));
}

TEST_CASE("norm family validation") {
    CHECK_THROWS_AS(NormFamily::schatten(0.5), std::invalid_argument);
    CHECK_THROWS_AS(NormFamily::ky_fan(0), std::invalid_argument);
    const ComplexMatrix a = random_complex(2, 3, 1);
    CHECK_THROWS_AS(norms::norm_eval(a, NormFamily::ky_fan(3)), std::invalid_argument);
    CHECK(norms::norm_eval(a, NormFamily::ky_fan(2)) > 0.0);
}

TEST_CASE("norm family parsing") {
    CHECK(NormFamily::parse("op").kind == NormFamily::Kind::Operator);
    CHECK(NormFamily::parse("schatten:1.5").p == doctest::Approx(1.5));
    CHECK(NormFamily::parse("kyfan:3").k == 3);
    CHECK(std::isinf(NormFamily::parse("schatten:inf").p));
    CHECK_THROWS_AS(NormFamily::parse("schatten:0.2"), std::invalid_argument);
    CHECK_THROWS_AS(NormFamily::parse("frobenius"), std::invalid_argument);
    CHECK_THROWS_AS(NormFamily::parse("kyfan:x"), std::invalid_argument);
    CHECK(NormFamily::parse("schatten:2").name() == "schatten:2");
}

TEST_CASE("schatten infinity aliases the operator norm") {
    const ComplexMatrix a = random_complex(5, 5, 3);
    const double inf = std::numeric_limits<double>::infinity();
    CHECK(norms::norm_eval(a, NormFamily::schatten(inf)) ==
          doctest::Approx(norms::norm_eval(a, NormFamily::operator_norm())).epsilon(1e-12));
}

TEST_CASE("schatten 2 matches the entrywise frobenius norm") {
    for (std::uint32_t seed = 0; seed < 8; ++seed) {
        const ComplexMatrix a = random_complex(3 + seed % 4, 2 + seed % 5, 100 + seed);
        CHECK(std::abs(norms::norm_eval(a, NormFamily::schatten(2)) - frobenius_norm(a)) <=
              1e-10 * std::max(1.0, frobenius_norm(a)));
    }
}

TEST_CASE("ky fan of full order equals the trace norm") {
    const ComplexMatrix a = random_complex(5, 7, 9);
    CHECK(std::abs(norms::norm_eval(a, NormFamily::ky_fan(5)) -
                   norms::norm_eval(a, NormFamily::schatten(1))) <= 1e-10);
}

TEST_CASE("direct sum norm identities") {
    for (std::uint32_t seed = 0; seed < 25; ++seed) {
        const ComplexMatrix a = random_complex(2 + seed % 3, 2 + seed % 3, 200 + seed);
        const ComplexMatrix b = random_complex(2 + (seed + 1) % 4, 2 + (seed + 1) % 4, 300 + seed);
        const ComplexMatrix sum = direct_sum({a, b});

        const double op_sum = norms::norm_eval(sum, NormFamily::operator_norm());
        const double op_max = std::max(norms::norm_eval(a, NormFamily::operator_norm()),
                                       norms::norm_eval(b, NormFamily::operator_norm()));
        CHECK(std::abs(op_sum - op_max) <= 1e-10 * std::max(1.0, op_max));

        for (double p : {1.0, 1.5, 2.0, 3.0}) {
            const double lhs = norms::norm_eval(sum, NormFamily::schatten(p));
            const double rhs =
                std::pow(std::pow(norms::norm_eval(a, NormFamily::schatten(p)), p) +
                             std::pow(norms::norm_eval(b, NormFamily::schatten(p)), p),
                         1.0 / p);
            CHECK(std::abs(lhs - rhs) <= 1e-9 * std::max(1.0, rhs));
        }
    }
}

TEST_CASE("weak majorization verdicts on fixed spectra") {
    using spectral::SingularSpectrum;
    const auto v1 =
        norms::weakly_majorizes(SingularSpectrum{{1, 0}}, SingularSpectrum{{1, 1}}, 0.0);
    CHECK(v1.holds);
    CHECK(v1.margin == 0.0);
    CHECK(v1.worst_k == 1);

    const auto v2 =
        norms::weakly_majorizes(SingularSpectrum{{2}}, SingularSpectrum{{1, 1}}, 1e-12);
    CHECK_FALSE(v2.holds);
    CHECK(v2.worst_k == 1);
    CHECK(v2.margin == doctest::Approx(-1.0));

    const auto v3 =
        norms::weakly_majorizes(SingularSpectrum{{1, 1}}, SingularSpectrum{{2, 0}}, 0.0);
    CHECK(v3.holds);
    CHECK(v3.margin == 0.0);
    CHECK(v3.worst_k == 2);
}

TEST_CASE("dominance on trivial pairs") {
    const ComplexMatrix a = random_complex(4, 4, 17);
    const auto self = norms::dominates_all_ui_norms(a, a, 1e-10);
    CHECK(self.holds);
    CHECK(std::abs(self.margin) <= 1e-10);

    const auto zero = norms::dominates_all_ui_norms(ComplexMatrix::zero(3, 3), a, 1e-10);
    CHECK(zero.holds);
}

TEST_CASE("zero padding never changes a dominance verdict") {
    for (std::uint32_t seed = 0; seed < 10; ++seed) {
        const ComplexMatrix a = random_complex(3, 3, 400 + seed);
        const ComplexMatrix b = random_complex(3, 3, 500 + seed);
        const double tol = 1e-10;
        const bool base = norms::dominates_all_ui_norms(a, b, tol).holds;
        CHECK(norms::dominates_all_ui_norms(pad_top_left(a, 7, 7), b, tol).holds == base);
        CHECK(norms::dominates_all_ui_norms(a, pad_top_left(b, 5, 6), tol).holds == base);
    }
}

TEST_CASE("dominance agrees with the all-ky-fan oracle") {
    for (std::uint32_t seed = 0; seed < 60; ++seed) {
        const std::size_t d = 2 + seed % 7;
        const ComplexMatrix a = random_complex(d, d, 600 + seed);
        // Scaled copies mixed in so both verdict outcomes show up.
        const ComplexMatrix b = (seed % 3 == 0) ? scale(a, 0.9) : random_complex(d, d, 700 + seed);
        const double tol = 1e-8;

        const bool fan = norms::dominates_all_ui_norms(a, b, tol).holds;
        bool oracle = true;
        for (std::size_t k = 1; k <= d; ++k) {
            if (norms::norm_eval(a, NormFamily::ky_fan(k)) >
                norms::norm_eval(b, NormFamily::ky_fan(k)) + tol) {
                oracle = false;
                break;
            }
        }
        CHECK(fan == oracle);
    }
}

TEST_CASE("norm_eval is unitarily invariant for every family") {
    ensembles::RngStream rng = ensembles::substream(11, "test/norms-invariance");
    const std::size_t d = 5;
    const ComplexMatrix a = random_complex(d, d, 800);
    const ComplexMatrix u = ensembles::haar_unitary(d, rng);
    const ComplexMatrix v = ensembles::haar_unitary(d, rng);
    const ComplexMatrix uav = multiply(multiply(u, a), v);
    for (const NormFamily& f : {NormFamily::operator_norm(), NormFamily::schatten(1),
                                NormFamily::schatten(2.5), NormFamily::ky_fan(2),
                                NormFamily::ky_fan(d)}) {
        const double base = norms::norm_eval(a, f);
        CHECK(std::abs(norms::norm_eval(uav, f) - base) <= 1e-9 * std::max(1.0, base));
    }
}

TEST_CASE("spectra of A(+)A* and A(+)A dominate each other") {
    for (std::uint32_t seed = 0; seed < 6; ++seed) {
        const ComplexMatrix a = random_complex(4, 4, 900 + seed);
        const ComplexMatrix lhs = direct_sum({a, adjoint(a)});
        const ComplexMatrix rhs = direct_sum({a, a});
        CHECK(norms::dominates_all_ui_norms(lhs, rhs, 1e-10).margin >= -1e-10);
        CHECK(norms::dominates_all_ui_norms(rhs, lhs, 1e-10).margin >= -1e-10);
    }
}

TEST_CASE("spectra of AA* and A*A agree after padding") {
    const ComplexMatrix a = random_complex(6, 3, 950);
    const auto left = singular_values(multiply(a, adjoint(a))).values;   // six values
    const auto right = singular_values(multiply(adjoint(a), a)).values;  // three values
    for (std::size_t i = 0; i < left.size(); ++i) {
        const double want = (i < right.size()) ? right[i] : 0.0;
        CHECK(std::abs(left[i] - want) <= 1e-9 * std::max(1.0, left.front()));
    }
}

TEST_CASE("majorization tolerance scales with the trace norm") {
    spectral::SingularSpectrum small{{0.1, 0.05}};
    spectral::SingularSpectrum big{{50.0, 30.0}};
    CHECK(norms::majorization_tolerance(small, 1e-8) == doctest::Approx(1e-8));
    CHECK(norms::majorization_tolerance(big, 1e-8) == doctest::Approx(80.0 * 1e-8));
}
