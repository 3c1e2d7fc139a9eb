#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "uinorm/catalog.hpp"
#include "uinorm/ensembles.hpp"
#include "uinorm/matrix.hpp"
#include "uinorm/norms.hpp"
#include "uinorm/spectral.hpp"

using namespace uinorm;
using catalog::CaseInputs;
using catalog::CompareMode;

namespace {

const std::vector<double> kSchattenPs = {1.0, 1.5, 2.0, 3.0,
                                         std::numeric_limits<double>::infinity()};

CaseInputs inputs_of(std::size_t d, std::size_t n, std::vector<ComplexMatrix> mats) {
    CaseInputs in;
    in.d = d;
    in.n = n;
    in.matrices = std::move(mats);
    return in;
}

catalog::TrialEvaluation eval_case(const std::string& id, const CaseInputs& in) {
    return catalog::evaluate(id, in, 1e-8, kSchattenPs);
}

catalog::TrialEvaluation eval_random(const std::string& id, std::size_t d, std::size_t n,
                                     const char* path) {
    ensembles::RngStream rng = ensembles::substream(1234, path);
    const CaseInputs in = catalog::sample(id, d, n, rng);
    return catalog::evaluate(id, in, 1e-8, kSchattenPs);
}

const ComplexMatrix kShift2(2, 2, {cplx(0, 0), cplx(1, 0), cplx(0, 0), cplx(0, 0)});

void check_clean(const catalog::TrialEvaluation& ev) {
    CHECK(ev.holds);
    CHECK(ev.failed_cross_checks.empty());
    CHECK(ev.ratio <= 1.0 + 1e-6);
}

}  // namespace

TEST_CASE("catalog table") {
    CHECK(catalog::all_cases().size() == 16);
    CHECK(catalog::case_exists("lemma_2_1"));
    CHECK_FALSE(catalog::case_exists("lemma_9_9"));
    CHECK_THROWS_AS(catalog::case_info("lemma_9_9"), std::invalid_argument);

    CHECK(catalog::case_info("thm_2_2").iterates_blocks);
    CHECK(catalog::case_info("cor_2_3").min_blocks == 2);
    CHECK(catalog::case_info("cor_2_6").mode == CompareMode::OperatorNormOnly);
    CHECK(catalog::case_info("cor_2_8b").mode == CompareMode::OperatorNormOnly);
    CHECK(catalog::case_info("lemma_2_1").mode == CompareMode::AllUINorms);
    CHECK(catalog::case_info("prop_1_5").mode == CompareMode::AllUINormsMutual);
}

TEST_CASE("prop cases: shift witness spectra") {
    const CaseInputs in = inputs_of(2, 1, {kShift2});
    const auto sides = catalog::build("prop_1_3", in);
    const auto ls = spectral::singular_values(sides.lhs).values;
    const auto rs = spectral::singular_values(sides.rhs).values;
    const std::vector<double> expected = {1.0, 1.0, 0.0, 0.0};
    for (std::size_t i = 0; i < 4; ++i) {
        CHECK(ls[i] == doctest::Approx(expected[i]).epsilon(1e-12));
        CHECK(rs[i] == doctest::Approx(expected[i]).epsilon(1e-12));
    }
    check_clean(eval_case("prop_1_3", in));
}

TEST_CASE("prop cases: identity and random inputs") {
    for (const char* id : {"prop_1_3", "prop_1_4", "prop_1_5"}) {
        CaseInputs eye = inputs_of(3, 1, {ComplexMatrix::identity(3), ComplexMatrix::identity(3)});
        eye.matrices.resize(catalog::input_classes(id, 1).size(), ComplexMatrix::identity(3));
        const auto ev = eval_case(id, eye);
        check_clean(ev);
        CHECK(ev.ratio == doctest::Approx(1.0));

        const auto random_ev = eval_random(id, 3, 1, "catalog/prop/random");
        check_clean(random_ev);
        CHECK(random_ev.margin >= -1e-9);
    }
}

TEST_CASE("lemma_2_1 equality and degenerate inputs") {
    const std::size_t d = 3;
    const ComplexMatrix eye = ComplexMatrix::identity(d);
    const auto sides =
        catalog::build("lemma_2_1", inputs_of(d, 1, {eye, eye, eye}));
    CHECK(sides.lhs == scale(eye, 2.0));
    CHECK(sides.rhs == scale(eye, 2.0));
    const auto ev = eval_case("lemma_2_1", inputs_of(d, 1, {eye, eye, eye}));
    check_clean(ev);
    CHECK(ev.ratio == doctest::Approx(1.0));

    ensembles::RngStream rng = ensembles::substream(5, "catalog/lemma_2_1/x0");
    const ComplexMatrix a = ensembles::ginibre(d, rng);
    const ComplexMatrix b = ensembles::ginibre(d, rng);
    const auto zero_x = eval_case("lemma_2_1", inputs_of(d, 1, {a, b, ComplexMatrix::zero(d, d)}));
    CHECK(zero_x.holds);
    CHECK(zero_x.lhs_norm == 0.0);

    check_clean(eval_random("lemma_2_1", 4, 1, "catalog/lemma_2_1/random"));
}

TEST_CASE("thm_2_2 reduces to lemma_2_1 at one block") {
    ensembles::RngStream rng = ensembles::substream(7, "catalog/thm_2_2/n1");
    const CaseInputs in = catalog::sample("thm_2_2", 4, 1, rng);
    const auto thm = catalog::build("thm_2_2", in);
    const auto lemma = catalog::build("lemma_2_1", inputs_of(4, 1, in.matrices));
    CHECK(thm.lhs == lemma.lhs);
    CHECK(thm.rhs == lemma.rhs);
}

TEST_CASE("thm_2_2 all-identity two-block witness") {
    const std::size_t d = 3;
    const CaseInputs in =
        inputs_of(d, 2, std::vector<ComplexMatrix>(6, ComplexMatrix::identity(d)));
    const auto sides = catalog::build("thm_2_2", in);
    const auto ls = spectral::singular_values(sides.lhs).values;
    for (std::size_t i = 0; i < d; ++i) {
        CHECK(ls[i] == doctest::Approx(4.0).epsilon(1e-12));
        CHECK(ls[d + i] == doctest::Approx(0.0).epsilon(1e-12));
    }
    CHECK(spectral::operator_norm(sides.rhs) == doctest::Approx(4.0));

    const auto ev = eval_case("thm_2_2", in);
    check_clean(ev);
    CHECK(ev.ratio == doctest::Approx(1.0));
    CHECK(std::abs(ev.margin) <= 1e-9);

    check_clean(eval_random("thm_2_2", 4, 3, "catalog/thm_2_2/random"));
}

TEST_CASE("ineq_1_9 produces bit-identical sides to thm_2_2 at two blocks") {
    ensembles::RngStream rng = ensembles::substream(9, "catalog/ineq_1_9/shared");
    const CaseInputs in = catalog::sample("thm_2_2", 3, 2, rng);
    const auto thm = catalog::build("thm_2_2", in);
    const auto kit = catalog::build("ineq_1_9", in);
    CHECK(thm.lhs == kit.lhs);
    CHECK(thm.rhs == kit.rhs);
    check_clean(eval_random("ineq_1_9", 3, 2, "catalog/ineq_1_9/random"));
}

TEST_CASE("cor_2_3 equality, orthogonal ranges, and random inputs") {
    const std::size_t d = 2;
    const CaseInputs eye =
        inputs_of(d, 3, std::vector<ComplexMatrix>(3, ComplexMatrix::identity(d)));
    const auto sides = catalog::build("cor_2_3", eye);
    CHECK(sides.lhs == scale(ComplexMatrix::identity(d), 3.0));
    CHECK(sides.rhs == scale(ComplexMatrix::identity(d), 3.0));
    const auto ev = eval_case("cor_2_3", eye);
    check_clean(ev);
    CHECK(ev.ratio == doctest::Approx(1.0));

    const ComplexMatrix p1 = ComplexMatrix::diagonal({cplx(1, 0), cplx(0, 0)});
    const ComplexMatrix p2 = ComplexMatrix::diagonal({cplx(0, 0), cplx(1, 0)});
    const auto orth = catalog::build("cor_2_3", inputs_of(d, 2, {p1, p2}));
    CHECK(orth.lhs == ComplexMatrix::zero(d, d));
    CHECK(orth.rhs == ComplexMatrix::identity(d));

    check_clean(eval_random("cor_2_3", 5, 4, "catalog/cor_2_3/random"));
}

TEST_CASE("cor_2_3 on (A, B*) matches ineq_1_10 on (A*, B)") {
    ensembles::RngStream rng = ensembles::substream(21, "catalog/cor_2_3/vs_1_10");
    const std::size_t d = 4;
    const ComplexMatrix a = ensembles::ginibre(d, rng);
    const ComplexMatrix b = ensembles::ginibre(d, rng);

    const auto left = eval_case("cor_2_3", inputs_of(d, 2, {a, adjoint(b)}));
    const auto right = eval_case("ineq_1_10", inputs_of(d, 1, {adjoint(a), b}));
    CHECK(left.holds == right.holds);
    CHECK(left.ratio == doctest::Approx(right.ratio).epsilon(1e-10));

    const auto sides_l = catalog::build("cor_2_3", inputs_of(d, 2, {a, adjoint(b)}));
    const auto sides_r = catalog::build("ineq_1_10", inputs_of(d, 1, {adjoint(a), b}));
    CHECK(sides_l.lhs == sides_r.lhs);
    CHECK(sides_l.rhs == sides_r.rhs);
}

TEST_CASE("ineq_1_10 equality and degenerate inputs") {
    const std::size_t d = 3;
    ensembles::RngStream rng = ensembles::substream(23, "catalog/ineq_1_10");
    const ComplexMatrix a = ensembles::ginibre(d, rng);
    const auto equal = catalog::build("ineq_1_10", inputs_of(d, 1, {a, a}));
    CHECK(equal.lhs == equal.rhs);

    const auto zero_b = eval_case("ineq_1_10", inputs_of(d, 1, {a, ComplexMatrix::zero(d, d)}));
    CHECK(zero_b.holds);
    CHECK(zero_b.lhs_norm == 0.0);

    check_clean(eval_random("ineq_1_10", 4, 1, "catalog/ineq_1_10/random"));
}

TEST_CASE("lemma_2_4 on positive, opposite, and random normal inputs") {
    ensembles::RngStream rng = ensembles::substream(29, "catalog/lemma_2_4");
    const std::size_t d = 4;
    const ComplexMatrix p = ensembles::random_positive(d, rng);
    const ComplexMatrix q = ensembles::random_positive(d, rng);
    const auto pos = eval_case("lemma_2_4", inputs_of(d, 1, {p, q}));
    check_clean(pos);
    CHECK(pos.ratio >= 1.0 - 1e-9);

    const ComplexMatrix n1 = ensembles::random_normal_operator(d, rng);
    const auto cancel = eval_case("lemma_2_4", inputs_of(d, 1, {n1, scale(n1, -1.0)}));
    CHECK(cancel.holds);
    CHECK(cancel.lhs_norm <= 1e-12);

    check_clean(eval_random("lemma_2_4", 6, 1, "catalog/lemma_2_4/random"));
}

TEST_CASE("cor_2_5 degenerate and random projection inputs") {
    const std::size_t d = 3;
    const ComplexMatrix z = ComplexMatrix::zero(d, d);
    const auto zeros = eval_case("cor_2_5", inputs_of(d, 4, {z, z, z, z}));
    CHECK(zeros.holds);
    CHECK(zeros.ratio == doctest::Approx(1.0));  // 0 <= 0 counts as an equality witness

    const auto one = eval_case("cor_2_5",
                               inputs_of(d, 4, {ComplexMatrix::identity(d), z, z, z}));
    check_clean(one);
    CHECK(one.ratio == doctest::Approx(1.0));
    CHECK(std::abs(one.margin) <= 1e-9);

    check_clean(eval_random("cor_2_5", 4, 4, "catalog/cor_2_5/random"));
}

TEST_CASE("cor_2_6 equality, diagonal example, and sub-checks") {
    const std::size_t d = 2;
    const auto eye3 = eval_case(
        "cor_2_6", inputs_of(d, 3, std::vector<ComplexMatrix>(3, ComplexMatrix::identity(d))));
    check_clean(eye3);
    CHECK(eye3.ratio == doctest::Approx(1.0));
    CHECK(eye3.lhs_norm == doctest::Approx(3.0));
    CHECK(eye3.rhs_norm == doctest::Approx(3.0));

    const ComplexMatrix p1 = ComplexMatrix::diagonal({cplx(1, 0), cplx(0, 0)});
    const ComplexMatrix p2 = ComplexMatrix::diagonal({cplx(0, 0), cplx(1, 0)});
    const auto diag = eval_case("cor_2_6", inputs_of(d, 2, {p1, p2}));
    check_clean(diag);
    CHECK(diag.lhs_norm == doctest::Approx(1.0));
    CHECK(diag.rhs_norm == doctest::Approx(2.0));

    check_clean(eval_random("cor_2_6", 4, 3, "catalog/cor_2_6/random"));
}

TEST_CASE("ineq_1_12 equal, degenerate, and random positive inputs") {
    ensembles::RngStream rng = ensembles::substream(31, "catalog/ineq_1_12");
    const std::size_t d = 3;
    const ComplexMatrix a = ensembles::random_positive(d, rng);

    const auto same = eval_case("ineq_1_12", inputs_of(d, 1, {a, a}));
    check_clean(same);
    CHECK(same.ratio >= 1.0 - 1e-9);

    const auto zero_b = eval_case("ineq_1_12", inputs_of(d, 1, {a, ComplexMatrix::zero(d, d)}));
    check_clean(zero_b);
    CHECK(zero_b.ratio >= 1.0 - 1e-9);

    check_clean(eval_random("ineq_1_12", 5, 1, "catalog/ineq_1_12/random"));
}

TEST_CASE("cor_2_7 equality and degenerate inputs") {
    const std::size_t d = 3;
    const ComplexMatrix eye = ComplexMatrix::identity(d);
    const auto same = eval_case("cor_2_7", inputs_of(d, 1, {eye, eye}));
    check_clean(same);
    CHECK(same.lhs_norm == doctest::Approx(2.0));
    CHECK(same.rhs_norm == doctest::Approx(2.0));

    ensembles::RngStream rng = ensembles::substream(37, "catalog/cor_2_7");
    const ComplexMatrix a = ensembles::random_normal_operator(d, rng);
    const auto zero_b = eval_case("cor_2_7", inputs_of(d, 1, {a, ComplexMatrix::zero(d, d)}));
    check_clean(zero_b);
    CHECK(zero_b.ratio == doctest::Approx(0.5).epsilon(1e-6));

    check_clean(eval_random("cor_2_7", 4, 1, "catalog/cor_2_7/random"));
}

TEST_CASE("lemma_2_6 equalities and random inputs") {
    const std::size_t d = 2;
    ensembles::RngStream rng = ensembles::substream(41, "catalog/lemma_2_6");
    const ComplexMatrix a = ensembles::ginibre(d, rng);
    const ComplexMatrix dd = ensembles::ginibre(d, rng);
    const ComplexMatrix z = ComplexMatrix::zero(d, d);

    const auto diag = eval_case("lemma_2_6", inputs_of(d, 1, {a, z, z, dd}));
    check_clean(diag);
    CHECK(diag.ratio >= 1.0 - 1e-9);

    const ComplexMatrix eye = ComplexMatrix::identity(d);
    const auto ones = eval_case("lemma_2_6", inputs_of(d, 1, {eye, eye, eye, eye}));
    check_clean(ones);
    CHECK(ones.lhs_norm == doctest::Approx(2.0));
    CHECK(ones.rhs_norm == doctest::Approx(2.0));

    check_clean(eval_random("lemma_2_6", 3, 1, "catalog/lemma_2_6/random"));
}

TEST_CASE("cor_2_8 shift witness and hermitian degenerate input") {
    const auto a_ev = eval_case("cor_2_8a", inputs_of(2, 1, {kShift2}));
    check_clean(a_ev);
    CHECK(a_ev.lhs_norm == doctest::Approx(1.0));
    CHECK(a_ev.rhs_norm == doctest::Approx(1.0));
    CHECK(a_ev.ratio >= 1.0 - 1e-9);

    const auto b_ev = eval_case("cor_2_8b", inputs_of(2, 1, {kShift2}));
    check_clean(b_ev);
    CHECK(b_ev.ratio >= 1.0 - 1e-9);

    ensembles::RngStream rng = ensembles::substream(43, "catalog/cor_2_8");
    const ComplexMatrix h = hermitian_part(ensembles::ginibre(3, rng));
    const auto herm = eval_case("cor_2_8b", inputs_of(3, 1, {h}));
    CHECK(herm.holds);
    CHECK(herm.lhs_norm == 0.0);

    check_clean(eval_random("cor_2_8a", 6, 1, "catalog/cor_2_8a/random"));
    check_clean(eval_random("cor_2_8b", 6, 1, "catalog/cor_2_8b/random"));
}

TEST_CASE("every case holds over a small random sweep") {
    for (const catalog::CaseInfo& info : catalog::all_cases()) {
        for (std::size_t d : {2, 3}) {
            const std::size_t n = info.iterates_blocks ? std::max<std::size_t>(info.min_blocks, 2)
                                                       : info.fixed_blocks;
            for (int t = 0; t < 3; ++t) {
                ensembles::RngStream rng = ensembles::substream(
                    100 + t, "catalog/sweep/" + info.id + "/d" + std::to_string(d));
                const CaseInputs in = catalog::sample(info.id, d, n, rng);
                const auto ev = catalog::evaluate(info.id, in, 1e-8, kSchattenPs);
                INFO(info.id << " d=" << d << " t=" << t);
                check_clean(ev);
            }
        }
    }
}

TEST_CASE("sampling validates block counts and dimensions") {
    ensembles::RngStream rng = ensembles::substream(1, "catalog/validation");
    CHECK_THROWS_AS(catalog::sample("cor_2_3", 3, 1, rng), std::invalid_argument);
    CHECK_THROWS_AS(catalog::sample("nope", 3, 1, rng), std::invalid_argument);
    CHECK_THROWS_AS(catalog::sample("lemma_2_1", 0, 1, rng), std::invalid_argument);
    CHECK_THROWS_AS(catalog::build("cor_2_6", inputs_of(2, 2, {}), {}), std::invalid_argument);
}
