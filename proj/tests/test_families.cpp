#include <doctest.h>

#include <cmath>

#include "nncone/errors.hpp"
#include "nncone/families.hpp"
#include "nncone/halfline.hpp"

using namespace nncone;

namespace {

SearchConfig quick() {
    SearchConfig cfg;
    cfg.restarts = 30;
    cfg.threads = 1;
    return cfg;
}

bool has(const std::vector<Violation>& v, ConditionKind kind, std::optional<std::size_t> degree = {}) {
    for (const auto& x : v)
        if (x.kind == kind && (!degree || x.degree == degree)) return true;
    return false;
}

}  // namespace

TEST_CASE("loewy_general examples") {
    CHECK(loewy_general(2, 2, 0, 2.0) == Polynomial{1, 1, -2, 0, 1, 1});
    CHECK(loewy_general(1, 1, 0, 2.0) == Polynomial{1, -2, 1});
    CHECK(loewy_general(2, 3, 1, 2.0) == Polynomial{0, 1, 1, -2, 0, 1, 1});
    for (std::size_t n = 1; n <= 3; ++n)
        for (std::size_t m = n; m <= 5; ++m)
            for (std::size_t s = 0; s + n <= m; ++s)
                CHECK(loewy_general(n, m, s, 1.5).degree() == 2 * m + n - 1 - s);
    CHECK_THROWS_AS(loewy_general(2, 1, 0, 2.0), InvalidSpec);
    CHECK_THROWS_AS(loewy_general(2, 3, 2, 2.0), InvalidSpec);
    CHECK_THROWS_AS(loewy_general(0, 1, 0, 2.0), InvalidSpec);
}

TEST_CASE("alpha_family examples") {
    CHECK(alpha_family(2, 4.0) == Polynomial{1, 1, 1, 1, -4, 1, 1, 1, 1});
    CHECK(alpha_family(1, 2.0) == Polynomial{1, -2, 1});
    CHECK(alpha_family(3, 0.5) == Polynomial{1, 1, 1, -0.5, 1, 1, 1});
    CHECK_THROWS_AS(alpha_family(2, 0.0), InvalidSpec);
    CHECK_THROWS_AS(alpha_family(2, -1.0), InvalidSpec);
    CHECK_THROWS_AS(alpha_family(0, 1.0), InvalidSpec);
}

TEST_CASE("conjecture_family examples") {
    CHECK(conjecture_family(2, 2, 5, 1.0) == Polynomial{1, 1, -1, 0, 0, 1, 1});
    CHECK(conjecture_family(1, 1, 2, 1.0) == Polynomial{1, -1, 1});
    CHECK(is_nonneg_on_halfline(RationalPolynomial::from_polynomial(conjecture_family(1, 1, 2, 1.0))));
    const auto p = conjecture_family(1, 1, 2, 2.5);
    CHECK(eval_scalar(p, 1.0) == doctest::Approx(-0.5));
    CHECK(is_refuted(refute(p, 1, quick())));
    CHECK_THROWS_AS(conjecture_family(2, 2, 2, 1.0), InvalidSpec);
    CHECK_THROWS_AS(conjecture_family(2, 1, 5, 1.0), InvalidSpec);
}

TEST_CASE("FamilySpec helpers") {
    const FamilySpec a = LoewyGeneral{2, 3, 1, 2.0};
    CHECK(build(a) == loewy_general(2, 3, 1, 2.0));
    CHECK(build(with_parameter(a, 1.25)) == loewy_general(2, 3, 1, 1.25));
    CHECK(family_order(a) == 2);
    const FamilySpec b = Alpha{3, 2.5};
    CHECK(build(with_parameter(b, 4.0)) == alpha_family(3, 4.0));
    CHECK(family_order(b) == 3);
    const FamilySpec c = ConjectureGap{2, 2, 5, 1.0};
    CHECK(build(c) == conjecture_family(2, 2, 5, 1.0));
    CHECK(family_name(a) != family_name(b));
    CHECK(family_name(b) != family_name(c));
    CHECK_THROWS_AS(validate(FamilySpec{LoewyGeneral{3, 2, 0, 2.0}}), InvalidSpec);
    CHECK_NOTHROW(validate(c));
}

TEST_CASE("split_alpha examples") {
    const auto four = split_alpha(2, 4.0);
    CHECK(four.blocks.size() == 2);
    CHECK(four.slack == 0);
    CHECK(reassemble(four) == RationalPolynomial::from_polynomial(alpha_family(2, 4.0)));

    const auto two = split_alpha(1, 2.0);
    CHECK(two.blocks.size() == 1);
    CHECK(two.slack == 0);

    const auto three = split_alpha(2, 3.0);
    CHECK(three.blocks.size() == 2);
    CHECK(three.slack == 1);
    CHECK(three.slack_degree == 4);
    CHECK(reassemble(three) == RationalPolynomial::from_polynomial(alpha_family(2, 3.0)));
}

TEST_CASE("split_alpha reassembles exactly on a grid") {
    int cases = 0;
    for (std::size_t n = 1; n <= 5; ++n)
        for (double alpha : {0.3, 0.5, 1.0, 1.7, 2.0, 2.5, 3.0, 3.2, 4.0, 5.9}) {
            const auto split = split_alpha(n, alpha);
            const std::size_t blocks = static_cast<std::size_t>(std::ceil(alpha / 2.0));
            const std::size_t m = n * blocks;
            REQUIRE(split.blocks.size() == blocks);
            CHECK(split.slack_degree == m);
            CHECK(split.slack >= 0);

            // each block: n ones starting at s n, -2 at m, n ones starting at m + 1 + s n
            for (std::size_t s = 0; s < blocks; ++s) {
                const auto& b = split.blocks[s];
                for (std::size_t d = 0; d <= 2 * m; ++d) {
                    double want = 0.0;
                    if (d >= s * n && d < (s + 1) * n) want = 1.0;
                    if (d >= m + 1 + s * n && d <= m + n * (s + 1)) want = 1.0;
                    if (d == m) want = -2.0;
                    CHECK(b.coeff(d) == want);
                }
            }
            CHECK(reassemble(split) == RationalPolynomial::from_polynomial(alpha_family(n, alpha)));
            ++cases;
        }
    CHECK(cases == 50);
}

TEST_CASE("necessary_conditions examples") {
    const auto v = necessary_conditions(Polynomial{0, 0, 0, -1, 1}, 2);
    CHECK(has(v, ConditionKind::HighBlock, 3));
    CHECK_FALSE(has(v, ConditionKind::LowBlock));

    const auto w = necessary_conditions(loewy_general(2, 2, 0, 2.0), 2);
    CHECK_FALSE(has(w, ConditionKind::LowBlock));
    CHECK_FALSE(has(w, ConditionKind::HighBlock));

    for (std::size_t n : {1u, 2u, 3u}) {
        const auto u = necessary_conditions(Polynomial{-1.0}, n);
        CHECK(has(u, ConditionKind::LowBlock));
        CHECK(has(u, ConditionKind::HighBlock));
        CHECK(has(u, ConditionKind::HalfLine));
    }
    CHECK(necessary_conditions(Polynomial{}, 2).empty());
    CHECK(has(necessary_conditions(Polynomial{1.0, -3.0, 1.0}, 1), ConditionKind::HalfLine));
    CHECK(necessary_conditions(Polynomial{1.0, -2.0, 1.0}, 1).empty());
}

TEST_CASE("violated necessary conditions at n = 1 are refuted") {
    for (const Polynomial& p : {Polynomial{-1.0}, Polynomial{1.0, -3.0, 1.0}, Polynomial{0, 1, -1},
                                Polynomial{0, 0, -1, 1}}) {
        REQUIRE_FALSE(necessary_conditions(p, 1).empty());
        CHECK(is_refuted(refute(p, 1, quick())));
    }
}

TEST_CASE("projection_gap_example for n = 1") {
    for (std::size_t k = 2; k <= 6; ++k) {
        const auto gap = projection_gap_example(1, k, quick());
        REQUIRE(gap);
        CHECK(gap->projected == Polynomial::monomial(k - 1) - Polynomial::monomial(k) * 2.0);
        CHECK(gap->completion == Polynomial::monomial(k - 1) * Polynomial{1.0, -2.0, 1.0});
        CHECK(gap->completion.degree() == k + 1);
        CHECK_FALSE(gap->witness);
        CHECK(is_nonneg_on_halfline(RationalPolynomial::from_polynomial(gap->completion)));
        CHECK_FALSE(is_nonneg_on_halfline(RationalPolynomial::from_polynomial(gap->projected)));
    }
    CHECK_THROWS_AS(projection_gap_example(1, 1, quick()), InvalidSpec);
    CHECK_THROWS_AS(projection_gap_example(2, 3, quick()), InvalidSpec);
}

TEST_CASE("projection_gap_example for n = 2 reports a confirmed witness or nothing") {
    const auto gap = projection_gap_example(2, 6, quick());
    if (gap) {
        REQUIRE(gap->witness);
        CHECK(gap->completion.degree() == 7);
        CHECK(confirm_witness(gap->projected, *gap->witness, 1e-9));
        CHECK(exact_witness_entry(gap->projected, *gap->witness) < 0);
        Polynomial dropped = gap->completion;
        dropped.set_coeff(7, 0.0);
        CHECK(dropped.trimmed() == gap->projected.trimmed());
    }
}
