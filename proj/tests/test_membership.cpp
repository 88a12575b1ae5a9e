#include <doctest.h>

#include <cmath>
#include <random>

#include "nncone/errors.hpp"
#include "nncone/families.hpp"
#include "nncone/halfline.hpp"
#include "nncone/membership.hpp"
#include "oracles.hpp"

using namespace nncone;

namespace {

SearchConfig small_config(std::size_t restarts = 40) {
    SearchConfig cfg;
    cfg.restarts = restarts;
    cfg.threads = 1;
    return cfg;
}

// (p(rho S))_ij by explicit powers.
double oracle_entry(const Polynomial& p, const Witness& w) {
    return oracle::power_sum(p, w.s * w.rho)(w.i, w.j);
}

}  // namespace

TEST_CASE("SearchConfig validation") {
    SearchConfig cfg;
    CHECK_NOTHROW(cfg.validate());
    cfg.restarts = 0;
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
    cfg = SearchConfig{};
    cfg.rho_log_hi = INFINITY;
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
    cfg = SearchConfig{};
    cfg.rho_log_lo = 1.0;
    cfg.rho_log_hi = 1.0;
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
    cfg = SearchConfig{};
    cfg.confirm_tol = 0.0;
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
}

TEST_CASE("refute on n = 1 is exact") {
    const auto v = refute(Polynomial{1.0, -2.1, 1.0}, 1, small_config());
    REQUIRE(is_refuted(v));
    const auto& r = std::get<Refuted>(v);
    CHECK(r.source == WitnessSource::ExactHalfline);
    CHECK(r.witness.s == SquareMatrix{{1.0}});
    CHECK(r.witness.rho > 0.5);
    CHECK(r.witness.rho < 1.5);
    CHECK(r.witness.value < 0.0);
    CHECK(exact_witness_entry(Polynomial{1.0, -2.1, 1.0}, r.witness) < 0);

    CHECK(std::holds_alternative<ExactMember>(refute(Polynomial{1.0, -2.0, 1.0}, 1, small_config())));
}

TEST_CASE("refute agrees with the exact oracle at n = 1") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 300; ++trial) {
        const auto p = oracle::random_poly(rng, 6);
        const bool member = is_nonneg_on_halfline(RationalPolynomial::from_polynomial(p));
        const auto v = refute(p, 1, small_config());
        CHECK(std::holds_alternative<ExactMember>(v) == member);
        if (is_refuted(v)) CHECK(exact_witness_entry(p, std::get<Refuted>(v).witness) < 0);
    }
}

TEST_CASE("monomials and their nonnegative combinations are never refuted") {
    const auto cfg = small_config(20);
    for (std::size_t n : {2u, 3u})
        for (std::size_t k = 0; k <= 6; ++k) {
            const auto v = refute(Polynomial::monomial(k), n, cfg);
            CHECK(std::holds_alternative<NoRefutationFound>(v));
        }
    CHECK_FALSE(is_refuted(refute(Polynomial{0.3, 0.0, 2.0, 0.0, 0.0, 1.0}, 2, cfg)));
    CHECK(std::holds_alternative<NoRefutationFound>(refute(Polynomial{}, 2, cfg)));
}

TEST_CASE("convex combinations of unrefuted polynomials stay unrefuted") {
    const auto cfg = small_config(20);
    const Polynomial a = alpha_family(2, 2.0), b = alpha_family(2, 1.0);
    for (double t : {0.25, 0.5, 0.75}) CHECK_FALSE(is_refuted(refute(a * (1.0 - t) + b * t, 2, cfg)));
}

TEST_CASE("refute finds the t = 2.1 counterexample") {
    const Polynomial p = loewy_general(2, 2, 0, 2.1);
    const auto v = refute(p, 2, small_config(200));
    REQUIRE(is_refuted(v));
    const auto& w = std::get<Refuted>(v).witness;
    CHECK(confirm_witness(p, w, 1e-9));
    CHECK(oracle_entry(p, w) < -1e-9);
    CHECK(std::abs(oracle_entry(p, w) - w.value) <= 1e-9);
    CHECK(exact_witness_entry(p, w) < 0);
    for (std::size_t i = 0; i < 2; ++i) {
        CHECK(w.s(i, 0) > 0.0);
        CHECK(w.s(i, 1) > 0.0);
        CHECK(std::abs(w.s(i, 0) + w.s(i, 1) - 1.0) <= 1e-12);
    }
}

TEST_CASE("refute is reproducible across thread counts") {
    const Polynomial p = loewy_general(3, 3, 0, 2.1);
    auto cfg = small_config(60);
    cfg.seed = 11;
    const auto a = refute(p, 3, cfg);
    cfg.threads = 4;
    const auto b = refute(p, 3, cfg);
    REQUIRE(is_refuted(a));
    REQUIRE(is_refuted(b));
    const auto &ra = std::get<Refuted>(a), &rb = std::get<Refuted>(b);
    CHECK(ra.restart == rb.restart);
    CHECK(ra.witness.s == rb.witness.s);
    CHECK(ra.witness.rho == rb.witness.rho);
    CHECK(ra.witness.value == rb.witness.value);
}

TEST_CASE("confirm_witness examples") {
    const Polynomial p{1.0, -2.1, 1.0};
    Witness w{SquareMatrix{{0.5, 0.5}, {0.5, 0.5}}, 1.0, 0, 0, 0.0};
    // p(E) = p(0)(I - E) + p(1) E for the idempotent E
    w.value = static_cast<double>(witness_entry(p, w));
    CHECK(w.value == doctest::Approx(0.5 * 1.0 + 0.5 * -0.1));
    w.i = 0;
    w.j = 1;
    w.value = static_cast<double>(witness_entry(p, w));
    CHECK(w.value == doctest::Approx(-0.55));
    CHECK(confirm_witness(p, w, 1e-9));

    // entry of -1e-15: p = x - (1 + 2e-15) x^2 at rho = 1/2, S = [[1/2, 1/2], ...]
    const Polynomial tiny{0.0, 1.0, -(1.0 + 4e-15)};
    Witness t{SquareMatrix{{0.5, 0.5}, {0.5, 0.5}}, 1.0, 0, 1, 0.0};
    t.value = static_cast<double>(witness_entry(tiny, t));
    CHECK(t.value < 0.0);
    CHECK(t.value > -1e-14);
    CHECK_FALSE(confirm_witness(tiny, t, 1e-9));

    Witness bad = w;
    bad.s = SquareMatrix{{0.6, 0.5}, {0.5, 0.5}};
    CHECK_FALSE(confirm_witness(p, bad, 1e-9));
    bad.s = SquareMatrix{{1.0, 0.0}, {0.5, 0.5}};
    CHECK_FALSE(confirm_witness(p, bad, 1e-9));
    bad = w;
    bad.rho = -1.0;
    CHECK_FALSE(confirm_witness(p, bad, 1e-9));
}

TEST_CASE("scalar_walk_check examples") {
    std::mt19937_64 rng(8);
    std::uniform_real_distribution<double> u(0.0, 3.0);
    for (int k = 0; k < 1000; ++k) CHECK(scalar_walk_check(u(rng), 0.1 + u(rng), static_cast<unsigned>(k % 7), 2.0));
    CHECK_FALSE(scalar_walk_check(1.0, 1.0, 3, 2.1));
    CHECK(scalar_walk_check(3.0, 1.0, 0, 1.0));
    CHECK(scalar_walk_check(1.5, 2.0, 1, 1.0));
}

TEST_CASE("witnesses are closed downward in t and equivariant in scale") {
    const Polynomial p0 = loewy_general(2, 2, 0, 2.1);
    const auto v = refute(p0, 2, small_config(200));
    REQUIRE(is_refuted(v));
    const auto& w = std::get<Refuted>(v).witness;
    const double slope = std::pow(w.rho, 2) * (w.s * w.s)(w.i, w.j);
    CHECK(slope > 0.0);
    for (double t : {2.2, 2.5, 4.0}) {
        const Polynomial pt = loewy_general(2, 2, 0, t);
        CHECK(confirm_witness(pt, w, 1e-9));
        CHECK(static_cast<double>(witness_entry(pt, w)) ==
              doctest::Approx(w.value - (t - 2.1) * slope).epsilon(1e-9));
    }
    // adding c x^d can only raise the entry
    CHECK(confirm_witness(p0, w, 1e-9));
    CHECK(witness_entry(p0, w) <= witness_entry(p0 + Polynomial::monomial(3) * 0.01, w));

    for (double lambda : {1e-3, 0.5, 7.0, 1e3}) {
        const auto scaled = witness_entry(p0 * lambda, w);
        CHECK(static_cast<double>(scaled) == doctest::Approx(lambda * w.value).epsilon(1e-9));
        CHECK(exact_witness_entry(p0 * lambda, w) < 0);
    }
}

TEST_CASE("max_t on the n = 1 quadratic family brackets 2") {
    const auto r = max_t([](double t) { return Polynomial{1.0, -t, 1.0}; }, 1, small_config(), 4.0, 0.01);
    CHECK(r.lo <= 2.0);
    CHECK(r.hi >= 2.0);
    CHECK(r.hi - r.lo <= 0.01);
    CHECK_FALSE(r.trace.empty());
    CHECK_THROWS_AS(max_t([](double t) { return Polynomial{1.0, t, 1.0}; }, 1, small_config(), 4.0, 0.01),
                    NoUpperRefutation);
}

TEST_CASE("boundary_offset examples") {
    const auto cfg = small_config();
    const Polynomial minus_x{0.0, -1.0};
    for (auto [c0, c2] : {std::pair{1.0, 1.0}, std::pair{0.25, 1.0}, std::pair{2.0, 0.5}, std::pair{0.3, 0.7}}) {
        const double mu = boundary_offset(Polynomial{c0, 0.0, c2}, minus_x, 1, cfg, 4.0);
        CHECK(std::abs(mu - 2.0 * std::sqrt(c0 * c2)) <= 4e-3);
    }
    CHECK_THROWS_AS(boundary_offset(Polynomial{1.0, 0.0, 1.0}, Polynomial{0.0, 1.0}, 1, cfg, 4.0), BadBracket);
    CHECK_THROWS_AS(boundary_offset(Polynomial{1.0, -3.0, 1.0}, minus_x, 1, cfg, 4.0), BadBracket);
    CHECK(boundary_offset(Polynomial{1.0, -2.0, 1.0}, minus_x, 1, cfg, 1.0) <= 1e-3);
}

TEST_CASE("trace_slice examples") {
    const auto cfg = small_config();
    const auto tr = trace_slice(Polynomial{1.0}, Polynomial{0.0, 0.0, 1.0}, Polynomial{0.0, -1.0}, 1, 9, cfg);
    REQUIRE(tr.points.size() == 9);
    for (const auto& pt : tr.points) {
        REQUIRE(pt.mu);
        CHECK(std::abs(*pt.mu - 2.0 * std::sqrt(pt.t * (1.0 - pt.t))) <= 1e-3);
    }
    CHECK(tr.points.front().t == doctest::Approx(0.1));
    CHECK(tr.residual > 0.01);

    const Polynomial x{0.0, 1.0};
    const auto flat = trace_slice(x, x, Polynomial{1.0}, 1, 5, cfg);
    REQUIRE(flat.points.size() == 5);
    for (const auto& pt : flat.points) CHECK_FALSE(pt.mu);

    const auto single = trace_slice(Polynomial{1.0}, Polynomial{0.0, 0.0, 1.0}, Polynomial{0.0, -1.0}, 1, 1, cfg);
    REQUIRE(single.points.size() == 1);
    CHECK(single.residual == 0.0);
    CHECK(*single.points[0].mu == doctest::Approx(1.0).epsilon(1e-3));
}
