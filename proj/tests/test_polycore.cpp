#include <doctest.h>

#include <cmath>
#include <random>

#include "nncone/errors.hpp"
#include "nncone/matrix.hpp"
#include "nncone/perron.hpp"
#include "nncone/polynomial.hpp"
#include "oracles.hpp"

using namespace nncone;

TEST_CASE("polynomial degree and arithmetic") {
    Polynomial p{1.0, 2.0, 0.0, 0.0};
    CHECK(p.degree() == 1);
    CHECK(p.size() == 4);
    CHECK(Polynomial{}.is_zero());
    CHECK(Polynomial{}.degree() == 0);
    CHECK(p == Polynomial{1.0, 2.0});

    const Polynomial q{-1.0, 0.0, 3.0};
    CHECK((p + q) == Polynomial{0.0, 2.0, 3.0});
    CHECK((p * q).degree() == p.degree() + q.degree());
    CHECK((p * q) == Polynomial{-1.0, -2.0, 3.0, 6.0});
    CHECK((2.0 * q) == Polynomial{-2.0, 0.0, 6.0});
}

TEST_CASE("eval_scalar") {
    CHECK(eval_scalar(Polynomial{1.0, -2.0, 1.0}, 1.0) == 0.0);
    CHECK(eval_scalar(Polynomial{}, 3.7) == 0.0);
    CHECK(eval_scalar(Polynomial{1.0, 1.0, -2.0, 0.0, 1.0, 1.0}, 2.0) == 43.0);
}

TEST_CASE("eval_matrix examples") {
    const SquareMatrix ones{{1.0, 1.0}, {1.0, 1.0}};
    CHECK(eval_matrix(Polynomial{0.0, 0.0, 1.0}, ones) == SquareMatrix{{2.0, 2.0}, {2.0, 2.0}});

    const Polynomial p{1.0, 1.0, -2.0, 0.0, 1.0, 1.0};
    const SquareMatrix half{{0.5, 0.5}, {0.5, 0.5}};
    CHECK(relative_error(eval_matrix(p, half), SquareMatrix{{1.5, 0.5}, {0.5, 1.5}}) < 1e-15);

    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        const auto r = oracle::random_poly(rng, 12);
        const auto id = SquareMatrix::identity(4);
        const auto diff = eval_matrix(r, id) - eval_scalar(r, 1.0) * id;
        CHECK(diff.max_abs() <= 1e-12);
    }
}

TEST_CASE("eval_matrix agrees with explicit power sums") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 1 + trial % 5;
        const auto p = oracle::random_poly(rng, 10);
        const auto a = oracle::random_positive(rng, n, -1.0, 1.0);
        CHECK(relative_error(eval_matrix(p, a), oracle::power_sum(p, a)) < 1e-11);
    }
}

TEST_CASE("eval_matrix linearity and multiplicativity") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t n = 1 + trial % 5;
        const auto p = oracle::random_poly(rng, 10);
        const auto q = oracle::random_poly(rng, 10);
        const auto a = oracle::random_positive(rng, n, 0.0, 1.0);
        const auto pa = eval_matrix(p, a), qa = eval_matrix(q, a);
        CHECK(relative_error(eval_matrix(p + q, a), pa + qa) <= 1e-9);
        CHECK(relative_error(eval_matrix(p * q, a), pa * qa) <= 1e-8);
    }
}

TEST_CASE("min_entry") {
    const auto e = min_entry(SquareMatrix{{1.5, 0.5}, {0.5, 1.5}});
    CHECK(e.value == 0.5);
    CHECK(e.i == 0);
    CHECK(e.j == 1);
    const auto f = min_entry(SquareMatrix{{-0.05}});
    CHECK(f.value == -0.05);
    CHECK(f.i == 0);
    CHECK(f.j == 0);
}

TEST_CASE("perron_normalize examples") {
    const double c = 0.37;
    const auto flat = perron_normalize(SquareMatrix(2, c));
    CHECK(flat.rho == doctest::Approx(2 * c).epsilon(1e-14));
    CHECK(flat.s(0, 0) == doctest::Approx(0.5));
    CHECK(flat.s(1, 0) == doctest::Approx(0.5));
    CHECK(flat.d[0] == doctest::Approx(flat.d[1]));

    // characteristic polynomial l^2 - 5l - 2
    const auto d = perron_normalize(SquareMatrix{{1.0, 2.0}, {3.0, 4.0}});
    CHECK(std::abs(d.rho - (5.0 + std::sqrt(33.0)) / 2.0) < 1e-9);
    CHECK(std::abs(d.rho * d.rho - 5.0 * d.rho - 2.0) < 1e-9 * d.rho * d.rho);
}

TEST_CASE("perron_normalize round trip on random positive matrices") {
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 1000; ++trial) {
        const std::size_t n = 1 + trial % 6;
        const auto a = oracle::random_positive(rng, n);
        const auto d = perron_normalize(a);
        CHECK(d.rho > 0.0);
        CHECK(relative_error(d.reconstruct(), a) <= 1e-10);
        CHECK(row_sum_error(d.s) <= 1e-12);
        for (double v : d.s.data()) CHECK(v > 0.0);
    }
}

TEST_CASE("perron_normalize errors") {
    CHECK_THROWS_AS(perron_normalize(SquareMatrix{{1.0, 0.0}, {1.0, 1.0}}), NonPositiveInput);
    CHECK_THROWS_AS(perron_normalize(SquareMatrix{{1.0, -2.0}, {1.0, 1.0}}), NonPositiveInput);
    // products overflow
    CHECK_THROWS_AS(perron_normalize(SquareMatrix{{1e308, 1e308}, {1e308, 1e308}}), NoConvergence);
    // spectral gap ~1e-6
    const SquareMatrix close{{1.0, 1e-9}, {1e-9, 1.0 + 1e-6}};
    const auto c = perron_normalize(close);
    CHECK(relative_error(c.reconstruct(), close) <= 1e-10);
    CHECK(row_sum_error(c.s) <= 1e-12);
}

TEST_CASE("sample_stochastic") {
    std::mt19937_64 rng(5);
    CHECK(sample_stochastic(1, rng, 0.3) == SquareMatrix{{1.0}});
    const auto u = sample_stochastic(3, rng, INFINITY);
    for (double v : u.data()) CHECK(v == doctest::Approx(1.0 / 3.0));
    const auto big = sample_stochastic(4, rng, 1e6);
    for (double v : big.data()) CHECK(v == doctest::Approx(0.25).epsilon(0.02));

    for (double conc : {0.01, 0.05, 0.3, 1.0, 10.0}) {
        for (int trial = 0; trial < 200; ++trial) {
            const auto s = sample_stochastic(1 + trial % 6, rng, conc);
            CHECK(row_sum_error(s) <= 1e-12);
            for (double v : s.data()) CHECK(v > 0.0);
        }
    }
}

TEST_CASE("derive_seed separates streams") {
    CHECK(derive_seed(1, 0) != derive_seed(1, 1));
    CHECK(derive_seed(1, 0) != derive_seed(2, 0));
    CHECK(derive_seed(9, 4) == derive_seed(9, 4));
}
