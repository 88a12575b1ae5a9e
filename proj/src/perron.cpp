#include "nncone/perron.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "nncone/errors.hpp"

namespace nncone {

SquareMatrix StochasticDecomposition::reconstruct() const {
    const std::size_t n = s.order();
    SquareMatrix a(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) a(i, j) = rho * d[i] * s(i, j) / d[j];
    }
    return a;
}

StochasticDecomposition perron_normalize(const SquareMatrix& a) {
    const std::size_t n = a.order();
    if (n == 0) throw NonPositiveInput("empty matrix");
    for (double v : a.data()) {
        if (!(v > 0.0) || !std::isfinite(v)) {
            throw NonPositiveInput("perron_normalize needs strictly positive finite entries");
        }
    }

    constexpr double tol = 1e-12;
    const std::size_t cap = 100 * n;
    std::vector<double> d(n, 1.0), ad(n), next(n);
    // b = A^(2^it) / scale: stepping with b visits the plain power iterates at
    // exponents 1, 2, 4, ..., so tiny spectral gaps still converge in few steps.
    SquareMatrix b = a;
    double rho = 0.0;
    bool converged = false;

    for (std::size_t it = 0; it < cap; ++it) {
        for (std::size_t i = 0; i < n; ++i) {
            double acc = 0.0;
            for (std::size_t j = 0; j < n; ++j) acc += a(i, j) * d[j];
            ad[i] = acc;
        }
        double lo = std::numeric_limits<double>::infinity(), hi = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            const double r = ad[i] / d[i];
            lo = std::min(lo, r);
            hi = std::max(hi, r);
        }
        if (!std::isfinite(hi) || !(lo > 0.0)) break;
        rho = 0.5 * (lo + hi);
        if (hi - lo <= tol * rho) {
            converged = true;
            break;
        }
        for (std::size_t i = 0; i < n; ++i) {
            double acc = 0.0;
            for (std::size_t j = 0; j < n; ++j) acc += b(i, j) * d[j];
            next[i] = acc;
        }
        const double scale = *std::max_element(next.begin(), next.end());
        if (!(scale > 0.0) || !std::isfinite(scale)) break;
        for (std::size_t i = 0; i < n; ++i) d[i] = next[i] / scale;
        b = b * b;
        const double bmax = b.max_abs();
        if (!(bmax > 0.0) || !std::isfinite(bmax)) break;
        b = b * (1.0 / bmax);
    }
    if (!converged) {
        throw NoConvergence("power iteration did not reach 1e-12 within " + std::to_string(cap) +
                            " iterations");
    }

    StochasticDecomposition out{rho, SquareMatrix(n), d};
    for (std::size_t i = 0; i < n; ++i) {
        double row = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            out.s(i, j) = a(i, j) * d[j] / (d[i] * rho);
            row += out.s(i, j);
        }
        for (std::size_t j = 0; j < n; ++j) out.s(i, j) /= row;
    }
    return out;
}

double row_sum_error(const SquareMatrix& m) {
    double worst = 0.0;
    for (std::size_t i = 0; i < m.order(); ++i) {
        double row = 0.0;
        for (std::size_t j = 0; j < m.order(); ++j) row += m(i, j);
        worst = std::max(worst, std::abs(row - 1.0));
    }
    return worst;
}

SquareMatrix sample_stochastic(std::size_t n, std::mt19937_64& rng, double concentration) {
    SquareMatrix s(n);
    if (std::isinf(concentration)) return SquareMatrix(n, 1.0 / static_cast<double>(n));
    std::gamma_distribution<double> gamma(concentration, 1.0);
    constexpr double floor = 1e-12;
    for (std::size_t i = 0; i < n; ++i) {
        double total = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            s(i, j) = gamma(rng);
            total += s(i, j);
        }
        if (!(total > 0.0)) {
            // every draw underflowed; fall back to a uniform row
            for (std::size_t j = 0; j < n; ++j) s(i, j) = 1.0;
            total = static_cast<double>(n);
        }
        double clamped = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            s(i, j) = std::max(s(i, j) / total, floor);
            clamped += s(i, j);
        }
        for (std::size_t j = 0; j < n; ++j) s(i, j) /= clamped;
    }
    return s;
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
    std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (stream + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

}  // namespace nncone
