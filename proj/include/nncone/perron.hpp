#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "nncone/matrix.hpp"

namespace nncone {

/// A positive matrix written as A = rho * diag(d) * S * diag(d)^-1 with S
/// positive and row-stochastic.
struct StochasticDecomposition {
    double rho = 0.0;
    SquareMatrix s;
    std::vector<double> d;

    SquareMatrix reconstruct() const;
};

/// Perron pair by power iteration from the all-ones vector.
///
/// Stops once the Collatz-Wielandt bounds min_i (Ad)_i/d_i and max_i (Ad)_i/d_i
/// agree to 1e-12 relative, which also bounds every row-sum error of S.
/// Throws NonPositiveInput if some entry is <= 0 (or not finite), and
/// NoConvergence after 100 * n iterations.
StochasticDecomposition perron_normalize(const SquareMatrix& a);

/// Max |row sum - 1| over the rows of m.
double row_sum_error(const SquareMatrix& m);

/// Positive row-stochastic matrix with rows drawn from a symmetric Dirichlet
/// distribution. Entries are clamped below at 1e-12 and the row renormalized.
/// concentration = +inf gives the uniform matrix.
SquareMatrix sample_stochastic(std::size_t n, std::mt19937_64& rng, double concentration);

/// Independent substream seed for (seed, stream) via splitmix64.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream);

}  // namespace nncone
