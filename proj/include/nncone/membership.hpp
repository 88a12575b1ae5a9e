#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <variant>
#include <vector>

#include "nncone/matrix.hpp"
#include "nncone/polynomial.hpp"
#include "nncone/rational_poly.hpp"

namespace nncone {

/// Budget and tolerances for the refutation search.
struct SearchConfig {
    std::size_t restarts = 200;
    /// Objective evaluations per restart.
    std::size_t max_iters = 3000;
    double rho_log_lo = -10.0;
    double rho_log_hi = 10.0;
    /// Dirichlet concentrations cycled through for the initial stochastic
    /// matrices; every (size + 1)-th restart starts near a permutation.
    std::vector<double> concentrations{0.05, 0.3, 1.0};
    double confirm_tol = 1e-9;
    std::uint64_t seed = 0;
    /// Worker threads; 0 means hardware concurrency.
    std::size_t threads = 0;

    /// Throws std::invalid_argument on restarts == 0, a non-finite or empty
    /// log-rho range, or a nonpositive tolerance/concentration.
    void validate() const;
};

/// Where a witness came from.
enum class WitnessSource { ExactHalfline, ScalarLift, Search };

/// (p(rho S))_ij = value < 0 with S positive row-stochastic.
struct Witness {
    SquareMatrix s;
    double rho = 0.0;
    std::size_t i = 0;
    std::size_t j = 0;
    double value = 0.0;
};

struct Refuted {
    Witness witness;
    WitnessSource source = WitnessSource::Search;
    /// Restart that produced the witness (0 for the exact and lift routes).
    std::size_t restart = 0;
};

/// Not a membership certificate; only the budget that failed to refute.
struct NoRefutationFound {
    std::size_t restarts_used = 0;
    /// Lowest normalized objective min_ij p(rho S)_ij / sum_d |c_d| rho^d seen.
    double best_objective = 0.0;
};

/// Exact membership, only ever produced for n = 1.
struct ExactMember {};

using Verdict = std::variant<Refuted, NoRefutationFound, ExactMember>;

inline bool is_refuted(const Verdict& v) { return std::holds_alternative<Refuted>(v); }

/// One-sided membership test for P_n.
///
/// n = 1 is decided exactly on [0, inf). For n >= 2 a half-line witness x0 is
/// first lifted to rho = x0 on the uniform stochastic matrix; otherwise a
/// multistart Nelder-Mead search minimizes the smallest entry of p(e^tau S)
/// over S = row-softmax(theta) and tau in the configured range. Restarts are
/// independent and seeded from (cfg.seed, restart); the lowest-index confirmed
/// witness wins regardless of thread count.
Verdict refute(const Polynomial& p, std::size_t n, const SearchConfig& cfg);

/// Fresh long-double evaluation of (p(rho S))_ij.
long double witness_entry(const Polynomial& p, const Witness& w);

/// Exact value of (p(A))_ij for A = rho * S with every double read as the
/// rational it represents. A negative value with S > 0 is a proof that p is
/// not in P_n, independent of rounding and of how stochastic S really is.
Rational exact_witness_entry(const Polynomial& p, const Witness& w);

/// True iff S is positive with rows summing to 1 (within 1e-12) and the fresh
/// entry is below -tol and below the rounding-noise floor of the evaluation.
bool confirm_witness(const Polynomial& p, const Witness& w, double tol);

/// 1 - t (w rho^ell) + (w rho^ell)^2 >= 0.
bool scalar_walk_check(double w, double rho, unsigned ell, double t);

struct BisectionStep {
    double t;
    bool refuted;
};

struct MaxTResult {
    double lo = 0.0;
    double hi = 0.0;
    std::vector<BisectionStep> trace;
};

/// Bisects for the largest t with family(t) not refuted. family(0) must be a
/// member; throws NoUpperRefutation when family(t_hi) is not refuted.
MaxTResult max_t(const std::function<Polynomial(double)>& family, std::size_t n,
                 const SearchConfig& cfg, double t_hi, double width);

/// Largest mu with g + mu u not refuted, bisected on [0, mu_hi] to a bracket
/// of width <= rel_width * mu_hi; returns the bracket midpoint.
/// Throws BadBracket unless g is unrefuted and g + mu_hi u is refuted.
double boundary_offset(const Polynomial& g, const Polynomial& u, std::size_t n,
                       const SearchConfig& cfg, double mu_hi, double rel_width = 1e-3);

struct SlicePoint {
    double t;
    std::optional<double> mu;  // empty where the bracket failed
};

struct SliceTrace {
    std::vector<SlicePoint> points;
    /// Max perpendicular distance of the (t, mu) points from their
    /// least-squares line; 0 with fewer than three points.
    double residual = 0.0;
};

/// boundary_offset of (1 - t) p + t q along u at t = 1/(grid+1), ..., grid/(grid+1).
SliceTrace trace_slice(const Polynomial& p, const Polynomial& q, const Polynomial& u, std::size_t n,
                       std::size_t grid, const SearchConfig& cfg, double mu_hi = 2.0);

}  // namespace nncone
