#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "nncone/membership.hpp"
#include "nncone/polynomial.hpp"
#include "nncone/rational_poly.hpp"

namespace nncone {

/// sum_{k<n} x^(k+s) - t x^m + sum_{k<n} x^(2m+k-s); needs m >= n >= 1, 0 <= s <= m - n.
struct LoewyGeneral {
    std::size_t n, m, s;
    double t;
};

/// sum_{k<m} x^k - alpha x^m + sum_{m<k<=2m} x^k with m = n ceil(alpha/2); alpha > 0.
struct Alpha {
    std::size_t n;
    double alpha;
};

/// sum_{k<n} x^k - t x^m + sum_{k<n} x^(s+k); needs s > m >= n >= 1.
struct ConjectureGap {
    std::size_t n, m, s;
    double t;
};

using FamilySpec = std::variant<LoewyGeneral, Alpha, ConjectureGap>;

Polynomial loewy_general(std::size_t n, std::size_t m, std::size_t s, double t);
Polynomial alpha_family(std::size_t n, double alpha);
Polynomial conjecture_family(std::size_t n, std::size_t m, std::size_t s, double t);

/// Throws InvalidSpec when the variant's constraints fail.
void validate(const FamilySpec& spec);
Polynomial build(const FamilySpec& spec);
/// The spec with its free parameter (t, or alpha) replaced.
FamilySpec with_parameter(const FamilySpec& spec, double value);
std::size_t family_order(const FamilySpec& spec);
std::string family_name(const FamilySpec& spec);

/// max_t over the family's free parameter.
MaxTResult max_t(const FamilySpec& spec, const SearchConfig& cfg, double t_hi, double width);

struct AlphaSplit {
    /// Block s has ones on degrees sn..sn+n-1 and m+1+sn..m+n(s+1), and -2 at m.
    std::vector<Polynomial> blocks;
    std::size_t slack_degree = 0;
    /// 2 ceil(alpha/2) - alpha, exact.
    Rational slack;
};

/// Decomposes alpha_family(n, alpha) into ceil(alpha/2) blocks from the
/// t = 2 family plus a nonnegative slack monomial at x^m.
AlphaSplit split_alpha(std::size_t n, double alpha);
/// Exact rational sum of the blocks and the slack monomial.
RationalPolynomial reassemble(const AlphaSplit& split);

enum class ConditionKind {
    LowBlock,   // coefficients of degrees 0..n-1 must be >= 0
    HighBlock,  // coefficients of the top n degrees must be >= 0
    HalfLine,   // p must be >= 0 on [0, inf) since P_n is inside P_1
};

struct Violation {
    ConditionKind kind;
    std::optional<std::size_t> degree;
};

/// Necessary conditions for membership in P_n; an empty result does not imply
/// membership. The zero polynomial has no violations.
std::vector<Violation> necessary_conditions(const Polynomial& p, std::size_t n);

struct ProjectionGap {
    /// Member of P_{n,k+1} with degree exactly k + 1.
    Polynomial completion;
    /// completion with its x^(k+1) term dropped; not in P_{n,k}.
    Polynomial projected;
    /// Witness against `projected` (absent for n = 1, where the check is exact).
    std::optional<Witness> witness;
};

/// A polynomial in pi(P_{n,k+1}) but outside P_{n,k}. For n = 1 this is
/// x^(k-1) - 2x^k, completed by x^(k-1)(1 - x)^2. For n >= 2 shifted t = 2
/// family members x^j loewy_general(n, m, s, 2) of degree k + 1 are tried in
/// order until one's projection is refuted; empty when none is.
/// Throws InvalidSpec when k < 2n.
std::optional<ProjectionGap> projection_gap_example(std::size_t n, std::size_t k, const SearchConfig& cfg);

}  // namespace nncone
