#pragma once

#include <optional>
#include <vector>

#include "nncone/rational_poly.hpp"

namespace nncone {

/// Sturm chain of a square-free polynomial.
class SturmSequence {
public:
    explicit SturmSequence(const RationalPolynomial& squarefree);

    /// Sign variations at x (zeros skipped).
    int variations_at(const Rational& x) const;
    int variations_at_infinity() const;
    /// Distinct roots in (a, b] for a < b, neither endpoint a root.
    int count_roots(const Rational& a, const Rational& b) const;

private:
    std::vector<RationalPolynomial> chain_;
};

/// Exact decision of p(x) >= 0 for all x >= 0, i.e. membership of p in P_1.
bool is_nonneg_on_halfline(const RationalPolynomial& p);

/// A positive rational x0 with p(x0) < 0, or nullopt when p >= 0 on [0, inf).
///
/// The positive roots of the square-free part are isolated by Sturm
/// bisection; p keeps one sign on each gap between them, and the returned
/// point is the most negative of a few exactly-evaluated probes per gap.
std::optional<Rational> refute_halfline(const RationalPolynomial& p);

}  // namespace nncone
