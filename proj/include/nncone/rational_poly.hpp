#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "nncone/polynomial.hpp"

namespace nncone {

using Rational = mpq_class;

/// How a conversion between exact and floating coefficients was carried out.
enum class Rounding {
    Exact,    // every coefficient converted without loss
    Nearest,  // at least one coefficient rounded to nearest double
};

/// Polynomial over Q. Stored trimmed: no trailing zeros; the zero polynomial
/// has no coefficients and degree -1.
class RationalPolynomial {
public:
    RationalPolynomial() = default;
    explicit RationalPolynomial(std::vector<Rational> c);

    /// Exact: every finite double is a dyadic rational.
    static RationalPolynomial from_polynomial(const Polynomial& p);
    static RationalPolynomial x_power(std::size_t d);

    struct Rounded {
        Polynomial poly;
        Rounding rounding;
    };
    Rounded to_polynomial() const;

    bool is_zero() const { return c_.empty(); }
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    const Rational& lead() const { return c_.back(); }
    Rational coeff(std::size_t d) const { return d < c_.size() ? c_[d] : Rational(0); }
    const std::vector<Rational>& coeffs() const { return c_; }

    Rational eval(const Rational& x) const;
    int sign_at(const Rational& x) const { return sgn(eval(x)); }
    RationalPolynomial derivative() const;
    /// Divide by |lead| so the leading coefficient is +-1 (signs are preserved).
    RationalPolynomial normalized() const;

    friend RationalPolynomial operator+(const RationalPolynomial& a, const RationalPolynomial& b);
    friend RationalPolynomial operator-(const RationalPolynomial& a, const RationalPolynomial& b);
    friend RationalPolynomial operator*(const RationalPolynomial& a, const RationalPolynomial& b);
    friend RationalPolynomial operator*(const RationalPolynomial& a, const Rational& s);
    friend bool operator==(const RationalPolynomial& a, const RationalPolynomial& b) {
        return a.c_ == b.c_;
    }

private:
    void trim();
    std::vector<Rational> c_;
};

/// Quotient and remainder of a by b (b nonzero).
std::pair<RationalPolynomial, RationalPolynomial> divmod(const RationalPolynomial& a,
                                                         const RationalPolynomial& b);
/// Monic gcd; gcd(0, 0) = 0.
RationalPolynomial gcd(const RationalPolynomial& a, const RationalPolynomial& b);

/// Yun's square-free factorization: p = lead(p) * prod_i factors[i]^(i+1),
/// with each factor monic, square-free and pairwise coprime.
std::vector<RationalPolynomial> squarefree_factors(const RationalPolynomial& p);

/// 1 + max_{i<deg} |a_i| / |lead|; strictly exceeds the modulus of every root.
Rational cauchy_bound(const RationalPolynomial& p);

/// "num/den" (or "num" when den = 1).
std::string to_string(const Rational& q);
/// Accepts "num/den", integers, and decimal literals such as "-2.5" or "1e-3".
Rational parse_rational(const std::string& s);

}  // namespace nncone
