#pragma once

#include "nncone/polynomial.hpp"

namespace nncone {

/// p = f1^2 + f2^2 + x (g1^2 + g2^2).
struct SosDecomposition {
    Polynomial f1, f2, g1, g2;
    /// Max-abs coefficient of p minus the reconstruction.
    double residual = 0.0;

    Polynomial reconstruct() const;
};

/// Polya-Szego representation of a polynomial nonnegative on [0, inf).
///
/// Roots come from the companion matrix. Each conjugate pair gives
/// (x - a)^2 + b^2, each real root -a <= 0 gives a + x, positive real roots
/// are paired into squares, and the atoms are multiplied together (sorted by
/// root modulus, combined pairwise) with the composition law
///   (|A1|^2 + x|B1|^2)(|A2|^2 + x|B2|^2)
///     = |A1 A2 - x B1 conj(B2)|^2 + x |A1 B2 + B1 conj(A2)|^2
/// for complex polynomials A = f1 + i f2, B = g1 + i g2.
///
/// Throws NotNonnegative when the exact oracle rejects p, and IllConditioned
/// when the residual exceeds 1e-6 * max |coeff(p)|.
SosDecomposition polya_szego_decompose(const Polynomial& p);

}  // namespace nncone
