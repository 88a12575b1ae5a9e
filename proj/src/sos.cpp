#include "nncone/sos.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <complex>
#include <vector>

#include "nncone/errors.hpp"
#include "nncone/halfline.hpp"

namespace nncone {
namespace {

using cd = std::complex<double>;

Polynomial times_x(const Polynomial& p) {
    std::vector<double> c(p.size() + 1, 0.0);
    std::copy(p.coeffs().begin(), p.coeffs().end(), c.begin() + 1);
    return Polynomial(std::move(c));
}

// re + i*im with real polynomial parts
struct ComplexPoly {
    Polynomial re, im;

    ComplexPoly conj() const { return {re, -1.0 * im}; }
    friend ComplexPoly operator*(const ComplexPoly& a, const ComplexPoly& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend ComplexPoly operator+(const ComplexPoly& a, const ComplexPoly& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend ComplexPoly operator-(const ComplexPoly& a, const ComplexPoly& b) {
        return {a.re - b.re, a.im - b.im};
    }
};

// |a|^2 + x |b|^2
struct Atom {
    ComplexPoly a, b;
    double key = 0.0;
};

Atom compose(const Atom& u, const Atom& v) {
    const ComplexPoly xb1 = {times_x(u.b.re), times_x(u.b.im)};
    return {u.a * v.a - xb1 * v.b.conj(), u.a * v.b + u.b * v.a.conj(), std::max(u.key, v.key)};
}

Atom constant_atom(double c) {
    return {{Polynomial{c}, Polynomial{0.0}}, {Polynomial{0.0}, Polynomial{0.0}}, 0.0};
}

cd eval_complex(const std::vector<double>& c, cd z, cd* derivative) {
    cd acc = 0.0, dacc = 0.0;
    for (std::size_t d = c.size(); d-- > 0;) {
        dacc = dacc * z + acc;
        acc = acc * z + c[d];
    }
    if (derivative) *derivative = dacc;
    return acc;
}

std::vector<cd> companion_roots(const std::vector<double>& monic) {
    const auto deg = static_cast<Eigen::Index>(monic.size() - 1);
    Eigen::MatrixXd comp = Eigen::MatrixXd::Zero(deg, deg);
    for (Eigen::Index i = 1; i < deg; ++i) comp(i, i - 1) = 1.0;
    for (Eigen::Index i = 0; i < deg; ++i) comp(i, deg - 1) = -monic[static_cast<std::size_t>(i)];
    Eigen::EigenSolver<Eigen::MatrixXd> solver(comp, false);
    std::vector<cd> roots;
    for (Eigen::Index i = 0; i < deg; ++i) {
        cd z = solver.eigenvalues()(i);
        // a few guarded Newton steps; imaginary parts of real roots stay exactly zero
        for (int it = 0; it < 3; ++it) {
            cd dp;
            const cd pz = eval_complex(monic, z, &dp);
            if (std::abs(dp) == 0.0) break;
            cd next = z - pz / dp;
            if (z.imag() == 0.0) next = {next.real(), 0.0};
            if (std::abs(eval_complex(monic, next, nullptr)) >= std::abs(pz)) break;
            z = next;
        }
        roots.push_back(z);
    }
    return roots;
}

}  // namespace

Polynomial SosDecomposition::reconstruct() const {
    return f1 * f1 + f2 * f2 + times_x(g1 * g1 + g2 * g2);
}

SosDecomposition polya_szego_decompose(const Polynomial& p_in) {
    const Polynomial p = p_in.trimmed();
    if (!is_nonneg_on_halfline(RationalPolynomial::from_polynomial(p))) {
        throw NotNonnegative("polynomial is negative somewhere on [0, inf)");
    }
    SosDecomposition out{Polynomial{0.0}, Polynomial{0.0}, Polynomial{0.0}, Polynomial{0.0}, 0.0};
    if (p.is_zero()) return out;

    std::size_t zeros = 0;
    while (p.coeff(zeros) == 0.0) ++zeros;
    const double lead = p.coeff(p.degree());
    std::vector<double> monic(p.coeffs().begin() + static_cast<std::ptrdiff_t>(zeros), p.coeffs().end());
    for (double& c : monic) c /= lead;

    std::vector<Atom> atoms;
    const Polynomial x{0.0, 1.0};
    const Polynomial zero{0.0};
    for (std::size_t k = 0; k + 1 < zeros; k += 2) atoms.push_back({{x, zero}, {zero, zero}, 0.0});
    if (zeros % 2 == 1) atoms.push_back({{zero, zero}, {Polynomial{1.0}, zero}, 0.0});

    if (monic.size() > 1) {
        const auto roots = companion_roots(monic);
        std::vector<double> positive;
        for (const cd& z : roots) {
            if (z.imag() > 0.0) {
                atoms.push_back({{Polynomial{-z.real(), 1.0}, Polynomial{z.imag()}}, {zero, zero}, std::abs(z)});
            } else if (z.imag() == 0.0) {
                if (z.real() > 0.0) {
                    positive.push_back(z.real());
                } else {
                    atoms.push_back({{Polynomial{std::sqrt(-z.real())}, zero}, {Polynomial{1.0}, zero},
                                     -z.real()});
                }
            }
        }
        std::sort(positive.begin(), positive.end());
        if (positive.size() % 2 == 1) {
            // an odd leftover can only be a zero root that drifted positive
            atoms.push_back({{zero, zero}, {Polynomial{1.0}, zero}, positive.front()});
            positive.erase(positive.begin());
        }
        for (std::size_t k = 0; k + 1 < positive.size(); k += 2) {
            const double mid = 0.5 * (positive[k] + positive[k + 1]);
            atoms.push_back({{Polynomial{-mid, 1.0}, zero}, {zero, zero}, mid});
        }
    }
    if (atoms.empty()) atoms.push_back(constant_atom(1.0));

    std::stable_sort(atoms.begin(), atoms.end(), [](const Atom& a, const Atom& b) { return a.key < b.key; });
    while (atoms.size() > 1) {
        std::vector<Atom> next;
        for (std::size_t k = 0; k + 1 < atoms.size(); k += 2) next.push_back(compose(atoms[k], atoms[k + 1]));
        if (atoms.size() % 2 == 1) next.push_back(atoms.back());
        atoms = std::move(next);
    }

    const double s = std::sqrt(lead);
    out.f1 = (s * atoms[0].a.re).trimmed();
    out.f2 = (s * atoms[0].a.im).trimmed();
    out.g1 = (s * atoms[0].b.re).trimmed();
    out.g2 = (s * atoms[0].b.im).trimmed();
    out.residual = (p - out.reconstruct()).max_abs();
    if (out.residual > 1e-6 * p.max_abs()) {
        throw IllConditioned("decomposition residual " + std::to_string(out.residual) + " exceeds tolerance");
    }
    return out;
}

}  // namespace nncone
