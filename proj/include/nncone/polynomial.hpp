#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace nncone {

/// Real polynomial stored densely by degree: coeff(d) multiplies x^d.
///
/// Storage always holds at least one coefficient. Trailing zeros are allowed;
/// degree() reports the last nonzero index (0 for the zero polynomial).
class Polynomial {
public:
    Polynomial() : coeffs_(1, 0.0) {}
    Polynomial(std::initializer_list<double> c);
    explicit Polynomial(std::vector<double> c);

    static Polynomial monomial(std::size_t degree, double coefficient = 1.0);

    std::size_t degree() const;
    bool is_zero() const;

    /// Coefficient of x^d; zero past the stored length.
    double coeff(std::size_t d) const { return d < coeffs_.size() ? coeffs_[d] : 0.0; }
    void set_coeff(std::size_t d, double value);

    std::span<const double> coeffs() const { return coeffs_; }
    std::size_t size() const { return coeffs_.size(); }

    /// Copy with trailing zeros removed (keeps one entry for the zero polynomial).
    Polynomial trimmed() const;
    /// Max-abs coefficient.
    double max_abs() const;

    Polynomial& operator+=(const Polynomial& rhs);
    Polynomial& operator-=(const Polynomial& rhs);
    Polynomial& operator*=(double s);

    friend Polynomial operator+(Polynomial lhs, const Polynomial& rhs) { return lhs += rhs; }
    friend Polynomial operator-(Polynomial lhs, const Polynomial& rhs) { return lhs -= rhs; }
    friend Polynomial operator*(Polynomial p, double s) { return p *= s; }
    friend Polynomial operator*(double s, Polynomial p) { return p *= s; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

    /// Coefficient-wise equality after trimming trailing zeros.
    friend bool operator==(const Polynomial& a, const Polynomial& b);

private:
    std::vector<double> coeffs_;
};

/// Horner evaluation at a real point.
double eval_scalar(const Polynomial& p, double x);

}  // namespace nncone
