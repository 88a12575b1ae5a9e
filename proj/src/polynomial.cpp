#include "nncone/polynomial.hpp"

#include <algorithm>
#include <cmath>

namespace nncone {

Polynomial::Polynomial(std::initializer_list<double> c) : coeffs_(c) {
    if (coeffs_.empty()) coeffs_.push_back(0.0);
}

Polynomial::Polynomial(std::vector<double> c) : coeffs_(std::move(c)) {
    if (coeffs_.empty()) coeffs_.push_back(0.0);
}

Polynomial Polynomial::monomial(std::size_t degree, double coefficient) {
    std::vector<double> c(degree + 1, 0.0);
    c[degree] = coefficient;
    return Polynomial(std::move(c));
}

std::size_t Polynomial::degree() const {
    for (std::size_t d = coeffs_.size(); d-- > 0;) {
        if (coeffs_[d] != 0.0) return d;
    }
    return 0;
}

bool Polynomial::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](double c) { return c == 0.0; });
}

void Polynomial::set_coeff(std::size_t d, double value) {
    if (d >= coeffs_.size()) coeffs_.resize(d + 1, 0.0);
    coeffs_[d] = value;
}

Polynomial Polynomial::trimmed() const {
    std::vector<double> c(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(degree() + 1));
    return Polynomial(std::move(c));
}

double Polynomial::max_abs() const {
    double m = 0.0;
    for (double c : coeffs_) m = std::max(m, std::abs(c));
    return m;
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), 0.0);
    for (std::size_t d = 0; d < rhs.coeffs_.size(); ++d) coeffs_[d] += rhs.coeffs_[d];
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), 0.0);
    for (std::size_t d = 0; d < rhs.coeffs_.size(); ++d) coeffs_[d] -= rhs.coeffs_[d];
    return *this;
}

Polynomial& Polynomial::operator*=(double s) {
    for (double& c : coeffs_) c *= s;
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    std::vector<double> c(a.coeffs_.size() + b.coeffs_.size() - 1, 0.0);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0.0) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return Polynomial(std::move(c));
}

bool operator==(const Polynomial& a, const Polynomial& b) {
    const std::size_t n = std::max(a.size(), b.size());
    for (std::size_t d = 0; d < n; ++d) {
        if (a.coeff(d) != b.coeff(d)) return false;
    }
    return true;
}

double eval_scalar(const Polynomial& p, double x) {
    const auto c = p.coeffs();
    double acc = 0.0;
    for (std::size_t d = c.size(); d-- > 0;) acc = acc * x + c[d];
    return acc;
}

}  // namespace nncone
