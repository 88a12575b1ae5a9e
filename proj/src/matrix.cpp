#include "nncone/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace nncone {

SquareMatrix::SquareMatrix(std::initializer_list<std::initializer_list<double>> rows)
    : n_(rows.size()), a_() {
    a_.reserve(n_ * n_);
    for (const auto& r : rows) {
        if (r.size() != n_) throw std::invalid_argument("matrix is not square");
        a_.insert(a_.end(), r.begin(), r.end());
    }
}

SquareMatrix SquareMatrix::from_rows(const std::vector<std::vector<double>>& rows) {
    SquareMatrix m(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != rows.size()) throw std::invalid_argument("matrix is not square");
        std::copy(rows[i].begin(), rows[i].end(), m.a_.begin() + static_cast<std::ptrdiff_t>(i * m.n_));
    }
    return m;
}

SquareMatrix SquareMatrix::identity(std::size_t n) {
    SquareMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

std::vector<std::vector<double>> SquareMatrix::rows() const {
    std::vector<std::vector<double>> out(n_);
    for (std::size_t i = 0; i < n_; ++i) {
        out[i].assign(a_.begin() + static_cast<std::ptrdiff_t>(i * n_),
                      a_.begin() + static_cast<std::ptrdiff_t>((i + 1) * n_));
    }
    return out;
}

bool SquareMatrix::all_finite() const {
    return std::all_of(a_.begin(), a_.end(), [](double v) { return std::isfinite(v); });
}

double SquareMatrix::max_abs() const {
    double m = 0.0;
    for (double v : a_) m = std::max(m, std::abs(v));
    return m;
}

SquareMatrix& SquareMatrix::operator+=(const SquareMatrix& rhs) {
    if (rhs.n_ != n_) throw std::invalid_argument("matrix order mismatch");
    for (std::size_t k = 0; k < a_.size(); ++k) a_[k] += rhs.a_[k];
    return *this;
}

SquareMatrix& SquareMatrix::operator-=(const SquareMatrix& rhs) {
    if (rhs.n_ != n_) throw std::invalid_argument("matrix order mismatch");
    for (std::size_t k = 0; k < a_.size(); ++k) a_[k] -= rhs.a_[k];
    return *this;
}

SquareMatrix& SquareMatrix::operator*=(double s) {
    for (double& v : a_) v *= s;
    return *this;
}

SquareMatrix operator*(const SquareMatrix& a, const SquareMatrix& b) {
    if (a.n_ != b.n_) throw std::invalid_argument("matrix order mismatch");
    const std::size_t n = a.n_;
    SquareMatrix c(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < n; ++k) {
            const double aik = a.a_[i * n + k];
            for (std::size_t j = 0; j < n; ++j) c.a_[i * n + j] += aik * b.a_[k * n + j];
        }
    }
    return c;
}

SquareMatrix eval_matrix(const Polynomial& p, const SquareMatrix& a) {
    const std::size_t n = a.order();
    const std::size_t deg = p.degree();
    SquareMatrix acc(n);
    for (std::size_t i = 0; i < n; ++i) acc(i, i) = p.coeff(deg);
    for (std::size_t d = deg; d-- > 0;) {
        acc = acc * a;
        const double c = p.coeff(d);
        for (std::size_t i = 0; i < n; ++i) acc(i, i) += c;
    }
    return acc;
}

EntryRef min_entry(const SquareMatrix& m) {
    EntryRef best{m(0, 0), 0, 0};
    for (std::size_t i = 0; i < m.order(); ++i) {
        for (std::size_t j = 0; j < m.order(); ++j) {
            if (m(i, j) < best.value) best = {m(i, j), i, j};
        }
    }
    return best;
}

double relative_error(const SquareMatrix& a, const SquareMatrix& b) {
    return (a - b).max_abs() / std::max(1.0, b.max_abs());
}

}  // namespace nncone
