#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "nncone/polynomial.hpp"

namespace nncone {

/// Dense n x n real matrix, row-major.
class SquareMatrix {
public:
    SquareMatrix() = default;
    explicit SquareMatrix(std::size_t n, double fill = 0.0) : n_(n), a_(n * n, fill) {}
    SquareMatrix(std::initializer_list<std::initializer_list<double>> rows);

    /// Throws std::invalid_argument unless every row has rows.size() entries.
    static SquareMatrix from_rows(const std::vector<std::vector<double>>& rows);
    static SquareMatrix identity(std::size_t n);

    std::size_t order() const { return n_; }
    double& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
    double operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }
    const std::vector<double>& data() const { return a_; }

    std::vector<std::vector<double>> rows() const;
    bool all_finite() const;
    double max_abs() const;

    SquareMatrix& operator+=(const SquareMatrix& rhs);
    SquareMatrix& operator-=(const SquareMatrix& rhs);
    SquareMatrix& operator*=(double s);
    friend SquareMatrix operator+(SquareMatrix a, const SquareMatrix& b) { return a += b; }
    friend SquareMatrix operator-(SquareMatrix a, const SquareMatrix& b) { return a -= b; }
    friend SquareMatrix operator*(SquareMatrix a, double s) { return a *= s; }
    friend SquareMatrix operator*(double s, SquareMatrix a) { return a *= s; }
    friend SquareMatrix operator*(const SquareMatrix& a, const SquareMatrix& b);
    friend bool operator==(const SquareMatrix&, const SquareMatrix&) = default;

private:
    std::size_t n_ = 0;
    std::vector<double> a_;
};

/// p(A) = sum_d coeff(d) A^d, accumulated in Horner order with A^0 = I.
SquareMatrix eval_matrix(const Polynomial& p, const SquareMatrix& a);

struct EntryRef {
    double value;
    std::size_t i;
    std::size_t j;
};

/// Smallest entry; ties go to the first position in row-major order.
EntryRef min_entry(const SquareMatrix& m);

/// Max |(A - B)_ij| / max(1, max |B_ij|).
double relative_error(const SquareMatrix& a, const SquareMatrix& b);

}  // namespace nncone
