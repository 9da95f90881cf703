#pragma once

#include <h3/golden.hpp>

#include <vector>

namespace h3 {

// dense matrix over Q(sqrt 5); all elimination is exact field arithmetic
struct Matrix {
    std::size_t rows = 0, cols = 0;
    std::vector<Golden> a;  // row-major

    Matrix() = default;
    Matrix(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c) {}
    static Matrix identity(std::size_t n);

    Golden& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
    const Golden& at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }

    Matrix transpose() const;
    friend Matrix operator*(const Matrix& x, const Matrix& y);
    friend Matrix operator+(Matrix x, const Matrix& y);
    friend Matrix operator-(Matrix x, const Matrix& y);
    friend bool operator==(const Matrix& x, const Matrix& y) {
        return x.rows == y.rows && x.cols == y.cols && x.a == y.a;
    }

    Golden trace() const;
    Golden det() const;
    std::size_t rank() const;

    // one solution of A x = b; throws NotInImage if inconsistent,
    // UnsplitDegeneracy if the solution is not unique
    std::vector<Golden> solve(const std::vector<Golden>& b) const;

    std::vector<std::vector<Golden>> nullspace() const;

    // coefficients c[0..n] of det(lambda I - A), ascending, c[n] = 1;
    // Hessenberg reduction then the leading-minor recurrence
    std::vector<Golden> charpoly() const;

    std::vector<Golden> apply(const std::vector<Golden>& v) const;
};

// growing reduced row basis with combination tracking: each accepted row
// remembers how it was built from the inserted vectors, so span membership
// comes back with explicit coefficients
class Echelon {
public:
    explicit Echelon(std::size_t width) : width_(width) {}

    // true if v enlarged the span, false if it was already contained
    bool insert(const std::vector<Golden>& v);
    bool contains(const std::vector<Golden>& v) const;

    // coefficients over the inserted vectors reproducing v; throws NotInImage
    std::vector<Golden> express(const std::vector<Golden>& v) const;

    std::size_t rank() const { return rows_.size(); }
    std::size_t inserted() const { return inserted_; }
    std::size_t width() const { return width_; }

private:
    std::size_t width_;
    std::size_t inserted_ = 0;
    std::vector<std::vector<Golden>> rows_;    // reduced, pivot-normalized
    std::vector<std::size_t> pivots_;          // pivot column of each row
    std::vector<std::vector<Golden>> combos_;  // rows_[i] = sum combos_[i][j] * input j
};

}  // namespace h3
