#include <h3/linalg.hpp>

namespace h3 {

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Golden(1);
    return m;
}

Matrix Matrix::transpose() const {
    Matrix t(cols, rows);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) t.at(j, i) = at(i, j);
    return t;
}

Matrix operator*(const Matrix& x, const Matrix& y) {
    if (x.cols != y.rows) throw SpaceMismatch("matrix product shapes");
    Matrix out(x.rows, y.cols);
    for (std::size_t i = 0; i < x.rows; ++i)
        for (std::size_t k = 0; k < x.cols; ++k) {
            const Golden& v = x.at(i, k);
            if (v.is_zero()) continue;
            for (std::size_t j = 0; j < y.cols; ++j) out.at(i, j) += v * y.at(k, j);
        }
    return out;
}

Matrix operator+(Matrix x, const Matrix& y) {
    if (x.rows != y.rows || x.cols != y.cols) throw SpaceMismatch("matrix sum shapes");
    for (std::size_t i = 0; i < x.a.size(); ++i) x.a[i] += y.a[i];
    return x;
}

Matrix operator-(Matrix x, const Matrix& y) {
    if (x.rows != y.rows || x.cols != y.cols) throw SpaceMismatch("matrix sum shapes");
    for (std::size_t i = 0; i < x.a.size(); ++i) x.a[i] -= y.a[i];
    return x;
}

Golden Matrix::trace() const {
    Golden t;
    for (std::size_t i = 0; i < rows && i < cols; ++i) t += at(i, i);
    return t;
}

std::vector<Golden> Matrix::apply(const std::vector<Golden>& v) const {
    if (v.size() != cols) throw SpaceMismatch("matrix apply shapes");
    std::vector<Golden> out(rows);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) out[i] += at(i, j) * v[j];
    return out;
}

namespace {

// in-place reduced row echelon form; returns pivot column per pivot row
std::vector<std::size_t> rref(Matrix& m) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols && row < m.rows; ++col) {
        std::size_t sel = row;
        while (sel < m.rows && m.at(sel, col).is_zero()) ++sel;
        if (sel == m.rows) continue;
        if (sel != row)
            for (std::size_t j = 0; j < m.cols; ++j) std::swap(m.at(sel, j), m.at(row, j));
        Golden inv = m.at(row, col).inv();
        for (std::size_t j = col; j < m.cols; ++j) m.at(row, j) *= inv;
        for (std::size_t i = 0; i < m.rows; ++i) {
            if (i == row || m.at(i, col).is_zero()) continue;
            Golden f = m.at(i, col);
            for (std::size_t j = col; j < m.cols; ++j) m.at(i, j) -= f * m.at(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

}  // namespace

Golden Matrix::det() const {
    if (rows != cols) throw SpaceMismatch("det of non-square");
    Matrix m = *this;
    Golden d(1);
    for (std::size_t col = 0; col < m.cols; ++col) {
        std::size_t sel = col;
        while (sel < m.rows && m.at(sel, col).is_zero()) ++sel;
        if (sel == m.rows) return Golden();
        if (sel != col) {
            for (std::size_t j = 0; j < m.cols; ++j) std::swap(m.at(sel, j), m.at(col, j));
            d = -d;
        }
        d *= m.at(col, col);
        Golden inv = m.at(col, col).inv();
        for (std::size_t i = col + 1; i < m.rows; ++i) {
            if (m.at(i, col).is_zero()) continue;
            Golden f = m.at(i, col) * inv;
            for (std::size_t j = col; j < m.cols; ++j) m.at(i, j) -= f * m.at(col, j);
        }
    }
    return d;
}

std::size_t Matrix::rank() const {
    Matrix m = *this;
    return rref(m).size();
}

std::vector<Golden> Matrix::solve(const std::vector<Golden>& b) const {
    if (b.size() != rows) throw SpaceMismatch("solve rhs length");
    Matrix aug(rows, cols + 1);
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) aug.at(i, j) = at(i, j);
        aug.at(i, cols) = b[i];
    }
    auto pivots = rref(aug);
    if (!pivots.empty() && pivots.back() == cols)
        throw NotInImage("inconsistent linear system");
    if (pivots.size() < cols) throw UnsplitDegeneracy("solution not unique");
    std::vector<Golden> x(cols);
    for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug.at(i, cols);
    return x;
}

std::vector<std::vector<Golden>> Matrix::nullspace() const {
    Matrix m = *this;
    auto pivots = rref(m);
    std::vector<bool> is_pivot(cols, false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<std::vector<Golden>> basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        std::vector<Golden> v(cols);
        v[free] = Golden(1);
        for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -m.at(i, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

namespace {

// p(lambda) stored ascending; returns (lambda - r) * p
std::vector<Golden> shift_mul(const std::vector<Golden>& p, const Golden& r) {
    std::vector<Golden> out(p.size() + 1);
    for (std::size_t i = 0; i < p.size(); ++i) {
        out[i + 1] += p[i];
        out[i] -= r * p[i];
    }
    return out;
}

void axpy(std::vector<Golden>& acc, const Golden& c, const std::vector<Golden>& p) {
    for (std::size_t i = 0; i < p.size(); ++i) acc[i] += c * p[i];
}

}  // namespace

std::vector<Golden> Matrix::charpoly() const {
    if (rows != cols) throw SpaceMismatch("charpoly of non-square");
    std::size_t n = rows;
    Matrix h = *this;

    // similarity reduction to upper Hessenberg (swap acts on rows and columns)
    for (std::size_t j = 0; j + 2 < n; ++j) {
        std::size_t sel = j + 1;
        while (sel < n && h.at(sel, j).is_zero()) ++sel;
        if (sel == n) continue;
        if (sel != j + 1) {
            for (std::size_t k = 0; k < n; ++k) std::swap(h.at(sel, k), h.at(j + 1, k));
            for (std::size_t k = 0; k < n; ++k) std::swap(h.at(k, sel), h.at(k, j + 1));
        }
        Golden inv = h.at(j + 1, j).inv();
        for (std::size_t i = j + 2; i < n; ++i) {
            if (h.at(i, j).is_zero()) continue;
            Golden f = h.at(i, j) * inv;
            for (std::size_t k = 0; k < n; ++k) h.at(i, k) -= f * h.at(j + 1, k);
            for (std::size_t k = 0; k < n; ++k) h.at(k, j + 1) += f * h.at(k, i);
        }
    }

    // leading principal minors of (lambda I - H)
    std::vector<std::vector<Golden>> p(n + 1);
    p[0] = {Golden(1)};
    for (std::size_t i = 1; i <= n; ++i) {
        std::vector<Golden> cur = shift_mul(p[i - 1], h.at(i - 1, i - 1));
        Golden prod(1);
        for (std::size_t k = 1; k < i; ++k) {
            prod *= h.at(i - k, i - k - 1);
            if (prod.is_zero()) break;
            axpy(cur, -(h.at(i - k - 1, i - 1) * prod), p[i - k - 1]);
        }
        p[i] = std::move(cur);
    }
    return p[n];
}

bool Echelon::insert(const std::vector<Golden>& v) {
    if (v.size() != width_) throw SpaceMismatch("echelon row width");
    std::vector<Golden> r = v;
    std::vector<Golden> combo(inserted_ + 1);
    combo[inserted_] = Golden(1);
    ++inserted_;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        const Golden& f = r[pivots_[i]];
        if (f.is_zero()) continue;
        Golden c = f;  // rows are pivot-normalized
        for (std::size_t j = 0; j < width_; ++j) r[j] -= c * rows_[i][j];
        for (std::size_t j = 0; j < combos_[i].size(); ++j) combo[j] -= c * combos_[i][j];
    }
    std::size_t piv = 0;
    while (piv < width_ && r[piv].is_zero()) ++piv;
    if (piv == width_) return false;
    Golden inv = r[piv].inv();
    for (auto& x : r) x *= inv;
    for (auto& x : combo) x *= inv;
    // keep earlier rows reduced against the new pivot
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        const Golden f = rows_[i][piv];
        if (f.is_zero()) continue;
        for (std::size_t j = 0; j < width_; ++j) rows_[i][j] -= f * r[j];
        combos_[i].resize(inserted_);
        for (std::size_t j = 0; j < combo.size(); ++j) combos_[i][j] -= f * combo[j];
    }
    rows_.push_back(std::move(r));
    pivots_.push_back(piv);
    combos_.push_back(std::move(combo));
    return true;
}

bool Echelon::contains(const std::vector<Golden>& v) const {
    if (v.size() != width_) throw SpaceMismatch("echelon row width");
    std::vector<Golden> r = v;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        const Golden f = r[pivots_[i]];
        if (f.is_zero()) continue;
        for (std::size_t j = 0; j < width_; ++j) r[j] -= f * rows_[i][j];
    }
    for (const auto& x : r)
        if (!x.is_zero()) return false;
    return true;
}

std::vector<Golden> Echelon::express(const std::vector<Golden>& v) const {
    if (v.size() != width_) throw SpaceMismatch("echelon row width");
    std::vector<Golden> r = v;
    std::vector<Golden> out(inserted_);
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        const Golden f = r[pivots_[i]];
        if (f.is_zero()) continue;
        for (std::size_t j = 0; j < width_; ++j) r[j] -= f * rows_[i][j];
        for (std::size_t j = 0; j < combos_[i].size(); ++j) out[j] += f * combos_[i][j];
    }
    for (const auto& x : r)
        if (!x.is_zero()) throw NotInImage("vector outside the span");
    return out;
}

}  // namespace h3
