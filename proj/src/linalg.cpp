#include "hg/linalg.hpp"

#include <stdexcept>

namespace hg {

RatMat RatMat::identity(std::size_t n) {
    RatMat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

RatMat RatMat::transpose() const {
    RatMat t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

RatMat RatMat::operator*(const RatMat& rhs) const {
    if (cols_ != rhs.rows_) throw std::invalid_argument("RatMat: size mismatch in product");
    RatMat out(rows_, rhs.cols_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Rat& a = (*this)(r, k);
            if (a == 0) continue;
            for (std::size_t c = 0; c < rhs.cols_; ++c) {
                const Rat& b = rhs(k, c);
                if (b != 0) out(r, c) += a * b;
            }
        }
    return out;
}

RatMat RatMat::operator+(const RatMat& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw std::invalid_argument("RatMat: size mismatch in sum");
    RatMat out(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] + rhs.data_[i];
    return out;
}

RatMat RatMat::operator-(const RatMat& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw std::invalid_argument("RatMat: size mismatch in difference");
    RatMat out(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] - rhs.data_[i];
    return out;
}

std::vector<Rat> RatMat::apply(const std::vector<Rat>& v) const {
    if (v.size() != cols_) throw std::invalid_argument("RatMat: size mismatch in apply");
    std::vector<Rat> out(rows_, Rat(0));
    for (std::size_t r = 0; r < rows_; ++r) {
        Rat acc(0);
        for (std::size_t c = 0; c < cols_; ++c) {
            const Rat& a = (*this)(r, c);
            if (a != 0 && v[c] != 0) acc += a * v[c];
        }
        out[r] = acc;
    }
    return out;
}

Rref rref(RatMat m) {
    const std::size_t nr = m.rows(), nc = m.cols();
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < nc && row < nr; ++col) {
        // Prefer a +-1 pivot; it keeps entries small through the elimination.
        std::size_t pr = nr;
        for (std::size_t r = row; r < nr; ++r) {
            const Rat& v = m(r, col);
            if (v == 0) continue;
            if (pr == nr) pr = r;
            if (v == 1 || v == -1) { pr = r; break; }
        }
        if (pr == nr) continue;
        if (pr != row)
            for (std::size_t c = col; c < nc; ++c) std::swap(m(row, c), m(pr, c));
        Rat inv = Rat(1) / m(row, col);
        if (inv != 1)
            for (std::size_t c = col; c < nc; ++c)
                if (m(row, c) != 0) m(row, c) *= inv;
        for (std::size_t r = 0; r < nr; ++r) {
            if (r == row) continue;
            const Rat f = m(r, col);
            if (f == 0) continue;
            for (std::size_t c = col; c < nc; ++c)
                if (m(row, c) != 0) m(r, c) -= f * m(row, c);
        }
        pivots.push_back(col);
        ++row;
    }
    return {std::move(m), std::move(pivots)};
}

std::size_t rank(const RatMat& m) { return rref(m).rank(); }

std::vector<std::vector<Rat>> nullspace(const RatMat& m) {
    Rref r = rref(m);
    const std::size_t nc = m.cols();
    std::vector<bool> is_pivot(nc, false);
    for (std::size_t c : r.pivot_cols) is_pivot[c] = true;

    std::vector<std::vector<Rat>> basis;
    for (std::size_t free_col = 0; free_col < nc; ++free_col) {
        if (is_pivot[free_col]) continue;
        std::vector<Rat> v(nc, Rat(0));
        v[free_col] = 1;
        for (std::size_t i = 0; i < r.pivot_cols.size(); ++i)
            v[r.pivot_cols[i]] = -r.mat(i, free_col);
        basis.push_back(integer_normalize(v));
    }
    return basis;
}

std::optional<std::vector<Rat>> solve(const RatMat& a, const std::vector<Rat>& b) {
    if (b.size() != a.rows()) throw std::invalid_argument("solve: rhs size mismatch");
    RatMat aug(a.rows(), a.cols() + 1);
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c) aug(r, c) = a(r, c);
        aug(r, a.cols()) = b[r];
    }
    Rref r = rref(std::move(aug));
    std::vector<Rat> x(a.cols(), Rat(0));
    for (std::size_t i = 0; i < r.pivot_cols.size(); ++i) {
        if (r.pivot_cols[i] == a.cols()) return std::nullopt;  // 0 = 1 row
        x[r.pivot_cols[i]] = r.mat(i, a.cols());
    }
    return x;
}

} // namespace hg
