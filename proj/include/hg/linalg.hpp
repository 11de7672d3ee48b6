#ifndef HG_LINALG_HPP
#define HG_LINALG_HPP

#include <optional>
#include <vector>

#include "hg/rational.hpp"

namespace hg {

/// Dense matrix of exact rationals. Row-major; sized at construction.
class RatMat {
public:
    RatMat() : rows_(0), cols_(0) {}
    RatMat(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols, Rat(0)) {}

    static RatMat identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rat& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rat& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    RatMat transpose() const;
    RatMat operator*(const RatMat& rhs) const;
    RatMat operator+(const RatMat& rhs) const;
    RatMat operator-(const RatMat& rhs) const;

    std::vector<Rat> apply(const std::vector<Rat>& v) const;

    bool operator==(const RatMat& rhs) const = default;

private:
    std::size_t rows_, cols_;
    std::vector<Rat> data_;
};

/// Result of Gauss-Jordan elimination: the reduced matrix plus the pivot
/// column of each pivot row, in order.
struct Rref {
    RatMat mat;
    std::vector<std::size_t> pivot_cols;
    std::size_t rank() const { return pivot_cols.size(); }
};

Rref rref(RatMat m);

std::size_t rank(const RatMat& m);

/// Basis of the right nullspace, one vector per free column, each scaled to
/// coprime integer entries. Deterministic given the input.
std::vector<std::vector<Rat>> nullspace(const RatMat& m);

/// A particular solution of A x = b with all free variables set to zero, or
/// nullopt when the system is inconsistent.
std::optional<std::vector<Rat>> solve(const RatMat& a, const std::vector<Rat>& b);

} // namespace hg

#endif
