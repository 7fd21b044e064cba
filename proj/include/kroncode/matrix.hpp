#pragma once

#include <cstdint>
#include <initializer_list>
#include <vector>

#include "kroncode/gf.hpp"

namespace kron {

// A vector of canonical element codes.
using Vec = std::vector<int>;

int weight(const Vec& v);

// Dense row-major matrix over GF(q). Values are immutable by convention:
// all operations below are pure functions.
class GFMatrix {
public:
    GFMatrix() = default;  // empty 0 x 0 matrix without a field
    GFMatrix(FieldPtr field, int rows, int cols);  // zero-filled
    static GFMatrix from_rows(FieldPtr field, const std::vector<Vec>& rows);
    static GFMatrix identity(FieldPtr field, int k);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const FieldPtr& field() const { return field_; }

    int at(int r, int c) const { return entries_[index(r, c)]; }
    void set(int r, int c, int value);

    Vec row(int r) const;
    Vec col(int c) const;
    const std::vector<std::uint8_t>& entries() const { return entries_; }

    bool operator==(const GFMatrix& other) const;
    bool operator!=(const GFMatrix& other) const { return !(*this == other); }

private:
    std::size_t index(int r, int c) const;

    FieldPtr field_;
    int rows_ = 0;
    int cols_ = 0;
    std::vector<std::uint8_t> entries_;
};

GFMatrix matmul(const GFMatrix& x, const GFMatrix& y);
GFMatrix transpose(const GFMatrix& m);

// Kronecker product: block (r, s) of the result is a_{r,s} * B; column
// s * B.cols + j pairs column s of A with column j of B.
GFMatrix kronecker(const GFMatrix& a, const GFMatrix& b);

// m * v as a column vector.
Vec apply(const GFMatrix& m, const Vec& v);

struct RrefResult {
    GFMatrix matrix;
    std::vector<int> pivots;  // pivot column per pivot row, ascending
};

// Reduced row echelon form with deterministic pivoting: columns are scanned
// left to right, the first row with a nonzero entry becomes the pivot row,
// rows are normalized to a leading 1.
RrefResult rref(const GFMatrix& m);

int rank(const GFMatrix& m);

// Basis of the right null space; size cols - rank.
std::vector<Vec> kernel_basis(const GFMatrix& m);

}  // namespace kron
