#include "kroncode/matrix.hpp"

#include <algorithm>

namespace kron {

int weight(const Vec& v) {
    return static_cast<int>(std::count_if(v.begin(), v.end(),
                                          [](int x) { return x != 0; }));
}

GFMatrix::GFMatrix(FieldPtr field, int rows, int cols)
    : field_(std::move(field)), rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0) throw DimensionMismatch("negative matrix dimension");
    entries_.assign(static_cast<std::size_t>(rows) * cols, 0);
}

GFMatrix GFMatrix::from_rows(FieldPtr field, const std::vector<Vec>& rows) {
    const int r = static_cast<int>(rows.size());
    const int c = r > 0 ? static_cast<int>(rows[0].size()) : 0;
    GFMatrix m(std::move(field), r, c);
    for (int i = 0; i < r; ++i) {
        if (static_cast<int>(rows[i].size()) != c)
            throw DimensionMismatch("ragged row list");
        for (int j = 0; j < c; ++j) m.set(i, j, rows[i][j]);
    }
    return m;
}

GFMatrix GFMatrix::identity(FieldPtr field, int k) {
    GFMatrix m(std::move(field), k, k);
    for (int i = 0; i < k; ++i) m.set(i, i, 1);
    return m;
}

void GFMatrix::set(int r, int c, int value) {
    if (value < 0 || value >= field_->q())
        throw InvalidParam("entry is not a canonical element code");
    entries_[index(r, c)] = static_cast<std::uint8_t>(value);
}

Vec GFMatrix::row(int r) const {
    Vec out(cols_);
    for (int j = 0; j < cols_; ++j) out[j] = at(r, j);
    return out;
}

Vec GFMatrix::col(int c) const {
    Vec out(rows_);
    for (int i = 0; i < rows_; ++i) out[i] = at(i, c);
    return out;
}

bool GFMatrix::operator==(const GFMatrix& other) const {
    return same_field(field_, other.field_) && rows_ == other.rows_ &&
           cols_ == other.cols_ && entries_ == other.entries_;
}

std::size_t GFMatrix::index(int r, int c) const {
    assert(r >= 0 && r < rows_ && c >= 0 && c < cols_);
    return static_cast<std::size_t>(r) * cols_ + c;
}

namespace {

void require_same_field(const GFMatrix& x, const GFMatrix& y) {
    if (!same_field(x.field(), y.field()))
        throw FieldMismatch("operands live in different fields");
}

}  // namespace

GFMatrix matmul(const GFMatrix& x, const GFMatrix& y) {
    require_same_field(x, y);
    if (x.cols() != y.rows())
        throw DimensionMismatch("matmul: inner dimensions differ");
    const Field& f = *x.field();
    GFMatrix out(x.field(), x.rows(), y.cols());
    for (int i = 0; i < x.rows(); ++i)
        for (int kk = 0; kk < x.cols(); ++kk) {
            const int a = x.at(i, kk);
            if (a == 0) continue;
            for (int j = 0; j < y.cols(); ++j) {
                const int t = f.mul(a, y.at(kk, j));
                out.set(i, j, f.add(out.at(i, j), t));
            }
        }
    return out;
}

GFMatrix transpose(const GFMatrix& m) {
    GFMatrix out(m.field(), m.cols(), m.rows());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) out.set(j, i, m.at(i, j));
    return out;
}

GFMatrix kronecker(const GFMatrix& a, const GFMatrix& b) {
    require_same_field(a, b);
    const Field& f = *a.field();
    GFMatrix out(a.field(), a.rows() * b.rows(), a.cols() * b.cols());
    for (int r = 0; r < a.rows(); ++r)
        for (int s = 0; s < a.cols(); ++s) {
            const int ars = a.at(r, s);
            if (ars == 0) continue;
            for (int i = 0; i < b.rows(); ++i)
                for (int j = 0; j < b.cols(); ++j)
                    out.set(r * b.rows() + i, s * b.cols() + j,
                            f.mul(ars, b.at(i, j)));
        }
    return out;
}

Vec apply(const GFMatrix& m, const Vec& v) {
    if (static_cast<int>(v.size()) != m.cols())
        throw DimensionMismatch("apply: vector length differs from column count");
    const Field& f = *m.field();
    Vec out(m.rows(), 0);
    for (int j = 0; j < m.cols(); ++j) {
        const int vj = v[j];
        if (vj == 0) continue;
        for (int i = 0; i < m.rows(); ++i)
            out[i] = f.add(out[i], f.mul(m.at(i, j), vj));
    }
    return out;
}

RrefResult rref(const GFMatrix& m) {
    const Field& f = *m.field();
    GFMatrix r = m;
    std::vector<int> pivots;
    int lead = 0;
    for (int c = 0; c < r.cols() && lead < r.rows(); ++c) {
        int pivot = -1;
        for (int i = lead; i < r.rows(); ++i)
            if (r.at(i, c) != 0) {
                pivot = i;
                break;
            }
        if (pivot < 0) continue;
        if (pivot != lead)
            for (int j = 0; j < r.cols(); ++j) {
                const int t = r.at(lead, j);
                r.set(lead, j, r.at(pivot, j));
                r.set(pivot, j, t);
            }
        const int scale = f.inv(r.at(lead, c));
        for (int j = 0; j < r.cols(); ++j) r.set(lead, j, f.mul(scale, r.at(lead, j)));
        for (int i = 0; i < r.rows(); ++i) {
            if (i == lead) continue;
            const int factor = r.at(i, c);
            if (factor == 0) continue;
            for (int j = 0; j < r.cols(); ++j)
                r.set(i, j, f.sub(r.at(i, j), f.mul(factor, r.at(lead, j))));
        }
        pivots.push_back(c);
        ++lead;
    }
    return {std::move(r), std::move(pivots)};
}

int rank(const GFMatrix& m) { return static_cast<int>(rref(m).pivots.size()); }

std::vector<Vec> kernel_basis(const GFMatrix& m) {
    const Field& f = *m.field();
    const RrefResult red = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (int c : red.pivots) is_pivot[c] = true;

    std::vector<Vec> basis;
    for (int free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        Vec v(m.cols(), 0);
        v[free] = 1;
        for (std::size_t i = 0; i < red.pivots.size(); ++i)
            v[red.pivots[i]] = f.neg(red.matrix.at(static_cast<int>(i), free));
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace kron
