#include "kroncode/construct.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace kron {

std::string family_name(Family family) {
    switch (family) {
        case Family::hamming: return "hamming";
        case Family::repetition: return "repetition";
        case Family::kron_cr: return "kron_cr";
        case Family::kron_up: return "kron_up";
        case Family::custom: return "custom";
    }
    throw InvalidParam("unknown family");
}

Family family_from_name(const std::string& name) {
    if (name == "hamming") return Family::hamming;
    if (name == "repetition") return Family::repetition;
    if (name == "kron_cr") return Family::kron_cr;
    if (name == "kron_up") return Family::kron_up;
    if (name == "custom") return Family::custom;
    throw InvalidParam("unknown family: " + name);
}

namespace {

int hamming_length(int q, int m) {
    int n = 0;
    int power = 1;
    for (int i = 0; i < m; ++i) {
        n += power;
        power *= q;
    }
    return n;  // (q^m - 1) / (q - 1)
}

// Scale a column so its first nonzero entry is 1.
Vec normalize_column(const Field& f, Vec col) {
    for (int x : col)
        if (x != 0) {
            const int scale = f.inv(x);
            for (int& y : col) y = f.mul(scale, y);
            break;
        }
    return col;
}

long long column_reading(const Vec& col, int q) {
    long long value = 0;
    for (int x : col) value = value * q + x;  // top digit most significant
    return value;
}

GFMatrix from_cols(const FieldPtr& field, const std::vector<Vec>& cols) {
    const int rows = cols.empty() ? 0 : static_cast<int>(cols[0].size());
    GFMatrix m(field, rows, static_cast<int>(cols.size()));
    for (int j = 0; j < m.cols(); ++j)
        for (int i = 0; i < rows; ++i) m.set(i, j, cols[j][i]);
    return m;
}

// The recursive Hamming parity check: H_1 = [1] and H_m stacks one row of
// constant blocks 0...0, 1...1, ..., xi_{q-1}...xi_{q-1}, 1 over q copies of
// H_{m-1} and a zero column.
GFMatrix hamming_recursive(const FieldPtr& field, int m) {
    const int q = field->q();
    if (m == 1) {
        GFMatrix h(field, 1, 1);
        h.set(0, 0, 1);
        return h;
    }
    const GFMatrix prev = hamming_recursive(field, m - 1);
    const int np = prev.cols();
    GFMatrix h(field, m, q * np + 1);
    for (int block = 0; block < q; ++block)
        for (int j = 0; j < np; ++j) {
            h.set(0, block * np + j, block);
            for (int i = 0; i < m - 1; ++i)
                h.set(i + 1, block * np + j, prev.at(i, j));
        }
    h.set(0, q * np, 1);
    return h;
}

std::vector<Vec> columns_of(const GFMatrix& m) {
    std::vector<Vec> cols;
    cols.reserve(m.cols());
    for (int j = 0; j < m.cols(); ++j) cols.push_back(m.col(j));
    return cols;
}

void require_kron_family(const CodeSpec& spec) {
    if (spec.family != Family::kron_cr && spec.family != Family::kron_up)
        throw UnsupportedFamily("operation requires a Kronecker-family code");
}

}  // namespace

CodeSpec hamming_check(const FieldPtr& field, int m) {
    if (m < 1) throw InvalidParam("Hamming parity check needs m >= 1");
    const int q = field->q();
    const Field& f = *field;

    std::vector<Vec> cols = columns_of(hamming_recursive(field, m));
    for (Vec& c : cols) c = normalize_column(f, c);

    std::vector<Vec> unit(m), rest;
    for (Vec& c : cols) {
        if (weight(c) == 1) {
            const int pos = static_cast<int>(std::find_if(c.begin(), c.end(),
                                                          [](int x) { return x != 0; }) -
                                             c.begin());
            unit[pos] = std::move(c);
        } else {
            rest.push_back(std::move(c));
        }
    }
    std::sort(rest.begin(), rest.end(), [q](const Vec& a, const Vec& b) {
        return column_reading(a, q) < column_reading(b, q);
    });
    unit.insert(unit.end(), std::make_move_iterator(rest.begin()),
                std::make_move_iterator(rest.end()));

    CodeSpec spec;
    spec.family = Family::hamming;
    spec.field = field;
    spec.H = from_cols(field, unit);
    spec.n = hamming_length(q, m);
    spec.k = spec.n - m;
    spec.params = {{"m", m}};
    if (spec.H.cols() != spec.n)
        throw std::logic_error("Hamming construction produced a wrong length");
    return spec;
}

CodeSpec repetition_check(const FieldPtr& field, int n) {
    if (n < 3) throw InvalidParam("repetition parity check needs n >= 3");
    GFMatrix h(field, n - 1, n);
    const int minus_one = field->neg(1);
    for (int i = 0; i < n - 1; ++i) {
        h.set(i, i, 1);
        h.set(i, n - 1, minus_one);
    }
    CodeSpec spec;
    spec.family = Family::repetition;
    spec.field = field;
    spec.H = std::move(h);
    spec.n = n;
    spec.k = 1;
    spec.params = {{"n", n}};
    return spec;
}

CodeSpec kron_cr_code(const FieldPtr& field, int m_a, int m_b) {
    if (m_a < 2 || m_b < 2)
        throw InvalidParam("Hamming product code needs m_a, m_b >= 2");
    const CodeSpec a = hamming_check(field, m_a);
    const CodeSpec b = hamming_check(field, m_b);

    CodeSpec spec;
    spec.family = Family::kron_cr;
    spec.field = field;
    spec.H = kronecker(a.H, b.H);
    spec.n = a.n * b.n;
    spec.k = spec.n - m_a * m_b;
    spec.A = a.H;
    spec.B = b.H;
    spec.params = {{"m_a", m_a}, {"m_b", m_b}};
    return spec;
}

CodeSpec kron_up_code(const FieldPtr& field, int n_a, int m) {
    if (n_a < 3) throw InvalidParam("repetition factor needs n_a >= 3");
    if (m < 2) throw InvalidParam("Hamming factor needs n_b >= q + 1, i.e. m >= 2");
    const int n_b = hamming_length(field->q(), m);
    if (n_a > n_b) throw InvalidParam("n_a must not exceed n_b");
    const CodeSpec a = repetition_check(field, n_a);
    const CodeSpec b = hamming_check(field, m);

    CodeSpec spec;
    spec.family = Family::kron_up;
    spec.field = field;
    spec.H = kronecker(a.H, b.H);
    spec.n = n_a * n_b;
    spec.k = spec.n - m * (n_a - 1);
    spec.A = a.H;
    spec.B = b.H;
    spec.params = {{"n_a", n_a}, {"m", m}};
    return spec;
}

CodeSpec custom_code(const FieldPtr& field, GFMatrix check) {
    CodeSpec spec;
    spec.family = Family::custom;
    spec.field = field;
    spec.n = check.cols();
    spec.k = spec.n - rank(check);
    spec.H = std::move(check);
    return spec;
}

CodeSpec hamming_check(int q, int m) { return hamming_check(make_field(q), m); }
CodeSpec repetition_check(int q, int n) { return repetition_check(make_field(q), n); }
CodeSpec kron_cr_code(int q, int m_a, int m_b) {
    return kron_cr_code(make_field(q), m_a, m_b);
}
CodeSpec kron_up_code(int q, int n_a, int m) {
    return kron_up_code(make_field(q), n_a, m);
}

GFMatrix matrix_view(const FieldPtr& field, const Vec& v, int n_b, int n_a) {
    if (static_cast<int>(v.size()) != n_b * n_a)
        throw DimensionMismatch("vector length is not n_b * n_a");
    GFMatrix m(field, n_b, n_a);
    for (int j = 0; j < n_a; ++j)
        for (int i = 0; i < n_b; ++i) m.set(i, j, v[j * n_b + i]);
    return m;
}

Vec flatten_view(const GFMatrix& view) {
    Vec v(static_cast<std::size_t>(view.rows()) * view.cols());
    for (int j = 0; j < view.cols(); ++j)
        for (int i = 0; i < view.rows(); ++i) v[j * view.rows() + i] = view.at(i, j);
    return v;
}

GFMatrix main_submatrix(const CodeSpec& spec, const Vec& v) {
    require_kron_family(spec);
    if (static_cast<int>(v.size()) != spec.n)
        throw DimensionMismatch("vector length differs from code length");
    const GFMatrix view = matrix_view(spec.field, v, spec.B->cols(), spec.A->cols());
    return matmul(matmul(*spec.B, view), transpose(*spec.A));
}

int rank_distance(const CodeSpec& spec, const Vec& v) {
    if (spec.family != Family::kron_cr)
        throw UnsupportedFamily("rank distance is defined for the Hamming product family");
    return rank(main_submatrix(spec, v));
}

bool min_distance_is_3(const CodeSpec& spec) {
    const Field& f = *spec.field;
    const int q = f.q();
    const int n = spec.H.cols();

    std::vector<Vec> cols = columns_of(spec.H);
    bool quick = true;

    std::map<Vec, std::vector<int>> by_rep;
    for (int j = 0; j < n; ++j) {
        if (weight(cols[j]) == 0) quick = false;
        by_rep[normalize_column(f, cols[j])].push_back(j);
    }
    for (const auto& [rep, indices] : by_rep)
        if (indices.size() > 1 || weight(rep) == 0) quick = false;

    bool has_triple = false;
    if (quick) {
        for (int i = 0; i < n && !has_triple; ++i)
            for (int j = i + 1; j < n && !has_triple; ++j)
                for (int e = 1; e < q; ++e) {
                    Vec w(cols[i].size());
                    for (std::size_t t = 0; t < w.size(); ++t)
                        w[t] = f.add(f.mul(e, cols[i][t]), cols[j][t]);
                    if (weight(w) == 0) continue;  // would contradict pairwise independence
                    auto it = by_rep.find(normalize_column(f, w));
                    if (it != by_rep.end())
                        for (int idx : it->second)
                            if (idx != i && idx != j) {
                                has_triple = true;
                                break;
                            }
                    if (has_triple) break;
                }
    }
    const bool result = quick && has_triple;

    if (n <= 24) {
        // Re-check d >= 3 by brute force over every weight <= 2 vector.
        bool no_small_word = true;
        for (int i = 0; i < n && no_small_word; ++i)
            if (weight(cols[i]) == 0) no_small_word = false;
        for (int i = 0; i < n && no_small_word; ++i)
            for (int j = i + 1; j < n && no_small_word; ++j)
                for (int a = 1; a < q && no_small_word; ++a)
                    for (int b = 1; b < q; ++b) {
                        int w = 0;
                        for (std::size_t t = 0; t < cols[i].size(); ++t)
                            if (f.add(f.mul(a, cols[i][t]), f.mul(b, cols[j][t])) != 0)
                                ++w;
                        if (w == 0) {
                            no_small_word = false;
                            break;
                        }
                    }
        if (no_small_word != quick)
            throw std::logic_error("column screening disagrees with weight <= 2 enumeration");
    }
    return result;
}

Vec syndrome_of(const CodeSpec& spec, const Vec& v) { return apply(spec.H, v); }

Vec coset_representative(const CodeSpec& spec, const Vec& syndrome) {
    require_kron_family(spec);
    const int ra = spec.A->rows();
    const int rb = spec.B->rows();
    const int n_b = spec.B->cols();
    if (static_cast<int>(syndrome.size()) != ra * rb)
        throw DimensionMismatch("syndrome length differs from parity row count");
    // Columns 0..ra-1 of A and 0..rb-1 of B are the weight-1 columns, so
    // coordinate (ja, jb) of v feeds exactly syndrome digit ja*rb + jb.
    Vec v(spec.n, 0);
    for (int ja = 0; ja < ra; ++ja)
        for (int jb = 0; jb < rb; ++jb) v[ja * n_b + jb] = syndrome[ja * rb + jb];
    return v;
}

}  // namespace kron
