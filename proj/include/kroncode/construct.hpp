#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "kroncode/matrix.hpp"

namespace kron {

enum class Family { hamming, repetition, kron_cr, kron_up, custom };

std::string family_name(Family family);
Family family_from_name(const std::string& name);

// A linear code given by a parity-check matrix plus construction metadata.
// For the Kronecker families the factor matrices A and B are carried along;
// the matrix-representation conventions below depend on their column order.
struct CodeSpec {
    Family family = Family::custom;
    FieldPtr field;
    GFMatrix H;
    int n = 0;
    int k = 0;
    std::optional<GFMatrix> A;  // left Kronecker factor
    std::optional<GFMatrix> B;  // right Kronecker factor
    std::vector<std::pair<std::string, int>> params;  // family-specific
};

// Parity check of the Hamming [(q^m-1)/(q-1), n-m, 3]_q code in canonical
// column order: every column is scaled so its first nonzero entry is 1, the
// m weight-1 columns come first (ascending by the position of the 1), the
// rest follow sorted by their integer reading with the top digit most
// significant.
CodeSpec hamming_check(const FieldPtr& field, int m);

// Parity check [I | -1] of the repetition [n, 1, n]_q code.
CodeSpec repetition_check(const FieldPtr& field, int n);

// Hamming(m_a) (x) Hamming(m_b): a completely regular [n_a*n_b, n - m_a*m_b, 3]_q code.
CodeSpec kron_cr_code(const FieldPtr& field, int m_a, int m_b);

// repetition(n_a) (x) Hamming(m): a uniformly packed [n_a*n_b, n - m*(n_a-1), 3]_q code.
CodeSpec kron_up_code(const FieldPtr& field, int n_a, int m);

CodeSpec custom_code(const FieldPtr& field, GFMatrix check);

// Convenience overloads constructing the field from q.
CodeSpec hamming_check(int q, int m);
CodeSpec repetition_check(int q, int n);
CodeSpec kron_cr_code(int q, int m_a, int m_b);
CodeSpec kron_up_code(int q, int n_a, int m);

// View of a length n_b*n_a vector as an n_b x n_a matrix: consecutive
// blocks of n_b coordinates are the columns.
GFMatrix matrix_view(const FieldPtr& field, const Vec& v, int n_b, int n_a);

// Column-by-column flattening; inverse of matrix_view.
Vec flatten_view(const GFMatrix& view);

// B * [v] * A^t for a Kronecker-family code. Zero exactly on codewords and
// constant on cosets; equals the syndrome H * v^t reshaped with blocks of
// B-rows as columns.
GFMatrix main_submatrix(const CodeSpec& spec, const Vec& v);

// d(v, C) = rank(main_submatrix(v)) for the Hamming (x) Hamming family.
int rank_distance(const CodeSpec& spec, const Vec& v);

// True iff the code has minimum distance exactly 3: no zero column in H, no
// two columns projectively equal, and some dependent column triple. For
// n <= 24 the d >= 3 half is re-checked by enumerating all weight <= 2
// vectors.
bool min_distance_is_3(const CodeSpec& spec);

// Syndrome of v with respect to spec.H.
Vec syndrome_of(const CodeSpec& spec, const Vec& v);

// For a Kronecker-family code: a vector with the given syndrome, supported
// on the coordinates that pair weight-1 columns of A and B. Relies on the
// canonical column order of both factors.
Vec coset_representative(const CodeSpec& spec, const Vec& syndrome);

}  // namespace kron
