#include "kroncode/gf.hpp"

#include <numeric>

namespace kron {

namespace {

// Polynomials over GF(p) as coefficient vectors, constant term first.
using Poly = std::vector<int>;

int degree(const Poly& f) {
    for (int i = static_cast<int>(f.size()) - 1; i >= 0; --i)
        if (f[i] != 0) return i;
    return -1;
}

// Remainder of f modulo the monic polynomial g, coefficients mod p.
Poly poly_mod(Poly f, const Poly& g, int p) {
    const int dg = degree(g);
    for (int i = degree(f); i >= dg; --i) {
        int c = f[i];
        if (c == 0) continue;
        for (int j = 0; j <= dg; ++j) {
            int& fj = f[i - dg + j];
            fj = ((fj - c * g[j]) % p + p) % p;
        }
    }
    f.resize(dg > 0 ? dg : 1, 0);
    return f;
}

bool is_zero(const Poly& f) { return degree(f) < 0; }

// Trial division by every monic polynomial of degree 1..deg(f)/2.
bool is_irreducible(const Poly& f, int p) {
    const int df = degree(f);
    for (int d = 1; 2 * d <= df; ++d) {
        long long count = 1;
        for (int i = 0; i < d; ++i) count *= p;
        for (long long lo = 0; lo < count; ++lo) {
            Poly g(d + 1, 0);
            long long rest = lo;
            for (int i = 0; i < d; ++i) {
                g[i] = static_cast<int>(rest % p);
                rest /= p;
            }
            g[d] = 1;
            if (is_zero(poly_mod(f, g, p))) return false;
        }
    }
    return true;
}

// Monic irreducible of degree e over GF(p) with the smallest coefficient
// vector read as a base-p integer (constant digit least significant).
Poly smallest_irreducible(int p, int e) {
    long long count = 1;
    for (int i = 0; i < e; ++i) count *= p;
    for (long long lo = 0; lo < count; ++lo) {
        Poly f(e + 1, 0);
        long long rest = lo;
        for (int i = 0; i < e; ++i) {
            f[i] = static_cast<int>(rest % p);
            rest /= p;
        }
        f[e] = 1;
        if (is_irreducible(f, p)) return f;
    }
    throw Error("no irreducible polynomial found");  // unreachable for valid p, e
}

Poly decode(int a, int p, int e) {
    Poly digits(e, 0);
    for (int i = 0; i < e; ++i) {
        digits[i] = a % p;
        a /= p;
    }
    return digits;
}

int encode(const Poly& digits, int p, int e) {
    int a = 0;
    for (int i = e - 1; i >= 0; --i) a = a * p + digits[i];
    return a;
}

}  // namespace

Field::Field(int q) {
    if (q < 2) throw NotAPrimePower("field order must be at least 2");
    if (q > 256) throw InvalidParam("field order capped at 256");

    int p = 2;
    while (q % p != 0) ++p;
    int e = 0;
    int rest = q;
    while (rest % p == 0) {
        rest /= p;
        ++e;
    }
    if (rest != 1)
        throw NotAPrimePower("field order has two distinct prime factors");

    q_ = q;
    p_ = p;
    e_ = e;
    if (e > 1) modulus_ = smallest_irreducible(p, e);

    add_.resize(q * q);
    mul_.resize(q * q);
    neg_.resize(q);
    inv_.resize(q, 0);

    for (int a = 0; a < q; ++a) {
        const Poly da = decode(a, p, e);
        Poly na(e);
        for (int i = 0; i < e; ++i) na[i] = (p - da[i]) % p;
        neg_[a] = static_cast<unsigned char>(encode(na, p, e));

        for (int b = 0; b < q; ++b) {
            const Poly db = decode(b, p, e);
            Poly sum(e);
            for (int i = 0; i < e; ++i) sum[i] = (da[i] + db[i]) % p;
            add_[a * q + b] = static_cast<unsigned char>(encode(sum, p, e));

            Poly prod(2 * e - 1, 0);
            for (int i = 0; i < e; ++i)
                for (int j = 0; j < e; ++j)
                    prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
            if (e > 1) prod = poly_mod(prod, modulus_, p);
            prod.resize(e, 0);
            mul_[a * q + b] = static_cast<unsigned char>(encode(prod, p, e));
        }
    }

    for (int a = 1; a < q; ++a)
        for (int b = 1; b < q; ++b)
            if (mul_[a * q + b] == 1) {
                inv_[a] = static_cast<unsigned char>(b);
                break;
            }
}

FieldPtr make_field(int q) { return std::make_shared<Field>(q); }

}  // namespace kron
