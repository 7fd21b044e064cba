#pragma once

#include <cassert>
#include <memory>
#include <vector>

#include "kroncode/errors.hpp"

namespace kron {

// Dense arithmetic tables for GF(q), q = p^e a prime power, 2 <= q <= 256.
//
// Elements are canonical integers 0..q-1: the base-p digit vector of the
// integer is the polynomial coefficient vector, constant digit least
// significant. 0 is the additive and 1 the multiplicative identity. For
// e > 1 arithmetic is modulo the monic irreducible polynomial of degree e
// over GF(p) whose coefficient vector, read as a base-p integer (constant
// digit least significant), is smallest.
class Field {
public:
    explicit Field(int q);

    int q() const { return q_; }
    int p() const { return p_; }
    int e() const { return e_; }

    // Modulus coefficients, constant term first, length e+1. Empty for e == 1.
    const std::vector<int>& modulus() const { return modulus_; }

    int add(int a, int b) const { return add_[idx(a, b)]; }
    int mul(int a, int b) const { return mul_[idx(a, b)]; }
    int neg(int a) const { return neg_[checked(a)]; }
    int sub(int a, int b) const { return add(a, neg(b)); }

    int inv(int a) const {
        if (checked(a) == 0) throw DivisionByZero("inv(0) is undefined");
        return inv_[a];
    }

    bool operator==(const Field& other) const {
        return q_ == other.q_ && modulus_ == other.modulus_;
    }

private:
    int idx(int a, int b) const { return checked(a) * q_ + checked(b); }
    int checked(int a) const {
        assert(a >= 0 && a < q_);
        return a;
    }

    int q_ = 0;
    int p_ = 0;
    int e_ = 0;
    std::vector<int> modulus_;
    std::vector<unsigned char> add_;
    std::vector<unsigned char> mul_;
    std::vector<unsigned char> neg_;
    std::vector<unsigned char> inv_;
};

using FieldPtr = std::shared_ptr<const Field>;

FieldPtr make_field(int q);

inline bool same_field(const FieldPtr& a, const FieldPtr& b) {
    return a && b && *a == *b;
}

}  // namespace kron
