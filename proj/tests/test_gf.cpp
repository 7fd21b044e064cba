#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "kroncode/gf.hpp"

using kron::Field;
using kron::FieldPtr;
using kron::make_field;

namespace {

const int kPrimePowers[] = {2, 3, 4, 5, 7, 8, 9, 11, 13, 16};

}  // namespace

TEST_CASE("GF(2) is xor and and") {
    const FieldPtr f = make_field(2);
    CHECK_EQ(f->p(), 2);
    CHECK_EQ(f->e(), 1);
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) {
            CHECK_EQ(f->add(a, b), a ^ b);
            CHECK_EQ(f->mul(a, b), a & b);
        }
}

TEST_CASE("GF(3) arithmetic") {
    const FieldPtr f = make_field(3);
    CHECK_EQ(f->add(2, 2), 1);
    CHECK_EQ(f->neg(1), 2);
    CHECK_EQ(f->mul(2, 2), 1);
    CHECK_EQ(f->inv(2), 2);
}

TEST_CASE("GF(4) uses the canonical modulus") {
    const FieldPtr f = make_field(4);
    CHECK_EQ(f->modulus(), std::vector<int>({1, 1, 1}));  // x^2 + x + 1
    // x * x = x + 1 under that modulus
    CHECK_EQ(f->mul(2, 2), 3);
    CHECK_EQ(f->inv(2), 3);
    CHECK_EQ(f->inv(3), 2);
}

TEST_CASE("canonical moduli for GF(8) and GF(9)") {
    // Smallest monic irreducible by base-p integer reading of the
    // coefficient vector: x^3 + x + 1 over GF(2), x^2 + 1 over GF(3).
    CHECK_EQ(make_field(8)->modulus(), std::vector<int>({1, 1, 0, 1}));
    CHECK_EQ(make_field(9)->modulus(), std::vector<int>({1, 0, 1}));
}

TEST_CASE("non prime powers and out-of-range orders are rejected") {
    CHECK_THROWS_AS(make_field(6), kron::NotAPrimePower);
    CHECK_THROWS_AS(make_field(12), kron::NotAPrimePower);
    CHECK_THROWS_AS(make_field(1), kron::NotAPrimePower);
    CHECK_THROWS_AS(make_field(0), kron::NotAPrimePower);
    CHECK_THROWS_AS(make_field(257), kron::InvalidParam);
    CHECK_NOTHROW(make_field(256));
}

TEST_CASE("inverse of zero is an error") {
    const FieldPtr f = make_field(5);
    CHECK_THROWS_AS(f->inv(0), kron::DivisionByZero);
}

TEST_CASE("field axioms hold exhaustively for q <= 16") {
    for (int q : kPrimePowers) {
        CAPTURE(q);
        const FieldPtr fp = make_field(q);
        const Field& f = *fp;
        CHECK_EQ(f.q(), q);
        for (int a = 0; a < q; ++a) {
            CHECK_EQ(f.add(a, 0), a);
            CHECK_EQ(f.mul(a, 1), a);
            CHECK_EQ(f.mul(a, 0), 0);
            CHECK_EQ(f.add(a, f.neg(a)), 0);
            if (a != 0) CHECK_EQ(f.mul(a, f.inv(a)), 1);
            for (int b = 0; b < q; ++b) {
                CHECK_EQ(f.add(a, b), f.add(b, a));
                CHECK_EQ(f.mul(a, b), f.mul(b, a));
                for (int c = 0; c < q; ++c) {
                    CHECK_EQ(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
                    CHECK_EQ(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
                    CHECK_EQ(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                }
            }
        }
    }
}

TEST_CASE("nonzero elements form a cyclic group") {
    for (int q : kPrimePowers) {
        CAPTURE(q);
        const FieldPtr fp = make_field(q);
        const Field& f = *fp;
        bool has_generator = false;
        for (int a = 1; a < q; ++a) {
            int x = a;
            int order = 1;
            while (x != 1) {
                x = f.mul(x, a);
                ++order;
                REQUIRE_LE(order, q - 1);
            }
            CHECK_EQ((q - 1) % order, 0);
            if (order == q - 1) has_generator = true;
        }
        CHECK(has_generator);
    }
}

TEST_CASE("addition is digitwise over the prime subfield") {
    // The canonical code of an element is its coefficient vector read as a
    // base-p integer, so addition must never carry between digits.
    for (int q : {4, 8, 9, 16}) {
        CAPTURE(q);
        const FieldPtr fp = make_field(q);
        const Field& f = *fp;
        const int p = f.p();
        for (int a = 0; a < q; ++a)
            for (int b = 0; b < q; ++b) {
                int expected = 0;
                int power = 1;
                int aa = a, bb = b;
                for (int i = 0; i < f.e(); ++i) {
                    expected += ((aa % p + bb % p) % p) * power;
                    aa /= p;
                    bb /= p;
                    power *= p;
                }
                CHECK_EQ(f.add(a, b), expected);
            }
    }
}
