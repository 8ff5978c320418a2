#include <doctest.h>

#include <set>

#include "whd/galois_ring.hpp"

using namespace whd;

TEST_CASE("ring construction and defaults") {
    CHECK(RingSpec(1).poly() == std::vector<int>{0, 1});
    CHECK(RingSpec(2).poly() == std::vector<int>{1, 0, 1}); // lift of GF(9)'s x^2+1
    CHECK_NOTHROW(RingSpec(2, std::vector<int>{1, 0, 1}));
    try {
        RingSpec(2, std::vector<int>{2, 0, 1}); // x^2+2 = (x+1)(x+2) mod 3
        CHECK(false);
    } catch (const error& e) {
        CHECK(e.kind() == errc::reducible_mod_three);
    }
}

TEST_CASE("arithmetic") {
    RingSpec z9(1);
    CHECK(gr_cube(z9.scalar(2)) == z9.scalar(8));
    RingSpec r(2, std::vector<int>{1, 0, 1});
    auto x = r.element({0, 1});
    CHECK(gr_mul(x, x) == r.scalar(8)); // x^2 = -1 = 8
    for (long v = 0; v < 20; ++v) {
        auto a = r.element({static_cast<int>(v % 9), static_cast<int>((v * 7) % 9)});
        CHECK(gr_mul(a, r.one()) == a);
    }
}

TEST_CASE("trace of the multiplication matrix") {
    RingSpec z9(1);
    for (int a = 0; a < 9; ++a) CHECK(gr_trace(z9.scalar(a)) == a);
    RingSpec r(2, std::vector<int>{1, 0, 1});
    CHECK(gr_trace(r.one()) == 2);
    CHECK(gr_trace(r.element({0, 1})) == 0); // [[0,-1],[1,0]]
}

TEST_CASE("zero divisors are exactly the ideal (3)") {
    RingSpec z9(1);
    CHECK(is_zero_divisor(z9.scalar(3)));
    CHECK(is_zero_divisor(z9.scalar(0)));
    CHECK_FALSE(is_zero_divisor(z9.scalar(1)));
    RingSpec r(2);
    CHECK(is_zero_divisor(r.element({0, 3})));
    CHECK_FALSE(is_zero_divisor(r.element({1, 3})));

    // ideal property: closed under addition and under outside multiplication
    for (int a0 = 0; a0 < 9; ++a0)
        for (int a1 = 0; a1 < 9; ++a1) {
            auto a = r.element({a0, a1});
            if (!is_zero_divisor(a)) continue;
            for (int b0 = 0; b0 < 9; ++b0)
                for (int b1 = 0; b1 < 9; ++b1) {
                    auto b = r.element({b0, b1});
                    CHECK(is_zero_divisor(gr_mul(a, b)));
                    if (is_zero_divisor(b)) CHECK(is_zero_divisor(gr_add(a, b)));
                }
        }
}

TEST_CASE("coset representatives") {
    RingSpec z9(1);
    auto reps1 = z9.coset_representatives();
    REQUIRE(reps1.size() == 3);
    CHECK(reps1[0] == z9.scalar(0));
    CHECK(reps1[1] == z9.scalar(1));
    CHECK(reps1[2] == z9.scalar(2));

    RingSpec r(2);
    auto reps = r.coset_representatives();
    REQUIRE(reps.size() == 9);
    CHECK(reps[5].coeffs() == std::vector<int>{1, 2}); // digits (1,2) -> 1 + 2x

    // pairwise differences never fall in the ideal unless equal
    for (size_t i = 0; i < reps.size(); ++i)
        for (size_t j = 0; j < reps.size(); ++j) {
            auto diff = gr_add(reps[i], gr_neg(reps[j]));
            CHECK(is_zero_divisor(diff) == (i == j));
        }

    RingSpec r3(3);
    auto reps3 = r3.coset_representatives();
    REQUIRE(reps3.size() == 27);
    for (size_t i = 0; i < reps3.size(); ++i)
        for (size_t j = i + 1; j < reps3.size(); ++j)
            CHECK_FALSE(is_zero_divisor(gr_add(reps3[i], gr_neg(reps3[j]))));
}

TEST_CASE("residue-field homomorphism, exhaustive over GR(9,2)") {
    RingSpec r(2);
    FieldSpec f(3, 2); // same polynomial mod 3
    for (int a0 = 0; a0 < 9; ++a0)
        for (int a1 = 0; a1 < 9; ++a1) {
            auto a = r.element({a0, a1});
            for (int b0 = 0; b0 < 9; b0 += 2)
                for (int b1 = 0; b1 < 9; b1 += 3) {
                    auto b = r.element({b0, b1});
                    CHECK(residue(gr_mul(a, b), f) == ff_mul(residue(a, f), residue(b, f)));
                    CHECK(residue(gr_add(a, b), f) == ff_add(residue(a, f), residue(b, f)));
                }
        }
}

TEST_CASE("trace compatibility with the residue field") {
    // gr_trace(3a) = 3 * ff_trace(residue(a)) mod 9, the identity that swaps
    // w_9^3 for w_3
    for (int n : {1, 2}) {
        RingSpec r(n);
        FieldSpec f(3, n);
        long total = 1;
        for (int i = 0; i < n; ++i) total *= 9;
        for (long v = 0; v < total; ++v) {
            std::vector<int> c(n);
            long t = v;
            for (int i = 0; i < n; ++i) {
                c[i] = static_cast<int>(t % 9);
                t /= 9;
            }
            auto a = r.element(c);
            auto three_a = gr_mul(r.scalar(3), a);
            CHECK(gr_trace(three_a) == (3 * ff_trace(residue(a, f))) % 9);
        }
    }
}
