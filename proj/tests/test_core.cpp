#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "m0n/divisor.hpp"
#include "m0n/errors.hpp"
#include "m0n/fcurve.hpp"
#include "m0n/io.hpp"
#include "m0n/perm.hpp"

#include "test_util.hpp"

using namespace m0n;
using m0n::testutil::mask_of;

namespace {

// count maximal runs of I on the cycle 1-2-...-n-1 by walking the edge list
int arc_oracle(mask_t I, int n) {
    int runs = 0;
    for (int i = 1; i <= n; ++i) {
        bool here = (I >> (i - 1)) & 1;
        bool prev = (I >> ((i == 1 ? n : i - 1) - 1)) & 1;
        if (here && !prev) ++runs;
    }
    return runs;
}

std::vector<int> labels_of(mask_t m) {
    std::vector<int> v;
    for (int i = 0; i < 32; ++i)
        if ((m >> i) & 1) v.push_back(i + 1);
    return v;
}

// D_I . F via the boundary description of an F-curve: +1 when one side of the
// divisor is a union of two of the four blocks, -1 when a side is a single block
int pairing_oracle(mask_t I, const FCurve& f, int n) {
    mask_t full = full_mask(n);
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) {
            mask_t u = f.b[i] | f.b[j];
            if (I == u || I == (full & ~u)) return 1;
        }
    for (int i = 0; i < 4; ++i)
        if (I == f.b[i] || I == (full & ~f.b[i])) return -1;
    return 0;
}

}  // namespace

TEST_CASE("canonical divisor representative") {
    for (int n = 5; n <= 8; ++n) {
        mask_t full = full_mask(n);
        for (mask_t I = 1; I < full; ++I) {
            int s = bit_count(I);
            if (s < 2 || s > n - 2) continue;
            mask_t c = canonical_divisor(I, n);
            CHECK(c == canonical_divisor(full & ~I, n));
            CHECK(((c >> (n - 1)) & 1) == 0);
            CHECK((c == I || c == (full & ~I)));
        }
    }
    CHECK_THROWS_AS(canonical_divisor(0, 6), EmptyOrFull);
    CHECK_THROWS_AS(canonical_divisor(full_mask(6), 6), EmptyOrFull);
    CHECK_THROWS_AS(canonical_divisor(mask_of({1}), 6), SizeOutOfRange);
    CHECK_THROWS_AS(canonical_divisor(full_mask(6) & ~mask_of({3}), 6), SizeOutOfRange);
    CHECK_THROWS_AS(canonical_divisor(mask_of({1, 9}), 6), SizeOutOfRange);
    CHECK_THROWS_AS(canonical_divisor(mask_of({1, 2}), 3), SizeOutOfRange);
    CHECK_THROWS_AS(canonical_divisor(mask_of({1, 2}), 21), SizeOutOfRange);
}

TEST_CASE("arc count matches a direct walk") {
    for (int n = 5; n <= 9; ++n)
        for (mask_t I : DivisorTable::get(n).divisors) {
            CHECK(arc_count(I, n) == arc_oracle(I, n));
            CHECK(is_adjacent_divisor(I, n) == (arc_oracle(I, n) == 1));
        }
    CHECK(arc_count(mask_of({1, 2, 3}), 7) == 1);
    CHECK(arc_count(mask_of({6, 7, 1}), 7) == 1);  // wraps around n
    CHECK(arc_count(mask_of({1, 3, 5}), 7) == 3);
    CHECK(arc_count(mask_of({1, 2, 4, 5}), 7) == 2);
}

TEST_CASE("divisor table counts and order") {
    for (int n = 5; n <= 12; ++n) {
        const auto& t = DivisorTable::get(n);
        CHECK(t.divisors.size() == (1u << (n - 1)) - n - 1);
        for (size_t i = 0; i + 1 < t.divisors.size(); ++i)
            CHECK(labels_of(t.divisors[i]) < labels_of(t.divisors[i + 1]));
        for (size_t i = 0; i < t.divisors.size(); ++i) {
            CHECK(divisor_index(t.divisors[i], n) == static_cast<int>(i));
            mask_t comp = full_mask(n) & ~t.divisors[i];
            CHECK(divisor_index(comp, n) == static_cast<int>(i));
            CHECK(t.arc_counts[i] == arc_oracle(t.divisors[i], n));
        }
    }
}

TEST_CASE("divisor level") {
    CHECK(divisor_level(mask_of({1, 2}), 7) == 2);
    CHECK(divisor_level(mask_of({1, 2, 3}), 7) == 3);
    CHECK(divisor_level(full_mask(7) & ~mask_of({1, 2}), 7) == 2);
    CHECK(divisor_level(mask_of({1, 2, 3, 4}), 8) == 4);
}

TEST_CASE("fcurve canonical block order") {
    FCurve f = make_fcurve({mask_of({5, 6}), mask_of({3, 4}), mask_of({1, 2}), mask_of({7})}, 7);
    CHECK(f.b[0] == mask_of({1, 2}));
    CHECK(f.b[1] == mask_of({3, 4}));
    CHECK(f.b[2] == mask_of({5, 6}));
    CHECK(f.b[3] == mask_of({7}));
    CHECK(f == make_fcurve({mask_of({7}), mask_of({1, 2}), mask_of({5, 6}), mask_of({3, 4})}, 7));
}

TEST_CASE("fcurve partition validation") {
    CHECK_THROWS_AS(make_fcurve({mask_of({1, 2}), mask_of({2, 3}), mask_of({4}), mask_of({5})}, 5),
                    InvalidPartition);
    CHECK_THROWS_AS(make_fcurve({mask_of({1, 2}), 0, mask_of({3, 4}), mask_of({5})}, 5),
                    InvalidPartition);
    CHECK_THROWS_AS(make_fcurve({mask_of({1}), mask_of({2}), mask_of({3}), mask_of({4})}, 5),
                    InvalidPartition);
}

TEST_CASE("pairing against the boundary oracle") {
    for (int n : {5, 6, 7}) {
        std::mt19937 rng(2026);
        std::vector<FCurve> curves;
        // all partitions into four blocks via assignment vectors
        int total = 1;
        for (int i = 0; i < n; ++i) total *= 4;
        for (int code = 0; code < total; ++code) {
            int c = code;
            std::array<mask_t, 4> b{};
            for (int i = 0; i < n; ++i, c /= 4) b[c % 4] |= 1u << i;
            if (!b[0] || !b[1] || !b[2] || !b[3]) continue;
            FCurve f = make_fcurve(b, n);
            if (!curves.empty() && curves.back() == f) continue;
            curves.push_back(f);
        }
        std::shuffle(curves.begin(), curves.end(), rng);
        if (curves.size() > 120) curves.resize(120);
        for (const FCurve& f : curves)
            for (mask_t I : DivisorTable::get(n).divisors)
                CHECK(pairing(I, f, n) == pairing_oracle(I, f, n));
    }
}

TEST_CASE("pairing is computed on either divisor side") {
    FCurve f = make_fcurve({mask_of({1, 2}), mask_of({3}), mask_of({4}), mask_of({5, 6, 7})}, 7);
    CHECK(pairing(mask_of({1, 2, 3}), f, 7) == 1);
    CHECK(pairing(full_mask(7) & ~mask_of({1, 2, 3}), f, 7) == 1);
    CHECK(pairing(mask_of({1, 2}), f, 7) == -1);
    CHECK(pairing(mask_of({5, 6, 7}), f, 7) == -1);
    CHECK(pairing(mask_of({1, 3}), f, 7) == 0);
}

TEST_CASE("expression arithmetic and deficiency") {
    int n = 6;
    FCurve f = make_fcurve({mask_of({1}), mask_of({2}), mask_of({3}), mask_of({4, 5, 6})}, n);
    FCurve g = make_fcurve({mask_of({1, 2}), mask_of({3}), mask_of({4}), mask_of({5, 6})}, n);
    Expression e;
    expr_add(e, f, 2);
    expr_add(e, g, -3);
    expr_add(e, f, -2);  // cancels to zero and drops the term
    CHECK(e.size() == 1);
    CHECK(deficiency(e) == 3);
    Expression s = expr_sum(e, expr_scale(e, -1));
    CHECK(s.empty());
    CHECK(deficiency(Expression{}) == 0);
}

TEST_CASE("class of an expression and divisor pairing") {
    int n = 6;
    Expression e;
    expr_add(e, make_fcurve({mask_of({1}), mask_of({2}), mask_of({3}), mask_of({4, 5, 6})}, n), 1);
    CurveClass c = class_of(e, n);
    CHECK(c.n == n);
    CHECK(pair_class_divisor(c, mask_of({1, 2})) == 1);
    CHECK(pair_class_divisor(c, mask_of({4, 5, 6})) == -1);
    CHECK(pair_class_divisor(c, mask_of({1, 2, 3})) == -1);
    CHECK(pair_class_divisor(c, mask_of({1, 4})) == 0);
    CHECK(zero_class(n) == class_of(Expression{}, n));
}

TEST_CASE("group action is equivariant for the pairing") {
    int n = 7;
    std::mt19937 rng(7);
    std::vector<int> img(n);
    for (int trial = 0; trial < 40; ++trial) {
        Perm g = Perm::identity(n);
        std::shuffle(g.img.begin(), g.img.end(), rng);
        std::array<mask_t, 4> b{};
        do {
            b = {0, 0, 0, 0};
            for (int i = 0; i < n; ++i) b[rng() % 4] |= 1u << i;
        } while (!b[0] || !b[1] || !b[2] || !b[3]);
        FCurve f = make_fcurve(b, n);
        for (mask_t I : DivisorTable::get(n).divisors)
            CHECK(pairing(canonical_divisor(apply_mask(g, I), n), act(g, f), n) ==
                  pairing(I, f, n));
        Expression e;
        expr_add(e, f, 3);
        CHECK(class_of(act(g, e), n) == act(g, class_of(e, n)));
    }
}

TEST_CASE("action composes contravariantly on classes") {
    int n = 6;
    Perm g = parse_cycles("(1 2 3)", n), h = parse_cycles("(4 5)", n);
    Expression e;
    expr_add(e, make_fcurve({mask_of({1, 2}), mask_of({3}), mask_of({4}), mask_of({5, 6})}, n), 1);
    CurveClass c = class_of(e, n);
    CHECK(act(g * h, c) == act(g, act(h, c)));
}

TEST_CASE("forgetful degree") {
    int n = 7;
    FCurve f = make_fcurve({mask_of({1, 2}), mask_of({3}), mask_of({4}), mask_of({5, 6, 7})}, n);
    CHECK(forgetful_degree(f, mask_of({1, 3, 4, 5}), n) == 1);
    CHECK(forgetful_degree(f, mask_of({2, 3, 4, 6}), n) == 1);
    CHECK(forgetful_degree(f, mask_of({1, 2, 3, 4}), n) == 0);  // two labels share a block
    CHECK(forgetful_degree(f, mask_of({5, 6, 7, 3}), n) == 0);
    CHECK_THROWS_AS(forgetful_degree(f, mask_of({1, 2, 3}), n), BadSize);
    CHECK_THROWS_AS(forgetful_degree(f, mask_of({1, 2, 3, 4, 5}), n), BadSize);
}

TEST_CASE("permutation parsing and arithmetic") {
    Perm g = parse_cycles("(1 2 3)(4 5 6)", 7);
    CHECK(g(1) == 2);
    CHECK(g(3) == 1);
    CHECK(g(7) == 7);
    CHECK(g == parse_cycles("(123)(456)", 7));
    CHECK(perm_order(g) == 3);
    CHECK(g * g.inverse() == Perm::identity(7));
    CHECK((g * g)(1) == 3);

    Perm h = parse_cycles("(1 a)(b c)", 12);
    CHECK(h(1) == 10);
    CHECK(h(11) == 12);
    CHECK(h == parse_cycles("(1 10)(11 12)", 12));

    auto cyc = cycles_of(g);
    CHECK(cyc.size() == 2);
    CHECK(cyc[0] == std::vector<int>{1, 2, 3});
    CHECK(cyc[1] == std::vector<int>{4, 5, 6});
    CHECK(cycle_string(g) == "(1 2 3)(4 5 6)");
    CHECK(cycle_string(Perm::identity(5)) == "id");

    CHECK_THROWS_AS(parse_cycles("(1 2", 5), ParseError);
    CHECK_THROWS_AS(parse_cycles("(1 2)(2 3)", 5), ParseError);
    CHECK_THROWS_AS(parse_cycles("(1 9)", 5), ParseError);
    CHECK_THROWS_AS(parse_cycles("(1 x)", 5), ParseError);
}

TEST_CASE("apply mask") {
    Perm g = parse_cycles("(1 2 3)", 5);
    CHECK(apply_mask(g, mask_of({1, 2})) == mask_of({2, 3}));
    CHECK(apply_mask(g, mask_of({4, 5})) == mask_of({4, 5}));
}
