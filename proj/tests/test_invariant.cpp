#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "m0n/basis.hpp"
#include "m0n/errors.hpp"
#include "m0n/invariant.hpp"
#include "m0n/io.hpp"

#include "test_util.hpp"

using namespace m0n;
using m0n::testutil::expression_fixture;
using m0n::testutil::load_fixture;
using m0n::testutil::mask_of;

namespace {

long long level_pairing(const CurveClass& c, int level) {
    long long s = 0;
    for (mask_t I : DivisorTable::get(c.n).divisors)
        if (divisor_level(I, c.n) == level) s += pair_class_divisor(c, I);
    return s;
}

CurveClass class_fixture(const nlohmann::json& j) {
    int n = j["n"];
    CurveClass c = zero_class(n);
    for (const auto& e : j["entries"]) {
        mask_t I = mask_of(e["set"].get<std::vector<int>>());
        c.v[divisor_index(I, n)] = e["value"].get<long long>();
    }
    return c;
}

}  // namespace

TEST_CASE("balanced type recognition") {
    auto bt = balanced_type(parse_cycles("(1 2)(3 4)", 5));
    REQUIRE(bt.has_value());
    CHECK(bt->r == 2);
    CHECK(bt->j == 1);
    CHECK(bt->cyc1 == std::vector<int>{1, 2});
    CHECK(bt->cyc2 == std::vector<int>{3, 4});
    CHECK(bt->fixed == std::vector<int>{5});

    auto b2 = balanced_type(parse_cycles("(1 4 2)(3 6 5)", 8));
    REQUIRE(b2.has_value());
    CHECK(b2->r == 3);
    CHECK(b2->j == 2);
    CHECK(b2->cyc1 == std::vector<int>{1, 4, 2});
    CHECK(b2->cyc2 == std::vector<int>{3, 6, 5});
    CHECK(b2->fixed == std::vector<int>{7, 8});

    CHECK_FALSE(balanced_type(Perm::identity(6)).has_value());
    CHECK_FALSE(balanced_type(parse_cycles("(1 2 3)", 6)).has_value());
    CHECK_FALSE(balanced_type(parse_cycles("(1 2)(3 4)(5 6)", 6)).has_value());
    CHECK_FALSE(balanced_type(parse_cycles("(1 2)(3 4 5)", 7)).has_value());
    CHECK_FALSE(balanced_type(parse_cycles("(1 2)(3 4)", 7)).has_value());  // three fixed points
    CHECK_THROWS_AS(cyclic_fixed_class(parse_cycles("(1 2)(3 4 5)", 7)), NotACurve);
}

TEST_CASE("balanced permutation counts") {
    // 2 * C(n,2r) * (r-1)!^2 * C(2r,r) / 2 pairs of r-cycles summed over r
    auto count_formula = [](int n) {
        long long total = 0;
        for (int r = 2; 2 * r <= n; ++r) {
            if (2 * r + 2 < n) continue;  // at most two labels may stay fixed
            long long choose = 1;
            for (int i = 0; i < 2 * r; ++i) choose = choose * (n - i) / (i + 1);
            long long fact = 1;
            for (int i = 2; i < r; ++i) fact *= i;
            long long split = 1;
            for (int i = 0; i < r; ++i) split = split * (2 * r - i) / (i + 1);
            total += choose * fact * fact * split / 2;
        }
        return total;
    };
    CHECK(count_formula(5) == 15);
    CHECK(count_formula(6) == 85);
    CHECK(count_formula(7) == 280);
    CHECK(count_formula(8) == 2380);

    for (int n = 5; n <= 8; ++n) {
        std::vector<uint8_t> img(n);
        std::iota(img.begin(), img.end(), 0);
        long long found = 0;
        do {
            Perm g{img};
            if (balanced_type(g)) ++found;
        } while (std::next_permutation(img.begin(), img.end()));
        CHECK(found == count_formula(n));
    }
}

TEST_CASE("cyclic fixed classes pair as stated") {
    struct Case {
        int n;
        const char* gen;
    };
    for (const Case& cs : {Case{6, "(1 2)(3 4)"}, Case{7, "(1 2 3)(4 5 6)"},
                           Case{8, "(1 2 3)(4 5 6)"}, Case{8, "(1 2 3 4)(5 6 7 8)"},
                           Case{9, "(1 2 3 4)(5 6 7 8)"}, Case{10, "(1 2 3 4)(5 6 7 8)"},
                           Case{10, "(1 2 3 4 5)(6 7 8 9 10)"}}) {
        Perm g = parse_cycles(cs.gen, cs.n);
        auto bt = balanced_type(g);
        REQUIRE(bt.has_value());
        CurveClass c = cyclic_fixed_class(g);
        CHECK(level_pairing(c, 2) == static_cast<long long>(bt->r) * bt->r);
        CHECK(level_pairing(c, cs.n / 2) == 2);
        CHECK(kappa_pairing(c) == Rat(-4 + bt->j));
        CHECK(psi_pairing(c) == Rat(2 * bt->r * bt->r + bt->j));
        CHECK(act(g, c) == c);
    }
    // five labels put the two-cycle pairs and the halves on the same level
    CurveClass c5 = cyclic_fixed_class(parse_cycles("(1 2)(3 4)", 5));
    CHECK(level_pairing(c5, 2) == 6);
    CHECK(kappa_pairing(c5) == Rat(-3));
}

TEST_CASE("cyclic effective expressions match the tabulated ones") {
    auto j = load_fixture("cyclic_effective.json");
    for (const auto& cs : j["cases"]) {
        int n = cs["n"];
        Perm g = parse_cycles(cs["generator"].get<std::string>(), n);
        Expression want = expression_fixture(cs["expression"]);
        CHECK(cyclic_effective_expression(g) == want);
    }
}

TEST_CASE("cyclic effective expressions are unit supported with the right class") {
    for (int n = 6; n <= 8; ++n) {
        std::vector<uint8_t> img(n);
        std::iota(img.begin(), img.end(), 0);
        int checked = 0;
        do {
            Perm g{img};
            auto bt = balanced_type(g);
            if (!bt) continue;
            Expression e = cyclic_effective_expression(g);
            CHECK(e.size() == static_cast<size_t>(bt->r * bt->r - 2 + bt->j));
            bool units = true;
            for (const auto& [f, c] : e) units = units && (c == 1);
            CHECK(units);
            CHECK(class_of(e, n) == cyclic_fixed_class(g));
            ++checked;
        } while (std::next_permutation(img.begin(), img.end()));
        CHECK(checked > 0);
    }
}

TEST_CASE("dihedral analysis on the tabulated groups") {
    auto j9 = load_fixture("dihedral_n9.json");
    Perm g1 = parse_cycles(j9["generators"][0].get<std::string>(), 9);
    Perm g2 = parse_cycles(j9["generators"][1].get<std::string>(), 9);
    DihedralData d = dihedral_analysis(g1, g2);
    CHECK(d.k == 3);
    CHECK(d.a == 0);
    CHECK(d.b == 1);
    CHECK(dihedral_fixed_class(g1, g2) == class_fixture(j9));

    auto j12 = load_fixture("dihedral_n12.json");
    Perm h1 = parse_cycles(j12["generators"][0].get<std::string>(), 12);
    Perm h2 = parse_cycles(j12["generators"][1].get<std::string>(), 12);
    DihedralData d12 = dihedral_analysis(h1, h2);
    CHECK(d12.k == 3);
    CHECK(d12.a == 0);
    CHECK(d12.b == 2);
    CurveClass c12 = dihedral_fixed_class(h1, h2);
    CHECK(c12 == class_fixture(j12));
    CHECK(kappa_pairing(c12) == Rat(10));
}

TEST_CASE("dihedral classes across all orbit types") {
    struct Case {
        int n, k, a, b;
        long long ck;
        const char* s1;
        const char* s2;
    };
    const Case cases[] = {
        {8, 4, 0, 0, -4, "(1 2 3 4)(5 6 7 8)", "(1 5)(2 8)(3 7)(4 6)"},
        {10, 4, 1, 0, -2, "(1 2 3 4)(5 6 7 8)", "(1 5)(2 8)(3 7)(4 6)(9 10)"},
        {12, 4, 0, 1, 8, "(1 2 3 4)(5 6 7 8)(9 10 11 12)", "(1 5)(2 8)(3 7)(4 6)(10 12)"},
        {11, 3, 1, 1, 5, "(1 2 3)(4 5 6)(7 8 9)", "(1 4)(2 6)(3 5)(8 9)(10 11)"},
        {14, 4, 1, 1, 12, "(1 2 3 4)(5 6 7 8)(9 10 11 12)",
         "(1 5)(2 8)(3 7)(4 6)(10 12)(13 14)"},
        {14, 3, 1, 2, 14, "(1 2 3)(4 5 6)(7 8 9)(10 11 12)",
         "(1 4)(2 6)(3 5)(8 9)(11 12)(13 14)"},
    };
    for (const Case& cs : cases) {
        Perm g1 = parse_cycles(cs.s1, cs.n);
        Perm g2 = parse_cycles(cs.s2, cs.n);
        DihedralData d = dihedral_analysis(g1, g2);
        CHECK(d.k == cs.k);
        CHECK(d.a == cs.a);
        CHECK(d.b == cs.b);
        CurveClass c = dihedral_fixed_class(g1, g2);
        CHECK(act(g1, c) == c);
        CHECK(act(g2, c) == c);
        CHECK(class_of(expand_in_dual_basis(c), cs.n) == c);
        CHECK(kappa_pairing(c) == Rat(cs.ck));
        bool nonzero = false;
        for (long long v : c.v) nonzero = nonzero || v != 0;
        CHECK(nonzero);
    }
}

TEST_CASE("groups that do not cut out a curve") {
    CHECK_THROWS_AS(dihedral_analysis(parse_cycles("(1 2)", 6), parse_cycles("(3 4)", 6)),
                    NotACurve);
    CHECK_THROWS_AS(dihedral_analysis(parse_cycles("(1 2)(3 4)", 6), parse_cycles("(1 3)(2 4)", 6)),
                    NotACurve);  // Klein four group
    CHECK_THROWS_AS(dihedral_analysis(parse_cycles("(1 2 3 4)", 6), parse_cycles("(1 2)", 6)),
                    NotACurve);  // generates the symmetric group on four labels
    // dihedral group but without a free orbit of size 2k
    CHECK_THROWS_AS(
        dihedral_analysis(parse_cycles("(1 2 3)", 6), parse_cycles("(2 3)(4 5)", 6)),
        NotACurve);
}

TEST_CASE("stabilizer order by backtracking agrees with enumeration") {
    CurveClass c5 = cyclic_fixed_class(parse_cycles("(1 2)(3 4)", 5));
    CHECK(stabilizer_order(c5, true) == stabilizer_order(c5, false));

    CurveClass c6 = cyclic_fixed_class(parse_cycles("(1 2 3)(4 5 6)", 6));
    CHECK(stabilizer_order(c6, true) == stabilizer_order(c6, false));

    CurveClass c7 = cyclic_fixed_class(parse_cycles("(1 2 3)(4 5 6)", 7));
    uint64_t ex = stabilizer_order(c7, true);
    CHECK(ex == 72);
    CHECK(stabilizer_order(c7, false) == 72);
}

TEST_CASE("stabilizer enumeration respects the timeout") {
    CurveClass c = dihedral_fixed_class(parse_cycles("(1 2 3)(4 5 6)(7 8 9)", 9),
                                        parse_cycles("(1 4)(2 6)(3 5)(8 9)", 9));
    CHECK_THROWS_AS(stabilizer_order(c, true, 1), Timeout);
}
