#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "m0n/cyclotomic.hpp"
#include "m0n/errors.hpp"

using namespace m0n;

namespace {

CPoly poly(std::initializer_list<long long> ascending) {
    CPoly p;
    for (long long c : ascending) p.push_back(Cyclo(Rat(c)));
    return cp_trim(std::move(p));
}

CPoly random_poly(std::mt19937& rng, const CycloField& f, int max_deg) {
    std::uniform_int_distribution<int> deg(0, max_deg), coef(-4, 4);
    CPoly p(deg(rng) + 1);
    for (auto& c : p) {
        std::vector<Rat> v(f.degree(), Rat(0));
        v[rng() % f.degree()] = Rat(coef(rng));
        c = Cyclo(f, v);
    }
    return cp_trim(std::move(p));
}

}  // namespace

TEST_CASE("cyclotomic polynomials") {
    CHECK(cyclotomic_polynomial(1) == std::vector<Rat>{Rat(-1), Rat(1)});
    CHECK(cyclotomic_polynomial(2) == std::vector<Rat>{Rat(1), Rat(1)});
    CHECK(cyclotomic_polynomial(3) == std::vector<Rat>{Rat(1), Rat(1), Rat(1)});
    CHECK(cyclotomic_polynomial(4) == std::vector<Rat>{Rat(1), Rat(0), Rat(1)});
    CHECK(cyclotomic_polynomial(6) == std::vector<Rat>{Rat(1), Rat(-1), Rat(1)});
    CHECK(cyclotomic_polynomial(12) == std::vector<Rat>{Rat(1), Rat(0), Rat(-1), Rat(0), Rat(1)});
    CHECK(CycloField::get(3).degree() == 2);
    CHECK(CycloField::get(12).degree() == 4);
    CHECK(CycloField::get(1).degree() == 1);
}

TEST_CASE("arithmetic in the third cyclotomic field") {
    const CycloField& f = CycloField::get(3);
    Cyclo w = Cyclo::zeta(f);
    CHECK((w * w + w + Cyclo(1)).is_zero());
    CHECK(w * w * w == Cyclo(1));
    CHECK(Cyclo::zeta(f, 2) == w * w);
    CHECK(Cyclo::zeta(f, -1) == w * w);
    CHECK((Cyclo(1) + w).inverse() == -w);
    CHECK((Cyclo(1) + w) * (-w) == Cyclo(1));
    CHECK_FALSE(w.is_rational());
    CHECK((w + w * w).is_rational());
    CHECK((w + w * w).rational_value() == Rat(-1));
    CHECK(Cyclo(Rat(3, 2)) + Cyclo(Rat(1, 2)) == Cyclo(2));  // null-field rationals
    CHECK(Cyclo(2) * w + w == Cyclo(3) * w);                 // mixed field and rational
}

TEST_CASE("arithmetic in the fourth cyclotomic field") {
    const CycloField& f = CycloField::get(4);
    Cyclo i = Cyclo::zeta(f);
    CHECK(i * i == Cyclo(-1));
    CHECK(i.inverse() == -i);
    CHECK((Cyclo(1) + i) * (Cyclo(1) - i) == Cyclo(2));
}

TEST_CASE("division with remainder and gcd") {
    std::mt19937 rng(42);
    const CycloField& f = CycloField::get(4);
    for (int trial = 0; trial < 200; ++trial) {
        CPoly a = random_poly(rng, f, 6), b = random_poly(rng, f, 4);
        if (cp_deg(b) < 0) continue;
        auto [q, r] = cp_divrem(a, b);
        CHECK(cp_trim(cp_add(cp_mul(q, b), r)) == cp_trim(a));
        CHECK(cp_deg(r) < cp_deg(b));

        CPoly g = random_poly(rng, f, 3);
        if (cp_deg(g) < 1) continue;
        CPoly ag = cp_mul(a, g), bg = cp_mul(b, g);
        CPoly d = cp_gcd(ag, bg);
        // d is monic and divisible by g
        CHECK(d.back() == Cyclo(1));
        CHECK(cp_deg(cp_divrem(d, cp_scale(g, g.back().inverse())).second) < 0);
        CHECK(cp_deg(cp_divrem(ag, d).second) < 0);
        CHECK(cp_deg(cp_divrem(bg, d).second) < 0);
    }
}

TEST_CASE("root extraction with multiplicities") {
    const CycloField& f = CycloField::get(3);
    Cyclo w = Cyclo::zeta(f);
    // (x - 1)^2 (x - w); after the candidate peels the double root the
    // remainder is linear and resolves on its own
    CPoly p = cp_mul(cp_mul(CPoly{Cyclo(-1), Cyclo(1)}, CPoly{Cyclo(-1), Cyclo(1)}),
                     CPoly{-w, Cyclo(1)});
    CHECK_THROWS_AS(cp_roots(p, {}), UnsupportedFieldExtension);  // cubic needs the pool
    auto roots = cp_roots(p, {Cyclo(1)});
    REQUIRE(roots.size() == 2);
    bool saw_one = false, saw_w = false;
    for (const auto& [r, mult] : roots) {
        if (r == Cyclo(1)) {
            saw_one = true;
            CHECK(mult == 2);
        }
        if (r == w) {
            saw_w = true;
            CHECK(mult == 1);
        }
    }
    CHECK(saw_one);
    CHECK(saw_w);

    // x^2 - w factors only through the candidate pool
    CPoly q{-w, Cyclo(0), Cyclo(1)};
    CHECK_THROWS_AS(cp_roots(q, {}), UnsupportedFieldExtension);
    Cyclo w2 = Cyclo::zeta(f, 2);
    auto assisted = cp_roots(q, {w2, -w2});  // (w^2)^2 = w
    REQUIRE(assisted.size() == 2);
    CHECK(assisted[0].second == 1);
    CHECK(assisted[1].second == 1);

    CHECK(cp_roots(CPoly{Cyclo(5)}, {}).empty());
}

TEST_CASE("rational functions stay reduced") {
    RatFunc x = RatFunc::variable();
    RatFunc r = (x * x - RatFunc::constant(Cyclo(1))) / (x - RatFunc::constant(Cyclo(1)));
    CHECK(r == x + RatFunc::constant(Cyclo(1)));
    CHECK(cp_deg(r.den) == 0);

    RatFunc s = RatFunc(poly({0, 0, 2}), poly({0, 4}));  // 2z^2 / 4z
    CHECK(cp_deg(s.num) == 1);
    CHECK(cp_deg(s.den) == 0);
    CHECK(s.den[0] == Cyclo(1));  // monic denominator
    CHECK(s.num[1] == Cyclo(Rat(1, 2)));

    CHECK((x - x).is_zero());
    RatFunc c = (x + RatFunc::constant(Cyclo(2))) - x;
    CHECK(c.is_constant());
    CHECK(c.constant_value() == Cyclo(2));
}

TEST_CASE("valuations and leading coefficients") {
    const CycloField& f = CycloField::get(3);
    Cyclo w = Cyclo::zeta(f);
    RatFunc x = RatFunc::variable();

    // (z^2 - 1)/(z - w) at z = 1: simple zero with leading coefficient 2/(1-w)
    RatFunc g = (x * x - RatFunc::constant(Cyclo(1))) / (x - RatFunc::constant(w));
    ValLc at1 = val_lc(g, Cyclo(1));
    CHECK(at1.v == 1);
    CHECK(at1.lc == Cyclo(2) / (Cyclo(1) - w));

    ValLc atw = val_lc(g, w);
    CHECK(atw.v == -1);
    CHECK(atw.lc == w * w - Cyclo(1));

    ValLc at0 = val_lc(g, Cyclo(0));
    CHECK(at0.v == 0);
    CHECK(at0.lc == Cyclo(-1) / (Cyclo(0) - w));

    // behavior at infinity: deg num - deg den = 1 means a pole of order 1
    ValLc inf = val_lc_inf(g);
    CHECK(inf.v == -1);
    CHECK(inf.lc == Cyclo(1));

    ValLc inf2 = val_lc_inf(RatFunc(poly({1}), poly({0, 0, 3})));  // 1/(3z^2)
    CHECK(inf2.v == 2);
    CHECK(inf2.lc == Cyclo(Rat(1, 3)));
}
