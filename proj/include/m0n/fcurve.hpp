#pragma once

#include <array>
#include <compare>
#include <map>

#include "m0n/divisor.hpp"
#include "m0n/perm.hpp"

namespace m0n {

// F-curve given by a partition of {1..n} into four nonempty blocks, sorted by minimum label
struct FCurve {
    std::array<mask_t, 4> b{};
    auto operator<=>(const FCurve&) const = default;
};

FCurve make_fcurve(std::array<mask_t, 4> blocks, int n);

// intersection number D_I . F
int pairing(mask_t I, const FCurve& f, int n);

using Expression = std::map<FCurve, long long>;

void expr_add(Expression& e, const FCurve& f, long long c);
Expression expr_sum(const Expression& a, const Expression& b);
Expression expr_scale(const Expression& a, long long c);
long long deficiency(const Expression& e);  // total magnitude of negative coefficients

// the numerical class: vector of pairings with all canonical divisors
struct CurveClass {
    int n = 0;
    std::vector<long long> v;
    bool operator==(const CurveClass&) const = default;
};

CurveClass zero_class(int n);
CurveClass class_of(const Expression& e, int n);
long long pair_class_divisor(const CurveClass& c, mask_t I);

FCurve act(const Perm& g, const FCurve& f);
Expression act(const Perm& g, const Expression& e);
CurveClass act(const Perm& g, const CurveClass& c);

// degree of the forgetful map to the moduli of |S|=4 pointed curves, restricted to F
int forgetful_degree(const FCurve& f, mask_t S, int n);

}
