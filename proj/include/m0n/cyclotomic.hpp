#pragma once

#include <string>
#include <utility>
#include <vector>

#include "m0n/basis.hpp"

namespace m0n {

// m-th cyclotomic polynomial, dense ascending coefficients, monic
std::vector<Rat> cyclotomic_polynomial(int m);

class CycloField {
    int m_;
    std::vector<Rat> phi_;

public:
    explicit CycloField(int m);
    static const CycloField& get(int m);
    int order() const { return m_; }
    int degree() const { return static_cast<int>(phi_.size()) - 1; }
    const std::vector<Rat>& modulus() const { return phi_; }
};

// element of Q(zeta_m) on the power basis 1, zeta, ..., zeta^(d-1);
// a null field means a plain rational, compatible with any field
class Cyclo {
    const CycloField* f_ = nullptr;
    std::vector<Rat> c_{Rat(0)};

public:
    Cyclo() = default;
    Cyclo(Rat r) : c_{std::move(r)} {}
    Cyclo(long long r) : c_{Rat(r)} {}
    Cyclo(const CycloField& f, std::vector<Rat> coef);
    static Cyclo zeta(const CycloField& f, long long power = 1);

    const CycloField* field() const { return f_; }
    const std::vector<Rat>& coeffs() const { return c_; }
    bool is_zero() const;
    bool is_rational() const;
    Rat rational_value() const;  // throws if not rational
    Cyclo inverse() const;
    std::string str() const;

    friend Cyclo operator+(const Cyclo& a, const Cyclo& b);
    friend Cyclo operator-(const Cyclo& a, const Cyclo& b);
    friend Cyclo operator*(const Cyclo& a, const Cyclo& b);
    friend Cyclo operator/(const Cyclo& a, const Cyclo& b);
    Cyclo operator-() const;
    friend bool operator==(const Cyclo& a, const Cyclo& b);
    friend bool operator<(const Cyclo& a, const Cyclo& b);  // coefficient order, for determinism
};

// dense polynomials over Q(zeta_m); empty vector is the zero polynomial
using CPoly = std::vector<Cyclo>;

int cp_deg(const CPoly& p);  // -1 for zero
CPoly cp_trim(CPoly p);
CPoly cp_add(const CPoly& a, const CPoly& b);
CPoly cp_sub(const CPoly& a, const CPoly& b);
CPoly cp_mul(const CPoly& a, const CPoly& b);
CPoly cp_scale(const CPoly& a, const Cyclo& s);
std::pair<CPoly, CPoly> cp_divrem(const CPoly& a, const CPoly& b);
CPoly cp_gcd(CPoly a, CPoly b);  // monic
Cyclo cp_eval(const CPoly& p, const Cyclo& x);

// all roots with multiplicity; linear factors are peeled directly and higher-degree
// remainders are resolved against the candidate pool or rejected
std::vector<std::pair<Cyclo, int>> cp_roots(CPoly p, const std::vector<Cyclo>& candidates);

// rational function in one variable over Q(zeta_m), kept reduced with monic denominator
struct RatFunc {
    CPoly num;
    CPoly den{Cyclo(Rat(1))};

    RatFunc() = default;
    RatFunc(CPoly n, CPoly d);
    static RatFunc constant(const Cyclo& v);
    static RatFunc variable();

    bool is_zero() const { return num.empty(); }
    bool is_constant() const;
    Cyclo constant_value() const;

    friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
    friend bool operator==(const RatFunc& a, const RatFunc& b);
};

struct ValLc {
    int v = 0;   // order of vanishing (negative for a pole)
    Cyclo lc;    // leading coefficient of the local expansion
};

ValLc val_lc(const RatFunc& f, const Cyclo& z0);
ValLc val_lc_inf(const RatFunc& f);

}
