#include "m0n/fcurve.hpp"

#include <algorithm>

#include "m0n/errors.hpp"

namespace m0n {

FCurve make_fcurve(std::array<mask_t, 4> blocks, int n) {
    mask_t seen = 0;
    for (mask_t b : blocks) {
        if (b == 0) throw InvalidPartition("F-curve blocks must be nonempty");
        if (seen & b) throw InvalidPartition("F-curve blocks must be disjoint");
        seen |= b;
    }
    if (seen != full_mask(n)) throw InvalidPartition("F-curve blocks must cover {1..n}");
    std::sort(blocks.begin(), blocks.end(),
              [](mask_t a, mask_t b) { return std::countr_zero(a) < std::countr_zero(b); });
    return FCurve{blocks};
}

int pairing(mask_t I, const FCurve& f, int n) {
    mask_t c = canonical_divisor(I, n);
    int inside = 0, covered = 0;
    for (mask_t b : f.b) {
        if ((b & c) == b) {
            ++inside;
            covered += bit_count(b);
        } else if ((b & c) != 0) {
            return 0;  // block split by I
        }
    }
    if (covered != bit_count(c)) return 0;
    return (inside == 2) ? 1 : -1;  // inside is 1, 2, or 3 here
}

void expr_add(Expression& e, const FCurve& f, long long c) {
    if (c == 0) return;
    auto it = e.find(f);
    if (it == e.end()) {
        e.emplace(f, c);
    } else {
        it->second += c;
        if (it->second == 0) e.erase(it);
    }
}

Expression expr_sum(const Expression& a, const Expression& b) {
    Expression out = a;
    for (const auto& [f, c] : b) expr_add(out, f, c);
    return out;
}

Expression expr_scale(const Expression& a, long long c) {
    Expression out;
    if (c == 0) return out;
    for (const auto& [f, k] : a) out.emplace(f, k * c);
    return out;
}

long long deficiency(const Expression& e) {
    long long m = 0;
    for (const auto& [f, c] : e)
        if (c < 0) m -= c;
    return m;
}

CurveClass zero_class(int n) {
    CurveClass c;
    c.n = n;
    c.v.assign(DivisorTable::get(n).divisors.size(), 0);
    return c;
}

CurveClass class_of(const Expression& e, int n) {
    const auto& t = DivisorTable::get(n);
    CurveClass out = zero_class(n);
    for (const auto& [f, c] : e)
        for (size_t i = 0; i < t.divisors.size(); ++i)
            out.v[i] += c * pairing(t.divisors[i], f, n);
    return out;
}

long long pair_class_divisor(const CurveClass& c, mask_t I) {
    return c.v[divisor_index(I, c.n)];
}

FCurve act(const Perm& g, const FCurve& f) {
    std::array<mask_t, 4> blocks;
    for (int i = 0; i < 4; ++i) blocks[i] = apply_mask(g, f.b[i]);
    return make_fcurve(blocks, g.n());
}

Expression act(const Perm& g, const Expression& e) {
    Expression out;
    for (const auto& [f, c] : e) out.emplace(act(g, f), c);
    return out;
}

CurveClass act(const Perm& g, const CurveClass& c) {
    const auto& t = DivisorTable::get(c.n);
    Perm ginv = g.inverse();
    CurveClass out = zero_class(c.n);
    for (size_t i = 0; i < t.divisors.size(); ++i)
        out.v[i] = c.v[divisor_index(apply_mask(ginv, t.divisors[i]), c.n)];
    return out;
}

int forgetful_degree(const FCurve& f, mask_t S, int n) {
    if (bit_count(S) != 4) throw BadSize("forgetful degree needs exactly four labels");
    if (S & ~full_mask(n)) throw SizeOutOfRange("label outside 1..n");
    for (mask_t b : f.b) {
        int hits = bit_count(b & S);
        if (hits > 1) return 0;
    }
    return 1;  // four labels in four distinct blocks
}

}
