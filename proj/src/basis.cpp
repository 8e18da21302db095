#include "m0n/basis.hpp"

#include <map>
#include <mutex>

#include "m0n/errors.hpp"

namespace m0n {

const std::vector<mask_t>& nonadjacent_basis(int n) { return DivisorTable::get(n).basis; }

namespace {

// maximal runs of consecutive labels of I (canonical, so never wrapping through n),
// interleaved with the gap arcs: I1,J1,...,It,Jt in cycle order, I1 containing min(I)
struct ArcDecomp {
    std::vector<mask_t> I, J;
};

ArcDecomp arc_decomposition(mask_t m, int n) {
    ArcDecomp d;
    int i = 1;
    while (i <= n) {
        if (m & (1u << (i - 1))) {
            mask_t arc = 0;
            while (i <= n && (m & (1u << (i - 1)))) arc |= 1u << (i++ - 1);
            d.I.push_back(arc);
        } else {
            ++i;
        }
    }
    for (size_t k = 0; k < d.I.size(); ++k) {
        int hi = 32 - std::countl_zero(d.I[k]);  // largest label of the arc
        mask_t gap = 0;
        int j = hi + 1;
        while (true) {
            int lbl = (j - 1) % n + 1;
            if (m & (1u << (lbl - 1))) break;
            gap |= 1u << (lbl - 1);
            ++j;
        }
        d.J.push_back(gap);
    }
    return d;
}

Expression dual_impl(mask_t I, int n);

const Expression& dual_memo(mask_t I, int n) {
    static std::map<std::pair<int, mask_t>, Expression> cache;
    static std::mutex mtx;
    auto key = std::make_pair(n, I);
    {
        std::lock_guard<std::mutex> lock(mtx);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    Expression e = dual_impl(I, n);  // recurses back into the memo, so not under the lock
    std::lock_guard<std::mutex> lock(mtx);
    return cache.emplace(key, std::move(e)).first->second;
}

Expression dual_recurse(mask_t side, int n) { return dual_memo(canonical_divisor(side, n), n); }

Expression dual_impl(mask_t I, int n) {
    auto d = arc_decomposition(I, n);
    size_t t = d.I.size();
    Expression e;
    if (t == 2) {
        expr_add(e, make_fcurve({d.I[0], d.I[1], d.J[0], d.J[1]}, n), 1);
        return e;
    }
    if (t == 3) {
        expr_add(e, make_fcurve({d.I[0] | d.I[1], d.J[0] | d.J[1], d.I[2], d.J[2]}, n), 1);
        expr_add(e, make_fcurve({d.I[0], d.J[0], d.I[1], d.J[1] | d.I[2] | d.J[2]}, n), 1);
        expr_add(e, make_fcurve({d.J[0], d.I[1], d.J[1], d.I[0] | d.I[2] | d.J[2]}, n), 1);
        expr_add(e, make_fcurve({d.J[0], d.I[1], d.I[0] | d.J[2], d.J[1] | d.I[2]}, n), -1);
        return e;
    }
    mask_t itail = 0, jtail = 0;
    for (size_t k = 2; k < t; ++k) {
        itail |= d.I[k];
        jtail |= d.J[k];
    }
    mask_t a = d.I[0] | d.I[1], b = d.J[0] | d.J[1];
    expr_add(e, make_fcurve({a, b, itail, jtail}, n), 1);
    e = expr_sum(e, expr_scale(dual_recurse(a | jtail, n), -1));
    e = expr_sum(e, dual_recurse(a, n));
    e = expr_sum(e, dual_recurse(b, n));
    e = expr_sum(e, dual_recurse(itail, n));
    e = expr_sum(e, dual_recurse(jtail, n));
    return e;
}

}  // namespace

const Expression& dual_basis_expression(mask_t I, int n) {
    mask_t c = canonical_divisor(I, n);
    if (arc_count(c, n) < 2) throw AdjacentDivisor("no dual expression for an adjacent divisor");
    return dual_memo(c, n);
}

Expression expand_in_dual_basis(const CurveClass& c) {
    const auto& t = DivisorTable::get(c.n);
    Expression out;
    for (size_t i = 0; i < t.divisors.size(); ++i) {
        if (t.arc_counts[i] < 2 || c.v[i] == 0) continue;
        out = expr_sum(out, expr_scale(dual_memo(t.divisors[i], c.n), c.v[i]));
    }
    return out;
}

Rat kappa_pairing(const CurveClass& c) {
    const auto& t = DivisorTable::get(c.n);
    Rat sum = 0;
    for (size_t i = 0; i < t.divisors.size(); ++i) {
        if (c.v[i] == 0) continue;
        int k = divisor_level(t.divisors[i], c.n);
        Rat coef = Rat(-2) + Rat(k * (c.n - k), c.n - 1);
        sum += coef * c.v[i];
    }
    return sum;
}

long long boundary_pairing(const CurveClass& c) {
    long long s = 0;
    for (long long x : c.v) s += x;
    return s;
}

Rat psi_pairing(const CurveClass& c) { return kappa_pairing(c) + 2 * boundary_pairing(c); }

Rat kollar_bound(const CurveClass& c) { return -kappa_pairing(c) + (c.n - 3); }

}
