#include "m0n/keel.hpp"

#include <algorithm>
#include <set>

#include "m0n/errors.hpp"

namespace m0n {

Expression keel_expression(const KeelParts& p, int n) {
    mask_t seen = 0;
    for (mask_t b : p) {
        if (!b) throw InvalidPartition("Keel relation parts must be nonempty");
        if (seen & b) throw InvalidPartition("Keel relation parts must be disjoint");
        seen |= b;
    }
    if (seen != full_mask(n)) throw InvalidPartition("Keel relation parts must cover {1..n}");
    Expression e;
    expr_add(e, make_fcurve({p[0], p[1], p[2], p[3] | p[4]}, n), 1);
    expr_add(e, make_fcurve({p[0] | p[1], p[2], p[3], p[4]}, n), 1);
    expr_add(e, make_fcurve({p[0], p[3], p[2], p[1] | p[4]}, n), -1);
    expr_add(e, make_fcurve({p[0] | p[3], p[2], p[1], p[4]}, n), -1);
    return e;
}

KeelParts canonical_keel(const KeelParts& p) {
    // the expression is preserved by reversal and by swapping I1,I2 together
    // with I4,I5, and negated by swapping I2 and I4: eight orderings in all
    KeelParts best = p;
    const KeelParts orbit[] = {
        {p[4], p[3], p[2], p[1], p[0]}, {p[1], p[0], p[2], p[4], p[3]},
        {p[3], p[4], p[2], p[0], p[1]}, {p[0], p[3], p[2], p[1], p[4]},
        {p[4], p[1], p[2], p[3], p[0]}, {p[3], p[0], p[2], p[4], p[1]},
        {p[1], p[4], p[2], p[0], p[3]},
    };
    for (const KeelParts& q : orbit) best = std::min(best, q);
    return best;
}

std::vector<mask_t> common_refinement(const FCurve& f, const FCurve& g) {
    std::vector<mask_t> out;
    for (mask_t a : f.b)
        for (mask_t b : g.b)
            if (mask_t c = a & b) out.push_back(c);
    return out;
}

bool adjacent(const FCurve& f, const FCurve& g) { return common_refinement(f, g).size() == 5; }

int shared_block_count(const FCurve& f, const FCurve& g) {
    int s = 0;
    for (mask_t a : f.b)
        for (mask_t b : g.b)
            if (a == b) ++s;
    return s;
}

std::vector<KeelParts> keel_relations_containing(const FCurve& f, const FCurve& g, int n) {
    std::vector<KeelParts> out;
    auto blocks = common_refinement(f, g);
    if (blocks.size() != 5) return out;
    std::sort(blocks.begin(), blocks.end());
    std::array<int, 5> idx{0, 1, 2, 3, 4};
    std::set<KeelParts> found;
    do {
        KeelParts p{blocks[idx[0]], blocks[idx[1]], blocks[idx[2]], blocks[idx[3]],
                    blocks[idx[4]]};
        Expression e = keel_expression(p, n);
        if (e.count(f) && e.count(g)) found.insert(canonical_keel(p));
    } while (std::next_permutation(idx.begin(), idx.end()));
    out.assign(found.begin(), found.end());
    return out;
}

std::optional<KeelParts> keel_relation_through(const FCurve& f, const FCurve& g, const FCurve& h,
                                               int n) {
    for (const auto& p : keel_relations_containing(f, g, n)) {
        Expression e = keel_expression(p, n);
        if (e.count(h)) return p;
    }
    return std::nullopt;
}

}
