#include "m0n/lm.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>

#include "m0n/errors.hpp"

namespace m0n {

namespace {

std::vector<int> mask_labels(mask_t m) {
    std::vector<int> v;
    while (m) {
        v.push_back(std::countr_zero(m) + 1);
        m &= m - 1;
    }
    return v;
}

// a block is frozen when all position ratios are constant (positions are only
// meaningful modulo rescaling of the component)
bool block_varies(const LmComponent& comp, mask_t block) {
    auto labels = mask_labels(block);
    const RatFunc& base = comp.pos.at(labels[0]);
    for (size_t i = 1; i < labels.size(); ++i)
        if (!(comp.pos.at(labels[i]) / base).is_constant()) return true;
    return false;
}

int moving_block_index(const LmComponent& comp) {
    int idx = -1;
    for (size_t i = 0; i < comp.type.size(); ++i) {
        if (bit_count(comp.type[i]) < 2) continue;
        if (block_varies(comp, comp.type[i])) {
            if (idx >= 0) throw NotOneDimensional("component has more than one moving block");
            idx = static_cast<int>(i);
        }
    }
    return idx;
}

struct SpecialPoint {
    bool at_inf = false;
    Cyclo z;
    std::map<int, ValLc> w;
};

// candidate points: roots of all numerators and denominators of the block positions,
// plus 0 and infinity; higher-degree factors must split over the collected pool
std::vector<SpecialPoint> special_points(const LmComponent& comp, mask_t block) {
    auto labels = mask_labels(block);
    std::vector<Cyclo> pool{Cyclo()};
    auto add_pool = [&](const Cyclo& c) {
        for (const auto& p : pool)
            if (p == c) return;
        pool.push_back(c);
    };
    for (int l : labels)
        for (const CPoly* p : {&comp.pos.at(l).num, &comp.pos.at(l).den})
            if (cp_deg(*p) == 1) add_pool(-((*p)[0] / (*p)[1]));
    std::vector<Cyclo> points;
    auto add_point = [&](const Cyclo& c) {
        for (const auto& p : points)
            if (p == c) return;
        points.push_back(c);
    };
    for (int l : labels)
        for (const CPoly* p : {&comp.pos.at(l).num, &comp.pos.at(l).den}) {
            if (cp_deg(*p) < 1) continue;
            for (const auto& [root, mult] : cp_roots(*p, pool)) add_point(root);
        }
    std::sort(points.begin(), points.end());
    std::vector<SpecialPoint> out;
    for (const auto& z : points) {
        SpecialPoint sp;
        sp.z = z;
        for (int l : labels) sp.w[l] = val_lc(comp.pos.at(l), z);
        out.push_back(std::move(sp));
    }
    SpecialPoint inf;
    inf.at_inf = true;
    for (int l : labels) inf.w[l] = val_lc_inf(comp.pos.at(l));
    out.push_back(std::move(inf));
    // keep only points where the valuation vector actually splits the block
    std::vector<SpecialPoint> special;
    for (auto& sp : out) {
        int v0 = sp.w.begin()->second.v;
        bool split = false;
        for (const auto& [l, vl] : sp.w)
            if (vl.v != v0) split = true;
        if (split) special.push_back(std::move(sp));
    }
    return special;
}

RatFunc monomial(const Cyclo& c, int e) {
    CPoly num{c}, den{Cyclo(Rat(1))};
    if (e > 0) {
        num.assign(e + 1, Cyclo());
        num[e] = c;
    } else if (e < 0) {
        den.assign(-e + 1, Cyclo());
        den[-e] = Cyclo(Rat(1));
    }
    return RatFunc(num, den);
}

// is f = c * x^e? returns (c, e)
std::optional<std::pair<Cyclo, int>> as_monomial(const RatFunc& f) {
    auto single_term = [](const CPoly& p) -> int {
        int nz = -1;
        for (int i = 0; i <= cp_deg(p); ++i) {
            if (p[i].is_zero()) continue;
            if (nz >= 0) return -2;
            nz = i;
        }
        return nz;
    };
    int en = single_term(f.num), ed = single_term(f.den);
    if (en < 0 || ed < 0) return std::nullopt;
    return std::make_pair(f.num[en] / f.den[ed], en - ed);
}

// degree of the fibers of u -> (position ratios); 1 for a Mobius ratio, the gcd of
// exponent differences when all ratios are monomial
int fiber_degree(const LmComponent& comp, mask_t block) {
    auto labels = mask_labels(block);
    const RatFunc& base = comp.pos.at(labels[0]);
    int g = 0;
    bool all_monomial = true;
    for (size_t i = 1; i < labels.size(); ++i) {
        RatFunc ratio = comp.pos.at(labels[i]) / base;
        if (ratio.is_constant()) continue;
        if (cp_deg(ratio.num) <= 1 && cp_deg(ratio.den) <= 1) return 1;  // Mobius, injective
        auto mono = as_monomial(ratio);
        if (mono)
            g = std::gcd(g, std::abs(mono->second));
        else
            all_monomial = false;
    }
    if (!all_monomial)
        throw UnsupportedFieldExtension("cannot certify the fiber degree of the parametrization");
    return g == 0 ? 1 : g;
}

// base change replacing the parameter by its d-th power root: positions of the moving
// block are rewritten through the ratio exponents divided by d
void reparametrize(LmComponent& comp, mask_t block, int d) {
    auto labels = mask_labels(block);
    const RatFunc base = comp.pos.at(labels[0]);
    auto base_inf = val_lc_inf(base);
    Cyclo c0 = base_inf.lc;  // any fixed representative constant for the base label
    comp.pos[labels[0]] = RatFunc::constant(c0);
    for (size_t i = 1; i < labels.size(); ++i) {
        RatFunc ratio = comp.pos.at(labels[i]) / base;
        if (ratio.is_constant()) {
            comp.pos[labels[i]] = RatFunc::constant(ratio.constant_value() * c0);
            continue;
        }
        auto mono = as_monomial(ratio);
        if (!mono || mono->second % d != 0)
            throw UnsupportedFieldExtension("base change does not divide a ratio exponent");
        comp.pos[labels[i]] = monomial(mono->first * c0, mono->second / d);
    }
}

}  // namespace

std::vector<LmComponent> limit_step(const LmComponent& comp, int label, int n, int* dropped) {
    mask_t ibit = 1u << (label - 1);
    size_t bi = comp.type.size();
    for (size_t i = 0; i < comp.type.size(); ++i)
        if (comp.type[i] & ibit) bi = i;
    if (bi == comp.type.size()) throw InvalidPartition("label not present in the component type");
    mask_t B = comp.type[bi];
    if (B == ibit) return {comp};  // already alone on its component

    int mv = moving_block_index(comp);
    std::vector<LmComponent> out;

    // main limit: the label splits off toward the 0-side of its block
    {
        LmComponent main = comp;
        main.type[bi] = B & ~ibit;
        main.type.insert(main.type.begin() + bi, ibit);
        bool still_varies = false;
        for (mask_t blk : main.type)
            if (bit_count(blk) >= 2 && block_varies(main, blk)) still_varies = true;
        if (!still_varies) {
            if (dropped) ++*dropped;
        } else {
            if (static_cast<int>(bi) == mv && block_varies(main, B & ~ibit)) {
                int d = fiber_degree(main, B & ~ibit);
                if (d > 1) {
                    reparametrize(main, B & ~ibit, d);
                    main.mult *= d;
                }
            }
            out.push_back(std::move(main));
        }
    }

    // germ limits exist only at special points of the moving block
    if (static_cast<int>(bi) == mv) {
        for (const auto& sp : special_points(comp, B)) {
            int wi = sp.w.at(label).v;
            int rmax = 0;
            for (const auto& [l, vl] : sp.w)
                if (l != label) rmax = std::max(rmax, vl.v - wi);
            if (rmax > n + 2) throw GermDepthExceeded("germ scan exceeded the depth bound");
            for (int r = 1; r <= rmax; ++r) {
                mask_t tie = ibit;
                for (const auto& [l, vl] : sp.w)
                    if (l != label && vl.v == wi + r) tie |= 1u << (l - 1);
                if (bit_count(tie) < 2) continue;  // junction point of the chain

                // group the block by the shifted valuations, 0-side (largest) first
                std::map<int, mask_t, std::greater<int>> groups;
                for (const auto& [l, vl] : sp.w)
                    groups[l == label ? wi + r : vl.v] |= 1u << (l - 1);
                LmComponent germ;
                germ.mult = comp.mult * r;
                for (size_t i = 0; i < comp.type.size(); ++i) {
                    if (i == bi) {
                        for (const auto& [v, blk] : groups) germ.type.push_back(blk);
                    } else {
                        germ.type.push_back(comp.type[i]);
                    }
                }
                germ.pos = comp.pos;
                for (const auto& [l, vl] : sp.w) {
                    if (l == label || !(tie & (1u << (l - 1))))
                        germ.pos[l] = RatFunc::constant(vl.lc);
                    else
                        germ.pos[l] = monomial(vl.lc, 1);
                }
                out.push_back(std::move(germ));
            }
        }
    }
    return out;
}

namespace {

std::vector<TypeCount> aggregate(const std::vector<LmComponent>& comps) {
    std::map<std::vector<mask_t>, long long> agg;
    for (const auto& c : comps) agg[c.type] += c.mult;
    std::vector<TypeCount> out;
    for (const auto& [t, m] : agg) out.push_back({t, m});
    return out;
}

}  // namespace

DegenerationResult degenerate(const LmFamily& fam) {
    int n = fam.n;
    if (n < 5) throw SizeOutOfRange("need at least five labels");
    if (fam.heavy0 == fam.heavy_inf || fam.heavy0 < 1 || fam.heavy0 > n || fam.heavy_inf < 1 ||
        fam.heavy_inf > n)
        throw SizeOutOfRange("heavy labels out of range");
    mask_t heavies = (1u << (fam.heavy0 - 1)) | (1u << (fam.heavy_inf - 1));
    mask_t lights = full_mask(n) & ~heavies;
    {
        mask_t seen = 0;
        for (const auto& [l, f] : fam.coords) {
            if (l < 1 || l > n || ((1u << (l - 1)) & heavies))
                throw SizeOutOfRange("coordinate for a non-light label");
            if (f.is_zero()) throw DegenerateFamily("light coordinate identically zero");
            seen |= 1u << (l - 1);
        }
        if (seen != lights) throw DegenerateFamily("missing light coordinate");
    }
    for (auto it = fam.coords.begin(); it != fam.coords.end(); ++it)
        for (auto jt = std::next(it); jt != fam.coords.end(); ++jt)
            if (it->second == jt->second)
                throw DegenerateFamily("two light coordinates coincide identically");

    LmComponent start;
    start.type = {lights};
    start.mult = 1;
    start.pos = fam.coords;
    if (!block_varies(start, lights))
        throw DegenerateFamily("family is constant modulo scaling");

    DegenerationResult res;
    auto light_labels = mask_labels(lights);
    light_labels.pop_back();  // the largest light is never processed

    std::vector<LmComponent> comps{std::move(start)};
    for (int l : light_labels) {
        std::vector<LmComponent> next;
        for (const auto& c : comps) {
            auto lims = limit_step(c, l, n, &res.dropped);
            for (auto& x : lims) next.push_back(std::move(x));
        }
        comps = std::move(next);
        res.steps.push_back(l);
        res.snapshots.push_back(aggregate(comps));
    }

    for (const auto& c : comps) {
        int twos = 0;
        for (mask_t b : c.type) {
            if (bit_count(b) == 2) ++twos;
            else if (bit_count(b) != 1) throw NotOneDimensional("final component is not a curve type");
        }
        if (twos != 1) throw NotOneDimensional("final component is not a curve type");
    }
    res.final_cycle = aggregate(comps);
    return res;
}

FCurve torus_fcurve(const std::vector<mask_t>& type, int h0, int hinf, int n) {
    int two = -1;
    for (size_t i = 0; i < type.size(); ++i) {
        int s = bit_count(type[i]);
        if (s == 2) {
            if (two >= 0) throw NotOneDimensional("more than one two-element block");
            two = static_cast<int>(i);
        } else if (s != 1) {
            throw NotOneDimensional("blocks must have one or two elements");
        }
    }
    if (two < 0) throw NotOneDimensional("no two-element block");
    mask_t before = 1u << (h0 - 1), after = 1u << (hinf - 1);
    for (int i = 0; i < two; ++i) before |= type[i];
    for (size_t i = two + 1; i < type.size(); ++i) after |= type[i];
    auto pairl = mask_labels(type[two]);
    return make_fcurve({before, 1u << (pairl[0] - 1), 1u << (pairl[1] - 1), after}, n);
}

FImage classify_pushforward(const FCurve& f, int h0, int hinf) {
    mask_t m0 = 1u << (h0 - 1), mi = 1u << (hinf - 1);
    int b0 = -1, bi = -1;
    for (int i = 0; i < 4; ++i) {
        if (f.b[i] & m0) b0 = i;
        if (f.b[i] & mi) bi = i;
    }
    if (b0 == bi) return FImage::contracted;
    for (int i = 0; i < 4; ++i)
        if (i != b0 && i != bi && bit_count(f.b[i]) != 1) return FImage::non_toric;
    return FImage::torus;
}

Expression cycle_pushforward(const std::vector<TypeCount>& cycle, int h0, int hinf, int n) {
    Expression e;
    for (const auto& tc : cycle) expr_add(e, torus_fcurve(tc.type, h0, hinf, n), tc.mult);
    return e;
}

Expression lift_cycle(const std::vector<TypeCount>& cycle, int h0, int hinf,
                      const CurveClass& c) {
    int n = c.n;
    Expression e = cycle_pushforward(cycle, h0, hinf, n);
    mask_t heavies = (1u << (h0 - 1)) | (1u << (hinf - 1));
    const auto& t = DivisorTable::get(n);
    for (size_t i = 0; i < t.divisors.size(); ++i) {
        mask_t I = t.divisors[i];
        mask_t side;
        if ((I & heavies) == 0)
            side = I;
        else if (((full_mask(n) & ~I) & heavies) == 0)
            side = full_mask(n) & ~I;
        else
            continue;
        long long d = c.v[i];
        if (d == 0) continue;
        int s = bit_count(side);
        if (s == 2) continue;  // the reduction is an isomorphism along two-light collisions
        if (s >= 4)
            throw UnsupportedExceptionalLocus(
                "class meets an exceptional divisor with fibers of dimension above one");
        auto l = mask_labels(side);
        expr_add(e,
                 make_fcurve({1u << (l[0] - 1), 1u << (l[1] - 1), 1u << (l[2] - 1),
                              full_mask(n) & ~side},
                             n),
                 -d);
    }
    return e;
}

}
