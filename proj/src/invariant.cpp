#include "m0n/invariant.hpp"

#include <algorithm>
#include <chrono>
#include <set>

#include "m0n/basis.hpp"
#include "m0n/errors.hpp"

namespace m0n {

std::optional<BalancedType> balanced_type(const Perm& g) {
    auto cycles = cycles_of(g);
    if (cycles.size() != 2) return std::nullopt;
    if (cycles[0].size() != cycles[1].size() || cycles[0].size() < 2) return std::nullopt;
    BalancedType t;
    t.r = static_cast<int>(cycles[0].size());
    t.j = g.n() - 2 * t.r;
    if (t.j > 2) return std::nullopt;
    t.cyc1 = cycles[0];
    t.cyc2 = cycles[1];
    for (int i = 1; i <= g.n(); ++i)
        if (g(i) == i) t.fixed.push_back(i);
    return t;
}

namespace {

mask_t mask_of(const std::vector<int>& labels) {
    mask_t m = 0;
    for (int v : labels) m |= 1u << (v - 1);
    return m;
}

void assign(CurveClass& c, mask_t I, long long v) { c.v[divisor_index(I, c.n)] = v; }

}  // namespace

CurveClass cyclic_fixed_class(const Perm& g) {
    auto bt = balanced_type(g);
    if (!bt) throw NotACurve("fixed locus is a curve only for balanced permutations");
    int n = g.n();
    CurveClass c = zero_class(n);
    mask_t m1 = mask_of(bt->cyc1), m2 = mask_of(bt->cyc2);
    for (int h : bt->cyc1)
        for (int i : bt->cyc2) assign(c, (1u << (h - 1)) | (1u << (i - 1)), 1);
    if (bt->j == 0) {
        assign(c, m1, 2);  // m2 is the complementary side of the same divisor
    } else if (bt->j == 1) {
        assign(c, m1, 1);
        assign(c, m2, 1);
    } else {  // j == 2
        mask_t a = 1u << (bt->fixed[0] - 1);
        assign(c, m1 | a, 1);
        assign(c, m2 | a, 1);
    }
    return c;
}

Expression cyclic_effective_expression(const Perm& g) {
    auto bt = balanced_type(g);
    if (!bt) throw NotACurve("fixed locus is a curve only for balanced permutations");
    int n = g.n(), r = bt->r;
    Perm std_perm = Perm::identity(n);
    for (int k = 1; k <= r; ++k) {
        std_perm.img[k - 1] = static_cast<uint8_t>(k % r);            // (1..r)
        std_perm.img[r + k - 1] = static_cast<uint8_t>(r + k % r);    // (r+1..2r)
    }
    // conjugator: g = h std_perm h^-1
    Perm h = Perm::identity(n);
    for (int k = 0; k < r; ++k) {
        h.img[k] = static_cast<uint8_t>(bt->cyc1[k] - 1);
        h.img[r + k] = static_cast<uint8_t>(bt->cyc2[k] - 1);
    }
    for (int k = 0; k < bt->j; ++k) h.img[2 * r + k] = static_cast<uint8_t>(bt->fixed[k] - 1);
    Expression e = expand_in_dual_basis(cyclic_fixed_class(std_perm));
    return act(h, e);
}

namespace {

std::set<Perm> group_closure(const Perm& g1, const Perm& g2, size_t cap) {
    std::set<Perm> G{Perm::identity(g1.n())};
    std::vector<Perm> frontier{Perm::identity(g1.n())};
    std::array<Perm, 2> gens{g1, g2};
    while (!frontier.empty()) {
        std::vector<Perm> next;
        for (const auto& p : frontier)
            for (const auto& gen : gens) {
                Perm q = p * gen;
                if (G.insert(q).second) {
                    if (G.size() > cap) throw NotACurve("generated group too large");
                    next.push_back(q);
                }
            }
        frontier = std::move(next);
    }
    return G;
}

std::vector<std::vector<int>> group_orbits(const std::set<Perm>& G, int n) {
    std::vector<std::vector<int>> orbits;
    std::vector<bool> seen(n, false);
    for (int i = 1; i <= n; ++i) {
        if (seen[i - 1]) continue;
        std::set<int> orb;
        for (const auto& g : G) orb.insert(g(i));
        std::vector<int> v(orb.begin(), orb.end());
        for (int x : v) seen[x - 1] = true;
        orbits.push_back(std::move(v));
    }
    return orbits;
}

}  // namespace

DihedralData dihedral_analysis(const Perm& g1, const Perm& g2) {
    int n = g1.n();
    if (g2.n() != n) throw NotACurve("generators act on different label sets");
    auto G = group_closure(g1, g2, 4096);
    size_t N = G.size();
    if (N < 6 || N % 2 != 0) throw NotACurve("group is not dihedral of order at least 6");
    int k = static_cast<int>(N / 2);

    DihedralData d;
    d.k = k;
    d.sigma = Perm::identity(n);
    bool found = false;
    for (const auto& g : G)
        if (perm_order(g) == k) {
            d.sigma = g;
            found = true;
            break;
        }
    if (!found) throw NotACurve("group has no rotation of full order");
    std::set<Perm> rot;
    Perm p = Perm::identity(n);
    for (int i = 0; i < k; ++i) {
        rot.insert(p);
        p = p * d.sigma;
    }
    if (rot.size() != static_cast<size_t>(k)) throw NotACurve("rotation subgroup degenerate");
    Perm sinv = d.sigma.inverse();
    for (const auto& g : G) {
        if (rot.count(g)) continue;
        if (perm_order(g) != 2) throw NotACurve("group is not dihedral");
        if (!(g * d.sigma * g == sinv)) throw NotACurve("group is not dihedral");
    }

    auto orbits = group_orbits(G, n);
    const std::vector<int>* big = nullptr;
    std::vector<const std::vector<int>*> korbs;
    for (const auto& o : orbits) {
        if (static_cast<int>(o.size()) == 2 * k) {
            if (big) throw NotACurve("expected a unique orbit of size 2k");
            big = &o;
        } else if (static_cast<int>(o.size()) == k) {
            korbs.push_back(&o);
        } else if (o.size() == 2) {
            if (d.a) throw NotACurve("at most one marked orbit of size 2");
            d.a = 1;
            d.orbit2 = o;
        } else {
            throw NotACurve("marked orbit of unexpected size");
        }
    }
    if (!big) throw NotACurve("fixed locus is a curve only with a free orbit of size 2k");
    if (korbs.size() > 2) throw NotACurve("at most two marked orbits of size k");
    d.b = static_cast<int>(korbs.size());
    if (d.b >= 1) d.korb1 = *korbs[0];
    if (d.b == 2) d.korb2 = *korbs[1];
    if (d.b == 2 && d.korb1[0] > d.korb2[0]) std::swap(d.korb1, d.korb2);

    // split the 2k-orbit into the two k-cycles of sigma; half1 holds the minimum
    int m0 = (*big)[0];
    std::vector<int> h1, h2;
    int x = m0;
    for (int i = 0; i < k; ++i) {
        h1.push_back(x);
        x = d.sigma(x);
    }
    std::set<int> h1set(h1.begin(), h1.end());
    if (static_cast<int>(h1set.size()) != k) throw NotACurve("rotation does not act freely on the 2k-orbit");
    for (int v : *big)
        if (!h1set.count(v)) h2.push_back(v);
    int m2 = *std::min_element(h2.begin(), h2.end());
    h2.clear();
    x = m2;
    for (int i = 0; i < k; ++i) {
        h2.push_back(x);
        x = d.sigma(x);
    }
    d.half1 = h1;
    d.half2 = h2;
    return d;
}

namespace {

// reflection in G fixing the given point
Perm reflection_fixing(const Perm& g1, const Perm& g2, const DihedralData& d, int pt) {
    auto G = group_closure(g1, g2, 4096);
    std::set<Perm> rot;
    Perm p = Perm::identity(g1.n());
    for (int i = 0; i < d.k; ++i) {
        rot.insert(p);
        p = p * d.sigma;
    }
    for (const auto& g : G)
        if (!rot.count(g) && g(pt) == pt) return g;
    throw NotACurve("no reflection fixes the chosen point of a marked k-orbit");
}

}  // namespace

CurveClass dihedral_fixed_class(const Perm& g1, const Perm& g2) {
    DihedralData d = dihedral_analysis(g1, g2);
    int n = g1.n(), k = d.k;
    CurveClass c = zero_class(n);
    mask_t m1 = mask_of(d.half1), m2 = mask_of(d.half2);
    bool evenk = (k % 2 == 0);

    if (d.a == 0) {
        assign(c, m1, 2);
        assign(c, m2, 2);
    } else {
        // the two pivot limits of the moving orbit are distinct points of the
        // curve once a marked k-orbit pins the parametrization, so each half
        // bubbles off with each pivot label; for b = 0 the four sides collapse
        // pairwise to two divisors by complementation
        mask_t l1 = 1u << (d.orbit2[0] - 1);
        mask_t l2 = 1u << (d.orbit2[1] - 1);
        assign(c, m1 | l1, 1);
        assign(c, m2 | l1, 1);
        assign(c, m1 | l2, 1);
        assign(c, m2 | l2, 1);
    }

    bool unit_pairs = (d.b == 0) || (d.b == 1 && !evenk);
    if (unit_pairs)
        for (int h : d.half1)
            for (int i : d.half2) assign(c, (1u << (h - 1)) | (1u << (i - 1)), 1);

    if (d.b == 1 && evenk) {
        Perm tau = reflection_fixing(g1, g2, d, d.korb1[0]);
        for (int i : d.half1) {
            int y = d.sigma(tau(i));  // sigma^(2t+1)(tau(i)), t = 0..k/2-1
            for (int t = 0; t < k / 2; ++t) {
                assign(c, (1u << (i - 1)) | (1u << (y - 1)), 2);
                y = d.sigma(d.sigma(y));
            }
        }
    }

    auto add_triples = [&](const std::vector<int>& korb) {
        int m = korb[0];
        Perm tau = reflection_fixing(g1, g2, d, m);
        std::vector<int> i0, j0, m0;
        for (int i : d.half1) {
            i0.push_back(i);
            j0.push_back(tau(i));
            m0.push_back(m);
        }
        for (int t = 0; t < k; ++t) {
            for (size_t q = 0; q < i0.size(); ++q)
                assign(c, (1u << (i0[q] - 1)) | (1u << (j0[q] - 1)) | (1u << (m0[q] - 1)), 1);
            for (size_t q = 0; q < i0.size(); ++q) {
                i0[q] = d.sigma(i0[q]);
                j0[q] = d.sigma(j0[q]);
                m0[q] = d.sigma(m0[q]);
            }
        }
    };
    if (d.b >= 1) add_triples(d.korb1);
    if (d.b == 2) add_triples(d.korb2);
    return c;
}

uint64_t stabilizer_order(const CurveClass& c, bool exhaustive, long long timeout_ms) {
    int n = c.n;
    auto deadline = std::chrono::steady_clock::now() + std::chrono::milliseconds(timeout_ms);
    bool timed = timeout_ms > 0;

    if (exhaustive) {
        std::vector<int> img(n);
        for (int i = 0; i < n; ++i) img[i] = i;
        uint64_t count = 0, steps = 0;
        do {
            Perm g;
            g.img.assign(img.begin(), img.end());
            if (act(g, c) == c) ++count;
            if (timed && (++steps & 1023) == 0 && std::chrono::steady_clock::now() > deadline)
                throw Timeout("stabilizer enumeration timed out");
        } while (std::next_permutation(img.begin(), img.end()));
        return count;
    }

    // backtracking with pair-value pruning
    std::vector<std::vector<long long>> pv(n + 1, std::vector<long long>(n + 1, 0));
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            pv[i][j] = pv[j][i] = pair_class_divisor(c, (1u << (i - 1)) | (1u << (j - 1)));

    uint64_t count = 0, steps = 0;
    std::vector<int> img(n + 1, 0);
    std::vector<bool> used(n + 1, false);
    auto rec = [&](auto&& self, int i) -> void {
        if (timed && (++steps & 1023) == 0 && std::chrono::steady_clock::now() > deadline)
            throw Timeout("stabilizer search timed out");
        if (i > n) {
            Perm g;
            g.img.resize(n);
            for (int q = 1; q <= n; ++q) g.img[q - 1] = static_cast<uint8_t>(img[q] - 1);
            if (act(g, c) == c) ++count;
            return;
        }
        for (int v = 1; v <= n; ++v) {
            if (used[v]) continue;
            bool ok = true;
            for (int l = 1; l < i && ok; ++l)
                if (pv[i][l] != pv[v][img[l]]) ok = false;
            if (!ok) continue;
            used[v] = true;
            img[i] = v;
            self(self, i + 1);
            used[v] = false;
        }
    };
    rec(rec, 1);
    return count;
}

}
