#include "m0n/search.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "m0n/keel.hpp"

namespace m0n {

namespace {

struct Term {
    FCurve f;
    long long c;
    bool operator==(const Term&) const = default;
};
using Flat = std::vector<Term>;  // sorted by curve

Flat flatten(const Expression& e) {
    Flat out;
    out.reserve(e.size());
    for (const auto& [f, c] : e) out.push_back({f, c});
    return out;
}

Expression unflatten(const Flat& v) {
    Expression e;
    for (const auto& t : v) e.emplace(t.f, t.c);
    return e;
}

void flat_add(Flat& v, const FCurve& f, long long c) {
    auto it = std::lower_bound(v.begin(), v.end(), f,
                               [](const Term& t, const FCurve& k) { return t.f < k; });
    if (it != v.end() && it->f == f) {
        it->c += c;
        if (it->c == 0) v.erase(it);
    } else {
        v.insert(it, {f, c});
    }
}

void apply_relation(Flat& v, const KeelParts& p, int sign, int n) {
    flat_add(v, make_fcurve({p[0], p[1], p[2], p[3] | p[4]}, n), sign);
    flat_add(v, make_fcurve({p[0] | p[1], p[2], p[3], p[4]}, n), sign);
    flat_add(v, make_fcurve({p[0], p[3], p[2], p[1] | p[4]}, n), -sign);
    flat_add(v, make_fcurve({p[0] | p[3], p[2], p[1], p[4]}, n), -sign);
}

long long flat_deficiency(const Flat& v) {
    long long m = 0;
    for (const auto& t : v)
        if (t.c < 0) m -= t.c;
    return m;
}

struct Key128 {
    uint64_t a, b;
    bool operator==(const Key128&) const = default;
};
struct Key128Hash {
    size_t operator()(const Key128& k) const {
        return k.a ^ (k.b * 0x9e3779b97f4a7c15ull);
    }
};

Key128 flat_hash(const Flat& v) {
    uint64_t h1 = 0xcbf29ce484222325ull, h2 = 0x84222325cbf29ce4ull;
    auto mix = [](uint64_t& h, uint64_t x, uint64_t prime) {
        h ^= x;
        h *= prime;
    };
    for (const auto& t : v) {
        for (mask_t m : t.f.b) {
            mix(h1, m, 0x100000001b3ull);
            mix(h2, m, 0x10000000233ull);
        }
        mix(h1, static_cast<uint64_t>(t.c), 0x100000001b3ull);
        mix(h2, static_cast<uint64_t>(t.c), 0x10000000233ull);
    }
    return {h1, h2};
}

struct PairKey {
    FCurve f, g;
    bool operator==(const PairKey&) const = default;
};
struct PairKeyHash {
    size_t operator()(const PairKey& k) const {
        uint64_t h = 0xcbf29ce484222325ull;
        for (mask_t m : k.f.b) h = (h ^ m) * 0x100000001b3ull;
        for (mask_t m : k.g.b) h = (h ^ m) * 0x100000001b3ull;
        return h;
    }
};

struct MoveRec {
    uint32_t parent;   // index into the node array; root entries point to themselves
    KeelParts parts;
    int8_t sign;
    uint8_t depth;
};

}  // namespace

SearchResult seek_effective_expression(const Expression& e0, int n, const SearchConfig& cfg) {
    SearchResult res;
    Flat base = flatten(e0);
    res.deficiency = flat_deficiency(base);
    res.expression = e0;
    if (res.deficiency == 0) {
        res.status = SearchStatus::found;
        return res;
    }

    std::unordered_map<PairKey, std::vector<KeelParts>, PairKeyHash> relation_cache;
    auto relations_for = [&](const FCurve& f, const FCurve& g) -> const std::vector<KeelParts>& {
        PairKey key = (f < g) ? PairKey{f, g} : PairKey{g, f};
        auto it = relation_cache.find(key);
        if (it == relation_cache.end())
            it = relation_cache.emplace(key, keel_relations_containing(key.f, key.g, n)).first;
        return it->second;
    };

    uint64_t total_nodes = 0;
    long long best_def = res.deficiency;
    Flat best = base;

    bool restart_pending = true;
    while (restart_pending) {
        restart_pending = false;
        std::unordered_set<Key128, Key128Hash> visited;
        visited.insert(flat_hash(base));
        std::vector<MoveRec> nodes;
        long long base_def = flat_deficiency(base);

        auto materialize = [&](uint32_t idx) {
            std::vector<uint32_t> chain;
            uint32_t i = idx;
            while (true) {
                chain.push_back(i);
                if (nodes[i].depth == 1) break;
                i = nodes[i].parent;
            }
            Flat e = base;
            for (auto it = chain.rbegin(); it != chain.rend(); ++it)
                apply_relation(e, nodes[*it].parts, nodes[*it].sign, n);
            return e;
        };

        size_t level_begin = 0, level_end = 0;  // node range of the previous level
        bool root_level = true;
        for (int level = 1; level <= cfg.max_level && !restart_pending; ++level) {
            size_t gen_begin = nodes.size();
            size_t parent_lo = level_begin, parent_hi = level_end;
            size_t parent_count = root_level ? 1 : (parent_hi - parent_lo);
            for (size_t pi = 0; pi < parent_count && !restart_pending; ++pi) {
                uint32_t parent_idx = root_level ? 0 : static_cast<uint32_t>(parent_lo + pi);
                Flat e = root_level ? base : materialize(parent_idx);
                std::vector<const FCurve*> pos, neg;
                for (const auto& t : e)
                    (t.c > 0 ? pos : neg).push_back(&t.f);
                for (const FCurve* p : pos) {
                    for (const FCurve* q : neg) {
                        for (const auto& rel : relations_for(*p, *q)) {
                            for (int sign : {1, -1}) {
                                Flat cand = e;
                                apply_relation(cand, rel, sign, n);
                                if (!visited.insert(flat_hash(cand)).second) continue;
                                ++total_nodes;
                                long long def = flat_deficiency(cand);
                                if (def < best_def) {
                                    best_def = def;
                                    best = cand;
                                }
                                if (def == 0) {
                                    res.status = SearchStatus::found;
                                    res.expression = unflatten(cand);
                                    res.deficiency = 0;
                                    res.nodes = total_nodes;
                                    res.level_reached = level;
                                    return res;
                                }
                                if (total_nodes >= cfg.node_budget) {
                                    res.status = SearchStatus::budget_exhausted;
                                    res.expression = unflatten(best);
                                    res.deficiency = best_def;
                                    res.nodes = total_nodes;
                                    res.level_reached = level;
                                    return res;
                                }
                                if (cfg.restart && def < base_def) {
                                    base = cand;
                                    ++res.restarts;
                                    restart_pending = true;
                                    break;
                                }
                                nodes.push_back({parent_idx, rel, static_cast<int8_t>(sign),
                                                 static_cast<uint8_t>(level)});
                            }
                            if (restart_pending) break;
                        }
                        if (restart_pending) break;
                    }
                    if (restart_pending) break;
                }
            }
            level_begin = gen_begin;
            level_end = nodes.size();
            root_level = false;
            res.level_reached = std::max(res.level_reached, level);
            if (level_begin == level_end) break;  // no new nodes anywhere
        }
    }

    res.status = SearchStatus::not_found;
    res.expression = unflatten(best);
    res.deficiency = best_def;
    res.nodes = total_nodes;
    return res;
}

}
