#include "m0n/divisor.hpp"

#include <algorithm>
#include <map>
#include <mutex>

#include "m0n/errors.hpp"

namespace m0n {

mask_t canonical_divisor(mask_t I, int n) {
    if (n < 4 || n > 20) throw SizeOutOfRange("n must be between 4 and 20");
    mask_t full = full_mask(n);
    if ((I & ~full) != 0) throw SizeOutOfRange("label outside 1..n in divisor");
    if (I == 0 || I == full) throw EmptyOrFull("divisor side must be a proper nonempty subset");
    int s = bit_count(I);
    if (s < 2 || s > n - 2) throw SizeOutOfRange("divisor side must have between 2 and n-2 labels");
    if (I & (1u << (n - 1))) return full & ~I;
    return I;
}

int arc_count(mask_t I, int n) {
    int t = 0;
    for (int i = 0; i < n; ++i) {
        bool here = I & (1u << i);
        bool prev = I & (1u << ((i + n - 1) % n));
        if (here && !prev) ++t;
    }
    return t;
}

bool is_adjacent_divisor(mask_t I, int n) { return arc_count(canonical_divisor(I, n), n) == 1; }

int divisor_level(mask_t I, int n) {
    int s = bit_count(canonical_divisor(I, n));
    return std::min(s, n - s);
}

const DivisorTable& DivisorTable::get(int n) {
    static std::map<int, DivisorTable> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    if (n < 4 || n > 20) throw SizeOutOfRange("n must be between 4 and 20");

    DivisorTable t;
    t.n = n;
    mask_t lim = 1u << (n - 1);  // canonical masks never contain label n
    for (mask_t m = 0; m < lim; ++m) {
        int s = bit_count(m);
        if (s >= 2 && s <= n - 2) t.divisors.push_back(m);
    }
    auto labels = [](mask_t m) {
        std::vector<int> v;
        while (m) {
            v.push_back(std::countr_zero(m) + 1);
            m &= m - 1;
        }
        return v;
    };
    std::sort(t.divisors.begin(), t.divisors.end(),
              [&](mask_t a, mask_t b) { return labels(a) < labels(b); });
    t.index_of.assign(lim, -1);
    t.arc_counts.resize(t.divisors.size());
    for (size_t i = 0; i < t.divisors.size(); ++i) {
        t.index_of[t.divisors[i]] = static_cast<int32_t>(i);
        t.arc_counts[i] = static_cast<uint8_t>(arc_count(t.divisors[i], n));
        if (t.arc_counts[i] >= 2) t.basis.push_back(t.divisors[i]);
    }
    return cache.emplace(n, std::move(t)).first->second;
}

int divisor_index(mask_t I, int n) {
    const auto& t = DivisorTable::get(n);
    int32_t idx = t.index_of[canonical_divisor(I, n)];
    return idx;
}

}
