#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace m0n {

// permutation of {1..n}; img[i] is the image of label i+1, stored 0-based
struct Perm {
    std::vector<uint8_t> img;

    int n() const { return static_cast<int>(img.size()); }
    int operator()(int label) const { return img[label - 1] + 1; }
    bool operator==(const Perm&) const = default;
    bool operator<(const Perm& o) const { return img < o.img; }

    static Perm identity(int n);
    Perm inverse() const;
    Perm operator*(const Perm& o) const;  // (g*h)(x) = g(h(x))
};

// cycle notation, e.g. "(1 2 3)(4 5 6)"; labels 10,11,12 may be written a,b,c
Perm parse_cycles(const std::string& s, int n);
std::string cycle_string(const Perm& g);

uint32_t apply_mask(const Perm& g, uint32_t mask);
int perm_order(const Perm& g);
std::vector<std::vector<int>> cycles_of(const Perm& g);  // nontrivial cycles, each from its min, mins ascending

}
