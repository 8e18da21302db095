#include "m0n/perm.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <numeric>

#include "m0n/errors.hpp"

namespace m0n {

Perm Perm::identity(int n) {
    Perm g;
    g.img.resize(n);
    std::iota(g.img.begin(), g.img.end(), 0);
    return g;
}

Perm Perm::inverse() const {
    Perm g;
    g.img.resize(img.size());
    for (size_t i = 0; i < img.size(); ++i) g.img[img[i]] = static_cast<uint8_t>(i);
    return g;
}

Perm Perm::operator*(const Perm& o) const {
    Perm g;
    g.img.resize(img.size());
    for (size_t i = 0; i < img.size(); ++i) g.img[i] = img[o.img[i]];
    return g;
}

namespace {

int label_value(char c) {
    if (c >= '1' && c <= '9') return c - '0';
    if (c == 'a') return 10;
    if (c == 'b') return 11;
    if (c == 'c') return 12;
    return -1;
}

}  // namespace

Perm parse_cycles(const std::string& s, int n) {
    Perm g = Perm::identity(n);
    std::vector<bool> seen(n, false);
    size_t i = 0;
    auto skip_ws = [&] { while (i < s.size() && (s[i] == ' ' || s[i] == ',')) ++i; };
    skip_ws();
    if (i == s.size() || s.compare(i, 2, "id") == 0) return g;
    while (i < s.size()) {
        skip_ws();
        if (i == s.size()) break;
        if (s[i] != '(') throw ParseError("expected '(' in cycle notation: " + s);
        ++i;
        std::vector<int> cyc;
        while (i < s.size() && s[i] != ')') {
            skip_ws();
            if (i < s.size() && s[i] == ')') break;
            int v = 0;
            if (std::isdigit(static_cast<unsigned char>(s[i]))) {
                while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
                    v = v * 10 + (s[i++] - '0');
                // digit runs exceeding n are juxtaposed single labels, e.g. (123)
                if (v > n) {
                    size_t start = i - std::to_string(v).size();
                    for (size_t j = start; j < i; ++j) {
                        int d = s[j] - '0';
                        if (d < 1 || d > n) throw ParseError("label out of range in " + s);
                        cyc.push_back(d);
                    }
                    v = 0;
                }
            } else {
                v = label_value(s[i]);
                if (v < 0) throw ParseError("bad character in cycle notation: " + s);
                ++i;
            }
            if (v) {
                if (v < 1 || v > n) throw ParseError("label out of range in " + s);
                cyc.push_back(v);
            }
        }
        if (i == s.size()) throw ParseError("unterminated cycle in " + s);
        ++i;  // ')'
        for (int v : cyc) {
            if (seen[v - 1]) throw ParseError("repeated label in cycle notation: " + s);
            seen[v - 1] = true;
        }
        for (size_t k = 0; k < cyc.size(); ++k)
            g.img[cyc[k] - 1] = static_cast<uint8_t>(cyc[(k + 1) % cyc.size()] - 1);
        skip_ws();
    }
    return g;
}

std::string cycle_string(const Perm& g) {
    std::string out;
    std::vector<bool> seen(g.n(), false);
    auto label = [](int v) -> std::string {
        if (v == 10) return "a";
        if (v == 11) return "b";
        if (v == 12) return "c";
        return std::to_string(v);
    };
    for (int i = 1; i <= g.n(); ++i) {
        if (seen[i - 1] || g(i) == i) continue;
        out += "(";
        int j = i;
        bool first = true;
        do {
            if (!first) out += " ";
            out += label(j);
            seen[j - 1] = true;
            j = g(j);
            first = false;
        } while (j != i);
        out += ")";
    }
    return out.empty() ? "id" : out;
}

uint32_t apply_mask(const Perm& g, uint32_t mask) {
    uint32_t out = 0;
    while (mask) {
        int i = std::countr_zero(mask);
        mask &= mask - 1;
        out |= 1u << (g(i + 1) - 1);
    }
    return out;
}

int perm_order(const Perm& g) {
    Perm p = g;
    Perm id = Perm::identity(g.n());
    int k = 1;
    while (!(p == id)) {
        p = p * g;
        ++k;
    }
    return k;
}

std::vector<std::vector<int>> cycles_of(const Perm& g) {
    std::vector<std::vector<int>> out;
    std::vector<bool> seen(g.n(), false);
    for (int i = 1; i <= g.n(); ++i) {
        if (seen[i - 1] || g(i) == i) continue;
        std::vector<int> cyc;
        int j = i;
        do {
            cyc.push_back(j);
            seen[j - 1] = true;
            j = g(j);
        } while (j != i);
        out.push_back(std::move(cyc));
    }
    return out;
}

}
