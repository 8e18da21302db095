#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace m0n {

// label sets as bitmasks: bit i-1 <=> label i
using mask_t = uint32_t;

inline int bit_count(mask_t m) { return std::popcount(m); }
inline mask_t full_mask(int n) { return (n == 32) ? ~0u : ((1u << n) - 1); }

// boundary divisors D_I = D_{I^c}; the canonical representative is the side not containing n
mask_t canonical_divisor(mask_t I, int n);

// number of maximal arcs of I on the cycle 1-2-...-n-1
int arc_count(mask_t I, int n);
bool is_adjacent_divisor(mask_t I, int n);  // arc_count == 1
int divisor_level(mask_t I, int n);         // min(|I|, n-|I|)

struct DivisorTable {
    int n = 0;
    std::vector<mask_t> divisors;       // canonical representatives, lex order on sorted label sequences
    std::vector<int32_t> index_of;      // indexed by canonical mask; -1 if not a divisor
    std::vector<uint8_t> arc_counts;    // arc count per divisor
    std::vector<mask_t> basis;          // nonadjacent divisors (arc count >= 2), same order

    static const DivisorTable& get(int n);
};

int divisor_index(mask_t I, int n);  // index of canonical_divisor(I) in the table

}
