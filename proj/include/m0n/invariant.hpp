#pragma once

#include <cstdint>
#include <optional>

#include "m0n/fcurve.hpp"

namespace m0n {

// balanced permutation: exactly two disjoint r-cycles, r >= 2, and j = n-2r fixed points, j <= 2
struct BalancedType {
    int r = 0;
    int j = 0;
    std::vector<int> cyc1, cyc2;  // orbits from their minimum; min(cyc1) < min(cyc2)
    std::vector<int> fixed;       // ascending
};

std::optional<BalancedType> balanced_type(const Perm& g);

// class of the one-dimensional fixed locus of a balanced permutation
CurveClass cyclic_fixed_class(const Perm& g);

// effective expression with the same class, all coefficients one
Expression cyclic_effective_expression(const Perm& g);

// dihedral group data recovered from two generators
struct DihedralData {
    int k = 0;               // G isomorphic to D_k, order 2k
    int a = 0, b = 0;        // number of marked orbits of size 2 and of size k
    Perm sigma;              // rotation of order k
    std::vector<int> half1, half2;  // the two k-cycles of sigma in the 2k-orbit; min(half1) minimal
    std::vector<int> orbit2;        // the order-2 orbit if a == 1
    std::vector<int> korb1, korb2;  // the k-orbits if b >= 1 (korb1 contains the smaller minimum)
};

DihedralData dihedral_analysis(const Perm& g1, const Perm& g2);
CurveClass dihedral_fixed_class(const Perm& g1, const Perm& g2);

// order of the subgroup of S_n preserving the class
uint64_t stabilizer_order(const CurveClass& c, bool exhaustive = false,
                          long long timeout_ms = 0);

}
