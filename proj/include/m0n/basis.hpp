#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include "m0n/fcurve.hpp"

namespace m0n {

using Rat = boost::multiprecision::cpp_rational;

const std::vector<mask_t>& nonadjacent_basis(int n);

// effective curve expression dual to the nonadjacent divisor D_I:
// pairs 1 with D_I and 0 with every other nonadjacent divisor
const Expression& dual_basis_expression(mask_t I, int n);

// sum of (C . D) * dual(D) over the nonadjacent basis; has class C
Expression expand_in_dual_basis(const CurveClass& c);

Rat kappa_pairing(const CurveClass& c);   // C . K
Rat psi_pairing(const CurveClass& c);     // C . psi = C . (K + 2D)
Rat kollar_bound(const CurveClass& c);    // -C.K + (n-3)
long long boundary_pairing(const CurveClass& c);  // C . D, all boundary divisors

}
