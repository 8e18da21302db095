#pragma once

#include <array>
#include <optional>

#include "m0n/fcurve.hpp"

namespace m0n {

// Keel relation on an ordered partition (I1,...,I5):
//   F(I1,I2,I3,I4+I5) + F(I1+I2,I3,I4,I5) - F(I1,I4,I3,I2+I5) - F(I1+I4,I3,I2,I5)
// has class zero; reversal and the simultaneous swap (I1 I2)(I4 I5) preserve the
// expression, swapping I2 and I4 negates it
using KeelParts = std::array<mask_t, 5>;

Expression keel_expression(const KeelParts& parts, int n);
KeelParts canonical_keel(const KeelParts& parts);  // lex-min over the eight equivalent orderings

// blocks of the common refinement; adjacency means exactly five blocks
std::vector<mask_t> common_refinement(const FCurve& f, const FCurve& g);
bool adjacent(const FCurve& f, const FCurve& g);
int shared_block_count(const FCurve& f, const FCurve& g);

// canonical relations whose expression contains both curves, sorted
std::vector<KeelParts> keel_relations_containing(const FCurve& f, const FCurve& g, int n);

// the unique relation through three suitably adjacent curves, if any
std::optional<KeelParts> keel_relation_through(const FCurve& f, const FCurve& g, const FCurve& h,
                                               int n);

}
