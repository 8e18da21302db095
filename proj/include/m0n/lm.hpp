#pragma once

#include "m0n/cyclotomic.hpp"
#include "m0n/fcurve.hpp"

namespace m0n {

// one-parameter family of configurations on the Losev-Manin space: two heavy labels
// pinned at 0 and infinity, one coordinate function per light label
struct LmFamily {
    int n = 0;
    int heavy0 = 0, heavy_inf = 0;
    std::map<int, RatFunc> coords;
};

// irreducible component of a cycle of torus-orbit closures, carried with an exact
// parametrization; exactly one block of the ordered partition varies (mod scaling)
struct LmComponent {
    std::vector<mask_t> type;  // ordered partition of the lights, 0-side first
    long long mult = 1;
    std::map<int, RatFunc> pos;
};

struct TypeCount {
    std::vector<mask_t> type;
    long long mult = 0;
    bool operator==(const TypeCount&) const = default;
};

struct DegenerationResult {
    std::vector<int> steps;                         // processed light labels, in order
    std::vector<std::vector<TypeCount>> snapshots;  // aggregated cycle after each step
    std::vector<TypeCount> final_cycle;             // one-dimensional orbit closures
    int dropped = 0;                                // limits that degenerated to points
};

// iterated one-parameter-subgroup limits over the lights in ascending order,
// skipping the largest light
DegenerationResult degenerate(const LmFamily& fam);

// single limit step of one component under the subgroup scaling the given label
std::vector<LmComponent> limit_step(const LmComponent& comp, int label, int n, int* dropped);

// the F-curve a one-dimensional orbit closure maps to under the reduction from
// the full moduli space
FCurve torus_fcurve(const std::vector<mask_t>& type, int h0, int hinf, int n);

enum class FImage { torus, contracted, non_toric };
FImage classify_pushforward(const FCurve& f, int h0, int hinf);

Expression cycle_pushforward(const std::vector<TypeCount>& cycle, int h0, int hinf, int n);

// upstairs expression with the class of C: pushforward terms plus fiber corrections
// over the three-light exceptional loci of the reduction map
Expression lift_cycle(const std::vector<TypeCount>& cycle, int h0, int hinf,
                      const CurveClass& c);

}
