#pragma once

#include <cstdint>

#include "m0n/fcurve.hpp"

namespace m0n {

struct SearchConfig {
    int max_level = 4;
    uint64_t node_budget = 5'000'000;  // unique expressions inserted across the whole run
    bool restart = true;               // restart from each strict deficiency improvement
};

enum class SearchStatus { found, budget_exhausted, not_found };

struct SearchResult {
    SearchStatus status = SearchStatus::not_found;
    Expression expression;   // effective when found, otherwise best seen
    long long deficiency = 0;
    uint64_t nodes = 0;
    int restarts = 0;
    int level_reached = 0;
};

// breadth-first walk over Keel moves E' = E + R, R a relation containing a positive
// and a negative curve of E, both signs of each relation; restarts greedily on improvement
SearchResult seek_effective_expression(const Expression& e0, int n, const SearchConfig& cfg = {});

}
