#pragma once

// Individualisation-refinement over a typed relational structure. Explores the
// whole search tree; leaves achieving the least code form one automorphism orbit.

#include <cstdint>
#include <vector>

namespace strandhopf::detail {

struct Structure {
    int n = 0;
    std::vector<int> colour;                          // invariant initial colour
    std::vector<std::vector<std::pair<int, int>>> arcs;  // (relation, target), both directions listed
};

struct CanonOutcome {
    std::vector<int> best;                    // position of each node in the least leaf
    std::vector<std::vector<int>> optimal;    // all least leaves (if requested)
    std::uint64_t optimal_count = 0;
};

using Encoder = std::vector<int> (*)(const void* ctx, const std::vector<int>& position);

CanonOutcome canonicalize(const Structure& st, Encoder encode, const void* ctx, bool keep_all);

}  // namespace strandhopf::detail
