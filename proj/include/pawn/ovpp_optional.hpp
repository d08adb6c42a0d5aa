#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pawn/game.hpp"

namespace pawn {

enum class Absorption { Target, Closure, BorderInner, ForcedIntoBorder };

struct OvppRound {
    std::vector<VertexId> winning;  // W_i at the start of the round
    std::vector<VertexId> border;   // B
    std::vector<VertexId> inner;    // B′
    std::vector<VertexId> forced;   // R
};

struct OvppTrace {
    std::vector<OvppRound> rounds;
    std::vector<std::int32_t> level;   // index i of the first W_i holding the vertex, -1 if never
    std::vector<Absorption> reason;    // meaningful where level >= 0
    std::string verdict;               // which exit was taken
};

struct OvppResult {
    Player winner;
    OvppTrace trace;
};

// Attractor-style solver for OVPP optional-grabbing games.
OvppResult solve_ovpp_optional(const PawnGame& g, const Configuration& c);

} // namespace pawn
