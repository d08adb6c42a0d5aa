#pragma once

#include <cstdint>
#include <limits>
#include <vector>

#include "pawn/game.hpp"
#include "pawn/turnbased.hpp"

namespace pawn {

inline constexpr std::uint32_t kInfiniteGrabs = std::numeric_limits<std::uint32_t>::max();

// η(v) for every vertex, kInfiniteGrabs where no number of grabs suffices.
using MinGrabMap = std::vector<std::uint32_t>;

enum class EtaVariant {
    Controlled, // levels over (vertex, controller) pairs; a grab is spent on the vertex just entered
    NonTrivial, // levels over vertices, next level from the copy construction
    ReSolve     // levels over vertices, next level by re-solving with the border as targets
};

MinGrabMap minimum_grabs(const PawnGame& g, const PawnSet& p1, EtaVariant variant = EtaVariant::Controlled);

// Vertices from which Player 1 forces the targets of tb in at least one move, where `border` is part of the
// targets and the remaining targets form the prior region.
std::vector<VertexId> winning_nontrivially(const TurnBasedGame& tb, const std::vector<VertexId>& border);

Player solve_kgrab_ovpp(const PawnGame& g, const Configuration& c);

} // namespace pawn
