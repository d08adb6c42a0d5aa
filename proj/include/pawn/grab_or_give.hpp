#pragma once

#include "pawn/game.hpp"
#include "pawn/turnbased.hpp"

namespace pawn {

// Turn-based game over ⟨v,i⟩ (Player i moves from v) and ⟨v̂,i⟩ (Player i decides who moves from v).
struct GogReduction {
    TurnBasedGame tb;

    static VertexId main_vertex(VertexId v, Player i) { return 4 * v + (i == Player::One ? 0 : 1); }
    static VertexId hat_vertex(VertexId v, Player i) { return 4 * v + (i == Player::One ? 2 : 3); }
};

GogReduction reduce_grab_or_give(const PawnGame& g);
Player solve_grab_or_give(const PawnGame& g, const Configuration& c);

} // namespace pawn
