#include "pawn/grab_or_give.hpp"

namespace pawn {

namespace {

void check(const PawnGame& g)
{
    if (g.mechanism().kind != MechanismKind::AlwaysGrabOrGive)
        throw PreconditionError("reduction requires the grab-or-give mechanism");
    if (g.ownership_kind() == OwnershipKind::OMVPP)
        throw PreconditionError("grab-or-give reduction requires OVPP or MVPP ownership");
}

} // namespace

GogReduction reduce_grab_or_give(const PawnGame& g)
{
    check(g);
    GogReduction red;
    auto& tb = red.tb;
    tb.reserve(4 * g.vertex_count());
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        tb.add_vertex(Player::One, g.is_target(v));
        tb.add_vertex(Player::Two, g.is_target(v));
        tb.add_vertex(Player::One);
        tb.add_vertex(Player::Two);
    }
    // With a single pawn the mover holds it, so the opponent must grab it and cannot leave control alone.
    const bool forced_flip = g.pawn_count() == 1;
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        for (VertexId u : g.successors(v)) {
            for (Player i : {Player::One, Player::Two}) {
                Player j = opponent(i);
                tb.add_edge(GogReduction::main_vertex(v, i), GogReduction::hat_vertex(u, j));
                if (!forced_flip) tb.add_edge(GogReduction::hat_vertex(u, j), GogReduction::main_vertex(u, i));
                tb.add_edge(GogReduction::hat_vertex(u, j), GogReduction::main_vertex(u, j));
            }
        }
    }
    tb.normalize();
    return red;
}

Player solve_grab_or_give(const PawnGame& g, const Configuration& c)
{
    check(g);
    validate_configuration(g, c);
    auto red = reduce_grab_or_give(g);
    auto sol = solve_turnbased(red.tb);
    return sol.winner(GogReduction::main_vertex(c.vertex, mover(g, c)));
}

} // namespace pawn
