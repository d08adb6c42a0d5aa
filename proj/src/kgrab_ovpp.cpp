#include "pawn/kgrab_ovpp.hpp"

#include <algorithm>
#include <cassert>

namespace pawn {

namespace {

void check(const PawnGame& g)
{
    if (g.ownership_kind() != OwnershipKind::OVPP) throw PreconditionError("solver requires an OVPP game");
    if (!g.mechanism().is_k_grabbing()) throw PreconditionError("solver requires k-grabbing");
}

TurnBasedGame skeleton(const PawnGame& g, const PawnSet& p1, const std::vector<char>& targets)
{
    TurnBasedGame tb;
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        tb.add_vertex(g.owner_set(v).intersects(p1) ? Player::One : Player::Two, targets[v] != 0);
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        for (VertexId w : g.successors(v)) tb.add_edge(v, w);
    }
    return tb;
}

std::vector<char> border_of(const PawnGame& g, const std::vector<char>& region)
{
    std::vector<char> b(g.vertex_count(), 0);
    for (VertexId u = 0; u < g.vertex_count(); ++u) {
        if (region[u]) continue;
        for (VertexId w : g.successors(u)) {
            if (region[w]) {
                b[u] = 1;
                break;
            }
        }
    }
    return b;
}

MinGrabMap resolve_variant(const PawnGame& g, const PawnSet& p1)
{
    const std::size_t n = g.vertex_count();
    MinGrabMap eta(n, kInfiniteGrabs);
    std::vector<char> targets(n, 0);
    for (VertexId t : g.targets()) targets[t] = 1;
    for (std::uint32_t level = 0; level <= 2 * n + 2; ++level) {
        auto sol = solve_turnbased(skeleton(g, p1, targets));
        for (VertexId u = 0; u < n; ++u) {
            if (sol.region[u] && eta[u] == kInfiniteGrabs) eta[u] = level;
        }
        auto next = border_of(g, sol.region);
        if (std::none_of(next.begin(), next.end(), [](char c) { return c != 0; }) || next == targets) break;
        targets = std::move(next);
    }
    return eta;
}

// Level r is a turn-based game over ⟨v, P1 moves⟩, ⟨v, P2 moves⟩ and arrival nodes. Entering a Player 2 vertex u
// counts as reaching the target when ⟨u, P1 moves⟩ wins at level r-1, since Player 1 may grab u on arrival.
MinGrabMap controlled_variant(const PawnGame& g, const PawnSet& p1)
{
    const auto n = static_cast<VertexId>(g.vertex_count());
    auto state = [](VertexId v, Player c) { return 3 * v + (c == Player::One ? 0 : 1); };
    auto arrival = [](VertexId u) { return 3 * u + 2; };
    std::vector<char> base_p1(n);
    for (VertexId v = 0; v < n; ++v) base_p1[v] = g.owner_set(v).intersects(p1);

    MinGrabMap eta(n, kInfiniteGrabs);
    std::vector<char> grab_wins(n, 0); // ⟨u, P1 moves⟩ wins with one grab fewer
    for (std::uint32_t level = 0; level <= n; ++level) {
        TurnBasedGame tb;
        tb.reserve(3 * n);
        for (VertexId v = 0; v < n; ++v) {
            tb.add_vertex(Player::One, g.is_target(v));
            tb.add_vertex(Player::Two, g.is_target(v));
            tb.add_vertex(Player::One, g.is_target(v) || grab_wins[v]);
        }
        for (VertexId v = 0; v < n; ++v) {
            for (VertexId u : g.successors(v)) {
                tb.add_edge(state(v, Player::One), arrival(u));
                tb.add_edge(state(v, Player::Two), arrival(u));
            }
            tb.add_edge(arrival(v), state(v, base_p1[v] ? Player::One : Player::Two));
        }
        auto sol = solve_turnbased(tb);
        std::vector<char> next(n, 0);
        for (VertexId v = 0; v < n; ++v) {
            if (eta[v] == kInfiniteGrabs && sol.region[state(v, base_p1[v] ? Player::One : Player::Two)])
                eta[v] = level;
            next[v] = !base_p1[v] && sol.region[state(v, Player::One)];
        }
        if (next == grab_wins && level > 0) break;
        grab_wins = std::move(next);
    }
    return eta;
}

} // namespace

std::vector<VertexId> winning_nontrivially(const TurnBasedGame& tb, const std::vector<VertexId>& border)
{
    const auto n = static_cast<VertexId>(tb.size());
    std::vector<char> on_border(n, 0);
    for (VertexId u : border) on_border[u] = 1;

    TurnBasedGame copy = tb;
    std::vector<VertexId> twin(n, 0);
    for (VertexId u : border) {
        twin[u] = copy.add_vertex(tb.player(u), false);
        for (VertexId w : tb.successors(u)) {
            bool prior = tb.is_target(w) && !on_border[w];
            if (!prior) copy.add_edge(twin[u], w);
        }
    }
    auto sol = solve_turnbased(copy);
    std::vector<VertexId> out;
    for (VertexId u = 0; u < n; ++u) {
        if (on_border[u] ? sol.region[twin[u]] : sol.region[u]) out.push_back(u);
    }
    return out;
}

MinGrabMap minimum_grabs(const PawnGame& g, const PawnSet& p1, EtaVariant variant)
{
    check(g);
    if (p1.universe() != g.pawn_count()) throw ValidationError("pawn set universe does not match pawn count");
    if (variant == EtaVariant::ReSolve) return resolve_variant(g, p1);
    if (variant == EtaVariant::Controlled) return controlled_variant(g, p1);

    const std::size_t n = g.vertex_count();
    MinGrabMap eta(n, kInfiniteGrabs);
    std::vector<char> region(n, 0);
    for (VertexId t : g.targets()) region[t] = 1;
    region = solve_turnbased(skeleton(g, p1, region)).region;
    for (VertexId u = 0; u < n; ++u) {
        if (region[u]) eta[u] = 0;
    }

    for (std::uint32_t level = 1;; ++level) {
        auto on_border = border_of(g, region);
        std::vector<VertexId> border;
        std::vector<char> goal = region;
        for (VertexId u = 0; u < n; ++u) {
            if (!on_border[u]) continue;
            if (g.owner_set(u).intersects(p1)) throw Error("border vertex under Player 1 control");
            border.push_back(u);
            goal[u] = 1;
        }
        if (border.empty()) break;
        bool grew = false;
        for (VertexId u : winning_nontrivially(skeleton(g, p1, goal), border)) {
            if (!region[u]) {
                region[u] = 1;
                eta[u] = level;
                grew = true;
            }
        }
        if (!grew) break;
    }
    return eta;
}

Player solve_kgrab_ovpp(const PawnGame& g, const Configuration& c)
{
    check(g);
    validate_configuration(g, c);
    auto eta = minimum_grabs(g, c.p1);
    return eta[c.vertex] != kInfiniteGrabs && eta[c.vertex] <= *c.grabs_left ? Player::One : Player::Two;
}

} // namespace pawn
