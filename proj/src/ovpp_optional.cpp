#include "pawn/ovpp_optional.hpp"

#include <algorithm>

namespace pawn {

namespace {

std::vector<VertexId> members(const std::vector<char>& set)
{
    std::vector<VertexId> out;
    for (VertexId v = 0; v < set.size(); ++v) {
        if (set[v]) out.push_back(v);
    }
    return out;
}

} // namespace

OvppResult solve_ovpp_optional(const PawnGame& g, const Configuration& c)
{
    if (g.ownership_kind() != OwnershipKind::OVPP) throw PreconditionError("solver requires an OVPP game");
    if (g.mechanism().kind != MechanismKind::OptionalGrabbing)
        throw PreconditionError("solver requires optional grabbing");
    validate_configuration(g, c);

    const std::size_t n = g.vertex_count();
    // P1 controls u iff its single owner pawn is in P0.
    auto p1_controls = [&](VertexId u) { return c.p1.contains(g.owners(u).front()); };
    auto all_succ_in = [&](VertexId u, auto&& pred) {
        const auto& s = g.successors(u);
        return std::all_of(s.begin(), s.end(), pred);
    };

    OvppResult res{Player::Two, {}};
    auto& tr = res.trace;
    tr.level.assign(n, -1);
    tr.reason.assign(n, Absorption::Target);

    std::vector<char> in_w(n, 0);
    for (VertexId v : g.targets()) {
        in_w[v] = 1;
        tr.level[v] = 0;
    }
    std::int32_t i = 0;
    auto absorb = [&](const std::vector<VertexId>& add, Absorption why) {
        ++i;
        for (VertexId u : add) {
            in_w[u] = 1;
            tr.level[u] = i;
            tr.reason[u] = why;
        }
    };

    while (true) {
        OvppRound round;
        round.winning = members(in_w);
        if (in_w[c.vertex]) {
            tr.rounds.push_back(std::move(round));
            tr.verdict = "initial vertex in W";
            res.winner = Player::One;
            return res;
        }

        std::vector<VertexId> closure;
        for (VertexId u = 0; u < n; ++u) {
            if (!in_w[u] && all_succ_in(u, [&](VertexId w) { return in_w[w] != 0; })) closure.push_back(u);
        }
        if (!closure.empty()) {
            tr.rounds.push_back(std::move(round));
            absorb(closure, Absorption::Closure);
            continue;
        }

        std::vector<char> in_b(n, 0);
        for (VertexId u = 0; u < n; ++u) {
            if (in_w[u]) continue;
            for (VertexId w : g.successors(u)) {
                if (in_w[w]) {
                    in_b[u] = 1;
                    break;
                }
            }
        }
        round.border = members(in_b);
        if (round.border.empty()) {
            tr.rounds.push_back(std::move(round));
            tr.verdict = "empty border";
            return res;
        }
        if (in_b[c.vertex] && p1_controls(c.vertex)) {
            tr.rounds.push_back(std::move(round));
            tr.verdict = "initial vertex on the border under Player 1";
            res.winner = Player::One;
            return res;
        }

        for (VertexId u : round.border) {
            if (all_succ_in(u, [&](VertexId w) { return in_w[w] || in_b[w]; })) round.inner.push_back(u);
        }
        if (!round.inner.empty()) {
            auto add = round.inner;
            tr.rounds.push_back(std::move(round));
            absorb(add, Absorption::BorderInner);
            continue;
        }

        // Taken over vertices outside W; a vertex of W with all successors on the border would never grow W.
        std::vector<VertexId> grow;
        for (VertexId u = 0; u < n; ++u) {
            if (in_w[u] || !all_succ_in(u, [&](VertexId w) { return in_b[w] != 0; })) continue;
            round.forced.push_back(u);
            if (!p1_controls(u)) grow.push_back(u);
        }
        tr.rounds.push_back(std::move(round));
        if (grow.empty()) {
            tr.verdict = "no vertex forced into the border under Player 2";
            return res;
        }
        absorb(grow, Absorption::ForcedIntoBorder);
    }
}

} // namespace pawn
