#pragma once

#include <cstdint>
#include <deque>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "pawn/game.hpp"
#include "pawn/game_io.hpp"
#include "pawn/lockkey.hpp"
#include "pawn/turnbased.hpp"

namespace testing {

inline std::string data_path(const std::string& name) { return std::string(PAWN_TEST_DATA) + "/" + name; }

inline pawn::GameInstance load_data(const std::string& name) { return pawn::load_game(data_path(name)); }

// Exhaustive game-tree search: Player 1 must reach T without repeating a vertex on the current path.
// Dead ends follow the literal rule (Player 2 stuck loses, Player 1 stuck loses).
inline bool andor_wins(const pawn::TurnBasedGame& tb, pawn::VertexId v, std::vector<char>& on_path)
{
    if (tb.is_target(v)) return true;
    if (on_path[v]) return false;
    on_path[v] = 1;
    const auto& succ = tb.successors(v);
    bool result;
    if (tb.player(v) == pawn::Player::One) {
        result = false;
        for (auto w : succ) {
            if (andor_wins(tb, w, on_path)) {
                result = true;
                break;
            }
        }
    } else {
        result = true;
        for (auto w : succ) {
            if (!andor_wins(tb, w, on_path)) {
                result = false;
                break;
            }
        }
    }
    on_path[v] = 0;
    return result;
}

inline std::vector<char> andor_region(const pawn::TurnBasedGame& tb)
{
    std::vector<char> region(tb.size());
    std::vector<char> on_path(tb.size(), 0);
    for (pawn::VertexId v = 0; v < tb.size(); ++v) region[v] = andor_wins(tb, v, on_path) ? 1 : 0;
    return region;
}

inline pawn::PawnGame make_game(std::size_t pawns, std::vector<std::vector<pawn::PawnId>> owners,
                                std::vector<std::pair<pawn::VertexId, pawn::VertexId>> edges,
                                std::vector<pawn::VertexId> targets,
                                pawn::Mechanism m = pawn::Mechanism::optional_grabbing())
{
    pawn::GameParts parts;
    parts.pawn_count = pawns;
    parts.owners = std::move(owners);
    parts.edges = std::move(edges);
    parts.targets = std::move(targets);
    parts.mechanism = m;
    return pawn::PawnGame(std::move(parts));
}

// Shortest wiring distance between two primed copies, never touching the sink, the goal or another primed copy.
inline std::optional<std::size_t> primed_distance(const pawn::LockKeyEmbedding& em, pawn::VertexId from_lk,
                                                  pawn::VertexId to_lk)
{
    const auto& g = em.instance.game;
    std::vector<char> blocked(g.vertex_count(), 0);
    for (auto v : em.primed) blocked[v] = 1;
    blocked[em.sink] = blocked[em.target] = 1;
    const pawn::VertexId goal = em.primed[to_lk];
    blocked[goal] = 0;
    std::vector<std::size_t> dist(g.vertex_count(), SIZE_MAX);
    std::deque<pawn::VertexId> queue{em.primed[from_lk]};
    dist[em.primed[from_lk]] = 0;
    while (!queue.empty()) {
        auto v = queue.front();
        queue.pop_front();
        if (v == goal && dist[v] > 0) return dist[v];
        for (auto w : g.successors(v)) {
            if ((blocked[w] && w != goal) || dist[w] != SIZE_MAX) continue;
            dist[w] = dist[v] + 1;
            queue.push_back(w);
        }
    }
    return std::nullopt;
}

struct DeltaPath {
    bool rewrites;          // the transition writes a different letter
    std::optional<std::size_t> length;
};

// Every primed main -> primed intermediate -> primed main route of an embedded machine game.
// Vertices below `main_count` are the machine configurations; the rest are transition intermediates.
inline std::vector<DeltaPath> delta_paths(const pawn::LockKeyGame& lk, const pawn::LockKeyEmbedding& em,
                                          std::size_t main_count)
{
    std::vector<DeltaPath> out;
    for (const auto& first : lk.edges) {
        if (first.from >= main_count || first.to < main_count) continue;
        auto head = primed_distance(em, first.from, first.to);
        for (const auto& second : lk.edges) {
            if (second.from != first.to) continue;
            auto tail = primed_distance(em, second.from, second.to);
            std::optional<std::size_t> total;
            if (head && tail) total = *head + *tail;
            out.push_back({!first.keys.empty(), total});
        }
    }
    return out;
}

inline pawn::PawnSet pawns(std::size_t d, std::vector<pawn::PawnId> list) { return pawn::PawnSet::from_list(d, list); }

} // namespace testing
