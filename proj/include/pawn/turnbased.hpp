#pragma once

#include <cstdint>
#include <istream>
#include <optional>
#include <string>
#include <vector>

#include "pawn/game.hpp"

namespace pawn {

// Reachability game with a fixed vertex partition. Dead ends are allowed.
class TurnBasedGame {
public:
    TurnBasedGame() = default;

    VertexId add_vertex(Player p, bool target = false);
    void add_edge(VertexId from, VertexId to);
    void set_target(VertexId v, bool target = true) { target_[v] = target; }
    void set_player(VertexId v, Player p) { player_[v] = p; }
    // Sorts and deduplicates successor lists.
    void normalize();
    void reserve(std::size_t n);

    std::size_t size() const { return player_.size(); }
    std::size_t edge_count() const;
    Player player(VertexId v) const { return player_[v]; }
    bool is_target(VertexId v) const { return target_[v] != 0; }
    const std::vector<VertexId>& successors(VertexId v) const { return succ_[v]; }

private:
    std::vector<Player> player_;
    std::vector<char> target_;
    std::vector<std::vector<VertexId>> succ_;
};

inline constexpr std::int32_t kNotWinning = -1;

struct SolveResult {
    std::vector<char> region;            // 1 iff Player 1 wins from the vertex
    std::vector<std::int32_t> level;     // attractor level, kNotWinning outside the region
    std::vector<std::vector<VertexId>> layers; // vertices first added at each level
    std::vector<std::optional<VertexId>> p1_strategy; // on V1 inside the region, off the targets
    std::vector<std::optional<VertexId>> p2_strategy; // on V2 outside the region

    bool wins(VertexId v) const { return region[v] != 0; }
    Player winner(VertexId v) const { return wins(v) ? Player::One : Player::Two; }
};

// W_0 = T, W_{i+1} = W_i plus one-step forced vertices, up to the fixed point. Each set is sorted.
std::vector<std::vector<VertexId>> attractor_levels(const TurnBasedGame& tb);

SolveResult solve_turnbased(const TurnBasedGame& tb);

// Text form: `tb <id> player=1|2 [target]` and `tbedge <id> <id>` lines in id order.
std::string serialize_tbgame(const TurnBasedGame& tb);
TurnBasedGame parse_tbgame(std::istream& in);

} // namespace pawn
