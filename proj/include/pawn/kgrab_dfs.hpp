#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pawn/game.hpp"

namespace pawn {

struct PlayStep {
    enum class Kind { Move, Grab, NoGrab };
    Kind kind;
    VertexId vertex = 0; // for Move
    PawnId pawn = 0;     // for Grab
};

struct DfsOptions {
    bool cache = true;
    std::optional<std::uint64_t> round_cap; // defaults to |V|·(k+1)
};

struct DfsResult {
    Player winner;
    std::vector<PlayStep> witness; // one play from the initial configuration when Player 1 wins
    std::uint64_t round_cap = 0;
    std::uint64_t nodes = 0;
};

DfsResult solve_kgrab_dfs(const PawnGame& g, const Configuration& c, const DfsOptions& opt = {});

std::string format_step(const PawnGame& g, const PlayStep& s);

// Number of rounds in a witness play.
std::size_t witness_rounds(const std::vector<PlayStep>& play);

} // namespace pawn
