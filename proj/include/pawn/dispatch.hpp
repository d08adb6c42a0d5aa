#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pawn/explicit.hpp"
#include "pawn/game.hpp"

namespace pawn {

enum class Algo { Auto, Explicit, Specialized };

struct SolveOptions {
    Algo algo = Algo::Auto;
    bool witness = false;
    std::uint64_t budget = kDefaultBudget;
};

struct SolveReport {
    Player winner = Player::Two;
    std::string algo;               // name of the solver that produced the answer
    bool fallback = false;          // auto mode had no specialized solver
    std::uint64_t states = 0;       // size of the structure the solver worked on
    std::vector<std::string> witness;
};

// Name of the polynomial or search-based solver for this game class, if any.
std::optional<std::string> specialized_solver(const PawnGame& g);

// Throws PreconditionError when Algo::Specialized is requested for a class without one.
SolveReport solve(const PawnGame& g, const Configuration& c, const SolveOptions& opt = {});

} // namespace pawn
