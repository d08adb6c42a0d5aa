#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "pawn/game.hpp"
#include "pawn/turnbased.hpp"

namespace pawn {

inline constexpr std::uint64_t kDefaultBudget = 50'000'000;

struct ExpandOptions {
    std::uint64_t budget = kDefaultBudget;
};

// Descriptor of one vertex of the expansion.
struct ExpandedNode {
    bool is_configuration = true;
    VertexId vertex = 0;     // v of ⟨v,P,r⟩, or the moved-to vertex of an intermediate node
    std::uint64_t pawns = 0; // Player 1's pawns (of the predecessor configuration for intermediate nodes)
    std::uint32_t grabs = 0; // grabs left, 0 outside k-grabbing
    VertexId parent = 0;     // predecessor configuration of an intermediate node
};

// The expansion refers to the game it was built from, which must outlive it.
class ExpandedGame {
public:
    TurnBasedGame tb;
    std::vector<ExpandedNode> nodes;

    std::optional<VertexId> find(const Configuration& c) const;
    Configuration configuration(VertexId id) const; // requires a configuration node
    std::string describe(VertexId id) const;
    std::size_t configuration_count() const;

private:
    friend class Expander;
    const PawnGame* game_ = nullptr;
    struct Key {
        std::uint64_t vertex_grabs;
        std::uint64_t pawns;
        friend bool operator==(const Key&, const Key&) = default;
    };
    struct KeyHash {
        std::size_t operator()(const Key& k) const noexcept
        {
            return std::hash<std::uint64_t>{}(k.vertex_grabs * 0x9E3779B97F4A7C15ULL ^ k.pawns);
        }
    };
    std::unordered_map<Key, VertexId, KeyHash> index_;
};

// Upper bound on expansion size used for the budget check.
std::uint64_t estimate_expansion(const PawnGame& g);

// Expansion reachable from the given seeds. Requires at most 63 pawns.
ExpandedGame expand(const PawnGame& g, const std::vector<Configuration>& seeds, const ExpandOptions& opt = {});
// Expansion over every configuration (every vertex, pawn set and grab count).
ExpandedGame expand_all(const PawnGame& g, const ExpandOptions& opt = {});

struct ExplicitResult {
    Player winner;
    ExpandedGame expanded;
    SolveResult solution;
    VertexId root;

    // Winner's memoryless strategy restricted to vertices reachable from the root when the winner follows it.
    std::vector<std::pair<VertexId, VertexId>> witness() const;
};

ExplicitResult solve_explicit(const PawnGame& g, const Configuration& c, const ExpandOptions& opt = {});

// Solution over all configurations, queried per configuration.
class ExplicitSolution {
public:
    ExplicitSolution(const PawnGame& g, const ExpandOptions& opt = {});
    bool wins(const Configuration& c) const;
    const ExpandedGame& expanded() const { return expanded_; }

private:
    ExpandedGame expanded_;
    SolveResult solution_;
};

// Every ⟨v,P⟩ solved in place over flat arrays, without building the expansion.
// Optional and always grabbing only; requires at most 26 pawns.
class DenseSolution {
public:
    explicit DenseSolution(const PawnGame& g);
    bool wins(VertexId v, std::uint64_t p1_mask) const { return win_[index(v, p1_mask)] != 0; }
    bool wins(const Configuration& c) const { return wins(c.vertex, c.p1.to_mask()); }

private:
    std::size_t index(VertexId v, std::uint64_t mask) const { return (std::size_t{v} << d_) | mask; }
    std::size_t d_ = 0;
    std::vector<char> win_;
};

} // namespace pawn
