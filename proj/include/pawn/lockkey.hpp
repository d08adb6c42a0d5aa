#pragma once

#include <cstdint>
#include <istream>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pawn/game.hpp"
#include "pawn/turnbased.hpp"

namespace pawn {

using LockId = std::uint32_t;

struct LockKeyEdge {
    VertexId from = 0;
    VertexId to = 0;
    std::vector<LockId> locks; // sorted, crossing requires all of them open
    std::vector<LockId> keys;  // sorted, crossing toggles each of them
};

struct LockKeyGame {
    std::string name = "lockkey";
    std::size_t lock_count = 0;
    std::vector<std::string> vertex_names;
    std::vector<Player> players;
    std::vector<char> targets;
    std::vector<LockKeyEdge> edges;

    std::size_t size() const { return vertex_names.size(); }
    VertexId add_vertex(std::string name, Player p, bool target = false);
    void add_edge(VertexId from, VertexId to, std::vector<LockId> locks = {}, std::vector<LockId> keys = {});
    std::optional<VertexId> find_vertex(std::string_view name) const;
    // Sorts labels and checks ranges; throws ValidationError.
    void validate();
};

struct LockConfig {
    VertexId vertex = 0;
    std::uint64_t closed = 0; // bit j set iff lock j is closed
};

struct LockKeyInstance {
    LockKeyGame game;
    LockConfig init;
};

inline constexpr std::size_t kDefaultLockBudget = 20;

LockKeyInstance parse_lockkey(std::istream& in);
LockKeyInstance parse_lockkey(std::string_view text);
std::string serialize_lockkey(const LockKeyGame& lk, const LockConfig& c);

struct LockKeyExpansion {
    TurnBasedGame tb;
    std::vector<LockConfig> configs; // tb vertex id → configuration; the root is 0
};

// Configurations reachable from c; stuck configurations get a self-loop.
LockKeyExpansion expand_lockkey(const LockKeyGame& lk, const LockConfig& c, std::size_t lock_budget = kDefaultLockBudget);
Player solve_lockkey(const LockKeyGame& lk, const LockConfig& c, std::size_t lock_budget = kDefaultLockBudget);

// Replaces every edge carrying more than one label by a chain of single-label edges, locks first.
LockKeyGame split_labels(const LockKeyGame& lk);

// Optional-grabbing game simulating a turn-based game; tb must have no dead ends.
GameInstance tb_to_optional(const TurnBasedGame& tb, VertexId v0);

// Incremental pawn game construction shared by the reductions.
class PawnGameBuilder {
public:
    VertexId add_vertex(std::string name, std::vector<PawnId> owners, bool target = false);
    PawnId add_pawn() { return static_cast<PawnId>(pawns_++); }
    void add_edge(VertexId from, VertexId to) { edges_.emplace_back(from, to); }
    std::size_t pawn_count() const { return pawns_; }
    std::size_t vertex_count() const { return names_.size(); }
    PawnGame build(std::string name, Mechanism m) const;

private:
    std::vector<std::string> names_;
    std::vector<std::vector<PawnId>> owners_;
    std::vector<std::pair<VertexId, VertexId>> edges_;
    std::vector<VertexId> targets_;
    std::size_t pawns_ = 0;
};

enum class GadgetKind { Lock, Key };

struct GadgetPorts {
    GadgetKind kind;
    LockId lock;
    VertexId in;
    VertexId out;
    std::vector<VertexId> inner; // v1..v4 for locks, v1..v8 for keys
};

// Shared colored pawns per lock, plus the global sink and target that gadgets attach to.
class GadgetRegistry {
public:
    GadgetRegistry(PawnGameBuilder& b, VertexId sink, VertexId target) : b_(b), sink_(sink), target_(target) {}

    PawnId blue(LockId j) { return colored(j).blue; }
    PawnId green(LockId j) { return colored(j).green; }
    PawnId red(LockId j) { return colored(j).red; }
    bool has_lock(LockId j) const { return colors_.count(j) != 0; }
    const std::vector<PawnId>& fresh_pawns() const { return fresh_; }

    GadgetPorts build_lock_gadget(LockId j);
    GadgetPorts build_key_gadget(LockId j);

    // Realizes the open or closed state of every registered lock in p.
    void set_state(PawnSet& p, LockId j, bool closed) const;
    bool is_open(const PawnSet& p, LockId j) const;
    bool is_closed(const PawnSet& p, LockId j) const;
    // Lock gadgets read only blue and green.
    bool lock_open(const PawnSet& p, LockId j) const;
    bool lock_closed(const PawnSet& p, LockId j) const;
    std::vector<LockId> locks() const;

private:
    struct Colors {
        PawnId blue, green, red;
    };
    Colors& colored(LockId j);
    VertexId fresh_vertex(const std::string& name);

    PawnGameBuilder& b_;
    VertexId sink_, target_;
    std::map<LockId, Colors> colors_;
    std::vector<PawnId> fresh_;
    std::size_t copies_ = 0;
};

struct LockKeyEmbedding {
    GameInstance instance;
    std::vector<VertexId> main;    // lock-key vertex → its pawn-game vertex
    std::vector<VertexId> primed;  // lock-key vertex → its primed copy
    std::vector<std::vector<GadgetPorts>> gadgets; // per lock-key edge, in traversal order
    VertexId sink = 0;
    VertexId target = 0;
};

// Optional-grabbing game simulating a lock-key game, gadgets chained in series on labeled edges.
LockKeyEmbedding embed_lockkey(const LockKeyGame& lk, const LockConfig& c);
GameInstance lockkey_to_optional(const LockKeyGame& lk, const LockConfig& c);

// Always-grabbing game with 2(d+10) fresh isolated vertices; Player 1 gains pawns d..2d+9.
GameInstance to_always_grabbing(const PawnGame& g, const Configuration& c);

} // namespace pawn
