#include "pawn/kgrab_dfs.hpp"

#include <algorithm>
#include <unordered_map>

namespace pawn {

namespace {

struct Key {
    VertexId v;
    std::uint32_t r;
    PawnSet p;
    friend bool operator==(const Key&, const Key&) = default;
};

struct KeyHash {
    std::size_t operator()(const Key& k) const noexcept
    {
        return k.p.hash() ^ (std::size_t{k.v} * 0x9E3779B97F4A7C15ULL) ^ (std::size_t{k.r} << 40);
    }
};

struct State {
    VertexId v;
    PawnSet p;
    std::uint32_t r;
};

// Option after a move: no grab, or grab one pawn.
struct GrabChoice {
    bool grab;
    PawnId pawn;
};

class Search {
public:
    Search(const PawnGame& g, const DfsOptions& opt) : g_(g), opt_(opt) {}

    std::uint64_t nodes = 0;

    std::vector<GrabChoice> choices(VertexId u, const PawnSet& p, std::uint32_t r) const
    {
        std::vector<GrabChoice> out{{false, 0}};
        if (r == 0) return out;
        for (PawnId j : g_.owners(u)) {
            if (!p.contains(j)) out.push_back({true, j});
        }
        for (PawnId j = 0; j < g_.pawn_count(); ++j) {
            if (!p.contains(j) && !g_.owner_set(u).contains(j)) out.push_back({true, j});
        }
        return out;
    }

    State apply(VertexId u, const State& s, GrabChoice c) const
    {
        State t{u, s.p, s.r};
        if (c.grab) {
            t.p.insert(c.pawn);
            --t.r;
        }
        return t;
    }

    // Rounds needed to force a target within `budget` rounds, if possible.
    std::optional<std::uint64_t> solve(const State& s, std::uint64_t budget)
    {
        ++nodes;
        if (g_.is_target(s.v)) return 0;
        if (budget == 0) return std::nullopt;
        Key key{s.v, s.r, s.p};
        if (opt_.cache) {
            if (auto it = wins_.find(key); it != wins_.end() && it->second <= budget) return it->second;
            if (auto it = losses_.find(key); it != losses_.end() && budget <= it->second) return std::nullopt;
        }
        std::optional<std::uint64_t> result;
        if (g_.owner_set(s.v).intersects(s.p)) {
            for (VertexId u : g_.successors(s.v)) {
                if (auto best = best_grab(u, s, budget)) {
                    result = best->second + 1;
                    break;
                }
            }
        } else {
            std::uint64_t worst = 0;
            bool all = true;
            for (VertexId u : g_.successors(s.v)) {
                auto best = best_grab(u, s, budget);
                if (!best) {
                    all = false;
                    break;
                }
                worst = std::max(worst, best->second + 1);
            }
            if (all) result = worst;
        }
        if (opt_.cache) {
            if (result) {
                auto [it, fresh] = wins_.try_emplace(key, *result);
                if (!fresh) it->second = std::min(it->second, *result);
            } else {
                // A loss within `budget` rounds is a loss within any smaller budget.
                auto [it, fresh] = losses_.try_emplace(key, budget);
                if (!fresh) it->second = std::max(it->second, budget);
            }
        }
        return result;
    }

    // First winning grab decision after moving to u, with its rounds-needed.
    std::optional<std::pair<GrabChoice, std::uint64_t>> best_grab(VertexId u, const State& s, std::uint64_t budget)
    {
        for (auto c : choices(u, s.p, s.r)) {
            if (auto need = solve(apply(u, s, c), budget - 1)) return std::make_pair(c, *need);
        }
        return std::nullopt;
    }

private:
    const PawnGame& g_;
    const DfsOptions& opt_;
    std::unordered_map<Key, std::uint64_t, KeyHash> wins_;
    std::unordered_map<Key, std::uint64_t, KeyHash> losses_; // largest budget known to fail
};

} // namespace

DfsResult solve_kgrab_dfs(const PawnGame& g, const Configuration& c, const DfsOptions& opt)
{
    if (!g.mechanism().is_k_grabbing()) throw PreconditionError("search requires k-grabbing");
    validate_configuration(g, c);

    DfsResult res{Player::Two, {}, 0, 0};
    res.round_cap = opt.round_cap.value_or(std::uint64_t{g.vertex_count()} * (g.mechanism().k + 1));
    Search search(g, opt);
    State s{c.vertex, c.p1, *c.grabs_left};
    auto root = search.solve(s, res.round_cap);
    if (root) {
        res.winner = Player::One;
        // Principal variation: Player 2 picks the move needing the most rounds.
        std::uint64_t budget = res.round_cap;
        while (!g.is_target(s.v) && budget > 0) {
            std::optional<std::pair<VertexId, std::pair<GrabChoice, std::uint64_t>>> pick;
            const bool p1_moves = g.owner_set(s.v).intersects(s.p);
            for (VertexId u : g.successors(s.v)) {
                auto best = search.best_grab(u, s, budget);
                if (!best) continue;
                if (p1_moves) {
                    pick = std::make_pair(u, *best);
                    break;
                }
                if (!pick || best->second > pick->second.second) pick = std::make_pair(u, *best);
            }
            if (!pick) break;
            auto [u, choice] = *pick;
            res.witness.push_back({PlayStep::Kind::Move, u, 0});
            if (choice.first.grab)
                res.witness.push_back({PlayStep::Kind::Grab, 0, choice.first.pawn});
            else
                res.witness.push_back({PlayStep::Kind::NoGrab, 0, 0});
            s = search.apply(u, s, choice.first);
            --budget;
        }
    }
    res.nodes = search.nodes;
    return res;
}

std::string format_step(const PawnGame& g, const PlayStep& s)
{
    switch (s.kind) {
    case PlayStep::Kind::Move: return "move " + g.vertex_name(s.vertex);
    case PlayStep::Kind::Grab: return "grab " + std::to_string(s.pawn);
    case PlayStep::Kind::NoGrab: return "nograb";
    }
    return "";
}

std::size_t witness_rounds(const std::vector<PlayStep>& play)
{
    return static_cast<std::size_t>(
        std::count_if(play.begin(), play.end(), [](const PlayStep& s) { return s.kind == PlayStep::Kind::Move; }));
}

} // namespace pawn
