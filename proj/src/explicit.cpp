#include "pawn/explicit.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <deque>

#include "pawn/game_io.hpp"

namespace pawn {

namespace {

std::uint64_t key_of(VertexId v, std::uint32_t r) { return (std::uint64_t{v} << 32) | r; }

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b)
{
    if (a != 0 && b > UINT64_MAX / a) return UINT64_MAX;
    return a * b;
}

} // namespace

std::uint64_t estimate_expansion(const PawnGame& g)
{
    std::size_t max_deg = 0;
    for (VertexId v = 0; v < g.vertex_count(); ++v) max_deg = std::max(max_deg, g.successors(v).size());
    std::uint64_t subsets = g.pawn_count() >= 63 ? UINT64_MAX : (std::uint64_t{1} << g.pawn_count());
    std::uint64_t est = sat_mul(g.vertex_count(), subsets);
    if (g.mechanism().is_k_grabbing()) est = sat_mul(est, g.mechanism().k + 1);
    return sat_mul(est, 1 + max_deg);
}

class Expander {
public:
    Expander(const PawnGame& g, const ExpandOptions& opt) : g_(g), opt_(opt)
    {
        if (g.pawn_count() > 63) throw BudgetExceeded(UINT64_MAX, opt.budget);
        auto est = estimate_expansion(g);
        if (est > opt.budget) throw BudgetExceeded(est, opt.budget);
        out_.game_ = &g;
        for (VertexId v = 0; v < g.vertex_count(); ++v) owner_mask_.push_back(g.owner_set(v).to_mask());
    }

    VertexId config(VertexId v, std::uint64_t pawns, std::uint32_t r)
    {
        auto [it, fresh] = out_.index_.try_emplace(ExpandedGame::Key{key_of(v, r), pawns}, 0);
        if (!fresh) return it->second;
        Player p = (owner_mask_[v] & pawns) ? Player::One : Player::Two;
        VertexId id = add(ExpandedNode{true, v, pawns, r, 0}, p, g_.is_target(v));
        it->second = id;
        queue_.push_back(id);
        return id;
    }

    void run()
    {
        const auto kind = g_.mechanism().kind;
        while (!queue_.empty()) {
            VertexId c = queue_.front();
            queue_.pop_front();
            const ExpandedNode node = out_.nodes[c];
            const Player moved = out_.tb.player(c);
            for (VertexId u : g_.successors(node.vertex)) {
                Player chooser = kind == MechanismKind::KGrabbing ? Player::One : opponent(moved);
                VertexId mid = add(ExpandedNode{false, u, node.pawns, node.grabs, c}, chooser, false);
                out_.tb.add_edge(c, mid);
                pending_.emplace_back(mid, moved);
            }
            // Intermediate successors are created after the configuration's own edges so ids stay BFS-ordered.
            for (auto [mid, mv] : pending_) expand_intermediate(mid, mv, kind);
            pending_.clear();
        }
    }

    ExpandedGame take()
    {
        out_.tb.normalize();
        return std::move(out_);
    }

private:
    VertexId add(const ExpandedNode& n, Player p, bool target)
    {
        if (out_.nodes.size() >= opt_.budget) throw BudgetExceeded(out_.nodes.size() + 1, opt_.budget);
        out_.nodes.push_back(n);
        return out_.tb.add_vertex(p, target);
    }

    void expand_intermediate(VertexId mid, Player moved, MechanismKind kind)
    {
        const ExpandedNode n = out_.nodes[mid];
        const VertexId u = n.vertex;
        const std::uint64_t P = n.pawns;
        std::size_t added = 0;
        auto link = [&](std::uint64_t pawns, std::uint32_t r) {
            out_.tb.add_edge(mid, config(u, pawns, r));
            ++added;
        };
        switch (kind) {
        case MechanismKind::OptionalGrabbing:
        case MechanismKind::AlwaysGrabbing:
            if (kind == MechanismKind::OptionalGrabbing) link(P, 0);
            for (PawnId j = 0; j < g_.pawn_count(); ++j) {
                std::uint64_t bit = std::uint64_t{1} << j;
                bool p1_has = (P & bit) != 0;
                // The player who did not move takes one of the mover's pawns.
                if (moved == Player::One && p1_has) link(P & ~bit, 0);
                if (moved == Player::Two && !p1_has) link(P | bit, 0);
            }
            assert(added >= 1);
            break;
        case MechanismKind::AlwaysGrabOrGive:
            for (PawnId j = 0; j < g_.pawn_count(); ++j) link(P ^ (std::uint64_t{1} << j), 0);
            break;
        case MechanismKind::KGrabbing:
            link(P, n.grabs);
            if (n.grabs > 0) {
                for (PawnId j = 0; j < g_.pawn_count(); ++j) {
                    std::uint64_t bit = std::uint64_t{1} << j;
                    if (!(P & bit)) link(P | bit, n.grabs - 1);
                }
            }
            break;
        }
    }

    const PawnGame& g_;
    const ExpandOptions& opt_;
    ExpandedGame out_;
    std::vector<std::uint64_t> owner_mask_;
    std::deque<VertexId> queue_;
    std::vector<std::pair<VertexId, Player>> pending_;
};

std::optional<VertexId> ExpandedGame::find(const Configuration& c) const
{
    auto it = index_.find(Key{key_of(c.vertex, c.grabs_left.value_or(0)), c.p1.to_mask()});
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

Configuration ExpandedGame::configuration(VertexId id) const
{
    const auto& n = nodes[id];
    Configuration c{n.vertex, PawnSet::from_mask(game_->pawn_count(), n.pawns), std::nullopt};
    if (game_->mechanism().is_k_grabbing()) c.grabs_left = n.grabs;
    return c;
}

std::string ExpandedGame::describe(VertexId id) const
{
    const auto& n = nodes[id];
    if (n.is_configuration) return pawn::describe(*game_, configuration(id));
    return "<" + game_->vertex_name(n.vertex) + "', " + describe(n.parent) + ">";
}

std::size_t ExpandedGame::configuration_count() const
{
    return static_cast<std::size_t>(
        std::count_if(nodes.begin(), nodes.end(), [](const ExpandedNode& n) { return n.is_configuration; }));
}

ExpandedGame expand(const PawnGame& g, const std::vector<Configuration>& seeds, const ExpandOptions& opt)
{
    Expander ex(g, opt);
    for (const auto& c : seeds) {
        validate_configuration(g, c);
        ex.config(c.vertex, c.p1.to_mask(), c.grabs_left.value_or(0));
    }
    ex.run();
    return ex.take();
}

ExpandedGame expand_all(const PawnGame& g, const ExpandOptions& opt)
{
    Expander ex(g, opt);
    const std::uint32_t kmax = g.mechanism().is_k_grabbing() ? g.mechanism().k : 0;
    const std::uint64_t subsets = std::uint64_t{1} << g.pawn_count();
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        for (std::uint64_t m = 0; m < subsets; ++m) {
            for (std::uint32_t r = 0; r <= kmax; ++r) ex.config(v, m, r);
        }
    }
    ex.run();
    return ex.take();
}

ExplicitResult solve_explicit(const PawnGame& g, const Configuration& c, const ExpandOptions& opt)
{
    auto expanded = expand(g, {c}, opt);
    auto solution = solve_turnbased(expanded.tb);
    VertexId root = 0;
    Player w = solution.winner(root);
    return ExplicitResult{w, std::move(expanded), std::move(solution), root};
}

std::vector<std::pair<VertexId, VertexId>> ExplicitResult::witness() const
{
    std::vector<std::pair<VertexId, VertexId>> out;
    std::vector<char> seen(expanded.tb.size(), 0);
    std::vector<VertexId> stack{root};
    seen[root] = 1;
    while (!stack.empty()) {
        VertexId v = stack.back();
        stack.pop_back();
        if (winner == Player::One && expanded.tb.is_target(v)) continue;
        std::vector<VertexId> next;
        if (expanded.tb.player(v) == winner) {
            auto choice = winner == Player::One ? solution.p1_strategy[v] : solution.p2_strategy[v];
            if (!choice) continue;
            out.emplace_back(v, *choice);
            next.push_back(*choice);
        } else {
            next = expanded.tb.successors(v);
        }
        for (VertexId w : next) {
            if (!seen[w]) {
                seen[w] = 1;
                stack.push_back(w);
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

ExplicitSolution::ExplicitSolution(const PawnGame& g, const ExpandOptions& opt)
    : expanded_(expand_all(g, opt)), solution_(solve_turnbased(expanded_.tb))
{
}

bool ExplicitSolution::wins(const Configuration& c) const
{
    auto id = expanded_.find(c);
    if (!id) throw PreconditionError("configuration outside the expansion");
    return solution_.wins(*id);
}

} // namespace pawn

namespace pawn {

// Node layout: configurations at [0, N), intermediates after Player 1 moved at [N, 2N),
// after Player 2 moved at [2N, 3N), with N = |V|·2^d and ⟨u,P⟩ packed as u·2^d + P.
DenseSolution::DenseSolution(const PawnGame& g) : d_(g.pawn_count())
{
    const auto kind = g.mechanism().kind;
    if (kind != MechanismKind::OptionalGrabbing && kind != MechanismKind::AlwaysGrabbing)
        throw PreconditionError("dense solver supports optional and always grabbing only");
    if (d_ > 26) throw BudgetExceeded(UINT64_MAX, kDefaultBudget);
    const std::size_t nv = g.vertex_count();
    const std::uint64_t full = (std::uint64_t{1} << d_) - 1;
    const std::size_t n = nv << d_;
    const bool optional = kind == MechanismKind::OptionalGrabbing;

    std::vector<std::uint64_t> owner(nv);
    std::vector<std::vector<VertexId>> preds(nv);
    for (VertexId v = 0; v < nv; ++v) {
        owner[v] = g.owner_set(v).to_mask();
        for (VertexId w : g.successors(v)) preds[w].push_back(v);
    }
    auto p1_moves = [&](VertexId v, std::uint64_t mask) { return (owner[v] & mask) != 0; };

    std::vector<char> won(3 * n, 0);
    std::vector<std::uint32_t> pending(3 * n, 0);
    std::vector<std::uint32_t> queue;
    auto mark = [&](std::size_t id) {
        won[id] = 1;
        queue.push_back(static_cast<std::uint32_t>(id));
    };
    for (VertexId v = 0; v < nv; ++v) {
        for (std::uint64_t m = 0; m <= full; ++m) {
            std::size_t c = index(v, m);
            pending[c] = static_cast<std::uint32_t>(g.successors(v).size());
            auto ones = static_cast<std::uint32_t>(std::popcount(m));
            // After Player 1 moved, Player 2 picks among Player 1's pawns; after Player 2 moved, Player 1 picks.
            pending[n + c] = ones + (optional ? 1 : 0);
            if (g.is_target(v)) mark(c);
        }
    }

    // Player 1 owns a configuration iff it holds the vertex, and the intermediates after Player 2 moved.
    auto reach_config = [&](std::size_t mid, bool p1_node) {
        if (won[mid]) return;
        if (p1_node || --pending[mid] == 0) mark(mid);
    };
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const std::size_t id = queue[head];
        if (id < n) {
            const auto u = static_cast<VertexId>(id >> d_);
            const std::uint64_t m = id & full;
            if (optional) {
                reach_config(n + id, false);
                reach_config(2 * n + id, true);
            }
            for (std::size_t j = 0; j < d_; ++j) {
                const std::uint64_t bit = std::uint64_t{1} << j;
                if (m & bit)
                    reach_config(2 * n + index(u, m & ~bit), true); // Player 1 grabbed j
                else
                    reach_config(n + index(u, m | bit), false); // Player 2 grabbed j
            }
        } else {
            const bool after_p1 = id < 2 * n;
            const std::size_t c = id - (after_p1 ? n : 2 * n);
            const auto u = static_cast<VertexId>(c >> d_);
            const std::uint64_t m = c & full;
            for (VertexId v : preds[u]) {
                if (p1_moves(v, m) != after_p1) continue;
                const std::size_t src = index(v, m);
                if (won[src]) continue;
                if (after_p1 || --pending[src] == 0) mark(src);
            }
        }
    }
    won.resize(n);
    win_ = std::move(won);
}

} // namespace pawn
