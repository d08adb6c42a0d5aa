#include "pawn/turnbased.hpp"

#include <algorithm>
#include <sstream>

#include "text_util.hpp"

namespace pawn {

VertexId TurnBasedGame::add_vertex(Player p, bool target)
{
    player_.push_back(p);
    target_.push_back(target ? 1 : 0);
    succ_.emplace_back();
    return static_cast<VertexId>(player_.size() - 1);
}

void TurnBasedGame::add_edge(VertexId from, VertexId to) { succ_[from].push_back(to); }

void TurnBasedGame::normalize()
{
    for (auto& s : succ_) {
        std::sort(s.begin(), s.end());
        s.erase(std::unique(s.begin(), s.end()), s.end());
    }
}

void TurnBasedGame::reserve(std::size_t n)
{
    player_.reserve(n);
    target_.reserve(n);
    succ_.reserve(n);
}

std::size_t TurnBasedGame::edge_count() const
{
    std::size_t m = 0;
    for (const auto& s : succ_) m += s.size();
    return m;
}

SolveResult solve_turnbased(const TurnBasedGame& tb)
{
    const std::size_t n = tb.size();
    SolveResult r;
    r.region.assign(n, 0);
    r.level.assign(n, kNotWinning);
    r.p1_strategy.assign(n, std::nullopt);
    r.p2_strategy.assign(n, std::nullopt);

    // Predecessors in CSR form.
    std::vector<std::uint32_t> start(n + 1, 0);
    for (VertexId v = 0; v < n; ++v) {
        for (VertexId w : tb.successors(v)) ++start[w + 1];
    }
    for (std::size_t i = 0; i < n; ++i) start[i + 1] += start[i];
    std::vector<VertexId> preds(start[n]);
    {
        auto fill = start;
        for (VertexId v = 0; v < n; ++v) {
            for (VertexId w : tb.successors(v)) preds[fill[w]++] = v;
        }
    }

    std::vector<std::uint32_t> pending(n);
    std::vector<VertexId> current, next, dead_ends;
    for (VertexId v = 0; v < n; ++v) {
        pending[v] = static_cast<std::uint32_t>(tb.successors(v).size());
        if (tb.is_target(v)) {
            r.region[v] = 1;
            r.level[v] = 0;
            current.push_back(v);
        } else if (pending[v] == 0 && tb.player(v) == Player::Two) {
            dead_ends.push_back(v);
        }
    }

    std::int32_t lvl = 0;
    while (!current.empty() || (lvl == 0 && !dead_ends.empty())) {
        r.layers.push_back(current);
        next.clear();
        if (lvl == 0) {
            for (VertexId v : dead_ends) {
                r.region[v] = 1;
                r.level[v] = 1;
                next.push_back(v);
            }
        }
        for (VertexId v : current) {
            for (auto i = start[v]; i < start[v + 1]; ++i) {
                VertexId u = preds[i];
                if (r.region[u]) continue;
                if (tb.player(u) == Player::One || --pending[u] == 0) {
                    r.region[u] = 1;
                    r.level[u] = lvl + 1;
                    next.push_back(u);
                }
            }
        }
        std::swap(current, next);
        ++lvl;
    }
    for (auto& layer : r.layers) std::sort(layer.begin(), layer.end());

    for (VertexId v = 0; v < n; ++v) {
        const auto& succ = tb.successors(v);
        if (r.region[v] && !tb.is_target(v) && tb.player(v) == Player::One) {
            std::optional<VertexId> best;
            for (VertexId w : succ) {
                if (!r.region[w]) continue;
                if (!best || r.level[w] < r.level[*best] || (r.level[w] == r.level[*best] && w < *best)) best = w;
            }
            r.p1_strategy[v] = best;
        } else if (!r.region[v] && tb.player(v) == Player::Two) {
            for (VertexId w : succ) {
                if (!r.region[w] && (!r.p2_strategy[v] || w < *r.p2_strategy[v])) r.p2_strategy[v] = w;
            }
        }
    }
    return r;
}

std::vector<std::vector<VertexId>> attractor_levels(const TurnBasedGame& tb)
{
    auto r = solve_turnbased(tb);
    std::vector<std::vector<VertexId>> out;
    std::vector<VertexId> acc;
    for (const auto& layer : r.layers) {
        acc.insert(acc.end(), layer.begin(), layer.end());
        std::sort(acc.begin(), acc.end());
        out.push_back(acc);
    }
    if (out.empty()) out.emplace_back();
    return out;
}

std::string serialize_tbgame(const TurnBasedGame& tb)
{
    std::ostringstream out;
    for (VertexId v = 0; v < tb.size(); ++v) {
        out << "tb " << v << " player=" << to_int(tb.player(v));
        if (tb.is_target(v)) out << " target";
        out << '\n';
    }
    for (VertexId v = 0; v < tb.size(); ++v) {
        auto succ = tb.successors(v);
        std::sort(succ.begin(), succ.end());
        succ.erase(std::unique(succ.begin(), succ.end()), succ.end());
        for (VertexId w : succ) out << "tbedge " << v << ' ' << w << '\n';
    }
    return out.str();
}

TurnBasedGame parse_tbgame(std::istream& in)
{
    TurnBasedGame tb;
    for (const auto& l : detail::tokenize(in)) {
        const auto& t = l.tokens;
        if (t[0] == "tb") {
            if (t.size() < 3) throw ParseError(l.number, "expected 'tb <id> player=1|2 [target]'");
            auto id = detail::parse_uint(t[1], l.number, "vertex id");
            if (id != tb.size()) throw ParseError(l.number, "vertex ids must be dense and ascending");
            auto p = detail::key_value(t[2], "player");
            if (!p || (*p != "1" && *p != "2")) throw ParseError(l.number, "player must be 1 or 2");
            bool target = false;
            for (std::size_t j = 3; j < t.size(); ++j) {
                if (t[j] != "target") throw ParseError(l.number, "unexpected token '" + t[j] + "'");
                target = true;
            }
            tb.add_vertex(*p == "1" ? Player::One : Player::Two, target);
        } else if (t[0] == "tbedge") {
            if (t.size() != 3) throw ParseError(l.number, "expected 'tbedge <id> <id>'");
            auto a = detail::parse_uint(t[1], l.number, "vertex id");
            auto b = detail::parse_uint(t[2], l.number, "vertex id");
            if (a >= tb.size() || b >= tb.size()) throw ParseError(l.number, "edge endpoint out of range");
            tb.add_edge(static_cast<VertexId>(a), static_cast<VertexId>(b));
        } else {
            throw ParseError(l.number, "unknown keyword '" + t[0] + "'");
        }
    }
    tb.normalize();
    return tb;
}

} // namespace pawn
