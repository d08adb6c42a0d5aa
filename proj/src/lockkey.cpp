#include "pawn/lockkey.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <set>
#include <sstream>
#include <unordered_map>

#include "text_util.hpp"

namespace pawn {

namespace {

std::uint64_t mask_of(const std::vector<LockId>& ids)
{
    std::uint64_t m = 0;
    for (LockId j : ids) m |= std::uint64_t{1} << j;
    return m;
}

void sort_unique(std::vector<LockId>& v)
{
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
}

std::vector<LockId> ids_of(std::uint64_t m)
{
    std::vector<LockId> out;
    for (LockId j = 0; j < 64; ++j) {
        if ((m >> j) & 1U) out.push_back(j);
    }
    return out;
}

} // namespace

VertexId LockKeyGame::add_vertex(std::string name, Player p, bool target)
{
    vertex_names.push_back(std::move(name));
    players.push_back(p);
    targets.push_back(target ? 1 : 0);
    return static_cast<VertexId>(vertex_names.size() - 1);
}

void LockKeyGame::add_edge(VertexId from, VertexId to, std::vector<LockId> locks, std::vector<LockId> keys)
{
    edges.push_back({from, to, std::move(locks), std::move(keys)});
}

std::optional<VertexId> LockKeyGame::find_vertex(std::string_view name) const
{
    for (std::size_t v = 0; v < vertex_names.size(); ++v) {
        if (vertex_names[v] == name) return static_cast<VertexId>(v);
    }
    return std::nullopt;
}

void LockKeyGame::validate()
{
    if (vertex_names.empty()) throw ValidationError("lock-key game has no vertices");
    if (lock_count > 64) throw ValidationError("at most 64 locks are supported");
    if (players.size() != size() || targets.size() != size()) throw ValidationError("inconsistent vertex tables");
    std::set<std::string> seen;
    for (const auto& n : vertex_names) {
        if (!seen.insert(n).second) throw ValidationError("duplicate vertex name " + n);
    }
    for (auto& e : edges) {
        if (e.from >= size() || e.to >= size()) throw ValidationError("edge endpoint out of range");
        sort_unique(e.locks);
        sort_unique(e.keys);
        for (LockId j : e.locks) {
            if (j >= lock_count) throw ValidationError("lock id out of range");
        }
        for (LockId j : e.keys) {
            if (j >= lock_count) throw ValidationError("key id out of range");
        }
    }
}

LockKeyInstance parse_lockkey(std::istream& in)
{
    auto lines = detail::tokenize(in);
    if (lines.empty()) throw ParseError(1, "empty input");
    if (lines[0].tokens[0] != "lockkeygame" || lines[0].tokens.size() != 2)
        throw ParseError(lines[0].number, "expected 'lockkeygame <name>'");

    struct RawVertex {
        std::string name;
        Player player;
        bool target;
        std::size_t line;
    };
    std::vector<RawVertex> raw;
    std::vector<const detail::Line*> edge_lines;
    const detail::Line* init = nullptr;
    std::optional<std::size_t> locks;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const auto& l = lines[i];
        const auto& t = l.tokens;
        if (t[0] == "locks") {
            if (t.size() != 2) throw ParseError(l.number, "expected 'locks <n>'");
            locks = detail::parse_uint(t[1], l.number, "lock count");
        } else if (t[0] == "vertex") {
            if (t.size() < 3) throw ParseError(l.number, "expected 'vertex <vname> player=1|2 [target]'");
            auto p = detail::key_value(t[2], "player");
            if (!p || (*p != "1" && *p != "2")) throw ParseError(l.number, "player must be 1 or 2");
            bool target = false;
            for (std::size_t j = 3; j < t.size(); ++j) {
                if (t[j] != "target") throw ParseError(l.number, "unexpected token '" + t[j] + "'");
                target = true;
            }
            raw.push_back({t[1], *p == "1" ? Player::One : Player::Two, target, l.number});
        } else if (t[0] == "edge") {
            edge_lines.push_back(&l);
        } else if (t[0] == "init") {
            if (init) throw ParseError(l.number, "duplicate init line");
            init = &l;
        } else {
            throw ParseError(l.number, "unknown keyword '" + t[0] + "'");
        }
    }
    if (!locks) throw ParseError(lines.back().number, "missing locks line");
    if (!init) throw ParseError(lines.back().number, "missing init line");

    std::sort(raw.begin(), raw.end(), [](const RawVertex& a, const RawVertex& b) { return natural_less(a.name, b.name); });
    LockKeyInstance inst;
    auto& lk = inst.game;
    lk.name = lines[0].tokens[1];
    lk.lock_count = *locks;
    std::unordered_map<std::string, VertexId> ids;
    for (const auto& r : raw) {
        if (!ids.emplace(r.name, static_cast<VertexId>(lk.size())).second)
            throw ParseError(r.line, "duplicate vertex " + r.name);
        lk.add_vertex(r.name, r.player, r.target);
    }
    auto lookup = [&](const std::string& n, std::size_t line) {
        auto it = ids.find(n);
        if (it == ids.end()) throw ParseError(line, "unknown vertex '" + n + "'");
        return it->second;
    };
    auto id_list = [](std::string_view s, std::size_t line) {
        std::vector<LockId> out;
        for (auto x : detail::parse_uint_list(s, line, "lock")) out.push_back(static_cast<LockId>(x));
        return out;
    };
    for (const auto* l : edge_lines) {
        const auto& t = l->tokens;
        if (t.size() < 3) throw ParseError(l->number, "expected 'edge <src> <dst> [locks=..] [keys=..]'");
        LockKeyEdge e{lookup(t[1], l->number), lookup(t[2], l->number), {}, {}};
        for (std::size_t j = 3; j < t.size(); ++j) {
            if (auto v = detail::key_value(t[j], "locks"))
                e.locks = id_list(*v, l->number);
            else if (auto v2 = detail::key_value(t[j], "keys"))
                e.keys = id_list(*v2, l->number);
            else if (t[j] != "locks=" && t[j] != "keys=")
                throw ParseError(l->number, "unexpected token '" + t[j] + "'");
        }
        lk.edges.push_back(std::move(e));
    }
    lk.validate();

    std::optional<VertexId> v0;
    std::uint64_t closed = 0;
    for (std::size_t j = 1; j < init->tokens.size(); ++j) {
        const auto& tok = init->tokens[j];
        if (auto v = detail::key_value(tok, "vertex")) {
            v0 = lookup(std::string(*v), init->number);
        } else if (auto c = detail::key_value(tok, "closed")) {
            for (LockId x : id_list(*c, init->number)) {
                if (x >= lk.lock_count) throw ValidationError("closed lock id out of range");
                closed |= std::uint64_t{1} << x;
            }
        } else if (tok != "closed=") {
            throw ParseError(init->number, "unexpected token '" + tok + "'");
        }
    }
    if (!v0) throw ParseError(init->number, "init lacks vertex=");
    inst.init = {*v0, closed};
    return inst;
}

LockKeyInstance parse_lockkey(std::string_view text)
{
    std::istringstream in{std::string(text)};
    return parse_lockkey(in);
}

std::string serialize_lockkey(const LockKeyGame& lk, const LockConfig& c)
{
    std::ostringstream out;
    out << "lockkeygame " << lk.name << '\n' << "locks " << lk.lock_count << '\n';
    for (VertexId v = 0; v < lk.size(); ++v) {
        out << "vertex " << lk.vertex_names[v] << " player=" << to_int(lk.players[v]);
        if (lk.targets[v]) out << " target";
        out << '\n';
    }
    auto edges = lk.edges;
    std::sort(edges.begin(), edges.end(), [](const LockKeyEdge& a, const LockKeyEdge& b) {
        return std::tie(a.from, a.to, a.locks, a.keys) < std::tie(b.from, b.to, b.locks, b.keys);
    });
    for (const auto& e : edges) {
        out << "edge " << lk.vertex_names[e.from] << ' ' << lk.vertex_names[e.to];
        if (!e.locks.empty()) out << " locks=" << detail::join(e.locks);
        if (!e.keys.empty()) out << " keys=" << detail::join(e.keys);
        out << '\n';
    }
    out << "init vertex=" << lk.vertex_names[c.vertex] << " closed=" << detail::join(ids_of(c.closed)) << '\n';
    return out.str();
}

LockKeyExpansion expand_lockkey(const LockKeyGame& lk, const LockConfig& c, std::size_t lock_budget)
{
    if (lk.lock_count > lock_budget) throw BudgetExceeded(lk.lock_count, lock_budget);
    std::vector<std::vector<const LockKeyEdge*>> out_edges(lk.size());
    std::vector<std::uint64_t> lock_mask(lk.edges.size()), key_mask(lk.edges.size());
    for (std::size_t i = 0; i < lk.edges.size(); ++i) out_edges[lk.edges[i].from].push_back(&lk.edges[i]);

    LockKeyExpansion ex;
    std::unordered_map<std::uint64_t, VertexId> index;
    std::deque<VertexId> queue;
    auto config = [&](VertexId v, std::uint64_t closed) {
        std::uint64_t key = (closed << 24) ^ v; // lock count ≤ 20 keeps this injective for |V| < 2^24
        auto [it, fresh] = index.try_emplace(key, 0);
        if (fresh) {
            it->second = ex.tb.add_vertex(lk.players[v], lk.targets[v] != 0);
            ex.configs.push_back({v, closed});
            queue.push_back(it->second);
        }
        return it->second;
    };
    if (lk.size() >= (std::size_t{1} << 24)) throw BudgetExceeded(lk.size(), std::size_t{1} << 24);
    config(c.vertex, c.closed);
    while (!queue.empty()) {
        VertexId id = queue.front();
        queue.pop_front();
        auto [v, closed] = ex.configs[id];
        bool moved = false;
        for (const auto* e : out_edges[v]) {
            if (mask_of(e->locks) & closed) continue;
            ex.tb.add_edge(id, config(e->to, closed ^ mask_of(e->keys)));
            moved = true;
        }
        if (!moved) ex.tb.add_edge(id, id);
    }
    ex.tb.normalize();
    return ex;
}

Player solve_lockkey(const LockKeyGame& lk, const LockConfig& c, std::size_t lock_budget)
{
    auto ex = expand_lockkey(lk, c, lock_budget);
    return solve_turnbased(ex.tb).winner(0);
}

LockKeyGame split_labels(const LockKeyGame& lk)
{
    LockKeyGame out = lk;
    out.edges.clear();
    std::set<std::string> names(lk.vertex_names.begin(), lk.vertex_names.end());
    for (std::size_t i = 0; i < lk.edges.size(); ++i) {
        const auto& e = lk.edges[i];
        if (e.locks.size() + e.keys.size() <= 1) {
            out.edges.push_back(e);
            continue;
        }
        std::vector<std::pair<bool, LockId>> labels; // (is_key, id)
        for (LockId j : e.locks) labels.emplace_back(false, j);
        for (LockId j : e.keys) labels.emplace_back(true, j);
        VertexId prev = e.from;
        for (std::size_t k = 0; k < labels.size(); ++k) {
            VertexId next = e.to;
            if (k + 1 < labels.size()) {
                std::string name = lk.vertex_names[e.from] + "~" + std::to_string(i) + "." + std::to_string(k);
                while (!names.insert(name).second) name += "_";
                next = out.add_vertex(name, lk.players[e.from]);
            }
            auto [is_key, j] = labels[k];
            out.add_edge(prev, next, is_key ? std::vector<LockId>{} : std::vector<LockId>{j},
                         is_key ? std::vector<LockId>{j} : std::vector<LockId>{});
            prev = next;
        }
    }
    return out;
}

VertexId PawnGameBuilder::add_vertex(std::string name, std::vector<PawnId> owners, bool target)
{
    names_.push_back(std::move(name));
    owners_.push_back(std::move(owners));
    auto v = static_cast<VertexId>(names_.size() - 1);
    if (target) targets_.push_back(v);
    return v;
}

PawnGame PawnGameBuilder::build(std::string name, Mechanism m) const
{
    GameParts p;
    p.name = std::move(name);
    p.vertex_names = names_;
    p.pawn_count = pawns_;
    p.owners = owners_;
    p.edges = edges_;
    p.targets = targets_;
    p.mechanism = m;
    return PawnGame(std::move(p));
}

GameInstance tb_to_optional(const TurnBasedGame& tb, VertexId v0)
{
    const auto n = static_cast<VertexId>(tb.size());
    if (v0 >= n) throw ValidationError("initial vertex out of range");
    PawnGameBuilder b;
    // OVPP: pawn i owns vertex i.
    auto own = [&](std::string name, bool target) {
        PawnId p = b.add_pawn();
        return b.add_vertex(std::move(name), {p}, target);
    };
    for (VertexId v = 0; v < n; ++v) own("v" + std::to_string(v), tb.is_target(v));
    for (VertexId v = 0; v < n; ++v) own("v" + std::to_string(v) + "'", false);
    VertexId s = own("s", false);
    VertexId t = own("t", true);
    b.add_edge(s, s);
    b.add_edge(t, t);
    for (VertexId v = 0; v < n; ++v) {
        if (tb.successors(v).empty()) throw PreconditionError("turn-based game has a dead end");
        b.add_edge(n + v, v);
        b.add_edge(v, tb.player(v) == Player::One ? s : t);
        for (VertexId w : tb.successors(v)) b.add_edge(v, n + w);
    }
    auto game = b.build("lemma41", Mechanism::optional_grabbing());
    PawnSet p(game.pawn_count());
    for (VertexId v = 0; v < n; ++v) p.insert(tb.player(v) == Player::One ? v : n + v);
    return {std::move(game), Configuration{v0, std::move(p), std::nullopt}};
}

GadgetRegistry::Colors& GadgetRegistry::colored(LockId j)
{
    auto it = colors_.find(j);
    if (it == colors_.end()) it = colors_.emplace(j, Colors{b_.add_pawn(), b_.add_pawn(), b_.add_pawn()}).first;
    return it->second;
}

VertexId GadgetRegistry::fresh_vertex(const std::string& name)
{
    PawnId p = b_.add_pawn();
    fresh_.push_back(p);
    return b_.add_vertex(name, {p});
}

GadgetPorts GadgetRegistry::build_lock_gadget(LockId j)
{
    const std::string base = "lock" + std::to_string(j) + ".c" + std::to_string(copies_++) + ".";
    GadgetPorts g{GadgetKind::Lock, j, 0, 0, {}};
    g.in = fresh_vertex(base + "in");
    VertexId v1 = b_.add_vertex(base + "v1", {blue(j)});
    VertexId v2 = b_.add_vertex(base + "v2", {green(j)});
    VertexId v3 = fresh_vertex(base + "v3");
    VertexId v4 = fresh_vertex(base + "v4");
    g.out = fresh_vertex(base + "out");
    g.inner = {v1, v2, v3, v4};
    b_.add_edge(g.in, v1);
    b_.add_edge(g.in, v2);
    b_.add_edge(v1, v3);
    b_.add_edge(v2, v4);
    b_.add_edge(v3, g.out);
    b_.add_edge(v3, sink_);
    b_.add_edge(v4, g.out);
    b_.add_edge(v4, target_);
    return g;
}

GadgetPorts GadgetRegistry::build_key_gadget(LockId j)
{
    const std::string base = "key" + std::to_string(j) + ".c" + std::to_string(copies_++) + ".";
    GadgetPorts g{GadgetKind::Key, j, 0, 0, {}};
    g.in = b_.add_vertex(base + "in", {red(j)});
    VertexId v1 = b_.add_vertex(base + "v1", {blue(j)});
    VertexId v2 = b_.add_vertex(base + "v2", {green(j)});
    VertexId v3 = fresh_vertex(base + "v3");
    VertexId v4 = b_.add_vertex(base + "v4", {red(j)});
    VertexId v5 = b_.add_vertex(base + "v5", {red(j)});
    VertexId v6 = b_.add_vertex(base + "v6", {red(j)});
    VertexId v7 = b_.add_vertex(base + "v7", {green(j)});
    VertexId v8 = b_.add_vertex(base + "v8", {green(j)});
    g.out = fresh_vertex(base + "out");
    g.inner = {v1, v2, v3, v4, v5, v6, v7, v8};
    const std::pair<VertexId, VertexId> wiring[] = {
        {g.in, v1}, {v1, v2}, {v2, v3}, {v3, sink_}, {v3, target_}, {v1, v4}, {v4, v5}, {v4, v6},
        {v5, v7},   {v5, sink_}, {v6, v8}, {v6, target_}, {v7, g.out}, {v7, target_}, {v8, g.out}, {v8, sink_},
    };
    for (auto [a, c] : wiring) b_.add_edge(a, c);
    return g;
}

void GadgetRegistry::set_state(PawnSet& p, LockId j, bool closed) const
{
    const auto& c = colors_.at(j);
    if (closed) {
        p.insert(c.blue);
        p.insert(c.red);
        p.erase(c.green);
    } else {
        p.erase(c.blue);
        p.erase(c.red);
        p.insert(c.green);
    }
}

bool GadgetRegistry::is_open(const PawnSet& p, LockId j) const
{
    const auto& c = colors_.at(j);
    return p.contains(c.green) && !p.contains(c.blue) && !p.contains(c.red);
}

bool GadgetRegistry::is_closed(const PawnSet& p, LockId j) const
{
    const auto& c = colors_.at(j);
    return p.contains(c.blue) && p.contains(c.red) && !p.contains(c.green);
}

bool GadgetRegistry::lock_open(const PawnSet& p, LockId j) const
{
    const auto& c = colors_.at(j);
    return p.contains(c.green) && !p.contains(c.blue);
}

bool GadgetRegistry::lock_closed(const PawnSet& p, LockId j) const
{
    const auto& c = colors_.at(j);
    return p.contains(c.blue) && !p.contains(c.green);
}

std::vector<LockId> GadgetRegistry::locks() const
{
    std::vector<LockId> out;
    for (const auto& [j, c] : colors_) out.push_back(j);
    return out;
}

LockKeyEmbedding embed_lockkey(const LockKeyGame& lk, const LockConfig& c)
{
    LockKeyGame checked = lk;
    checked.validate();
    PawnGameBuilder b;
    std::set<std::string> taken(lk.vertex_names.begin(), lk.vertex_names.end());
    auto unique = [&](std::string name) {
        while (taken.count(name)) name += "_";
        taken.insert(name);
        return name;
    };
    struct {
        std::vector<VertexId> main, primed;
        std::vector<std::vector<GadgetPorts>> gadgets;
        VertexId sink = 0, target = 0;
    } em;
    const auto n = static_cast<VertexId>(lk.size());
    std::vector<PawnId> main_pawn(n), primed_pawn(n);
    for (VertexId v = 0; v < n; ++v) {
        main_pawn[v] = b.add_pawn();
        em.main.push_back(b.add_vertex(lk.vertex_names[v], {main_pawn[v]}, lk.targets[v] != 0));
    }
    for (VertexId v = 0; v < n; ++v) {
        primed_pawn[v] = b.add_pawn();
        em.primed.push_back(b.add_vertex(unique(lk.vertex_names[v] + "'"), {primed_pawn[v]}));
    }
    PawnId sink_pawn = b.add_pawn(), target_pawn = b.add_pawn();
    em.sink = b.add_vertex(unique("sink"), {sink_pawn});
    em.target = b.add_vertex(unique("goal"), {target_pawn}, true);
    b.add_edge(em.sink, em.sink);
    b.add_edge(em.target, em.target);

    GadgetRegistry reg(b, em.sink, em.target);
    std::vector<char> has_out(n, 0);
    for (VertexId v = 0; v < n; ++v) {
        b.add_edge(em.primed[v], em.main[v]);
        b.add_edge(em.main[v], lk.players[v] == Player::One ? em.sink : em.target);
    }
    for (const auto& e : checked.edges) {
        has_out[e.from] = 1;
        std::vector<GadgetPorts> chain;
        for (LockId j : e.locks) chain.push_back(reg.build_lock_gadget(j));
        for (LockId j : e.keys) chain.push_back(reg.build_key_gadget(j));
        VertexId at = em.main[e.from];
        for (const auto& g : chain) {
            b.add_edge(at, g.in);
            at = g.out;
        }
        b.add_edge(at, em.primed[e.to]);
        em.gadgets.push_back(std::move(chain));
    }
    // A vertex without edges is stuck, which Player 2 wins.
    for (VertexId v = 0; v < n; ++v) {
        if (!has_out[v]) b.add_edge(em.main[v], em.sink);
    }

    auto game = b.build(lk.name, Mechanism::optional_grabbing());
    PawnSet p(game.pawn_count());
    for (VertexId v = 0; v < n; ++v) p.insert(lk.players[v] == Player::One ? main_pawn[v] : primed_pawn[v]);
    for (LockId j : reg.locks()) reg.set_state(p, j, ((c.closed >> j) & 1U) != 0);
    Configuration init{em.main[c.vertex], std::move(p), std::nullopt};
    return LockKeyEmbedding{GameInstance{std::move(game), std::move(init)}, std::move(em.main), std::move(em.primed),
                            std::move(em.gadgets), em.sink, em.target};
}

GameInstance lockkey_to_optional(const LockKeyGame& lk, const LockConfig& c) { return embed_lockkey(lk, c).instance; }

GameInstance to_always_grabbing(const PawnGame& g, const Configuration& c)
{
    if (g.mechanism().kind != MechanismKind::OptionalGrabbing)
        throw PreconditionError("construction requires an optional-grabbing game");
    validate_configuration(g, c);
    const std::size_t d = g.pawn_count();
    const std::size_t extra = 2 * (d + 10);
    auto parts = g.parts();
    std::set<std::string> taken(parts.vertex_names.begin(), parts.vertex_names.end());
    for (std::size_t i = 0; i < extra; ++i) {
        std::string name = "iso" + std::to_string(i);
        while (taken.count(name)) name += "_";
        taken.insert(name);
        auto v = static_cast<VertexId>(parts.vertex_names.size());
        parts.vertex_names.push_back(name);
        parts.owners.push_back({static_cast<PawnId>(d + i)});
        parts.edges.emplace_back(v, v);
    }
    parts.pawn_count = d + extra;
    parts.mechanism = Mechanism::always_grabbing();
    PawnGame out(std::move(parts));
    PawnSet p(out.pawn_count());
    for (PawnId j : c.p1.elements()) p.insert(j);
    for (std::size_t i = 0; i < d + 10; ++i) p.insert(static_cast<PawnId>(d + i));
    return {std::move(out), Configuration{c.vertex, std::move(p), std::nullopt}};
}

} // namespace pawn
