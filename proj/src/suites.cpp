#include "pawn/suites.hpp"

#include <cstdio>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>

#include "pawn/explicit.hpp"
#include "pawn/game_io.hpp"
#include "pawn/generators.hpp"
#include "pawn/grab_or_give.hpp"
#include "pawn/kgrab_dfs.hpp"
#include "pawn/kgrab_ovpp.hpp"
#include "pawn/lockkey.hpp"
#include "pawn/ovpp_optional.hpp"

namespace pawn {

namespace {

std::string player_name(Player p) { return "player " + std::to_string(to_int(p)); }

void fail(SuiteReport& rep, std::size_t i, const std::string& what, const std::string& input)
{
    rep.failures.push_back("case " + std::to_string(i) + " (seed " + std::to_string(case_seed(rep.seed, i)) +
                           "): " + what);
    if (!rep.counterexample) rep.counterexample = input;
}

PawnSet random_pawns(Rng& rng, std::size_t d)
{
    PawnSet p(d);
    for (PawnId j = 0; j < d; ++j) {
        if (rng.chance(1, 2)) p.insert(j);
    }
    return p;
}

Configuration at(VertexId v, std::size_t d, std::uint64_t mask, std::optional<unsigned> r = std::nullopt)
{
    return {v, PawnSet::from_mask(d, mask), r};
}

void suite_alg1(SuiteReport& rep, std::size_t count)
{
    for (std::size_t i = 0; i < count; ++i) {
        const auto s = case_seed(rep.seed, i);
        Rng rng(s);
        const auto n = static_cast<std::size_t>(rng.range(1, 7));
        auto inst = gen_random_pawngame({n, n, OwnershipKind::OVPP, Mechanism::optional_grabbing(), 3}, s);
        const auto& g = inst.game;
        ExplicitSolution oracle(g);
        ++rep.cases;
        for (int q = 0; q < 4; ++q) {
            Configuration c = q == 0 ? inst.init
                                     : make_configuration(g, static_cast<VertexId>(rng.below(n)), random_pawns(rng, n));
            ++rep.checks;
            bool expected = oracle.wins(c);
            Player got = solve_ovpp_optional(g, c).winner;
            if ((got == Player::One) != expected) {
                fail(rep, i, "attractor solver says " + player_name(got) + " from " + describe(g, c),
                     serialize_game(g, c));
                break;
            }
        }
    }
}

void suite_gog(SuiteReport& rep, std::size_t count)
{
    for (std::size_t i = 0; i < count; ++i) {
        const auto s = case_seed(rep.seed, i);
        Rng rng(s);
        const auto n = static_cast<std::size_t>(rng.range(1, 6));
        const auto d = static_cast<std::size_t>(rng.range(1, n));
        auto kind = d == n ? OwnershipKind::OVPP : OwnershipKind::MVPP;
        auto inst = gen_random_pawngame({n, d, kind, Mechanism::grab_or_give(), 3}, s);
        const auto& g = inst.game;
        ExplicitSolution oracle(g);
        ++rep.cases;
        bool ok = true;
        for (VertexId v = 0; v < n && ok; ++v) {
            std::optional<bool> by_mover[2];
            for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << d) && ok; ++mask) {
                auto c = at(v, d, mask);
                ++rep.checks;
                bool expected = oracle.wins(c);
                Player got = solve_grab_or_give(g, c);
                if ((got == Player::One) != expected) {
                    fail(rep, i, "reduction says " + player_name(got) + " from " + describe(g, c),
                         serialize_game(g, c));
                    ok = false;
                }
                auto& slot = by_mover[to_int(mover(g, c)) - 1];
                if (ok && slot && *slot != expected) {
                    fail(rep, i, "winner depends on more than the mover at " + describe(g, c), serialize_game(g, c));
                    ok = false;
                }
                slot = expected;
            }
        }
    }
}

void suite_eta(SuiteReport& rep, std::size_t count)
{
    for (std::size_t i = 0; i < count; ++i) {
        const auto s = case_seed(rep.seed, i);
        Rng rng(s);
        const auto n = static_cast<std::size_t>(rng.range(1, 6));
        auto inst = gen_random_pawngame(
            {n, n, OwnershipKind::OVPP, Mechanism::k_grabbing(static_cast<unsigned>(n)), 3}, s);
        const auto& g = inst.game;
        ExplicitSolution oracle(g);
        ++rep.cases;
        const PawnSet p0 = inst.init.p1;
        const auto eta = minimum_grabs(g, p0);
        bool ok = true;
        for (VertexId v = 0; v < n && ok; ++v) {
            for (unsigned k = 0; k <= n && ok; ++k) {
                ++rep.checks;
                Configuration c{v, p0, k};
                bool expected = oracle.wins(c);
                bool got = eta[v] != kInfiniteGrabs && eta[v] <= k;
                if (got != expected) {
                    std::string value = eta[v] == kInfiniteGrabs ? "inf" : std::to_string(eta[v]);
                    fail(rep, i, "eta(" + g.vertex_name(v) + ") = " + value + " but the oracle says " +
                                     (expected ? "win" : "loss") + " with " + std::to_string(k) + " grabs",
                         serialize_game(g, c));
                    ok = false;
                }
            }
        }
    }
}

// Replays a witness play; returns an empty string when it is a legal winning play within the round bound.
std::string check_witness(const PawnGame& g, const Configuration& c, const std::vector<PlayStep>& play,
                          std::uint64_t round_bound)
{
    VertexId pos = c.vertex;
    PawnSet p = c.p1;
    unsigned r = c.grabs_left.value_or(0);
    std::uint64_t rounds = 0;
    for (const auto& step : play) {
        switch (step.kind) {
        case PlayStep::Kind::Move: {
            const auto& succ = g.successors(pos);
            if (!std::binary_search(succ.begin(), succ.end(), step.vertex)) return "illegal move";
            pos = step.vertex;
            ++rounds;
            break;
        }
        case PlayStep::Kind::Grab:
            if (r == 0 || step.pawn >= g.pawn_count() || p.contains(step.pawn)) return "illegal grab";
            p.insert(step.pawn);
            --r;
            break;
        case PlayStep::Kind::NoGrab: break;
        }
    }
    if (!g.is_target(pos)) return "play does not end in a target";
    if (rounds > round_bound) return "play exceeds the round bound";
    return {};
}

void suite_dfs(SuiteReport& rep, std::size_t count)
{
    for (std::size_t i = 0; i < count; ++i) {
        const auto s = case_seed(rep.seed, i);
        Rng rng(s);
        const auto n = static_cast<std::size_t>(rng.range(2, 5));
        const auto d = static_cast<std::size_t>(rng.range(2, 5));
        const auto k = static_cast<unsigned>(rng.range(0, 3));
        auto inst = gen_random_pawngame({n, d, OwnershipKind::OMVPP, Mechanism::k_grabbing(k), 3}, s);
        const auto& g = inst.game;
        ExplicitSolution oracle(g);
        ++rep.cases;
        for (int q = 0; q < 3; ++q) {
            Configuration c = inst.init;
            if (q > 0) {
                c = Configuration{static_cast<VertexId>(rng.below(n)), random_pawns(rng, d),
                                  static_cast<unsigned>(rng.range(0, k))};
            }
            ++rep.checks;
            bool expected = oracle.wins(c);
            auto res = solve_kgrab_dfs(g, c);
            if ((res.winner == Player::One) != expected) {
                fail(rep, i, "search says " + player_name(res.winner) + " from " + describe(g, c),
                     serialize_game(g, c));
                break;
            }
            if (res.winner == Player::One) {
                auto bad = check_witness(g, c, res.witness, n * (k + 1));
                if (!bad.empty()) {
                    fail(rep, i, "witness from " + describe(g, c) + ": " + bad, serialize_game(g, c));
                    break;
                }
            }
            DfsOptions deeper;
            deeper.round_cap = res.round_cap + n;
            if (solve_kgrab_dfs(g, c, deeper).winner != res.winner) {
                fail(rep, i, "deepening the round cap flips the answer from " + describe(g, c), serialize_game(g, c));
                break;
            }
        }
    }
}

void suite_lemma41(SuiteReport& rep, std::size_t count)
{
    for (std::size_t i = 0; i < count; ++i) {
        Rng rng(case_seed(rep.seed, i));
        const auto n = static_cast<std::size_t>(rng.range(1, 8));
        auto tb = random_turnbased(rng, n, 3, false);
        auto v0 = static_cast<VertexId>(rng.below(n));
        auto inst = tb_to_optional(tb, v0);
        ++rep.cases;
        ++rep.checks;
        Player expected = solve_turnbased(tb).winner(v0);
        Player got = DenseSolution(inst.game).wins(inst.init) ? Player::One : Player::Two;
        if (n <= 4) {
            ++rep.checks;
            Player slow = solve_explicit(inst.game, inst.init).winner;
            if (slow != got) {
                fail(rep, i, "dense and expanded oracles disagree", serialize_game(inst.game, inst.init));
                continue;
            }
        }
        if (got != expected) {
            fail(rep, i,
                 "turn-based winner " + player_name(expected) + " at " + std::to_string(v0) +
                     ", pawn game winner " + player_name(got),
                 serialize_tbgame(tb) + serialize_game(inst.game, inst.init));
        }
    }
}

// Every winning ⟨v,P⟩ stays winning for P′ ⊆ P that keeps the owner of v when P had it.
bool check_fewer_pawns(SuiteReport& rep, std::size_t i, const PawnGame& g, const ExplicitSolution& oracle)
{
    const std::size_t d = g.pawn_count();
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        const std::uint64_t own = std::uint64_t{1} << g.owners(v)[0];
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << d); ++mask) {
            if (!oracle.wins(at(v, d, mask))) continue;
            for (std::uint64_t sub = mask;; sub = (sub - 1) & mask) {
                if (!(mask & own) || (sub & own)) {
                    ++rep.checks;
                    if (!oracle.wins(at(v, d, sub))) {
                        fail(rep, i,
                             "wins from " + describe(g, at(v, d, mask)) + " but loses from " + describe(g, at(v, d, sub)),
                             serialize_game(g, at(v, d, sub)));
                        return false;
                    }
                }
                if (sub == 0) break;
            }
        }
    }
    return true;
}

void suite_monotonic(SuiteReport& rep, std::size_t count)
{
    for (std::size_t i = 0; i < count; ++i) {
        const auto s = case_seed(rep.seed, i);
        Rng rng(s);
        const auto n = static_cast<std::size_t>(rng.range(2, 9));
        const auto d = static_cast<std::size_t>(rng.range(1, std::min<std::size_t>(8, n - 1)));
        auto inst = gen_random_pawngame({n, d, OwnershipKind::MVPP, Mechanism::optional_grabbing(), 3}, s);
        ++rep.cases;
        if (!check_fewer_pawns(rep, i, inst.game, ExplicitSolution(inst.game))) continue;
        auto always = inst.game.with_mechanism(Mechanism::always_grabbing());
        if (!check_fewer_pawns(rep, i, always, ExplicitSolution(always))) continue;

        // More pawns never hurt under k-grabbing, on overlapping ownership too.
        const auto kn = static_cast<std::size_t>(rng.range(2, 5));
        const auto kd = static_cast<std::size_t>(rng.range(2, 5));
        const auto k = static_cast<unsigned>(rng.range(0, 2));
        auto kinst = gen_random_pawngame({kn, kd, OwnershipKind::OMVPP, Mechanism::k_grabbing(k), 3}, s ^ 0x5bd1e995U);
        const auto& kg = kinst.game;
        ExplicitSolution oracle(kg);
        bool ok = true;
        for (VertexId v = 0; v < kn && ok; ++v) {
            for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << kd) && ok; ++mask) {
                for (unsigned r = 0; r <= k && ok; ++r) {
                    if (!oracle.wins(at(v, kd, mask, r))) continue;
                    for (PawnId j = 0; j < kd && ok; ++j) {
                        if ((mask >> j) & 1U) continue;
                        ++rep.checks;
                        auto more = at(v, kd, mask | (std::uint64_t{1} << j), r);
                        if (!oracle.wins(more)) {
                            fail(rep, i,
                                 "wins from " + describe(kg, at(v, kd, mask, r)) + " but loses from " + describe(kg, more),
                                 serialize_game(kg, more));
                            ok = false;
                        }
                    }
                }
            }
        }
    }
}

std::string setcover_text(const SetCoverInstance& sc)
{
    std::ostringstream out;
    out << "universe " << sc.universe << " k " << sc.k << " sets ";
    for (std::size_t j = 0; j < sc.sets.size(); ++j) {
        if (j) out << ';';
        for (std::size_t x = 0; x < sc.sets[j].size(); ++x) out << (x ? "," : "") << sc.sets[j][x];
    }
    return out.str();
}

void suite_setcover(SuiteReport& rep, std::size_t count)
{
    for (std::size_t i = 0; i < count; ++i) {
        Rng rng(case_seed(rep.seed, i));
        SetCoverInstance sc;
        if (i < 2) {
            sc = {3, {{1}, {1, 2}, {2, 3}}, i == 0 ? 2U : 1U};
        } else {
            sc = random_setcover(rng, 5, 5);
        }
        auto inst = gen_setcover(sc);
        ++rep.cases;
        ++rep.checks;
        bool expected = setcover_bruteforce(sc);
        Player got = solve_explicit(inst.game, inst.init).winner;
        if ((got == Player::One) != expected) {
            fail(rep, i, "game winner " + player_name(got) + " for " + setcover_text(sc),
                 serialize_game(inst.game, inst.init));
        }
    }
}

void suite_tqbf(SuiteReport& rep, std::size_t count)
{
    for (std::size_t i = 0; i < count; ++i) {
        Rng rng(case_seed(rep.seed, i));
        QbfSpec q;
        if (i == 0) q = parse_qbf("Ex1.(x1)");
        else if (i == 1) q = parse_qbf("Ax1.(x1)");
        else q = random_qbf(rng, 4, 4);
        auto inst = gen_tqbf(q);
        ++rep.cases;
        ++rep.checks;
        bool expected = qbf_bruteforce(q);
        Player got = solve_explicit(inst.game, inst.init).winner;
        if ((got == Player::One) != expected) {
            fail(rep, i, "game winner " + player_name(got) + " for " + format_qbf(q),
                 serialize_game(inst.game, inst.init));
        }
    }
}

void suite_atm(SuiteReport& rep, std::size_t count)
{
    for (std::size_t i = 0; i < count; ++i) {
        Rng rng(case_seed(rep.seed, i));
        auto atm = random_atm(rng, 3, 2);
        auto lk = gen_atm_lockkey(atm);
        ++rep.cases;
        ++rep.checks;
        bool expected = atm_accepts_bruteforce(atm);
        Player got = solve_lockkey(lk.game, lk.init);
        if ((got == Player::One) != expected) {
            fail(rep, i, "lock-key winner " + player_name(got) + ", machine " + (expected ? "accepts" : "rejects"),
                 serialize_atm(atm));
        }
    }
}

// ---- gadget harnesses

enum class Exit { ToTarget, ToSink };

struct HarnessSpec {
    std::vector<GadgetKind> chain; // all for lock 0
    Player enterer;
    bool closed;           // initial state of lock 0
    Exit exit;             // where the last gadget's out port leads
    // When set, configurations at the last out port whose pawns satisfy it count as Player 1 targets.
    std::function<bool(const GadgetRegistry&, const PawnSet&)> exit_target;
    Player expected;
    std::string label;
    bool every_fresh = false;            // otherwise only the all-Player-2 fresh assignment
    std::optional<Player> first_out_owner; // pins the fresh pawn on the first gadget's out port
};

struct HarnessOutcome {
    std::size_t assignments = 0;
    std::vector<std::uint64_t> failing_masks;
    std::string text; // the game with the first failing (or default) assignment
};

HarnessOutcome run_harness(const HarnessSpec& h)
{
    PawnGameBuilder b;
    PawnId entry_pawn = b.add_pawn();
    VertexId entry = b.add_vertex("entry", {entry_pawn});
    VertexId sink = b.add_vertex("s", {entry_pawn});
    VertexId target = b.add_vertex("t", {entry_pawn}, true);
    b.add_edge(sink, sink);
    b.add_edge(target, target);
    GadgetRegistry reg(b, sink, target);
    VertexId pos = entry;
    std::optional<VertexId> first_out;
    for (auto kind : h.chain) {
        auto ports = kind == GadgetKind::Lock ? reg.build_lock_gadget(0) : reg.build_key_gadget(0);
        b.add_edge(pos, ports.in);
        pos = ports.out;
        if (!first_out) first_out = ports.out;
    }
    const VertexId last_out = pos;
    b.add_edge(last_out, h.exit == Exit::ToTarget ? target : sink);
    auto game = b.build("harness", Mechanism::optional_grabbing());
    const std::size_t d = game.pawn_count();

    std::vector<PawnId> free_pawns = reg.fresh_pawns();
    std::optional<PawnId> pinned;
    if (h.first_out_owner) {
        pinned = game.owners(*first_out).front();
        std::erase(free_pawns, *pinned);
    }
    const std::uint64_t limit = h.every_fresh ? std::uint64_t{1} << free_pawns.size() : 1;

    HarnessOutcome out;
    for (std::uint64_t fmask = 0; fmask < limit; ++fmask) {
        PawnSet p(d);
        if (h.enterer == Player::One) p.insert(entry_pawn);
        reg.set_state(p, 0, h.closed);
        for (std::size_t x = 0; x < free_pawns.size(); ++x) {
            if ((fmask >> x) & 1U) p.insert(free_pawns[x]);
        }
        if (pinned && *h.first_out_owner == Player::One) p.insert(*pinned);
        Configuration c{entry, p, std::nullopt};
        ++out.assignments;
        auto ex = expand(game, {c});
        if (h.exit_target) {
            for (VertexId id = 0; id < ex.nodes.size(); ++id) {
                const auto& node = ex.nodes[id];
                // The state is read when the token enters the out port, before the reply grab.
                if (!node.is_configuration && node.vertex == last_out &&
                    h.exit_target(reg, PawnSet::from_mask(d, node.pawns)))
                    ex.tb.set_target(id);
            }
        }
        auto sol = solve_turnbased(ex.tb);
        bool ok = sol.winner(*ex.find(c)) == h.expected;
        if (!ok) out.failing_masks.push_back(fmask);
        if (fmask == 0 || (!ok && out.failing_masks.size() == 1)) out.text = serialize_game(game, c);
    }
    return out;
}

std::vector<HarnessSpec> harness_specs()
{
    using K = GadgetKind;
    auto lock_open = [](const GadgetRegistry& r, const PawnSet& p) { return r.lock_open(p, 0); };
    auto key_closed = [](const GadgetRegistry& r, const PawnSet& p) { return r.is_closed(p, 0); };
    auto key_open = [](const GadgetRegistry& r, const PawnSet& p) { return r.is_open(p, 0); };
    auto not_ = [](auto f) { return [f](const GadgetRegistry& r, const PawnSet& p) { return !f(r, p); }; };
    const auto P1 = Player::One, P2 = Player::Two;
    return {
        {{K::Lock}, P1, false, Exit::ToTarget, nullptr, P1, "open lock crossable by player 1", true, std::nullopt},
        {{K::Lock}, P2, false, Exit::ToSink, nullptr, P2, "open lock crossable by player 2", true, std::nullopt},
        {{K::Lock}, P1, false, Exit::ToSink, lock_open, P1, "open lock stays open when player 1 crosses", false, std::nullopt},
        {{K::Lock}, P1, true, Exit::ToTarget, nullptr, P2, "closed lock blocks player 1", true, std::nullopt},
        {{K::Lock}, P2, true, Exit::ToSink, nullptr, P1, "closed lock blocks player 2", true, std::nullopt},
        {{K::Key}, P1, true, Exit::ToSink, key_open, P1, "player 1 turns a closed key open", true, std::nullopt},
        {{K::Key}, P2, false, Exit::ToSink, not_(key_closed), P2, "player 2 turns an open key closed", true, std::nullopt},
        {{K::Key, K::Lock}, P1, true, Exit::ToTarget, nullptr, P1, "closed key opens the lock for player 1", true, P1},
        {{K::Key, K::Lock}, P2, true, Exit::ToSink, nullptr, P2, "closed key opens the lock for player 2", true, P2},
        {{K::Key, K::Lock}, P1, false, Exit::ToTarget, nullptr, P2, "open key closes the lock for player 1", true, P1},
        {{K::Key, K::Lock}, P2, false, Exit::ToSink, nullptr, P1, "open key closes the lock for player 2", true, P2},
    };
}

void suite_gadgets(SuiteReport& rep, std::size_t)
{
    auto specs = harness_specs();
    for (std::size_t i = 0; i < specs.size(); ++i) {
        auto res = run_harness(specs[i]);
        ++rep.cases;
        rep.checks += res.assignments;
        if (!res.failing_masks.empty()) {
            fail(rep, i,
                 specs[i].label + ": expected " + player_name(specs[i].expected) + ", " +
                     std::to_string(res.failing_masks.size()) + " of " + std::to_string(res.assignments) +
                     " fresh assignments fail",
                 res.text);
        }
    }
}

using SuiteFn = void (*)(SuiteReport&, std::size_t);

const std::map<std::string, std::pair<SuiteFn, std::size_t>, std::less<>>& registry()
{
    static const std::map<std::string, std::pair<SuiteFn, std::size_t>, std::less<>> table = {
        {"alg1", {suite_alg1, 1000}},       {"gog", {suite_gog, 500}},
        {"eta", {suite_eta, 300}},          {"dfs", {suite_dfs, 300}},
        {"lemma41", {suite_lemma41, 200}},  {"gadgets", {suite_gadgets, 1}},
        {"monotonic", {suite_monotonic, 200}}, {"setcover", {suite_setcover, 100}},
        {"tqbf", {suite_tqbf, 100}},        {"atm", {suite_atm, 50}},
    };
    return table;
}

} // namespace

std::uint64_t case_seed(std::uint64_t seed, std::size_t i)
{
    // splitmix64 finalizer over (seed, i)
    std::uint64_t z = seed * 0x9E3779B97F4A7C15ULL + i + 1;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

const std::vector<std::string>& suite_names()
{
    static const std::vector<std::string> names = {"alg1",      "gog",      "eta",  "dfs", "lemma41",
                                                   "gadgets",   "monotonic", "setcover", "tqbf", "atm"};
    return names;
}

std::size_t default_suite_count(std::string_view name)
{
    auto it = registry().find(name);
    if (it == registry().end()) throw std::invalid_argument("unknown suite '" + std::string(name) + "'");
    return it->second.second;
}

SuiteReport run_suite(std::string_view name, std::uint64_t seed, std::size_t count)
{
    auto it = registry().find(name);
    if (it == registry().end()) throw std::invalid_argument("unknown suite '" + std::string(name) + "'");
    SuiteReport rep;
    rep.name = std::string(name);
    rep.seed = seed;
    it->second.first(rep, count);
    return rep;
}

} // namespace pawn
