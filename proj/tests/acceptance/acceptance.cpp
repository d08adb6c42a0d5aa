#include <chrono>
#include <cstdio>
#include <deque>
#include <fstream>
#include <functional>
#include <string>
#include <vector>

#include "../unit/helpers.hpp"
#include "pawn/explicit.hpp"
#include "pawn/generators.hpp"
#include "pawn/ovpp_optional.hpp"
#include "pawn/suites.hpp"

using namespace pawn;

namespace {

constexpr std::uint64_t kSeed = 2024;

struct Outcome {
    bool ok = true;
    std::string detail;
};

void require(Outcome& out, bool cond, const std::string& what)
{
    if (!cond && out.ok) {
        out.ok = false;
        out.detail = what;
    }
}

void run_suites(Outcome& out, const std::vector<std::string>& names)
{
    std::string counts;
    for (const auto& name : names) {
        auto rep = run_suite(name, kSeed, default_suite_count(name));
        if (!counts.empty()) counts += ", ";
        counts += name + " " + std::to_string(rep.cases) + " cases/" + std::to_string(rep.checks) + " checks";
        require(out, rep.passed(), name + ": " + (rep.failures.empty() ? std::string() : rep.failures.front()));
    }
    if (out.ok) out.detail = counts;
}

Outcome pinned_winners()
{
    Outcome out;
    auto g1 = testing::load_data("g1.pawn");
    Configuration with_v0{g1.init.vertex, PawnSet::from_list(4, g1.game.owners(*g1.game.find_vertex("v0"))), std::nullopt};
    require(out, solve_ovpp_optional(g1.game, g1.init).winner == Player::One, "G1 from <v0,{}> under the solver");
    require(out, solve_explicit(g1.game, g1.init).winner == Player::One, "G1 from <v0,{}> under the oracle");
    require(out, solve_ovpp_optional(g1.game, with_v0).winner == Player::Two, "G1 from <v0,{v0}> under the solver");
    require(out, solve_explicit(g1.game, with_v0).winner == Player::Two, "G1 from <v0,{v0}> under the oracle");

    auto g2 = testing::load_data("g2.pawn");
    auto res = solve_explicit(g2.game, g2.init);
    require(out, res.winner == Player::One, "G2 from <v0,{v0,v2}>");
    const VertexId v1 = *g2.game.find_vertex("v1");
    int visits = 0;
    for (auto [from, to] : res.witness()) {
        const auto& node = res.expanded.nodes[from];
        if (node.is_configuration && node.vertex == v1) ++visits;
    }
    require(out, visits >= 2, "G2 witness visits v1 " + std::to_string(visits) + " times");
    if (out.ok) out.detail = "G1 both configurations, G2 witness visits v1 " + std::to_string(visits) + " times";
    return out;
}

Outcome always_grabbing_structure()
{
    Outcome out;
    std::size_t games = 0;
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        Rng rng(case_seed(kSeed, seed));
        const std::size_t n = rng.range(2, 8);
        const auto kind = rng.chance(1, 2) ? OwnershipKind::OVPP : OwnershipKind::MVPP;
        const std::size_t d = kind == OwnershipKind::OVPP ? n : rng.range(1, n - 1);
        auto inst = gen_random_pawngame({n, d, kind, Mechanism::optional_grabbing(), 3}, seed);
        auto big = to_always_grabbing(inst.game, inst.init);
        const auto& h = big.game;
        ++games;
        const std::size_t fresh = 2 * (d + 10);
        require(out, h.mechanism() == Mechanism::always_grabbing(), "mechanism is not always grabbing");
        require(out, h.vertex_count() == n + fresh, "fresh vertex count");
        require(out, h.pawn_count() == d + fresh, "fresh pawn count");
        std::size_t gained = 0;
        for (PawnId p = static_cast<PawnId>(d); p < h.pawn_count(); ++p) gained += big.init.p1.contains(p) ? 1 : 0;
        require(out, gained == d + 10, "Player 1 gains " + std::to_string(gained) + " fresh pawns");
        for (PawnId p = 0; p < d; ++p)
            require(out, big.init.p1.contains(p) == inst.init.p1.contains(p), "original pawn set changed");
        std::vector<std::size_t> owned_by(h.pawn_count(), 0);
        for (VertexId v = 0; v < h.vertex_count(); ++v)
            for (PawnId p : h.owners(v)) ++owned_by[p];
        for (VertexId v = static_cast<VertexId>(n); v < h.vertex_count(); ++v) {
            require(out, h.successors(v) == std::vector<VertexId>{v}, "fresh vertex without a lone self-loop");
            require(out, h.owners(v).size() == 1 && h.owners(v)[0] >= d && owned_by[h.owners(v)[0]] == 1,
                    "fresh vertex without a unique fresh pawn");
        }
        // Nothing outside the fresh vertices leads into them.
        std::vector<char> seen(h.vertex_count(), 0);
        std::deque<VertexId> queue;
        for (VertexId v = 0; v < n; ++v) {
            seen[v] = 1;
            queue.push_back(v);
        }
        while (!queue.empty()) {
            auto v = queue.front();
            queue.pop_front();
            for (auto w : h.successors(v))
                if (!seen[w]) {
                    seen[w] = 1;
                    queue.push_back(w);
                }
        }
        for (VertexId v = static_cast<VertexId>(n); v < h.vertex_count(); ++v)
            require(out, !seen[v], "fresh vertex reachable from the original graph");
    }

    std::size_t rewriting = 0, identity = 0;
    auto check_machine = [&](const AtmSpec& atm) {
        auto lk = gen_atm_lockkey(atm);
        auto em = embed_lockkey(lk.game, lk.init);
        auto mains = atm.states.size() * atm.cells * atm.alphabet.size();
        for (const auto& p : testing::delta_paths(lk.game, em, mains)) {
            const std::size_t want = p.rewrites ? 20 : 8;
            require(out, p.length && *p.length == want,
                    std::string(p.rewrites ? "rewriting" : "identity") + " transition route of " +
                        (p.length ? std::to_string(*p.length) : std::string("no")) + " edges");
            ++(p.rewrites ? rewriting : identity);
        }
    };
    std::ifstream flip(testing::data_path("flip.atm"));
    check_machine(parse_atm(flip));
    const std::size_t flip_paths = rewriting;
    require(out, flip_paths > 0 && identity == 0, "flip machine has no rewriting routes");
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        Rng rng(case_seed(kSeed, 100 + seed));
        check_machine(random_atm(rng, 3, 2));
    }
    if (out.ok) {
        out.detail = std::to_string(games) + " padded games; " + std::to_string(rewriting) +
                     " rewriting routes of 20 edges, " + std::to_string(identity) + " identity routes of 8";
    }
    return out;
}

struct Criterion {
    int id;
    const char* title;
    double limit_seconds;
    std::function<Outcome()> run;
};

} // namespace

int main()
{
    auto suites = [](std::vector<std::string> names) {
        return [names] {
            Outcome out;
            run_suites(out, names);
            return out;
        };
    };
    const std::vector<Criterion> criteria = {
        {1, "pinned winners", 1, pinned_winners},
        {2, "OVPP optional-grabbing solver vs oracle", 60, suites({"alg1"})},
        {3, "grab-or-give reduction", 60, suites({"gog"})},
        {4, "minimum grabs", 120, suites({"eta"})},
        {5, "k-grabbing search", 120, suites({"dfs"})},
        {6, "monotonicity", 180, suites({"monotonic"})},
        {7, "turn-based to optional grabbing", 60, suites({"lemma41"})},
        {8, "lock and key gadgets", 30, suites({"gadgets"})},
        {9, "reduction biconditionals", 300, suites({"setcover", "tqbf", "atm"})},
        {10, "always-grabbing padding and transition routes", 10, always_grabbing_structure},
    };

    int failed = 0;
    for (const auto& c : criteria) {
        auto start = std::chrono::steady_clock::now();
        Outcome out;
        try {
            out = c.run();
        } catch (const std::exception& e) {
            out = {false, std::string("exception: ") + e.what()};
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (out.ok && secs > c.limit_seconds) {
            out.ok = false;
            out.detail = "over the time limit; " + out.detail;
        }
        if (!out.ok) ++failed;
        std::printf("%s criterion %d: %s (%.2f s of %.0f s) %s\n", out.ok ? "PASS" : "FAIL", c.id, c.title, secs,
                    c.limit_seconds, out.detail.c_str());
        std::fflush(stdout);
    }
    return failed == 0 ? 0 : 1;
}
