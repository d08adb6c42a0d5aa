#include <doctest.h>

#include "helpers.hpp"
#include "pawn/explicit.hpp"
#include "pawn/generators.hpp"
#include "pawn/ovpp_optional.hpp"
#include "pawn/suites.hpp"

using namespace pawn;
using testing::load_data;

TEST_CASE("G1 under the attractor-style solver")
{
    auto inst = load_data("g1.pawn");
    CHECK(solve_ovpp_optional(inst.game, inst.init).winner == Player::One);
    Configuration with_v0{inst.init.vertex, testing::pawns(4, {0}), std::nullopt};
    CHECK(solve_ovpp_optional(inst.game, with_v0).winner == Player::Two);
}

TEST_CASE("starting on a target wins at level zero")
{
    auto inst = load_data("g1.pawn");
    Configuration at_t{*inst.game.find_vertex("t"), PawnSet(4), std::nullopt};
    auto r = solve_ovpp_optional(inst.game, at_t);
    CHECK(r.winner == Player::One);
    CHECK(r.trace.level[at_t.vertex] == 0);
    CHECK(r.trace.reason[at_t.vertex] == Absorption::Target);
}

TEST_CASE("wrong class or mechanism is rejected")
{
    auto mvpp = gen_random_pawngame({5, 3, OwnershipKind::MVPP, Mechanism::optional_grabbing(), 3}, 1);
    CHECK_THROWS_AS(solve_ovpp_optional(mvpp.game, mvpp.init), PreconditionError);
    auto always = gen_random_pawngame({4, 4, OwnershipKind::OVPP, Mechanism::always_grabbing(), 3}, 1);
    CHECK_THROWS_AS(solve_ovpp_optional(always.game, always.init), PreconditionError);
}

TEST_CASE("absorbed vertices are winning for the pawn sets the proof promises")
{
    for (std::uint64_t seed = 0; seed < 150; ++seed) {
        Rng rng(seed);
        const auto n = static_cast<std::size_t>(rng.range(2, 6));
        auto inst = gen_random_pawngame({n, n, OwnershipKind::OVPP, Mechanism::optional_grabbing(), 3}, seed);
        const auto& g = inst.game;
        ExplicitSolution oracle(g);
        auto r = solve_ovpp_optional(g, inst.init);
        CAPTURE(seed);
        for (VertexId u = 0; u < n; ++u) {
            if (r.trace.level[u] < 0) continue;
            const PawnId own = g.owners(u)[0];
            const bool only_without_owner = r.trace.reason[u] == Absorption::ForcedIntoBorder;
            for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
                PawnSet p = PawnSet::from_mask(n, mask);
                if (only_without_owner && p.contains(own)) continue;
                CAPTURE(u);
                CAPTURE(mask);
                CHECK(oracle.wins(Configuration{u, p, std::nullopt}));
            }
        }
    }
}

TEST_CASE("trace levels are monotone and bounded by the vertex count")
{
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        auto inst = gen_random_pawngame({6, 6, OwnershipKind::OVPP, Mechanism::optional_grabbing(), 3}, seed);
        auto r = solve_ovpp_optional(inst.game, inst.init);
        CHECK(r.trace.rounds.size() <= inst.game.vertex_count() + 1);
        for (std::size_t i = 1; i < r.trace.rounds.size(); ++i)
            CHECK(r.trace.rounds[i].winning.size() > r.trace.rounds[i - 1].winning.size());
        CHECK_FALSE(r.trace.verdict.empty());
    }
}

TEST_CASE("agreement with the oracle on a reduced sample")
{
    auto rep = run_suite("alg1", 3, 200);
    CHECK(rep.passed());
    CHECK(rep.checks == 800);
}
