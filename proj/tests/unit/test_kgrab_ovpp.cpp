#include <doctest.h>

#include <algorithm>

#include "helpers.hpp"
#include "pawn/explicit.hpp"
#include "pawn/kgrab_ovpp.hpp"
#include "pawn/suites.hpp"

using namespace pawn;

namespace {

std::uint32_t oracle_eta(const PawnGame& g, VertexId v, const PawnSet& p0, unsigned max_k)
{
    for (unsigned k = 0; k <= max_k; ++k)
        if (solve_explicit(g, Configuration{v, p0, k}).winner == Player::One) return k;
    return kInfiniteGrabs;
}

PawnGame pinned_game()
{
    return testing::make_game(5, {{0}, {1}, {2}, {3}, {4}},
                              {{0, 1}, {0, 2}, {0, 4}, {1, 2}, {1, 3}, {1, 4}, {2, 2}, {2, 3}, {2, 4}, {3, 3},
                               {4, 1}, {4, 3}, {4, 4}},
                              {2}, Mechanism::k_grabbing(3));
}

bool contains(const std::vector<VertexId>& v, VertexId x) { return std::find(v.begin(), v.end(), x) != v.end(); }

} // namespace

TEST_CASE("targets need no grabs")
{
    auto g = testing::make_game(2, {{0}, {1}}, {{0, 1}, {1, 1}}, {1}, Mechanism::k_grabbing(1));
    auto eta = minimum_grabs(g, testing::pawns(2, {}));
    CHECK(eta[1] == 0);
    CHECK(eta[0] == 0);
}

TEST_CASE("one grab on arrival, none possible before the first move")
{
    // w -> u, u -> {t, s}
    auto g = testing::make_game(4, {{0}, {1}, {2}, {3}}, {{0, 1}, {1, 2}, {1, 3}, {2, 2}, {3, 3}}, {2},
                                Mechanism::k_grabbing(2));
    auto p0 = testing::pawns(4, {});
    auto eta = minimum_grabs(g, p0);
    CHECK(eta[0] == 1);
    CHECK(eta[1] == kInfiniteGrabs);
    CHECK(eta[2] == 0);
    CHECK(eta[3] == kInfiniteGrabs);
    for (VertexId v = 0; v < 4; ++v) {
        CAPTURE(v);
        CHECK(eta[v] == oracle_eta(g, v, p0, 2));
    }
}

TEST_CASE("pinned game where the copy construction misses a two-grab win")
{
    auto g = pinned_game();
    auto p0 = testing::pawns(5, {});
    CHECK(minimum_grabs(g, p0, EtaVariant::NonTrivial)[0] == kInfiniteGrabs);
    CHECK(minimum_grabs(g, p0, EtaVariant::ReSolve)[0] == 1);
    CHECK(minimum_grabs(g, p0, EtaVariant::Controlled)[0] == 2);
    CHECK(solve_explicit(g, Configuration{0, p0, 2u}).winner == Player::One);
    CHECK(solve_explicit(g, Configuration{0, p0, 1u}).winner == Player::Two);
    auto eta = minimum_grabs(g, p0);
    for (VertexId v = 0; v < 5; ++v) {
        CAPTURE(v);
        CHECK(eta[v] == oracle_eta(g, v, p0, 3));
    }
}

TEST_CASE("winning in at least one move")
{
    // t prior target; a and e border vertices of Player 2; c belongs to Player 1; s is a sink.
    TurnBasedGame tb;
    auto t = tb.add_vertex(Player::One, true);
    auto a = tb.add_vertex(Player::Two, true);
    auto c = tb.add_vertex(Player::One);
    auto e = tb.add_vertex(Player::Two, true);
    auto s = tb.add_vertex(Player::Two);
    tb.add_edge(t, t);
    tb.add_edge(a, c);
    tb.add_edge(c, a);
    tb.add_edge(c, t);
    tb.add_edge(e, t);
    tb.add_edge(e, s);
    tb.add_edge(s, s);
    auto out = winning_nontrivially(tb, {a, e});
    CHECK(contains(out, a));
    CHECK(contains(out, c));
    CHECK_FALSE(contains(out, e));
    CHECK_FALSE(contains(out, s));
}

TEST_CASE("solver answers queries and rejects other classes")
{
    auto g = testing::make_game(4, {{0}, {1}, {2}, {3}}, {{0, 1}, {1, 2}, {1, 3}, {2, 2}, {3, 3}}, {2},
                                Mechanism::k_grabbing(2));
    CHECK(solve_kgrab_ovpp(g, Configuration{0, testing::pawns(4, {}), 1u}) == Player::One);
    CHECK(solve_kgrab_ovpp(g, Configuration{0, testing::pawns(4, {}), 0u}) == Player::Two);
    CHECK(solve_kgrab_ovpp(g, Configuration{1, testing::pawns(4, {1}), 0u}) == Player::One);

    auto optional = testing::make_game(2, {{0}, {1}}, {{0, 1}, {1, 1}}, {1});
    CHECK_THROWS_AS(minimum_grabs(optional, testing::pawns(2, {})), PreconditionError);
    auto mvpp = testing::make_game(1, {{0}, {0}}, {{0, 1}, {1, 1}}, {1}, Mechanism::k_grabbing(1));
    CHECK_THROWS_AS(minimum_grabs(mvpp, testing::pawns(1, {})), PreconditionError);
}

TEST_CASE("eta suite sample")
{
    auto report = run_suite("eta", 11, 80);
    CHECK(report.cases == 80);
    CHECK(report.passed());
}
