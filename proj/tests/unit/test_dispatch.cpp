#include <doctest.h>

#include <stdexcept>

#include "helpers.hpp"
#include "pawn/dispatch.hpp"
#include "pawn/generators.hpp"
#include "pawn/suites.hpp"

using namespace pawn;

TEST_CASE("G1 through the dispatcher")
{
    auto inst = testing::load_data("g1.pawn");
    auto rep = solve(inst.game, inst.init);
    CHECK(rep.winner == Player::One);
    CHECK(rep.algo == "ovpp-optional");
    CHECK_FALSE(rep.fallback);
    SolveOptions ex;
    ex.algo = Algo::Explicit;
    ex.witness = true;
    auto full = solve(inst.game, inst.init, ex);
    CHECK(full.winner == Player::One);
    CHECK(full.algo == "explicit");
    CHECK_FALSE(full.witness.empty());
}

TEST_CASE("classes without a specialized solver")
{
    auto g = testing::make_game(2, {{0}, {1}, {0}}, {{0, 1}, {1, 2}, {2, 2}}, {2});
    REQUIRE(g.ownership_kind() == OwnershipKind::MVPP);
    Configuration c{0, testing::pawns(2, {}), std::nullopt};
    SolveOptions special;
    special.algo = Algo::Specialized;
    CHECK_THROWS_WITH_AS(solve(g, c, special), doctest::Contains("EXPTIME"), PreconditionError);
    auto rep = solve(g, c);
    CHECK(rep.fallback);
    CHECK(rep.algo == "explicit");
}

TEST_CASE("specialized solver names")
{
    auto ovpp = [](Mechanism m) { return testing::make_game(2, {{0}, {1}}, {{0, 1}, {1, 1}}, {1}, m); };
    auto mvpp = [](Mechanism m) { return testing::make_game(1, {{0}, {0}}, {{0, 1}, {1, 1}}, {1}, m); };
    CHECK(specialized_solver(ovpp(Mechanism::optional_grabbing())) == "ovpp-optional");
    CHECK(specialized_solver(ovpp(Mechanism::grab_or_give())) == "grab-or-give");
    CHECK(specialized_solver(mvpp(Mechanism::grab_or_give())) == "grab-or-give");
    CHECK(specialized_solver(ovpp(Mechanism::k_grabbing(1))) == "eta");
    CHECK(specialized_solver(mvpp(Mechanism::k_grabbing(1))) == "kgrab-dfs");
    CHECK_FALSE(specialized_solver(mvpp(Mechanism::optional_grabbing())).has_value());
    CHECK_FALSE(specialized_solver(ovpp(Mechanism::always_grabbing())).has_value());
}

TEST_CASE("automatic choice agrees with the expansion")
{
    const Mechanism mechanisms[] = {Mechanism::optional_grabbing(), Mechanism::grab_or_give(),
                                    Mechanism::k_grabbing(2), Mechanism::always_grabbing()};
    SolveOptions ex;
    ex.algo = Algo::Explicit;
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        Rng rng(seed);
        auto kind = static_cast<OwnershipKind>(rng.below(3));
        std::size_t n = rng.range(3, 6);
        std::size_t d = kind == OwnershipKind::OVPP ? n : rng.range(kind == OwnershipKind::OMVPP ? 2 : 1, n - 1);
        auto inst = gen_random_pawngame({n, d, kind, mechanisms[seed % 4], 3}, seed);
        CAPTURE(seed);
        CHECK(solve(inst.game, inst.init).winner == solve(inst.game, inst.init, ex).winner);
    }
}

TEST_CASE("suite registry")
{
    CHECK(suite_names().size() == 10);
    CHECK(default_suite_count("alg1") == 1000);
    CHECK_THROWS_AS(run_suite("nope", 0, 1), std::invalid_argument);
    CHECK(case_seed(1, 0) != case_seed(1, 1));
    CHECK(case_seed(1, 0) == case_seed(1, 0));
}
