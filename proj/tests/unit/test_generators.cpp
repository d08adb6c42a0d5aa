#include <doctest.h>

#include <fstream>
#include <sstream>

#include "helpers.hpp"
#include "pawn/explicit.hpp"
#include "pawn/generators.hpp"

using namespace pawn;

namespace {

AtmSpec load_atm(const std::string& name)
{
    std::ifstream in(testing::data_path(name));
    REQUIRE(in);
    return parse_atm(in);
}

std::size_t main_count(const AtmSpec& atm) { return atm.states.size() * atm.cells * atm.alphabet.size(); }

// Number of (configuration vertex, transition) pairs whose head move stays on the tape.
std::size_t valid_moves(const AtmSpec& atm)
{
    std::size_t n = 0;
    for (std::uint32_t cell = 1; cell <= atm.cells; ++cell)
        for (const auto& t : atm.transitions) {
            long next = static_cast<long>(cell) + t.move;
            if (next >= 1 && next <= static_cast<long>(atm.cells)) ++n;
        }
    return n;
}

} // namespace

TEST_CASE("small machines through the lock-key game")
{
    for (const char* name : {"accept_one.atm", "reject_only.atm", "flip.atm"}) {
        auto atm = load_atm(name);
        auto inst = gen_atm_lockkey(atm);
        CAPTURE(name);
        CHECK(inst.game.size() == main_count(atm) + valid_moves(atm));
        CHECK(inst.game.lock_count == atm.cells * atm.alphabet.size());
        bool accepts = atm_accepts_bruteforce(atm);
        CHECK(accepts == (std::string(name) != "reject_only.atm"));
        CHECK((solve_lockkey(inst.game, inst.init) == Player::One) == accepts);
    }
}

TEST_CASE("machine text round trip")
{
    auto atm = load_atm("flip.atm");
    auto text = serialize_atm(atm);
    CHECK(serialize_atm(parse_atm(text)) == text);
    CHECK(parse_atm_word(atm, "ab") == std::vector<std::uint32_t>{0, 1});
    CHECK(parse_atm_word(atm, "b a") == std::vector<std::uint32_t>{1, 0});
}

TEST_CASE("transition routes between primed configurations")
{
    SUBCASE("rewriting transitions take twenty edges")
    {
        auto atm = load_atm("flip.atm");
        auto inst = gen_atm_lockkey(atm);
        auto em = embed_lockkey(inst.game, inst.init);
        auto paths = testing::delta_paths(inst.game, em, main_count(atm));
        REQUIRE_FALSE(paths.empty());
        for (const auto& p : paths) {
            CHECK(p.rewrites);
            REQUIRE(p.length.has_value());
            CHECK(*p.length == 20);
        }
    }
    SUBCASE("identity transitions take eight edges")
    {
        auto atm = load_atm("accept_one.atm");
        auto inst = gen_atm_lockkey(atm);
        auto em = embed_lockkey(inst.game, inst.init);
        auto paths = testing::delta_paths(inst.game, em, main_count(atm));
        REQUIRE_FALSE(paths.empty());
        for (const auto& p : paths) {
            CHECK_FALSE(p.rewrites);
            REQUIRE(p.length.has_value());
            CHECK(*p.length == 8);
        }
    }
}

TEST_CASE("set cover over a three-element universe")
{
    SetCoverInstance sc{3, {{1}, {1, 2}, {2, 3}}, 2};
    CHECK(setcover_bruteforce(sc));
    auto two = gen_setcover(sc);
    CHECK(two.game.mechanism() == Mechanism::k_grabbing(2));
    CHECK(solve_explicit(two.game, two.init).winner == Player::One);
    sc.k = 1;
    CHECK_FALSE(setcover_bruteforce(sc));
    auto one = gen_setcover(sc);
    CHECK(solve_explicit(one.game, one.init).winner == Player::Two);
    CHECK(parse_set_list("1;1,2;2,3") == sc.sets);
}

TEST_CASE("one-variable formulas")
{
    auto ex = gen_tqbf(parse_qbf("Ex1.(x1)"));
    CHECK(solve_explicit(ex.game, ex.init).winner == Player::One);
    auto ax = gen_tqbf(parse_qbf("Ax1.(x1)"));
    CHECK(solve_explicit(ax.game, ax.init).winner == Player::Two);
    CHECK_FALSE(qbf_bruteforce(parse_qbf("Ax1.(x1)")));
}

TEST_CASE("formula text round trip")
{
    for (const char* text : {"Ex1.Ax2.(x1|~x2)&(x2)", "Ax1.Ex2.Ex3.(~x1|x3)&(x2|~x3)"}) {
        auto q = parse_qbf(text);
        CHECK(format_qbf(parse_qbf(format_qbf(q))) == format_qbf(q));
        CHECK(parse_qbf(format_qbf(q)).clauses == q.clauses);
    }
    CHECK_THROWS(parse_qbf("Ex1.(x2)"));
}

TEST_CASE("random games are reproducible and match the requested kind")
{
    const Mechanism mechanisms[] = {Mechanism::optional_grabbing(), Mechanism::always_grabbing(),
                                    Mechanism::grab_or_give(), Mechanism::k_grabbing(1)};
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        auto kind = static_cast<OwnershipKind>(seed % 3);
        std::size_t n = 6;
        std::size_t d = kind == OwnershipKind::OVPP ? 6 : kind == OwnershipKind::MVPP ? 3 : 4;
        RandomGameParams params{n, d, kind, mechanisms[seed % 4], 3};
        auto a = gen_random_pawngame(params, seed);
        auto b = gen_random_pawngame(params, seed);
        CAPTURE(seed);
        CHECK(serialize_game(a.game, a.init) == serialize_game(b.game, b.init));
        CHECK(classify(a.game) == kind);
        CHECK(a.game.mechanism() == params.mechanism);
        for (VertexId v = 0; v < n; ++v) CHECK_FALSE(a.game.successors(v).empty());
    }
}

TEST_CASE("random machines and formulas agree with their games")
{
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        Rng rng(seed);
        auto q = random_qbf(rng, 3, 3);
        auto inst = gen_tqbf(q);
        CAPTURE(seed);
        CHECK((solve_explicit(inst.game, inst.init).winner == Player::One) == qbf_bruteforce(q));
        auto atm = random_atm(rng, 2, 2);
        auto lk = gen_atm_lockkey(atm);
        CHECK((solve_lockkey(lk.game, lk.init) == Player::One) == atm_accepts_bruteforce(atm));
    }
}
