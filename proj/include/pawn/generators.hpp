#pragma once

#include <cstdint>
#include <istream>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "pawn/game.hpp"
#include "pawn/lockkey.hpp"
#include "pawn/turnbased.hpp"

namespace pawn {

// Seeded source of bounded integers; the engine is fully specified, so streams agree across platforms.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}
    std::uint64_t below(std::uint64_t n) { return n == 0 ? 0 : engine_() % n; }
    std::uint64_t range(std::uint64_t lo, std::uint64_t hi) { return lo + below(hi - lo + 1); }
    bool chance(std::uint64_t num, std::uint64_t den) { return below(den) < num; }
    template <typename T>
    void shuffle(std::vector<T>& v)
    {
        for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[below(i)]);
    }

private:
    std::mt19937_64 engine_;
};

// Alternating Turing machine over a bounded tape.
struct AtmTransition {
    std::uint32_t state;
    std::uint32_t read;
    std::uint32_t next;
    std::uint32_t write;
    int move; // -1 left, +1 right
};

struct AtmSpec {
    std::vector<std::string> states; // states[0] is initial
    std::vector<Player> owner;       // existential states belong to Player 1
    std::vector<std::string> alphabet; // alphabet[0] pads the input word
    std::uint32_t accept = 0;
    std::uint32_t reject = 0;
    std::uint32_t cells = 1;
    std::vector<std::uint32_t> word;
    std::vector<AtmTransition> transitions;

    void validate() const;
};

AtmSpec parse_atm(std::istream& in);
AtmSpec parse_atm(std::string_view text);
std::string serialize_atm(const AtmSpec& atm);
// Maps a word given as letters separated by spaces or as a string of one-character letters.
std::vector<std::uint32_t> parse_atm_word(const AtmSpec& atm, std::string_view word);

LockKeyInstance gen_atm_lockkey(const AtmSpec& atm);
bool atm_accepts_bruteforce(const AtmSpec& atm, std::uint64_t budget = 1'000'000);
LockId atm_lock(const AtmSpec& atm, std::uint32_t cell, std::uint32_t letter); // cell is 1-based

struct SetCoverInstance {
    std::uint32_t universe = 0;                  // elements 1..universe
    std::vector<std::vector<std::uint32_t>> sets;
    std::uint32_t k = 0;
};

GameInstance gen_setcover(const SetCoverInstance& sc);
bool setcover_bruteforce(const SetCoverInstance& sc);
// Parses "1;1,2;2,3".
std::vector<std::vector<std::uint32_t>> parse_set_list(std::string_view text);

struct QbfSpec {
    std::vector<bool> existential;       // per variable x1..xn
    std::vector<std::vector<int>> clauses; // literals ±i for x_i
    void validate() const;
};

// Parses "Ex1.Ax2.(x1|~x2)&(x2)".
QbfSpec parse_qbf(std::string_view text);
std::string format_qbf(const QbfSpec& q);
bool qbf_bruteforce(const QbfSpec& q);
GameInstance gen_tqbf(const QbfSpec& q);

struct RandomGameParams {
    std::size_t vertices = 5;
    std::size_t pawns = 5;
    OwnershipKind kind = OwnershipKind::OVPP;
    Mechanism mechanism = Mechanism::optional_grabbing();
    std::size_t max_out_degree = 3;
};

GameInstance gen_random_pawngame(const RandomGameParams& params, std::uint64_t seed);

TurnBasedGame random_turnbased(Rng& rng, std::size_t vertices, std::size_t max_out_degree, bool dead_ends);
LockKeyInstance random_lockkey(Rng& rng, std::size_t vertices, std::size_t locks, std::size_t max_locks_per_edge);
SetCoverInstance random_setcover(Rng& rng, std::uint32_t max_universe, std::uint32_t max_sets);
QbfSpec random_qbf(Rng& rng, std::size_t max_vars, std::size_t max_clauses);
AtmSpec random_atm(Rng& rng, std::size_t max_working_states, std::uint32_t cells);

} // namespace pawn
