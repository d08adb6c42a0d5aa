#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pawn/pawn_set.hpp"

namespace pawn {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& what)
        : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

class ValidationError : public Error {
public:
    using Error::Error;
};

class PreconditionError : public Error {
public:
    using Error::Error;
};

class BudgetExceeded : public Error {
public:
    BudgetExceeded(std::uint64_t estimate, std::uint64_t budget)
        : Error("state budget exceeded: estimated " + std::to_string(estimate) + " nodes, budget " +
                std::to_string(budget)),
          estimate_(estimate) {}
    std::uint64_t estimate() const { return estimate_; }

private:
    std::uint64_t estimate_;
};

enum class Player : std::uint8_t { One = 1, Two = 2 };

inline Player opponent(Player p) { return p == Player::One ? Player::Two : Player::One; }
inline int to_int(Player p) { return static_cast<int>(p); }

enum class MechanismKind { OptionalGrabbing, AlwaysGrabbing, AlwaysGrabOrGive, KGrabbing };

struct Mechanism {
    MechanismKind kind = MechanismKind::OptionalGrabbing;
    unsigned k = 0; // meaningful for KGrabbing only

    static Mechanism optional_grabbing() { return {MechanismKind::OptionalGrabbing, 0}; }
    static Mechanism always_grabbing() { return {MechanismKind::AlwaysGrabbing, 0}; }
    static Mechanism grab_or_give() { return {MechanismKind::AlwaysGrabOrGive, 0}; }
    static Mechanism k_grabbing(unsigned k) { return {MechanismKind::KGrabbing, k}; }

    bool is_k_grabbing() const { return kind == MechanismKind::KGrabbing; }
    friend bool operator==(const Mechanism&, const Mechanism&) = default;
};

std::string to_string(const Mechanism& m);

enum class OwnershipKind { OVPP, MVPP, OMVPP };

std::string_view to_string(OwnershipKind k);

// Everything needed to build a PawnGame; validated by the PawnGame constructor.
struct GameParts {
    std::string name = "game";
    std::vector<std::string> vertex_names; // empty means "v<i>"
    std::size_t pawn_count = 0;
    std::vector<std::vector<PawnId>> owners;
    std::vector<std::pair<VertexId, VertexId>> edges;
    std::vector<VertexId> targets;
    Mechanism mechanism;
};

class PawnGame {
public:
    explicit PawnGame(GameParts parts);

    const std::string& name() const { return name_; }
    std::size_t vertex_count() const { return names_.size(); }
    std::size_t pawn_count() const { return pawn_count_; }
    const Mechanism& mechanism() const { return mechanism_; }
    OwnershipKind ownership_kind() const { return kind_; }

    const std::string& vertex_name(VertexId v) const { return names_[v]; }
    std::optional<VertexId> find_vertex(std::string_view name) const;

    const std::vector<VertexId>& successors(VertexId v) const { return succ_[v]; }
    const std::vector<VertexId>& predecessors(VertexId v) const { return pred_[v]; }
    const std::vector<PawnId>& owners(VertexId v) const { return owners_[v]; }
    const PawnSet& owner_set(VertexId v) const { return owner_sets_[v]; }
    const std::vector<VertexId>& vertices_of(PawnId p) const { return owned_[p]; }
    bool is_target(VertexId v) const { return target_[v]; }
    std::vector<VertexId> targets() const;
    std::size_t edge_count() const;

    // The inverse of the constructor, with edges sorted by (src, dst).
    GameParts parts() const;

    // Same game under a different mechanism.
    PawnGame with_mechanism(Mechanism m) const;

    // Structural equality keyed by vertex names.
    friend bool operator==(const PawnGame& a, const PawnGame& b);

private:
    std::string name_;
    std::vector<std::string> names_;
    std::size_t pawn_count_;
    std::vector<std::vector<VertexId>> succ_;
    std::vector<std::vector<VertexId>> pred_;
    std::vector<std::vector<PawnId>> owners_;
    std::vector<PawnSet> owner_sets_;
    std::vector<std::vector<VertexId>> owned_;
    std::vector<bool> target_;
    Mechanism mechanism_;
    OwnershipKind kind_;
};

struct Configuration {
    VertexId vertex = 0;
    PawnSet p1;
    std::optional<unsigned> grabs_left;

    friend bool operator==(const Configuration&, const Configuration&) = default;
};

// A game together with its declared initial configuration.
struct GameInstance {
    PawnGame game;
    Configuration init;
};

OwnershipKind classify(const PawnGame& g);

// Throws ValidationError if c does not fit g.
void validate_configuration(const PawnGame& g, const Configuration& c);

Player mover(const PawnGame& g, const Configuration& c);

// Initial configuration with grabs-left defaulted to k for k-grabbing games.
Configuration make_configuration(const PawnGame& g, VertexId v, const PawnSet& p1);

// Natural ordering of names: digit runs compare numerically, so "v2" < "v10".
bool natural_less(std::string_view a, std::string_view b);

} // namespace pawn
