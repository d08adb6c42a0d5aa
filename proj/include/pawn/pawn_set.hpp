#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace pawn {

using VertexId = std::uint32_t;
using PawnId = std::uint32_t;

// Dynamic bitset over the pawn universe [0, universe).
class PawnSet {
public:
    PawnSet() = default;
    explicit PawnSet(std::size_t universe) : universe_(universe), words_((universe + 63) / 64, 0) {}

    static PawnSet from_mask(std::size_t universe, std::uint64_t mask);
    static PawnSet from_list(std::size_t universe, const std::vector<PawnId>& pawns);

    std::size_t universe() const { return universe_; }

    bool contains(PawnId p) const { return p < universe_ && ((words_[p >> 6] >> (p & 63)) & 1U); }
    void insert(PawnId p);
    void erase(PawnId p);
    void toggle(PawnId p);

    std::size_t count() const;
    bool empty() const { return count() == 0; }
    bool intersects(const PawnSet& other) const;
    bool is_subset_of(const PawnSet& other) const;

    // Requires universe() <= 64.
    std::uint64_t to_mask() const;
    std::vector<PawnId> elements() const;

    std::size_t hash() const;

    friend bool operator==(const PawnSet&, const PawnSet&) = default;

private:
    std::size_t universe_ = 0;
    std::vector<std::uint64_t> words_;
};

} // namespace pawn

template <>
struct std::hash<pawn::PawnSet> {
    std::size_t operator()(const pawn::PawnSet& s) const noexcept { return s.hash(); }
};
