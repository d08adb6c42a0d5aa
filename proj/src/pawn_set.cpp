#include "pawn/pawn_set.hpp"

#include <stdexcept>

namespace pawn {

PawnSet PawnSet::from_mask(std::size_t universe, std::uint64_t mask)
{
    PawnSet s(universe);
    for (PawnId p = 0; p < universe && p < 64; ++p) {
        if ((mask >> p) & 1U) s.insert(p);
    }
    return s;
}

PawnSet PawnSet::from_list(std::size_t universe, const std::vector<PawnId>& pawns)
{
    PawnSet s(universe);
    for (PawnId p : pawns) s.insert(p);
    return s;
}

void PawnSet::insert(PawnId p)
{
    if (p >= universe_) throw std::out_of_range("pawn id out of range");
    words_[p >> 6] |= std::uint64_t{1} << (p & 63);
}

void PawnSet::erase(PawnId p)
{
    if (p >= universe_) throw std::out_of_range("pawn id out of range");
    words_[p >> 6] &= ~(std::uint64_t{1} << (p & 63));
}

void PawnSet::toggle(PawnId p)
{
    if (p >= universe_) throw std::out_of_range("pawn id out of range");
    words_[p >> 6] ^= std::uint64_t{1} << (p & 63);
}

std::size_t PawnSet::count() const
{
    std::size_t n = 0;
    for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
}

bool PawnSet::intersects(const PawnSet& other) const
{
    std::size_t n = std::min(words_.size(), other.words_.size());
    for (std::size_t i = 0; i < n; ++i) {
        if (words_[i] & other.words_[i]) return true;
    }
    return false;
}

bool PawnSet::is_subset_of(const PawnSet& other) const
{
    for (std::size_t i = 0; i < words_.size(); ++i) {
        std::uint64_t theirs = i < other.words_.size() ? other.words_[i] : 0;
        if (words_[i] & ~theirs) return false;
    }
    return true;
}

std::uint64_t PawnSet::to_mask() const
{
    if (universe_ > 64) throw std::length_error("pawn set does not fit a 64-bit mask");
    return words_.empty() ? 0 : words_[0];
}

std::vector<PawnId> PawnSet::elements() const
{
    std::vector<PawnId> out;
    for (std::size_t i = 0; i < words_.size(); ++i) {
        std::uint64_t w = words_[i];
        while (w) {
            out.push_back(static_cast<PawnId>(i * 64 + std::countr_zero(w)));
            w &= w - 1;
        }
    }
    return out;
}

std::size_t PawnSet::hash() const
{
    std::size_t h = universe_ * 0x9E3779B97F4A7C15ULL;
    for (auto w : words_) h = (h ^ w) * 0x100000001B3ULL + (h >> 29);
    return h;
}

} // namespace pawn
