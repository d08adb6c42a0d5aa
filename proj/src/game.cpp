#include "pawn/game.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <unordered_set>

namespace pawn {

std::string to_string(const Mechanism& m)
{
    switch (m.kind) {
    case MechanismKind::OptionalGrabbing: return "optional-grabbing";
    case MechanismKind::AlwaysGrabbing: return "always-grabbing";
    case MechanismKind::AlwaysGrabOrGive: return "grab-or-give";
    case MechanismKind::KGrabbing: return "k-grabbing " + std::to_string(m.k);
    }
    return "?";
}

std::string_view to_string(OwnershipKind k)
{
    switch (k) {
    case OwnershipKind::OVPP: return "OVPP";
    case OwnershipKind::MVPP: return "MVPP";
    case OwnershipKind::OMVPP: return "OMVPP";
    }
    return "?";
}

bool natural_less(std::string_view a, std::string_view b)
{
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        bool da = std::isdigit(static_cast<unsigned char>(a[i])) != 0;
        bool db = std::isdigit(static_cast<unsigned char>(b[j])) != 0;
        if (da && db) {
            std::size_t i0 = i, j0 = j;
            while (i < a.size() && std::isdigit(static_cast<unsigned char>(a[i]))) ++i;
            while (j < b.size() && std::isdigit(static_cast<unsigned char>(b[j]))) ++j;
            auto na = a.substr(i0, i - i0), nb = b.substr(j0, j - j0);
            while (na.size() > 1 && na.front() == '0') na.remove_prefix(1);
            while (nb.size() > 1 && nb.front() == '0') nb.remove_prefix(1);
            if (na.size() != nb.size()) return na.size() < nb.size();
            if (na != nb) return na < nb;
            continue;
        }
        if (a[i] != b[j]) return a[i] < b[j];
        ++i;
        ++j;
    }
    if (a.size() - i != b.size() - j) return a.size() - i < b.size() - j;
    return a < b;
}

PawnGame::PawnGame(GameParts parts)
    : name_(std::move(parts.name)), pawn_count_(parts.pawn_count), mechanism_(parts.mechanism)
{
    const std::size_t n = parts.owners.size();
    if (n == 0) throw ValidationError("game has no vertices");
    if (parts.vertex_names.empty()) {
        for (std::size_t v = 0; v < n; ++v) parts.vertex_names.push_back("v" + std::to_string(v));
    }
    if (parts.vertex_names.size() != n) throw ValidationError("vertex name table does not match vertex count");
    names_ = std::move(parts.vertex_names);
    {
        std::unordered_set<std::string> seen;
        for (const auto& s : names_) {
            if (s.empty()) throw ValidationError("empty vertex name");
            if (!seen.insert(s).second) throw ValidationError("duplicate vertex name " + s);
        }
    }

    owners_.resize(n);
    owner_sets_.assign(n, PawnSet(pawn_count_));
    owned_.resize(pawn_count_);
    for (std::size_t v = 0; v < n; ++v) {
        auto os = parts.owners[v];
        std::sort(os.begin(), os.end());
        os.erase(std::unique(os.begin(), os.end()), os.end());
        if (os.empty()) throw ValidationError("vertex has no owner: " + names_[v]);
        for (PawnId p : os) {
            if (p >= pawn_count_) throw ValidationError("pawn id out of range at vertex " + names_[v]);
            owner_sets_[v].insert(p);
            owned_[p].push_back(static_cast<VertexId>(v));
        }
        owners_[v] = std::move(os);
    }

    succ_.resize(n);
    pred_.resize(n);
    for (auto [u, w] : parts.edges) {
        if (u >= n || w >= n) throw ValidationError("edge endpoint out of range");
        succ_[u].push_back(w);
    }
    for (std::size_t v = 0; v < n; ++v) {
        auto& s = succ_[v];
        std::sort(s.begin(), s.end());
        s.erase(std::unique(s.begin(), s.end()), s.end());
        if (s.empty()) throw ValidationError("dead-end vertex " + names_[v]);
        for (VertexId w : s) pred_[w].push_back(static_cast<VertexId>(v));
    }

    target_.assign(n, false);
    for (VertexId t : parts.targets) {
        if (t >= n) throw ValidationError("target out of range");
        target_[t] = true;
    }

    kind_ = OwnershipKind::OMVPP;
    bool single = std::all_of(owners_.begin(), owners_.end(), [](const auto& o) { return o.size() == 1; });
    if (single) {
        bool bijection = pawn_count_ == n &&
                         std::all_of(owned_.begin(), owned_.end(), [](const auto& vs) { return vs.size() == 1; });
        kind_ = bijection ? OwnershipKind::OVPP : OwnershipKind::MVPP;
    }
}

std::optional<VertexId> PawnGame::find_vertex(std::string_view name) const
{
    for (std::size_t v = 0; v < names_.size(); ++v) {
        if (names_[v] == name) return static_cast<VertexId>(v);
    }
    return std::nullopt;
}

std::vector<VertexId> PawnGame::targets() const
{
    std::vector<VertexId> out;
    for (std::size_t v = 0; v < target_.size(); ++v) {
        if (target_[v]) out.push_back(static_cast<VertexId>(v));
    }
    return out;
}

std::size_t PawnGame::edge_count() const
{
    std::size_t m = 0;
    for (const auto& s : succ_) m += s.size();
    return m;
}

GameParts PawnGame::parts() const
{
    GameParts p;
    p.name = name_;
    p.vertex_names = names_;
    p.pawn_count = pawn_count_;
    p.owners = owners_;
    for (std::size_t v = 0; v < succ_.size(); ++v) {
        for (VertexId w : succ_[v]) p.edges.emplace_back(static_cast<VertexId>(v), w);
    }
    p.targets = targets();
    p.mechanism = mechanism_;
    return p;
}

PawnGame PawnGame::with_mechanism(Mechanism m) const
{
    auto p = parts();
    p.mechanism = m;
    return PawnGame(std::move(p));
}

bool operator==(const PawnGame& a, const PawnGame& b)
{
    if (a.name_ != b.name_ || a.pawn_count_ != b.pawn_count_ || !(a.mechanism_ == b.mechanism_) ||
        a.names_.size() != b.names_.size())
        return false;
    std::map<std::string, VertexId> bid;
    for (std::size_t v = 0; v < b.names_.size(); ++v) bid[b.names_[v]] = static_cast<VertexId>(v);
    for (std::size_t v = 0; v < a.names_.size(); ++v) {
        auto it = bid.find(a.names_[v]);
        if (it == bid.end()) return false;
        VertexId w = it->second;
        if (a.owners_[v] != b.owners_[w] || a.target_[v] != b.target_[w]) return false;
        std::set<std::string> sa, sb;
        for (VertexId x : a.succ_[v]) sa.insert(a.names_[x]);
        for (VertexId x : b.succ_[w]) sb.insert(b.names_[x]);
        if (sa != sb) return false;
    }
    return true;
}

OwnershipKind classify(const PawnGame& g) { return g.ownership_kind(); }

void validate_configuration(const PawnGame& g, const Configuration& c)
{
    if (c.vertex >= g.vertex_count()) throw ValidationError("initial vertex out of range");
    if (c.p1.universe() != g.pawn_count()) throw ValidationError("pawn set universe does not match pawn count");
    if (g.mechanism().is_k_grabbing()) {
        if (!c.grabs_left) throw ValidationError("k-grabbing configuration lacks grabs-left");
        if (*c.grabs_left > g.mechanism().k) throw ValidationError("grabs-left exceeds k (r > k)");
    } else if (c.grabs_left) {
        throw ValidationError("grabs-left given for a mechanism other than k-grabbing");
    }
}

Player mover(const PawnGame& g, const Configuration& c)
{
    return g.owner_set(c.vertex).intersects(c.p1) ? Player::One : Player::Two;
}

Configuration make_configuration(const PawnGame& g, VertexId v, const PawnSet& p1)
{
    Configuration c{v, p1, std::nullopt};
    if (g.mechanism().is_k_grabbing()) c.grabs_left = g.mechanism().k;
    return c;
}

} // namespace pawn
