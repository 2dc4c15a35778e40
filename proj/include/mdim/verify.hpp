#pragma once

// Two independent resolving-set verifiers. The footprint verifier compares
// covered-landmark signatures; the distance verifier compares raw distance
// vectors computed from the closed-form metric. Both report the
// lexicographically least unresolved pair of non-landmark vertices.

#include "mdim/landmark_graph.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

namespace mdim {

enum class VerifyMethod { Footprint, Distance };

constexpr std::string_view method_name(VerifyMethod m)
{
    return m == VerifyMethod::Footprint ? "footprint" : "distance";
}

struct VerifyResult {
    bool resolving = true;
    VerifyMethod method = VerifyMethod::Distance;
    std::optional<std::pair<Vertex, Vertex>> witness;
};

namespace detail {

/// Given one key per vertex (nullopt for landmarks), in lexicographic vertex
/// order, return the least pair (i, j), i < j, with equal keys.
template <typename Key>
std::optional<std::pair<std::size_t, std::size_t>> least_collision(const std::vector<std::optional<Key>>& keys)
{
    struct Firsts {
        std::size_t first;
        std::optional<std::size_t> second;
    };
    std::map<Key, Firsts> groups;
    for (std::size_t i = 0; i < keys.size(); ++i) {
        if (!keys[i])
            continue;
        auto [it, inserted] = groups.try_emplace(*keys[i], Firsts{i, std::nullopt});
        if (!inserted && !it->second.second)
            it->second.second = i;
    }
    std::optional<std::pair<std::size_t, std::size_t>> best;
    for (const auto& [key, g] : groups)
        if (g.second && (!best || g.first < best->first))
            best = std::pair{g.first, *g.second};
    return best;
}

inline VerifyResult make_result(const Params& p, VerifyMethod method,
                                const std::optional<std::pair<std::size_t, std::size_t>>& pair)
{
    VerifyResult r;
    r.method = method;
    r.resolving = !pair.has_value();
    if (pair)
        r.witness = std::pair{p.vertex_at(pair->first), p.vertex_at(pair->second)};
    return r;
}

} // namespace detail

/// Fixed-width bit vector over landmark indices.
class LandmarkBits {
public:
    explicit LandmarkBits(std::size_t bits = 0) : words_((bits + 63) / 64, 0) {}

    void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
    bool test(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1U; }

    LandmarkBits& operator|=(const LandmarkBits& o)
    {
        for (std::size_t k = 0; k < words_.size(); ++k)
            words_[k] |= o.words_[k];
        return *this;
    }

    auto operator<=>(const LandmarkBits&) const = default;

private:
    std::vector<std::uint64_t> words_;
};

/// Covered-set signature of every vertex of K(n), in lexicographic order.
inline std::vector<LandmarkBits> footprint_signatures(const LandmarkGraph& g)
{
    const Params& p = g.params();
    std::array<std::vector<LandmarkBits>, 3> edge_bits;
    for (Color c : all_colors) {
        auto& bits = edge_bits[index(c)];
        bits.assign(static_cast<std::size_t>(p.order(index(c))), LandmarkBits(g.landmark_count()));
        for (int a = 1; a <= p.order(index(c)); ++a)
            for (auto i : g.members(c, a))
                bits[static_cast<std::size_t>(a - 1)].set(i);
    }
    std::vector<LandmarkBits> out;
    out.reserve(p.vertex_count());
    for (const auto& v : enumerate_vertices(p)) {
        LandmarkBits s = edge_bits[0][static_cast<std::size_t>(v.x1 - 1)];
        s |= edge_bits[1][static_cast<std::size_t>(v.x2 - 1)];
        s |= edge_bits[2][static_cast<std::size_t>(v.x3 - 1)];
        out.push_back(std::move(s));
    }
    return out;
}

inline VerifyResult is_resolving_footprints(const LandmarkSet& w)
{
    const Params& p = w.params();
    if (w.empty()) {
        // No landmarks: every footprint is empty.
        std::vector<std::optional<int>> keys(p.vertex_count(), 0);
        return detail::make_result(p, VerifyMethod::Footprint, detail::least_collision(keys));
    }
    const LandmarkGraph g(w);
    auto sigs = footprint_signatures(g);
    const auto in = w.membership();
    std::vector<std::optional<LandmarkBits>> keys(sigs.size());
    for (std::size_t i = 0; i < sigs.size(); ++i)
        if (!in[i])
            keys[i] = std::move(sigs[i]);
    return detail::make_result(p, VerifyMethod::Footprint, detail::least_collision(keys));
}

inline VerifyResult is_resolving_distances(const LandmarkSet& w)
{
    const Params& p = w.params();
    const auto in = w.membership();
    const auto vertices = enumerate_vertices(p);
    std::vector<std::optional<std::vector<std::uint8_t>>> keys(vertices.size());
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        if (in[i])
            continue;
        std::vector<std::uint8_t> d;
        d.reserve(w.size());
        for (const auto& l : w.landmarks())
            d.push_back(static_cast<std::uint8_t>(distance(p, vertices[i], l)));
        keys[i] = std::move(d);
    }
    return detail::make_result(p, VerifyMethod::Distance, detail::least_collision(keys));
}

/// True iff x and y are distinct non-landmarks that no landmark separates.
inline bool is_unresolved_pair(const LandmarkSet& w, const Vertex& x, const Vertex& y)
{
    const Params& p = w.params();
    if (x == y || w.contains(x) || w.contains(y))
        return false;
    for (const auto& l : w.landmarks())
        if (distance(p, x, l) != distance(p, y, l))
            return false;
    return true;
}

/// The pigeonhole bound for basic systems: basic implies |W| <= n1 * n2.
inline bool basic_size_bound(const LandmarkSet& w)
{
    const auto cells = static_cast<std::size_t>(w.params().n1()) * static_cast<std::size_t>(w.params().n2());
    return w.size() <= cells || !is_basic(w);
}

} // namespace mdim
