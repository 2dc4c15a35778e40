#pragma once

// The 3-edge-colored landmark hypergraph G(W): for each color i and value a,
// the hyperedge W_{i,a} holds the landmarks whose i-th coordinate is a.

#include "mdim/landmark_set.hpp"

#include <array>
#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace mdim {

enum class Color { Blue = 0, Green = 1, Pink = 2 };

inline constexpr std::array<Color, 3> all_colors{Color::Blue, Color::Green, Color::Pink};

constexpr int index(Color c) { return static_cast<int>(c); }

constexpr std::string_view color_name(Color c)
{
    switch (c) {
    case Color::Blue: return "blue";
    case Color::Green: return "green";
    case Color::Pink: return "pink";
    }
    return "?";
}

/// Identifies hyperedge W_{color,value}.
struct EdgeId {
    Color color = Color::Blue;
    int value = 1;

    constexpr auto operator<=>(const EdgeId&) const = default;
};

inline std::string to_string(const EdgeId& e)
{
    return std::string(color_name(e.color)) + " " + std::to_string(e.value);
}

enum class EdgeKind { Loop, Stick, Poofy };

constexpr EdgeKind edge_kind(std::size_t size)
{
    if (size <= 1)
        return EdgeKind::Loop;
    return size == 2 ? EdgeKind::Stick : EdgeKind::Poofy;
}

class LandmarkGraph {
public:
    explicit LandmarkGraph(const LandmarkSet& w) : params_(w.params())
    {
        landmarks_.assign(w.landmarks().begin(), w.landmarks().end());
        for (Color c : all_colors)
            fibers_[index(c)].assign(static_cast<std::size_t>(params_.order(index(c))), {});
        for (std::size_t i = 0; i < landmarks_.size(); ++i)
            for (Color c : all_colors)
                fibers_[index(c)][static_cast<std::size_t>(landmarks_[i][index(c)] - 1)].push_back(i);
    }

    const Params& params() const { return params_; }
    std::size_t landmark_count() const { return landmarks_.size(); }
    const Vertex& landmark(std::size_t i) const { return landmarks_[i]; }
    const std::vector<Vertex>& landmarks() const { return landmarks_; }

    /// Members of W_{c,value} in increasing index order; empty if the edge is absent.
    const std::vector<std::size_t>& members(Color c, int value) const
    {
        return fibers_[index(c)][static_cast<std::size_t>(value - 1)];
    }
    const std::vector<std::size_t>& members(const EdgeId& e) const { return members(e.color, e.value); }

    bool has_edge(const EdgeId& e) const { return !members(e).empty(); }

    /// The hyperedge of color c through landmark i.
    EdgeId edge_of(std::size_t i, Color c) const { return EdgeId{c, landmarks_[i][index(c)]}; }

    /// All present hyperedges, ordered by color then value.
    std::vector<EdgeId> edges() const
    {
        std::vector<EdgeId> out;
        for (Color c : all_colors)
            for (int a = 1; a <= params_.order(index(c)); ++a)
                if (!members(c, a).empty())
                    out.push_back(EdgeId{c, a});
        return out;
    }

    std::vector<EdgeId> edges_of_kind(EdgeKind kind) const
    {
        std::vector<EdgeId> out;
        for (const auto& e : edges())
            if (edge_kind(members(e).size()) == kind)
                out.push_back(e);
        return out;
    }

    bool operator==(const LandmarkGraph&) const = default;

private:
    Params params_;
    std::vector<Vertex> landmarks_;
    std::array<std::vector<std::vector<std::size_t>>, 3> fibers_;
};

inline LandmarkGraph build_landmark_graph(const LandmarkSet& w)
{
    if (w.empty())
        throw InputError("landmark graph needs at least one landmark");
    return LandmarkGraph(w);
}

/// Outcome of the basic-landmark-system test. condition is 0 when basic,
/// otherwise the first violated clause: 1 missing hyperedge, 2 hyperedge
/// with fewer than two vertices, 3 two different-color hyperedges sharing
/// at least two vertices.
struct BasicReport {
    bool basic = true;
    int condition = 0;
    std::optional<EdgeId> edge;
    std::optional<EdgeId> other_edge;

    std::string describe() const
    {
        switch (condition) {
        case 0: return "basic";
        case 1: return "missing hyperedge " + to_string(*edge);
        case 2: return "hyperedge " + to_string(*edge) + " has fewer than two vertices";
        case 3: return "hyperedges " + to_string(*edge) + " and " + to_string(*other_edge) + " share two or more vertices";
        }
        return "?";
    }
};

inline BasicReport check_basic(const LandmarkGraph& g)
{
    const Params& p = g.params();
    for (Color c : all_colors)
        for (int a = 1; a <= p.order(index(c)); ++a)
            if (g.members(c, a).empty())
                return BasicReport{false, 1, EdgeId{c, a}, std::nullopt};
    for (Color c : all_colors)
        for (int a = 1; a <= p.order(index(c)); ++a)
            if (g.members(c, a).size() < 2)
                return BasicReport{false, 2, EdgeId{c, a}, std::nullopt};
    // Two edges of colors i < j share >= 2 vertices iff two landmarks agree on
    // both coordinates i and j.
    constexpr std::array<std::pair<Color, Color>, 3> pairs{
        std::pair{Color::Blue, Color::Green}, std::pair{Color::Blue, Color::Pink},
        std::pair{Color::Green, Color::Pink}};
    for (auto [ci, cj] : pairs) {
        std::optional<std::pair<int, int>> least;
        const auto ni = static_cast<std::size_t>(p.order(index(ci)));
        const auto nj = static_cast<std::size_t>(p.order(index(cj)));
        std::vector<int> count(ni * nj, 0);
        for (const auto& v : g.landmarks()) {
            const int a = v[index(ci)];
            const int b = v[index(cj)];
            if (++count[static_cast<std::size_t>(a - 1) * nj + static_cast<std::size_t>(b - 1)] == 2)
                if (!least || std::pair{a, b} < *least)
                    least = std::pair{a, b};
        }
        if (least)
            return BasicReport{false, 3, EdgeId{ci, least->first}, EdgeId{cj, least->second}};
    }
    return BasicReport{};
}

inline BasicReport check_basic(const LandmarkSet& w)
{
    if (w.empty())
        return BasicReport{false, 1, EdgeId{Color::Blue, 1}, std::nullopt};
    return check_basic(LandmarkGraph(w));
}

inline bool is_basic(const LandmarkSet& w) { return check_basic(w).basic; }

/// W plus the triple-loop vertex u = (n1+1, n2+1, n3+1), as a set over K(n+1).
inline LandmarkSet extend_triple_loop(const LandmarkSet& w)
{
    const Params up = w.params().plus_one();
    std::vector<Vertex> landmarks(w.landmarks().begin(), w.landmarks().end());
    landmarks.push_back(Vertex{up.n1(), up.n2(), up.n3()});
    std::optional<std::vector<Side>> sides = w.sides();
    if (sides)
        sides->push_back(Side::Loop);
    return LandmarkSet(up, std::move(landmarks), std::move(sides));
}

/// The hyperedges W_{1,a1}, W_{2,a2}, W_{3,a3} present for a query vertex and
/// the landmarks they cover.
struct Footprint {
    std::vector<EdgeId> edges;
    std::vector<std::size_t> covered;
};

inline Footprint footprint(const LandmarkGraph& g, const Vertex& a)
{
    g.params().require(a);
    Footprint fp;
    std::vector<bool> hit(g.landmark_count(), false);
    for (Color c : all_colors) {
        const auto& m = g.members(c, a[index(c)]);
        if (m.empty())
            continue;
        fp.edges.push_back(EdgeId{c, a[index(c)]});
        for (auto i : m)
            hit[i] = true;
    }
    for (std::size_t i = 0; i < hit.size(); ++i)
        if (hit[i])
            fp.covered.push_back(i);
    return fp;
}

} // namespace mdim
