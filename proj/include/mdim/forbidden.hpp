#pragma once

// Detectors for the forbidden configurations of a landmark graph and the
// combinatorial resolvability predicates built on them.
//
// Every witness is canonical: cycles start at their least landmark index and
// proceed toward the smaller neighbor, triangles list the smaller terminus
// first, and shark-teeth list the smaller triangle first. Lists are sorted
// and duplicate-free.

#include "mdim/landmark_graph.hpp"

#include <algorithm>
#include <array>
#include <cstddef>
#include <set>
#include <string_view>
#include <vector>

namespace mdim {

enum class ForbiddenKind { Bad4Cycle, PlainHex, Rainbow22Triangle, SharkTeeth, TripleLoop };

inline constexpr std::array<ForbiddenKind, 5> all_forbidden_kinds{
    ForbiddenKind::Bad4Cycle, ForbiddenKind::PlainHex, ForbiddenKind::Rainbow22Triangle,
    ForbiddenKind::SharkTeeth, ForbiddenKind::TripleLoop};

constexpr std::string_view kind_name(ForbiddenKind k)
{
    switch (k) {
    case ForbiddenKind::Bad4Cycle: return "bad_4_cycle";
    case ForbiddenKind::PlainHex: return "plain_hex";
    case ForbiddenKind::Rainbow22Triangle: return "rainbow_2_2_triangle";
    case ForbiddenKind::SharkTeeth: return "shark_teeth";
    case ForbiddenKind::TripleLoop: return "triple_loop";
    }
    return "?";
}

/// Layout by kind:
///   Bad4Cycle, PlainHex: landmarks v0..v(k-1) in cycle order, edges[i] joins
///     v(i) and v(i+1 mod k). A bad 4-cycle edge contains no other cycle
///     vertex; otherwise a footprint of the shape could be a landmark itself.
///   Rainbow22Triangle: landmarks (u, m, v); edges (stick um, stick mv, termini edge).
///   SharkTeeth: landmarks (u1, m1, v1, u2, m2, v2); edges (u1m1, m1v1, u2m2, m2v2, common edge).
///   TripleLoop: one landmark; its three loops.
struct ForbiddenWitness {
    ForbiddenKind kind = ForbiddenKind::Bad4Cycle;
    std::vector<std::size_t> landmarks;
    std::vector<EdgeId> edges;

    auto operator<=>(const ForbiddenWitness&) const = default;
};

namespace detail {

inline bool is_stick(const LandmarkGraph& g, const EdgeId& e) { return g.members(e).size() == 2; }

inline bool edge_contains(const LandmarkGraph& g, const EdgeId& e, std::size_t i)
{
    return g.landmark(i)[index(e.color)] == e.value;
}

/// Rotate/reflect a cycle so it starts at its least vertex and heads toward
/// the smaller of that vertex's two neighbors.
inline void canonicalize_cycle(std::vector<std::size_t>& vs, std::vector<EdgeId>& es)
{
    const std::size_t n = vs.size();
    const std::size_t k = static_cast<std::size_t>(std::min_element(vs.begin(), vs.end()) - vs.begin());
    std::vector<std::size_t> v2(n);
    std::vector<EdgeId> e2(n);
    if (vs[(k + 1) % n] < vs[(k + n - 1) % n]) {
        for (std::size_t i = 0; i < n; ++i) {
            v2[i] = vs[(k + i) % n];
            e2[i] = es[(k + i) % n];
        }
    } else {
        for (std::size_t i = 0; i < n; ++i) {
            v2[i] = vs[(k + n - i) % n];
            e2[i] = es[(k + 2 * n - i - 1) % n];
        }
    }
    vs = std::move(v2);
    es = std::move(e2);
}

inline Color third_color(Color a, Color b) { return static_cast<Color>(3 - index(a) - index(b)); }

/// Sticks through each landmark as (neighbor, edge), ordered by color.
inline std::vector<std::vector<std::pair<std::size_t, EdgeId>>> stick_adjacency(const LandmarkGraph& g)
{
    std::vector<std::vector<std::pair<std::size_t, EdgeId>>> adj(g.landmark_count());
    for (const auto& e : g.edges_of_kind(EdgeKind::Stick)) {
        const auto& m = g.members(e);
        adj[m[0]].emplace_back(m[1], e);
        adj[m[1]].emplace_back(m[0], e);
    }
    for (auto& a : adj)
        std::sort(a.begin(), a.end(), [](const auto& x, const auto& y) {
            return std::pair{x.second, x.first} < std::pair{y.second, y.first};
        });
    return adj;
}

} // namespace detail

inline std::vector<ForbiddenWitness> find_bad_4_cycles(const LandmarkGraph& g)
{
    std::set<ForbiddenWitness> found;
    for (Color s : all_colors) {
        std::vector<EdgeId> sticks;
        for (int a = 1; a <= g.params().order(index(s)); ++a)
            if (g.members(s, a).size() == 2)
                sticks.push_back(EdgeId{s, a});
        std::array<Color, 2> others{};
        std::size_t n_others = 0;
        for (Color c : all_colors)
            if (c != s)
                others[n_others++] = c;
        for (std::size_t x = 0; x < sticks.size(); ++x) {
            for (std::size_t y = x + 1; y < sticks.size(); ++y) {
                const auto& A = g.members(sticks[x]);
                const auto& B = g.members(sticks[y]);
                for (int ai = 0; ai < 2; ++ai) {
                    for (int bi = 0; bi < 2; ++bi) {
                        const std::size_t a = A[static_cast<std::size_t>(ai)];
                        const std::size_t a_far = A[static_cast<std::size_t>(1 - ai)];
                        const std::size_t b = B[static_cast<std::size_t>(bi)];
                        const std::size_t b_far = B[static_cast<std::size_t>(1 - bi)];
                        for (int swap = 0; swap < 2; ++swap) {
                            const Color c_near = others[static_cast<std::size_t>(swap)];
                            const Color c_far = others[static_cast<std::size_t>(1 - swap)];
                            if (g.landmark(a)[index(c_near)] != g.landmark(b)[index(c_near)])
                                continue;
                            if (g.landmark(b_far)[index(c_far)] != g.landmark(a_far)[index(c_far)])
                                continue;
                            // Each cycle edge holds exactly its two cycle vertices.
                            if (g.landmark(a_far)[index(c_near)] == g.landmark(a)[index(c_near)] ||
                                g.landmark(b_far)[index(c_near)] == g.landmark(a)[index(c_near)] ||
                                g.landmark(a)[index(c_far)] == g.landmark(a_far)[index(c_far)] ||
                                g.landmark(b)[index(c_far)] == g.landmark(a_far)[index(c_far)])
                                continue;
                            ForbiddenWitness w{ForbiddenKind::Bad4Cycle,
                                               {a_far, a, b, b_far},
                                               {sticks[x], g.edge_of(a, c_near), sticks[y], g.edge_of(b_far, c_far)}};
                            detail::canonicalize_cycle(w.landmarks, w.edges);
                            found.insert(std::move(w));
                        }
                    }
                }
            }
        }
    }
    return {found.begin(), found.end()};
}

inline std::vector<ForbiddenWitness> find_plain_hexes(const LandmarkGraph& g)
{
    std::set<ForbiddenWitness> found;
    if (g.landmark_count() < 6)
        return {};
    const auto adj = detail::stick_adjacency(g);
    std::vector<std::size_t> path;
    std::vector<EdgeId> edges;
    std::vector<bool> on_path(g.landmark_count(), false);

    // Extend a path from its least vertex path[0]; step i uses a stick whose
    // color is fixed by the pattern once the first three colors are chosen.
    auto extend = [&](auto&& self) -> void {
        const std::size_t depth = edges.size();
        const std::size_t tail = path.back();
        for (const auto& [next, e] : adj[tail]) {
            if (depth >= 3 && e.color != edges[depth - 3].color)
                continue;
            if (depth == 1 && e.color == edges[0].color)
                continue;
            if (depth == 2 && (e.color == edges[0].color || e.color == edges[1].color))
                continue;
            if (depth == 5) {
                if (next != path[0])
                    continue;
                ForbiddenWitness w{ForbiddenKind::PlainHex, path, edges};
                w.edges.push_back(e);
                detail::canonicalize_cycle(w.landmarks, w.edges);
                found.insert(std::move(w));
                continue;
            }
            if (next <= path[0] || on_path[next])
                continue;
            on_path[next] = true;
            path.push_back(next);
            edges.push_back(e);
            self(self);
            edges.pop_back();
            path.pop_back();
            on_path[next] = false;
        }
    };
    for (std::size_t start = 0; start < g.landmark_count(); ++start) {
        path.assign(1, start);
        edges.clear();
        on_path[start] = true;
        extend(extend);
        on_path[start] = false;
    }
    return {found.begin(), found.end()};
}

inline std::vector<ForbiddenWitness> find_rainbow_triangles(const LandmarkGraph& g)
{
    std::set<ForbiddenWitness> found;
    const auto adj = detail::stick_adjacency(g);
    for (std::size_t m = 0; m < g.landmark_count(); ++m) {
        const auto& inc = adj[m];
        for (std::size_t x = 0; x < inc.size(); ++x) {
            for (std::size_t y = x + 1; y < inc.size(); ++y) {
                auto [u, su] = inc[x];
                auto [v, sv] = inc[y];
                if (su.color == sv.color || u == v)
                    continue;
                const Color c3 = detail::third_color(su.color, sv.color);
                if (g.landmark(u)[index(c3)] != g.landmark(v)[index(c3)])
                    continue;
                if (v < u) {
                    std::swap(u, v);
                    std::swap(su, sv);
                }
                found.insert(ForbiddenWitness{ForbiddenKind::Rainbow22Triangle, {u, m, v}, {su, sv, g.edge_of(u, c3)}});
            }
        }
    }
    return {found.begin(), found.end()};
}

inline std::vector<ForbiddenWitness> find_shark_teeth(const LandmarkGraph& g)
{
    const auto triangles = find_rainbow_triangles(g);
    std::vector<ForbiddenWitness> out;
    for (std::size_t x = 0; x < triangles.size(); ++x) {
        const auto& t1 = triangles[x];
        if (g.members(t1.edges[2]).size() < 3)
            continue;
        for (std::size_t y = x + 1; y < triangles.size(); ++y) {
            const auto& t2 = triangles[y];
            if (t2.edges[2] != t1.edges[2])
                continue;
            const bool disjoint = std::none_of(t1.landmarks.begin(), t1.landmarks.end(), [&](std::size_t i) {
                return std::find(t2.landmarks.begin(), t2.landmarks.end(), i) != t2.landmarks.end();
            });
            if (!disjoint)
                continue;
            ForbiddenWitness w{ForbiddenKind::SharkTeeth, t1.landmarks, {t1.edges[0], t1.edges[1]}};
            w.landmarks.insert(w.landmarks.end(), t2.landmarks.begin(), t2.landmarks.end());
            w.edges.push_back(t2.edges[0]);
            w.edges.push_back(t2.edges[1]);
            w.edges.push_back(t1.edges[2]);
            out.push_back(std::move(w));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline std::vector<ForbiddenWitness> find_triple_loops(const LandmarkGraph& g)
{
    std::vector<ForbiddenWitness> out;
    for (std::size_t i = 0; i < g.landmark_count(); ++i) {
        ForbiddenWitness w{ForbiddenKind::TripleLoop, {i}, {}};
        for (Color c : all_colors) {
            const EdgeId e = g.edge_of(i, c);
            if (g.members(e).size() == 1)
                w.edges.push_back(e);
        }
        if (w.edges.size() == 3)
            out.push_back(std::move(w));
    }
    return out;
}

inline std::vector<ForbiddenWitness> find_forbidden(const LandmarkGraph& g, ForbiddenKind kind)
{
    switch (kind) {
    case ForbiddenKind::Bad4Cycle: return find_bad_4_cycles(g);
    case ForbiddenKind::PlainHex: return find_plain_hexes(g);
    case ForbiddenKind::Rainbow22Triangle: return find_rainbow_triangles(g);
    case ForbiddenKind::SharkTeeth: return find_shark_teeth(g);
    case ForbiddenKind::TripleLoop: return find_triple_loops(g);
    }
    return {};
}

/// Re-check a witness against the structural definition of its kind.
inline bool validate_witness(const LandmarkGraph& g, const ForbiddenWitness& w)
{
    const auto& vs = w.landmarks;
    const auto& es = w.edges;
    for (auto i : vs)
        if (i >= g.landmark_count())
            return false;
    for (const auto& e : es)
        if (e.value < 1 || e.value > g.params().order(index(e.color)) || !g.has_edge(e))
            return false;
    auto distinct = [](auto v) {
        std::sort(v.begin(), v.end());
        return std::adjacent_find(v.begin(), v.end()) == v.end();
    };
    auto stick_on = [&](const EdgeId& e, std::size_t a, std::size_t b) {
        return detail::is_stick(g, e) && detail::edge_contains(g, e, a) && detail::edge_contains(g, e, b);
    };
    auto rainbow_ok = [&](std::size_t u, std::size_t m, std::size_t v, const EdgeId& s1, const EdgeId& s2,
                          const EdgeId& t) {
        return u != m && m != v && u != v && s1.color != s2.color &&
               t.color == detail::third_color(s1.color, s2.color) && stick_on(s1, u, m) && stick_on(s2, m, v) &&
               detail::edge_contains(g, t, u) && detail::edge_contains(g, t, v);
    };
    switch (w.kind) {
    case ForbiddenKind::Bad4Cycle: {
        if (vs.size() != 4 || es.size() != 4 || !distinct(vs) || !distinct(es))
            return false;
        for (std::size_t i = 0; i < 4; ++i) {
            const std::size_t held = static_cast<std::size_t>(std::count_if(
                vs.begin(), vs.end(), [&](std::size_t v) { return detail::edge_contains(g, es[i], v); }));
            if (held != 2 || !detail::edge_contains(g, es[i], vs[i]) ||
                !detail::edge_contains(g, es[i], vs[(i + 1) % 4]))
                return false;
        }
        // Some pair of opposite edges shares a color and both are sticks; the
        // other two edges carry the two remaining colors.
        for (std::size_t off = 0; off < 2; ++off) {
            const EdgeId& a = es[off];
            const EdgeId& b = es[off + 2];
            const EdgeId& c = es[off + 1];
            const EdgeId& d = es[(off + 3) % 4];
            if (a.color == b.color && detail::is_stick(g, a) && detail::is_stick(g, b) && c.color != a.color &&
                d.color != a.color && c.color != d.color)
                return true;
        }
        return false;
    }
    case ForbiddenKind::PlainHex: {
        if (vs.size() != 6 || es.size() != 6 || !distinct(vs))
            return false;
        for (std::size_t i = 0; i < 6; ++i)
            if (!stick_on(es[i], vs[i], vs[(i + 1) % 6]) || es[i].color != es[(i + 3) % 6].color)
                return false;
        return es[0].color != es[1].color && es[1].color != es[2].color && es[0].color != es[2].color;
    }
    case ForbiddenKind::Rainbow22Triangle:
        return vs.size() == 3 && es.size() == 3 && rainbow_ok(vs[0], vs[1], vs[2], es[0], es[1], es[2]);
    case ForbiddenKind::SharkTeeth:
        return vs.size() == 6 && es.size() == 5 && distinct(vs) && g.members(es[4]).size() >= 3 &&
               rainbow_ok(vs[0], vs[1], vs[2], es[0], es[1], es[4]) &&
               rainbow_ok(vs[3], vs[4], vs[5], es[2], es[3], es[4]);
    case ForbiddenKind::TripleLoop: {
        if (vs.size() != 1 || es.size() != 3)
            return false;
        for (Color c : all_colors)
            if (g.members(g.edge_of(vs[0], c)).size() != 1)
                return false;
        return true;
    }
    }
    return false;
}

/// Combinatorial resolvability of a basic system: no bad 4-cycle, plain hex
/// or shark teeth.
inline bool predict_resolving_basic(const LandmarkSet& w)
{
    const auto report = check_basic(w);
    if (!report.basic)
        throw InputError("prediction requires a basic landmark system: " + report.describe());
    const LandmarkGraph g(w);
    return find_bad_4_cycles(g).empty() && find_plain_hexes(g).empty() && find_shark_teeth(g).empty();
}

/// Whether W plus the triple-loop vertex resolves K(n+1): no bad 4-cycle,
/// plain hex or rainbow 2-2-triangle in G(W).
inline bool predict_resolving_triple_looped(const LandmarkSet& w)
{
    const auto report = check_basic(w);
    if (!report.basic)
        throw InputError("prediction requires a basic landmark system: " + report.describe());
    const LandmarkGraph g(w);
    return find_bad_4_cycles(g).empty() && find_plain_hexes(g).empty() && find_rainbow_triangles(g).empty();
}

} // namespace mdim
