#pragma once

// Middle-cone resolving sets. W is the union of a left and a right half, each
// with n3 landmarks, laid out as the columns of two 3 x n3 matrices. Column c
// of either half has third coordinate c, so every pink hyperedge is a stick
// joining the two halves.

#include "mdim/landmark_graph.hpp"

#include <array>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace mdim {

/// Block lengths of the first (blue) matrix row: n3 = q * n1 + r, with the
/// r long blocks (q + 1) alternating with short ones (q) as much as possible.
struct Multiplicities {
    int q = 0;
    int r = 0;
    std::vector<int> schedule;

    bool operator==(const Multiplicities&) const = default;
};

inline Multiplicities compute_multiplicities(int n1, int n3)
{
    if (n1 < 3 || n3 < n1)
        throw ParamError("multiplicities need n1 >= 3 and n3 >= n1");
    Multiplicities m{n3 / n1, n3 % n1, {}};
    const int pairs = m.r <= n1 - m.r ? m.r : n1 - m.r;
    const int tail = m.r <= n1 - m.r ? m.q : m.q + 1;
    for (int i = 0; i < pairs; ++i) {
        m.schedule.push_back(m.q + 1);
        m.schedule.push_back(m.q);
    }
    while (static_cast<int>(m.schedule.size()) < n1)
        m.schedule.push_back(tail);
    return m;
}

/// A pair of neutrals: row 2 of the left matrix gains n2 at column `left`,
/// row 2 of the right matrix at column `right` (1-based).
struct NeutralInsert {
    int left = 0;
    int right = 0;

    bool operator==(const NeutralInsert&) const = default;
};

struct Replacement {
    Vertex from;
    Vertex to;

    bool operator==(const Replacement&) const = default;
};

/// Everything needed to replay a build step by step.
struct ConstructionTrace {
    Params params;
    bool even = true;
    int f = 0;
    Multiplicities multiplicities;
    std::vector<int> block_starts;
    int k = 0;
    std::vector<NeutralInsert> inserts;
    std::optional<Replacement> replacement;
};

struct Construction {
    LandmarkSet landmarks;
    ConstructionTrace trace;
};

/// Rows of the 3 x |side| matrix whose columns are the given landmarks.
inline std::array<std::vector<int>, 3> matrix_rows(std::span<const Vertex> side)
{
    std::array<std::vector<int>, 3> rows;
    for (const auto& v : side) {
        rows[0].push_back(v.x1);
        rows[1].push_back(v.x2);
        rows[2].push_back(v.x3);
    }
    return rows;
}

namespace detail {

struct Halves {
    std::vector<Vertex> left;
    std::vector<Vertex> right;
};

/// The even recipe for (n1, m2, n3) with m2 even. The cone inequalities are
/// not required here; the odd build starts from m2 = n2 - 1 regardless.
inline Halves even_halves(int n1, int m2, int n3, const Multiplicities& mult)
{
    const int half = m2 / 2;
    Halves h;
    h.left.reserve(static_cast<std::size_t>(n3));
    h.right.reserve(static_cast<std::size_t>(n3));
    int column = 1;
    for (int block = 1; block <= n1; ++block) {
        for (int j = 0; j < mult.schedule[static_cast<std::size_t>(block - 1)]; ++j, ++column) {
            const int green = (column - 1) % half + 1;
            h.left.push_back(Vertex{block, green, column});
            h.right.push_back(Vertex{block % n1 + 1, green + half, column});
        }
    }
    return h;
}

/// Shift row 2 right from `column` (1-based), dropping the last entry, and
/// write `value` at `column`.
inline void insert_green(std::vector<Vertex>& side, int column, int value)
{
    for (auto c = side.size() - 1; c >= static_cast<std::size_t>(column); --c)
        side[c].x2 = side[c - 1].x2;
    side[static_cast<std::size_t>(column - 1)].x2 = value;
}

inline std::vector<int> block_starts(const Multiplicities& m)
{
    std::vector<int> starts;
    int s = 1;
    for (int len : m.schedule) {
        starts.push_back(s);
        s += len;
    }
    return starts;
}

inline LandmarkSet assemble(const Params& p, const Halves& h)
{
    std::vector<Vertex> all = h.left;
    all.insert(all.end(), h.right.begin(), h.right.end());
    std::vector<Side> sides(h.left.size(), Side::Left);
    sides.resize(all.size(), Side::Right);
    try {
        return LandmarkSet(p, std::move(all), std::move(sides));
    } catch (const InputError& e) {
        throw InternalError(std::string("construction produced an invalid landmark set: ") + e.what());
    }
}

inline void require_middle(const Params& p)
{
    const ConeClass c = classify_cone(p);
    if (c != ConeClass::Middle)
        throw InputError("K" + p.to_string() + " is in the " +
                         std::string(c == ConeClass::Lower ? "lower" : "upper") +
                         " cone; the construction needs the middle cone");
}

} // namespace detail

inline Construction construct_even(const Params& p)
{
    detail::require_middle(p);
    if (p.n2() % 2 != 0)
        throw InputError("even construction needs even n2, got K" + p.to_string());
    ConstructionTrace t{p, true, p.n2() / 2, compute_multiplicities(p.n1(), p.n3()), {}, 0, {}, std::nullopt};
    t.block_starts = detail::block_starts(t.multiplicities);
    for (int len : t.multiplicities.schedule)
        t.k += len > t.f ? 1 : 0;
    const auto halves = detail::even_halves(p.n1(), p.n2(), p.n3(), t.multiplicities);
    return {detail::assemble(p, halves), std::move(t)};
}

inline Construction construct_odd(const Params& p)
{
    detail::require_middle(p);
    if (p.n2() % 2 == 0)
        throw InputError("odd construction needs odd n2, got K" + p.to_string());
    const int n1 = p.n1();
    const int n2 = p.n2();
    ConstructionTrace t{p, false, n2 / 2, compute_multiplicities(n1, p.n3()), {}, 0, {}, std::nullopt};
    t.block_starts = detail::block_starts(t.multiplicities);
    const auto& sched = t.multiplicities.schedule;
    for (int len : sched)
        t.k += len > t.f ? 1 : 0;

    auto halves = detail::even_halves(n1, n2 - 1, p.n3(), t.multiplicities);
    if (t.k >= 2) {
        for (std::size_t i = 0; i < sched.size(); ++i)
            if (sched[i] > t.f)
                t.inserts.push_back(NeutralInsert{t.block_starts[i], t.block_starts[i] + 1});
    } else {
        t.inserts.push_back(NeutralInsert{1, 2});
    }
    for (const auto& ins : t.inserts) {
        detail::insert_green(halves.left, ins.left, n2);
        detail::insert_green(halves.right, ins.right, n2);
    }
    if (t.k <= 1) {
        std::optional<std::size_t> pick;
        for (std::size_t c = 0; c < halves.left.size(); ++c) {
            const Vertex& v = halves.left[c];
            if (v.x2 != 1 || v.x1 == 1 || v.x1 == 2 || v.x1 == n1)
                continue;
            if (!pick || std::pair{v.x1, v.x3} < std::pair{halves.left[*pick].x1, halves.left[*pick].x3})
                pick = c;
        }
        if (!pick)
            throw InternalError("no landmark (x,1,z) with x outside {1,2,n1} to replace in K" + p.to_string());
        Vertex& v = halves.left[*pick];
        t.replacement = Replacement{v, Vertex{v.x1, n2, v.x3}};
        v.x2 = n2;
    }

    auto w = detail::assemble(p, halves);
    std::size_t neutrals = 0;
    for (const auto& v : w.landmarks())
        neutrals += v.x2 == n2 ? 1U : 0U;
    const std::size_t expected = t.k >= 2 ? 2 * static_cast<std::size_t>(t.k) : 3;
    if (neutrals != expected)
        throw InternalError("odd construction placed " + std::to_string(neutrals) + " neutrals, expected " +
                            std::to_string(expected));
    return {std::move(w), std::move(t)};
}

inline Construction construct_middle(const Params& p)
{
    detail::require_middle(p);
    return p.n2() % 2 == 0 ? construct_even(p) : construct_odd(p);
}

/// The construction plus the triple-loop vertex: 2 n3 + 1 landmarks resolving K(n + 1).
inline LandmarkSet construct_plus_one(const Params& p)
{
    return extend_triple_loop(construct_middle(p).landmarks);
}

/// Every middle-cone parameter triple with n3 <= max_n3.
inline std::vector<Params> middle_cone(int max_n3)
{
    std::vector<Params> out;
    for (const auto& p : parameter_space(max_n3))
        if (classify_cone(p) == ConeClass::Middle)
            out.push_back(p);
    return out;
}

} // namespace mdim
