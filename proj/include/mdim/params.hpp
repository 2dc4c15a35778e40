#pragma once

// Parameter space and closed-form metric of K(n) = K_n1 x K_n2 x K_n3.

#include <algorithm>
#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace mdim {

/// Raised for parameters or coordinates outside the valid domain.
class ParamError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Raised for malformed landmark sets, files, or violated preconditions.
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Raised when an algorithm detects that its own output breaks an invariant.
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// A vertex of K(n). Coordinates are 1-based.
struct Vertex {
    int x1 = 1;
    int x2 = 1;
    int x3 = 1;

    constexpr int operator[](int color) const { return color == 0 ? x1 : (color == 1 ? x2 : x3); }
    constexpr auto operator<=>(const Vertex&) const = default;
};

inline std::string to_string(const Vertex& v)
{
    return "(" + std::to_string(v.x1) + "," + std::to_string(v.x2) + "," + std::to_string(v.x3) + ")";
}

enum class ConeClass { Lower, Middle, Upper };

constexpr std::string_view to_string(ConeClass c)
{
    switch (c) {
    case ConeClass::Lower: return "Lower";
    case ConeClass::Middle: return "Middle";
    case ConeClass::Upper: return "Upper";
    }
    return "?";
}

/// Orders of the three complete factors. Construction through make() validates
/// membership in the parameter space: 3 <= n1, n2 <= n3.
class Params {
public:
    static Params make(int n1, int n2, int n3)
    {
        if (n1 < 3 || n2 < 3)
            throw ParamError("every factor order must be at least 3, got " + describe(n1, n2, n3));
        if (n3 < std::max(n1, n2))
            throw ParamError("n3 must be at least max(n1, n2), got " + describe(n1, n2, n3));
        return Params(n1, n2, n3);
    }

    constexpr int n1() const { return n_[0]; }
    constexpr int n2() const { return n_[1]; }
    constexpr int n3() const { return n_[2]; }
    constexpr int order(int color) const { return n_[static_cast<std::size_t>(color)]; }

    constexpr std::size_t vertex_count() const
    {
        return static_cast<std::size_t>(n_[0]) * static_cast<std::size_t>(n_[1]) *
               static_cast<std::size_t>(n_[2]);
    }

    /// The componentwise increment n + 1.
    Params plus_one() const { return Params(n_[0] + 1, n_[1] + 1, n_[2] + 1); }

    bool contains(const Vertex& v) const
    {
        return v.x1 >= 1 && v.x1 <= n_[0] && v.x2 >= 1 && v.x2 <= n_[1] && v.x3 >= 1 && v.x3 <= n_[2];
    }

    void require(const Vertex& v) const
    {
        if (!contains(v))
            throw ParamError("vertex " + mdim::to_string(v) + " is not a vertex of K" + to_string());
    }

    /// Position of v in lexicographic vertex order, 0-based.
    std::size_t index_of(const Vertex& v) const
    {
        return (static_cast<std::size_t>(v.x1 - 1) * static_cast<std::size_t>(n_[1]) +
                static_cast<std::size_t>(v.x2 - 1)) *
                   static_cast<std::size_t>(n_[2]) +
               static_cast<std::size_t>(v.x3 - 1);
    }

    Vertex vertex_at(std::size_t index) const
    {
        const auto n2 = static_cast<std::size_t>(n_[1]);
        const auto n3 = static_cast<std::size_t>(n_[2]);
        return Vertex{static_cast<int>(index / (n2 * n3)) + 1, static_cast<int>((index / n3) % n2) + 1,
                      static_cast<int>(index % n3) + 1};
    }

    std::string to_string() const { return describe(n_[0], n_[1], n_[2]); }

    constexpr auto operator<=>(const Params&) const = default;

private:
    constexpr Params(int n1, int n2, int n3) : n_{n1, n2, n3} {}

    static std::string describe(int n1, int n2, int n3)
    {
        return "(" + std::to_string(n1) + "," + std::to_string(n2) + "," + std::to_string(n3) + ")";
    }

    std::array<int, 3> n_;
};

inline ConeClass classify_cone(const Params& p)
{
    const long long m = std::max(p.n1(), p.n2());
    const long long twice = 2LL * p.n3();
    if (twice < 3 * m)
        return ConeClass::Lower;
    if (twice > static_cast<long long>(p.n1()) * p.n2())
        return ConeClass::Upper;
    return ConeClass::Middle;
}

/// Number of coordinates on which a and b agree.
constexpr int shared_coordinates(const Vertex& a, const Vertex& b)
{
    return (a.x1 == b.x1) + (a.x2 == b.x2) + (a.x3 == b.x3);
}

/// Graph distance in K(p): 0 if equal, 1 if every coordinate differs, 2 otherwise.
inline int distance(const Params& p, const Vertex& a, const Vertex& b)
{
    p.require(a);
    p.require(b);
    const int shared = shared_coordinates(a, b);
    if (shared == 3)
        return 0;
    return shared == 0 ? 1 : 2;
}

inline bool are_adjacent(const Params& p, const Vertex& a, const Vertex& b)
{
    return distance(p, a, b) == 1;
}

/// All vertices of K(p) in lexicographic order.
inline std::vector<Vertex> enumerate_vertices(const Params& p)
{
    std::vector<Vertex> out;
    out.reserve(p.vertex_count());
    for (int a = 1; a <= p.n1(); ++a)
        for (int b = 1; b <= p.n2(); ++b)
            for (int c = 1; c <= p.n3(); ++c)
                out.push_back(Vertex{a, b, c});
    return out;
}

/// Every member of the parameter space with n3 <= max_n3, in lexicographic order.
inline std::vector<Params> parameter_space(int max_n3)
{
    std::vector<Params> out;
    for (int n3 = 3; n3 <= max_n3; ++n3)
        for (int n1 = 3; n1 <= n3; ++n1)
            for (int n2 = 3; n2 <= n3; ++n2)
                out.push_back(Params::make(n1, n2, n3));
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace mdim
