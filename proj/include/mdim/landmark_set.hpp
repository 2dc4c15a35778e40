#pragma once

#include "mdim/params.hpp"

#include <algorithm>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace mdim {

/// Which half of a constructed set a landmark came from. Loop marks the
/// triple-loop vertex added by extend_triple_loop.
enum class Side { Left, Right, Loop };

constexpr std::string_view side_tag(Side s)
{
    switch (s) {
    case Side::Left: return "L";
    case Side::Right: return "R";
    case Side::Loop: return "U";
    }
    return "?";
}

inline Side parse_side(std::string_view tag)
{
    if (tag == "L")
        return Side::Left;
    if (tag == "R")
        return Side::Right;
    if (tag == "U")
        return Side::Loop;
    throw InputError("unknown side tag '" + std::string(tag) + "' (expected L, R or U)");
}

/// An ordered, duplicate-free list of landmarks of K(params).
class LandmarkSet {
public:
    LandmarkSet(Params params, std::vector<Vertex> landmarks, std::optional<std::vector<Side>> sides = std::nullopt)
        : params_(params), landmarks_(std::move(landmarks)), sides_(std::move(sides))
    {
        for (const auto& v : landmarks_)
            if (!params_.contains(v))
                throw InputError("landmark " + to_string(v) + " is not a vertex of K" + params_.to_string());
        std::vector<Vertex> sorted = landmarks_;
        std::sort(sorted.begin(), sorted.end());
        if (auto dup = std::adjacent_find(sorted.begin(), sorted.end()); dup != sorted.end())
            throw InputError("duplicate landmark " + to_string(*dup));
        if (sides_ && sides_->size() != landmarks_.size())
            throw InputError("sides has " + std::to_string(sides_->size()) + " entries for " +
                             std::to_string(landmarks_.size()) + " landmarks");
    }

    const Params& params() const { return params_; }
    std::span<const Vertex> landmarks() const { return landmarks_; }
    const Vertex& operator[](std::size_t i) const { return landmarks_[i]; }
    std::size_t size() const { return landmarks_.size(); }
    bool empty() const { return landmarks_.empty(); }
    const std::optional<std::vector<Side>>& sides() const { return sides_; }

    bool contains(const Vertex& v) const
    {
        return std::find(landmarks_.begin(), landmarks_.end(), v) != landmarks_.end();
    }

    /// Membership mask over the lexicographic vertex order of K(params).
    std::vector<bool> membership() const
    {
        std::vector<bool> in(params_.vertex_count(), false);
        for (const auto& v : landmarks_)
            in[params_.index_of(v)] = true;
        return in;
    }

    /// Landmarks tagged with side s, in set order.
    std::vector<Vertex> side(Side s) const
    {
        std::vector<Vertex> out;
        if (!sides_)
            return out;
        for (std::size_t i = 0; i < landmarks_.size(); ++i)
            if ((*sides_)[i] == s)
                out.push_back(landmarks_[i]);
        return out;
    }

    bool operator==(const LandmarkSet&) const = default;

private:
    Params params_;
    std::vector<Vertex> landmarks_;
    std::optional<std::vector<Side>> sides_;
};

} // namespace mdim
