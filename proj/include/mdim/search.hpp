#pragma once

// Exhaustive minimum resolving set search for small K(n), a seeded greedy
// upper-bound search, and a seeded sampler of basic landmark systems.

#include "mdim/landmark_graph.hpp"
#include "mdim/verify.hpp"

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <limits>
#include <mutex>
#include <numeric>
#include <optional>
#include <random>
#include <thread>
#include <unordered_set>
#include <vector>

namespace mdim {

inline constexpr std::uint64_t default_search_budget = 100'000'000;

struct SearchOptions {
    int max_size = 0;                  ///< largest size tried; 0 means |V|
    std::uint64_t budget = default_search_budget; ///< subset verifications allowed
    unsigned threads = 1;
    /// Restrict to sets containing (1,1,1). Verdict-preserving: coordinate
    /// relabeling maps the least landmark of any resolving set to (1,1,1).
    bool fix_first_landmark = false;
};

struct SearchResult {
    std::optional<LandmarkSet> best;
    bool exhaustive = false;          ///< best is a proved minimum
    bool budget_exceeded = false;
    std::vector<int> refuted_sizes;   ///< sizes with no resolving set
    std::uint64_t subsets_checked = 0;
    std::uint64_t vertices_scanned = 0;

    bool conclusive() const { return best.has_value(); }
    std::size_t size() const { return best ? best->size() : 0; }
};

namespace detail {

inline std::uint64_t saturating_binomial(std::uint64_t n, std::uint64_t k)
{
    if (k > n)
        return 0;
    k = std::min(k, n - k);
    __extension__ unsigned __int128 acc = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        acc = acc * (n - k + i) / i;
        if (acc > std::numeric_limits<std::uint64_t>::max())
            return std::numeric_limits<std::uint64_t>::max();
    }
    return static_cast<std::uint64_t>(acc);
}

/// Resolving test for index subsets of K(n), specialised for the search loops.
/// A non-landmark's signature is the mask of landmarks sharing a coordinate
/// with it, which fixes its distance vector.
class SubsetChecker {
public:
    explicit SubsetChecker(const Params& p) : vertices_(enumerate_vertices(p)), n_(vertices_.size())
    {
        share_.assign(n_ * n_, 0);
        for (std::size_t a = 0; a < n_; ++a)
            for (std::size_t b = 0; b < n_; ++b)
                share_[a * n_ + b] = static_cast<std::uint8_t>(shared_coordinates(vertices_[a], vertices_[b]) > 0);
        in_.assign(n_, 0);
    }

    std::size_t vertex_count() const { return n_; }

    /// subset holds at most 64 sorted vertex indices.
    bool resolves(const std::vector<std::size_t>& subset, std::uint64_t& scanned)
    {
        const std::size_t s = subset.size();
        for (auto i : subset)
            in_[i] = 1;
        bool ok = true;
        if (s <= 22) {
            if (stamp_.size() < (std::size_t{1} << s))
                stamp_.assign(std::size_t{1} << s, 0);
            if (++epoch_ == 0) {
                std::fill(stamp_.begin(), stamp_.end(), 0);
                epoch_ = 1;
            }
            for (std::size_t v = 0; v < n_ && ok; ++v) {
                if (in_[v])
                    continue;
                ++scanned;
                const std::uint64_t m = mask(v, subset);
                if (stamp_[m] == epoch_)
                    ok = false;
                stamp_[m] = epoch_;
            }
        } else {
            seen_.clear();
            for (std::size_t v = 0; v < n_ && ok; ++v) {
                if (in_[v])
                    continue;
                ++scanned;
                ok = seen_.insert(mask(v, subset)).second;
            }
        }
        for (auto i : subset)
            in_[i] = 0;
        return ok;
    }

private:
    std::uint64_t mask(std::size_t v, const std::vector<std::size_t>& subset) const
    {
        std::uint64_t m = 0;
        const std::uint8_t* row = &share_[v * n_];
        for (std::size_t j = 0; j < subset.size(); ++j)
            m |= std::uint64_t{row[subset[j]]} << j;
        return m;
    }

    std::vector<Vertex> vertices_;
    std::size_t n_;
    std::vector<std::uint8_t> share_;
    std::vector<std::uint8_t> in_;
    std::vector<std::uint32_t> stamp_;
    std::uint32_t epoch_ = 0;
    std::unordered_set<std::uint64_t> seen_;
};

/// Advance a sorted combination drawn from [lo, n) in lexicographic order,
/// leaving positions below `from` untouched.
inline bool next_combination(std::vector<std::size_t>& c, std::size_t from, std::size_t n)
{
    const std::size_t k = c.size();
    for (std::size_t i = k; i-- > from;) {
        if (c[i] < n - (k - i)) {
            ++c[i];
            for (std::size_t j = i + 1; j < k; ++j)
                c[j] = c[j - 1] + 1;
            return true;
        }
    }
    return false;
}

} // namespace detail

/// Tries sizes 1..max_size in order. The first size with a resolving set
/// yields the lexicographically least such set and marks every smaller size
/// refuted. Sizes whose enumeration would push the work past the budget are
/// not attempted; the result is then flagged inconclusive.
inline SearchResult exhaustive_min_resolving(const Params& p, SearchOptions opts = {})
{
    const std::size_t n = p.vertex_count();
    const int max_size = opts.max_size <= 0 ? static_cast<int>(n) : std::min(opts.max_size, static_cast<int>(n));
    const unsigned threads = std::max(1U, opts.threads);
    SearchResult result;
    std::uint64_t planned = 0;
    for (int s = 1; s <= max_size; ++s) {
        const auto us = static_cast<std::size_t>(s);
        const std::uint64_t count = opts.fix_first_landmark ? detail::saturating_binomial(n - 1, us - 1)
                                                            : detail::saturating_binomial(n, us);
        if (s > 64 || count > opts.budget || planned > opts.budget - count) {
            result.budget_exceeded = true;
            return result;
        }
        planned += count;

        // Workers take first elements round-robin and scan each prefix in
        // lexicographic order; the least found set wins.
        const std::size_t first_limit = opts.fix_first_landmark ? 1 : n - us + 1;
        std::atomic<std::size_t> best_first{std::numeric_limits<std::size_t>::max()};
        std::vector<std::optional<std::vector<std::size_t>>> found(threads);
        std::vector<std::uint64_t> checked(threads, 0);
        std::vector<std::uint64_t> scanned(threads, 0);
        auto worker = [&](unsigned t) {
            detail::SubsetChecker checker(p);
            for (std::size_t first = t; first < first_limit; first += threads) {
                if (first > best_first.load())
                    return;
                std::vector<std::size_t> c(us);
                std::iota(c.begin(), c.end(), first);
                do {
                    ++checked[t];
                    if (checker.resolves(c, scanned[t])) {
                        found[t] = c;
                        std::size_t cur = best_first.load();
                        while (first < cur && !best_first.compare_exchange_weak(cur, first)) {
                        }
                        return;
                    }
                } while (detail::next_combination(c, 1, n));
            }
        };
        if (threads == 1) {
            worker(0);
        } else {
            std::vector<std::jthread> pool;
            for (unsigned t = 0; t < threads; ++t)
                pool.emplace_back(worker, t);
        }
        for (unsigned t = 0; t < threads; ++t) {
            result.subsets_checked += checked[t];
            result.vertices_scanned += scanned[t];
        }
        std::optional<std::vector<std::size_t>> best;
        for (const auto& f : found)
            if (f && (!best || *f < *best))
                best = f;
        if (best) {
            std::vector<Vertex> set;
            for (auto i : *best)
                set.push_back(p.vertex_at(i));
            result.best = LandmarkSet(p, std::move(set));
            result.exhaustive = true;
            return result;
        }
        result.refuted_sizes.push_back(s);
    }
    return result;
}

/// Adds, one at a time, the vertex leaving the fewest unresolved pairs (ties
/// broken by a seeded shuffle), then drops landmarks that are not needed, in
/// seeded order.
inline LandmarkSet greedy_resolving(const Params& p, std::uint64_t seed)
{
    const auto vertices = enumerate_vertices(p);
    const std::size_t n = vertices.size();
    std::mt19937_64 rng(seed);
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);

    std::vector<std::uint8_t> share(n * n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            share[a * n + b] = static_cast<std::uint8_t>(shared_coordinates(vertices[a], vertices[b]) > 0);

    std::vector<bool> chosen(n, false);
    std::vector<std::size_t> cls(n, 0); // class ids of the current partition
    std::vector<std::size_t> picked;
    std::vector<std::uint64_t> bucket(2 * n);

    auto unresolved_after = [&](std::size_t w) {
        std::fill(bucket.begin(), bucket.end(), 0);
        std::uint64_t pairs = 0;
        for (std::size_t v = 0; v < n; ++v) {
            if (chosen[v] || v == w)
                continue;
            pairs += bucket[2 * cls[v] + share[v * n + w]]++;
        }
        return pairs;
    };

    std::uint64_t current = static_cast<std::uint64_t>(n) * (n - 1) / 2;
    while (current > 0) {
        std::size_t best = n;
        std::uint64_t best_pairs = std::numeric_limits<std::uint64_t>::max();
        for (auto w : order) {
            if (chosen[w])
                continue;
            const auto pairs = unresolved_after(w);
            if (pairs < best_pairs) {
                best_pairs = pairs;
                best = w;
            }
        }
        chosen[best] = true;
        picked.push_back(best);
        std::vector<std::size_t> remap(2 * n, n);
        std::size_t next_id = 0;
        for (std::size_t v = 0; v < n; ++v) {
            auto& id = remap[2 * cls[v] + share[v * n + best]];
            if (id == n)
                id = next_id++;
            cls[v] = id;
        }
        current = best_pairs;
    }

    std::shuffle(picked.begin(), picked.end(), rng);
    std::vector<std::size_t> kept = picked;
    detail::SubsetChecker checker(p);
    std::uint64_t scanned = 0;
    for (auto w : picked) {
        if (kept.size() > 64)
            break;
        std::vector<std::size_t> trial;
        for (auto k : kept)
            if (k != w)
                trial.push_back(k);
        std::sort(trial.begin(), trial.end());
        if (checker.resolves(trial, scanned))
            kept.erase(std::find(kept.begin(), kept.end(), w));
    }
    std::sort(kept.begin(), kept.end());
    std::vector<Vertex> set;
    for (auto k : kept)
        set.push_back(vertices[k]);
    LandmarkSet out(p, std::move(set));
    if (!is_resolving_distances(out).resolving)
        throw InternalError("greedy search produced a non-resolving set for K" + p.to_string());
    return out;
}

/// Rejection-samples landmark sets of size 2 n3. Each color gets a random
/// fiber layout (every value used at least twice), the three coordinate
/// lists are shuffled and zipped, and the result is kept only if it is a
/// basic landmark system. Returns nullopt once `attempts` samples fail.
inline std::optional<LandmarkSet> random_basic_system(const Params& p, std::uint64_t seed, int attempts)
{
    std::mt19937_64 rng(seed);
    const int m = 2 * p.n3();
    std::array<std::vector<int>, 3> coords;
    for (int a = 0; a < attempts; ++a) {
        for (Color c : all_colors) {
            const int order = p.order(index(c));
            std::vector<int> counts(static_cast<std::size_t>(order), 2);
            std::uniform_int_distribution<int> part(0, order - 1);
            for (int extra = m - 2 * order; extra > 0; --extra)
                ++counts[static_cast<std::size_t>(part(rng))];
            auto& list = coords[index(c)];
            list.clear();
            for (int value = 1; value <= order; ++value)
                list.insert(list.end(), static_cast<std::size_t>(counts[static_cast<std::size_t>(value - 1)]), value);
            std::shuffle(list.begin(), list.end(), rng);
        }
        std::vector<Vertex> set;
        set.reserve(static_cast<std::size_t>(m));
        for (std::size_t i = 0; i < static_cast<std::size_t>(m); ++i)
            set.push_back(Vertex{coords[0][i], coords[1][i], coords[2][i]});
        std::vector<Vertex> sorted = set;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            continue;
        LandmarkSet w(p, std::move(set));
        if (is_basic(w))
            return w;
    }
    return std::nullopt;
}

} // namespace mdim
