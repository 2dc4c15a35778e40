#pragma once

#include "mdim/verify.hpp"

#include <optional>

namespace mdim {

/// Domination-family flags of a landmark set. A locating-dominating set is a
/// resolving dominating set; a locating-total-dominating set is a resolving
/// total-dominating set. Each false flag carries the least vertex showing it.
struct DominationReport {
    bool dominating = true;
    bool total_dominating = true;
    bool locating_dominating = true;
    bool locating_total_dominating = true;
    std::optional<Vertex> dominating_witness;
    std::optional<Vertex> total_witness;
    std::optional<Vertex> locating_witness;
    std::optional<Vertex> locating_total_witness;
};

inline DominationReport domination_report(const LandmarkSet& w)
{
    const Params& p = w.params();
    const auto in = w.membership();
    DominationReport r;
    for (const auto& v : enumerate_vertices(p)) {
        bool has_neighbor = false;
        for (const auto& l : w.landmarks())
            if (are_adjacent(p, v, l)) {
                has_neighbor = true;
                break;
            }
        if (has_neighbor)
            continue;
        if (r.total_dominating) {
            r.total_dominating = false;
            r.total_witness = v;
        }
        if (r.dominating && !in[p.index_of(v)]) {
            r.dominating = false;
            r.dominating_witness = v;
        }
    }
    const auto resolving = is_resolving_distances(w);
    const std::optional<Vertex> unresolved =
        resolving.witness ? std::optional<Vertex>(resolving.witness->first) : std::nullopt;
    r.locating_dominating = r.dominating && resolving.resolving;
    r.locating_total_dominating = r.total_dominating && resolving.resolving;
    if (!r.locating_dominating)
        r.locating_witness = r.dominating ? unresolved : r.dominating_witness;
    if (!r.locating_total_dominating)
        r.locating_total_witness = r.total_dominating ? unresolved : r.total_witness;
    return r;
}

} // namespace mdim
