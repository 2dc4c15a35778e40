#pragma once

// File formats: landmark-set JSON, construction traces, forbidden-shape
// reports, verification and search results, and Graphviz DOT.
//
// Landmark-set document:
//   { "n": [n1, n2, n3], "landmarks": [[x1, x2, x3], ...], "sides": ["L", "R", "U", ...] }
// "sides" is optional; any other key is rejected. Coordinates are 1-based.

#include "mdim/construction.hpp"
#include "mdim/domination.hpp"
#include "mdim/forbidden.hpp"
#include "mdim/search.hpp"
#include "mdim/verify.hpp"

#include <json.hpp>

#include <sstream>
#include <string>

namespace mdim {

using Json = nlohmann::ordered_json;

inline Json to_json(const Vertex& v) { return Json::array({v.x1, v.x2, v.x3}); }

inline Json to_json(const Params& p) { return Json::array({p.n1(), p.n2(), p.n3()}); }

inline Json to_json(const EdgeId& e) { return Json{{"color", color_name(e.color)}, {"value", e.value}}; }

inline Json to_json(const LandmarkSet& w)
{
    Json j;
    j["n"] = to_json(w.params());
    Json list = Json::array();
    for (const auto& v : w.landmarks())
        list.push_back(to_json(v));
    j["landmarks"] = std::move(list);
    if (w.sides()) {
        Json sides = Json::array();
        for (Side s : *w.sides())
            sides.push_back(side_tag(s));
        j["sides"] = std::move(sides);
    }
    return j;
}

namespace detail {

inline std::array<int, 3> int_triple(const Json& j, const char* what)
{
    if (!j.is_array() || j.size() != 3)
        throw InputError(std::string(what) + " must be an array of three integers");
    std::array<int, 3> out{};
    for (std::size_t i = 0; i < 3; ++i) {
        if (!j[i].is_number_integer())
            throw InputError(std::string(what) + " must be an array of three integers");
        const auto v = j[i].get<long long>();
        if (v < 1 || v > 1'000'000)
            throw InputError(std::string(what) + " entry out of range");
        out[i] = static_cast<int>(v);
    }
    return out;
}

} // namespace detail

inline LandmarkSet landmark_set_from_json(const Json& j)
{
    if (!j.is_object())
        throw InputError("landmark-set document must be a JSON object");
    for (const auto& [key, value] : j.items())
        if (key != "n" && key != "landmarks" && key != "sides")
            throw InputError("unknown key '" + key + "' in landmark-set document");
    if (!j.contains("n") || !j.contains("landmarks"))
        throw InputError("landmark-set document needs \"n\" and \"landmarks\"");
    const auto n = detail::int_triple(j["n"], "\"n\"");
    Params p = [&] {
        try {
            return Params::make(n[0], n[1], n[2]);
        } catch (const ParamError& e) {
            throw InputError(e.what());
        }
    }();
    if (!j["landmarks"].is_array())
        throw InputError("\"landmarks\" must be an array");
    std::vector<Vertex> landmarks;
    for (const auto& item : j["landmarks"]) {
        const auto t = detail::int_triple(item, "landmark");
        landmarks.push_back(Vertex{t[0], t[1], t[2]});
    }
    std::optional<std::vector<Side>> sides;
    if (j.contains("sides")) {
        if (!j["sides"].is_array())
            throw InputError("\"sides\" must be an array");
        sides.emplace();
        for (const auto& s : j["sides"]) {
            if (!s.is_string())
                throw InputError("\"sides\" entries must be strings");
            sides->push_back(parse_side(s.get<std::string>()));
        }
    }
    return LandmarkSet(p, std::move(landmarks), std::move(sides));
}

inline LandmarkSet parse_landmark_set(const std::string& text)
{
    Json j;
    try {
        j = Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw InputError(std::string("malformed JSON: ") + e.what());
    }
    return landmark_set_from_json(j);
}

inline std::string dump(const Json& j) { return j.dump(2) + "\n"; }

inline Json to_json(const ConstructionTrace& t)
{
    Json j;
    j["n"] = to_json(t.params);
    j["parity"] = t.even ? "even" : "odd";
    j["f"] = t.f;
    j["q"] = t.multiplicities.q;
    j["r"] = t.multiplicities.r;
    j["multiplicities"] = t.multiplicities.schedule;
    j["block_starts"] = t.block_starts;
    j["k"] = t.k;
    Json inserts = Json::array();
    for (const auto& ins : t.inserts)
        inserts.push_back(Json{{"left", ins.left}, {"right", ins.right}});
    j["inserts"] = std::move(inserts);
    if (t.replacement)
        j["replacement"] = Json{{"from", to_json(t.replacement->from)}, {"to", to_json(t.replacement->to)}};
    else
        j["replacement"] = nullptr;
    return j;
}

inline Json to_json(const LandmarkGraph& g, const ForbiddenWitness& w)
{
    Json j;
    j["kind"] = kind_name(w.kind);
    Json coords = Json::array();
    for (auto i : w.landmarks)
        coords.push_back(to_json(g.landmark(i)));
    j["landmarks"] = std::move(coords);
    j["landmark_indices"] = w.landmarks;
    Json edges = Json::array();
    for (const auto& e : w.edges)
        edges.push_back(to_json(e));
    j["hyperedges"] = std::move(edges);
    return j;
}

/// All five witness lists, plus the structural predictions when the set
/// is basic and notes for configurations that rule out resolving.
inline Json forbidden_report(const LandmarkSet& w)
{
    const LandmarkGraph g = build_landmark_graph(w);
    Json j;
    j["n"] = to_json(w.params());
    j["size"] = w.size();
    const auto basic = check_basic(g);
    j["basic"] = basic.basic;
    if (!basic.basic)
        j["basic_violation"] = basic.describe();
    Json lists;
    std::array<bool, 5> present{};
    for (std::size_t k = 0; k < all_forbidden_kinds.size(); ++k) {
        Json list = Json::array();
        for (const auto& wit : find_forbidden(g, all_forbidden_kinds[k]))
            list.push_back(to_json(g, wit));
        present[k] = !list.empty();
        lists[std::string(kind_name(all_forbidden_kinds[k]))] = std::move(list);
    }
    j["witnesses"] = std::move(lists);
    if (basic.basic) {
        j["predictions"] = Json{{"resolving", predict_resolving_basic(w)},
                                {"triple_looped_resolving", predict_resolving_triple_looped(w)}};
    } else {
        j["predictions"] = nullptr;
    }
    Json notes = Json::array();
    if (present[0] || present[1] || present[3])
        notes.push_back("bad 4-cycle, plain hex or shark teeth present: not resolving");
    if (present[2] && present[4])
        notes.push_back("triple loop together with a rainbow 2-2-triangle: not resolving");
    j["notes"] = std::move(notes);
    return j;
}

inline Json to_json(const VerifyResult& r)
{
    Json j;
    j["method"] = method_name(r.method);
    j["resolving"] = r.resolving;
    if (r.witness)
        j["witness"] = Json::array({to_json(r.witness->first), to_json(r.witness->second)});
    else
        j["witness"] = nullptr;
    return j;
}

inline Json to_json(const DominationReport& d)
{
    auto opt = [](const std::optional<Vertex>& v) { return v ? to_json(*v) : Json(nullptr); };
    Json j;
    j["dominating"] = d.dominating;
    j["total_dominating"] = d.total_dominating;
    j["locating_dominating"] = d.locating_dominating;
    j["locating_total_dominating"] = d.locating_total_dominating;
    j["witnesses"] = Json{{"dominating", opt(d.dominating_witness)},
                          {"total_dominating", opt(d.total_witness)},
                          {"locating_dominating", opt(d.locating_witness)},
                          {"locating_total_dominating", opt(d.locating_total_witness)}};
    return j;
}

inline Json search_result_json(const Params& p, const std::string& mode, const SearchResult& r,
                               std::optional<std::uint64_t> seed)
{
    Json j;
    j["n"] = to_json(p);
    j["mode"] = mode;
    j["conclusive"] = r.conclusive();
    j["exhaustive"] = r.exhaustive;
    if (r.exhaustive)
        j["minimum"] = r.size();
    else
        j["minimum"] = nullptr;
    if (r.best)
        j["upper_bound"] = r.size();
    else
        j["upper_bound"] = nullptr;
    j["refuted_sizes"] = r.refuted_sizes;
    j["budget_exceeded"] = r.budget_exceeded;
    j["landmarks"] = r.best ? to_json(*r.best)["landmarks"] : Json(nullptr);
    j["work"] = Json{{"subsets_checked", r.subsets_checked}, {"vertices_scanned", r.vertices_scanned}};
    j["seed"] = seed ? Json(*seed) : Json(nullptr);
    return j;
}

/// Graphviz rendering of G(W): landmark nodes w1..wm, sticks as plain edges,
/// loops as self-edges, and one point-shaped hub h_<color>_<value> per poofy
/// hyperedge joined to each member.
inline std::string to_dot(const LandmarkSet& w)
{
    const LandmarkGraph g = build_landmark_graph(w);
    std::ostringstream os;
    os << "graph landmarks {\n";
    os << "  node [shape=ellipse];\n";
    for (std::size_t i = 0; i < g.landmark_count(); ++i)
        os << "  w" << i + 1 << " [label=\"" << to_string(g.landmark(i)) << "\"];\n";
    for (const auto& e : g.edges()) {
        const auto& m = g.members(e);
        const auto color = color_name(e.color);
        switch (edge_kind(m.size())) {
        case EdgeKind::Loop:
            os << "  w" << m[0] + 1 << " -- w" << m[0] + 1 << " [color=" << color << "];\n";
            break;
        case EdgeKind::Stick:
            os << "  w" << m[0] + 1 << " -- w" << m[1] + 1 << " [color=" << color << "];\n";
            break;
        case EdgeKind::Poofy: {
            const std::string hub = "h_" + std::string(color) + "_" + std::to_string(e.value);
            os << "  " << hub << " [shape=point, color=" << color << "];\n";
            for (auto i : m)
                os << "  " << hub << " -- w" << i + 1 << " [color=" << color << "];\n";
            break;
        }
        }
    }
    os << "}\n";
    return os.str();
}

} // namespace mdim
