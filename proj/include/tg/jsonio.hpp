// jsonio.hpp -- JSON serialization of the library types (schema tg/1)
#pragma once

#include <json.hpp>

#include "tg/isometry.hpp"
#include "tg/metabelian.hpp"
#include "tg/presentations.hpp"
#include "tg/search.hpp"
#include "tg/solver.hpp"

namespace tg {

using nlohmann::json;

inline json to_json_triples(const LatticeMap& m) {
    json a = json::array();
    for (auto& [k, v] : m.entries()) a.push_back({k.p, k.q, v});
    return a;
}

inline LatticeMap lattice_from_triples(const json& a) {
    LatticeMap m;
    for (auto& t : a) m.add(Index2{t.at(0).get<int>(), t.at(1).get<int>()}, t.at(2).get<int64_t>());
    return m;
}

inline json to_json(const SymIsometry& g) {
    return {{"lin",
             {{"kind", g.lin.kind == LinearPart::Rot ? "rot" : "ref"},
              {"p", g.lin.idx.p},
              {"q", g.lin.idx.q}}},
            {"trans", to_json_triples(g.trans)}};
}

inline json to_json(const MetaNF& nf) {
    return {{"a", nf.a}, {"b", nf.b}, {"winding", to_json_triples(nf.winding)}};
}

inline json to_json(const VerifyReport& r) {
    return {{"presentation", r.presentation},
            {"window", r.window},
            {"checked", r.checked},
            {"failures", r.failures},
            {"pass", r.pass()}};
}

inline json to_json(const MinimalityReport& r) {
    return {{"n0", r.n0},
            {"m0", r.m0},
            {"window", r.window},
            {"include_g_family", r.include_g_family},
            {"checked", r.checked},
            {"omitted_nonidentity", r.omitted_nonidentity},
            {"retained_failures", r.retained_failures},
            {"pass", r.pass()}};
}

inline json to_json(const ZeroPoint& p) {
    return {{"alpha2", p.alpha2}, {"alpha3", p.alpha3}, {"residual", p.residual}};
}

inline json to_json(const ZeroSet& z) {
    json curves = json::array();
    for (auto& c : z.curves) {
        json verts = json::array();
        for (auto& v : c.vertices) verts.push_back(to_json(v));
        curves.push_back({{"vertices", verts},
                          {"zero_fraction", c.zero_fraction},
                          {"split_from_ambiguous", c.split_from_ambiguous}});
    }
    json pts = json::array();
    for (auto& p : z.points) pts.push_back(to_json(p));
    json noconv = json::array();
    for (auto& p : z.no_convergence) noconv.push_back(to_json(p));
    json lines = json::array();
    for (auto& l : z.lines) lines.push_back({{"a", l.a}, {"b", l.b}, {"order", l.order}});
    return {{"curves", curves},
            {"points", pts},
            {"no_convergence", noconv},
            {"rational_lines", lines},
            {"flags", z.flags}};
}

inline const char* kind_name(ClassKind k) {
    switch (k) {
        case ClassKind::ZeroFree: return "zero-free";
        case ClassKind::NonTypicalOnly: return "nontypical-only";
        case ClassKind::RationalPoints: return "rational-points";
        case ClassKind::Curve: return "curve";
        case ClassKind::Isolated: return "isolated";
    }
    return "?";
}

inline json to_json(const ClassEntry& e, bool with_zeros = true) {
    json j{{"word", format_word(e.rep)},
           {"r_length", e.r_length},
           {"t_length", e.t_length},
           {"tcoords", to_json_triples(e.tcoords)},
           {"members", e.members},
           {"kind", kind_name(e.kind)}};
    if (with_zeros) {
        j["zeros"] = to_json(e.cls.zeros);
        json tp = json::array();
        for (auto& p : e.cls.typical_points) tp.push_back(to_json(p));
        j["typical_points"] = tp;
    }
    return j;
}

inline json to_json(const CensusResult& r) {
    json stage1 = json::object(), generic = json::object();
    for (auto& [n, c] : r.stage1) stage1[std::to_string(n)] = c;
    for (auto& [n, c] : r.generic) generic[std::to_string(n)] = c;
    json table = json::array();
    for (auto& [k, c] : r.table) table.push_back({k.first, k.second, c});
    json classes = json::array();
    for (auto& e : r.classes) classes.push_back(to_json(e, false));
    return {{"schema", "tg/1"},
            {"max_len", r.max_len},
            {"stage1", stage1},
            {"table", table},
            {"classes", classes},
            {"generic", generic},
            {"flags", r.flags}};
}

}  // namespace tg
