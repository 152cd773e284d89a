#ifndef LSO_GRAPH_RECOGNITION_HPP
#define LSO_GRAPH_RECOGNITION_HPP

#include <array>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "orientation.hpp"
#include "recognizer.hpp"

namespace lso {

/// A forbidden pattern in a vertex ordering.  Vertices are listed in
/// ordering position; patterns 'a' has three of them, the rest four.
///   a: u<v<x     edge ux, non-edges uv, vx
///   b: u<v<w<x   edges uw, vx, non-edges ux, vw
///   c: u<v<w<x   edges ux, vw, non-edges uw, vx
///   d: u<v<w<x   edges uw, wx, non-edges uv, vx
///   e: u<v<w<x   edges uv, vx, non-edges uw, wx
struct PatternViolation {
    char pattern;
    std::vector<Index> vertices;
    friend bool operator==(const PatternViolation&, const PatternViolation&) = default;
};

/// Every pattern occurrence in `sigma` (a permutation of the vertices),
/// grouped by pattern and lexicographic in positions within a group.
inline std::vector<PatternViolation> check_vertex_ordering(const Graph& g, const LinearOrder& sigma) {
    const std::size_t n = g.size();
    if (sigma.size() != n) throw Error("vertex ordering does not match the graph size");
    // adjacency and non-adjacency over positions
    std::vector<Row> e(n, Row(n)), ne(n, Row(n));
    for (Index i = 0; i < n; ++i)
        for (Index j = 0; j < n; ++j) {
            if (i == j) continue;
            if (g.has_edge(sigma.at(i), sigma.at(j)))
                e[i].set(j);
            else
                ne[i].set(j);
        }
    auto between = [&](Index lo, Index hi) {
        Row r(n);
        for (Index k = lo + 1; k < hi; ++k) r.set(k);
        return r;
    };
    auto name = [&](std::initializer_list<Index> pos) {
        std::vector<Index> out;
        for (Index p : pos) out.push_back(sigma.at(p));
        return out;
    };
    std::vector<PatternViolation> out;
    for (Index u = 0; u < n; ++u)
        for (Index x = e[u].find_next(u); x != Row::npos; x = e[u].find_next(x)) {
            Row vs = between(u, x) & ne[u] & ne[x];
            for_each_bit(vs, [&](Index v) { out.push_back({'a', name({u, v, x})}); });
        }
    // b, c, d, e: u < v < w < x with four prescribed pairs
    struct Shape {
        char id;
        bool uv_edge, uw_edge, ux_edge, vw_edge, vx_edge, wx_edge;
        bool uses_uv, uses_uw, uses_ux, uses_vw, uses_vx, uses_wx;
    };
    static constexpr Shape shapes[] = {
        {'b', false, true, false, false, true, false, false, true, true, true, true, false},
        {'c', false, false, true, true, false, false, false, true, true, true, true, false},
        {'d', false, true, false, false, false, true, true, true, false, false, true, true},
        {'e', true, false, false, false, true, false, true, true, false, false, true, true},
    };
    auto rel = [&](Index a, bool edge) -> const Row& { return edge ? e[a] : ne[a]; };
    for (const auto& s : shapes) {
        for (Index u = 0; u < n; ++u)
            for (Index v = u + 1; v < n; ++v) {
                if (s.uses_uv && (e[u].test(v) != s.uv_edge)) continue;
                Row ws = between(v, n);
                if (s.uses_uw) ws &= rel(u, s.uw_edge);
                if (s.uses_vw) ws &= rel(v, s.vw_edge);
                for (Index w = ws.find_first(); w != Row::npos; w = ws.find_next(w)) {
                    Row xs = between(w, n);
                    if (s.uses_ux) xs &= rel(u, s.ux_edge);
                    if (s.uses_vx) xs &= rel(v, s.vx_edge);
                    if (s.uses_wx) xs &= rel(w, s.wx_edge);
                    for_each_bit(xs, [&](Index x) { out.push_back({s.id, name({u, v, w, x})}); });
                }
            }
    }
    return out;
}

enum class GraphRefusal { ComplementNotComparability, NotComparability, NotLinearSemiorder };

inline const char* to_string(GraphRefusal r) {
    switch (r) {
        case GraphRefusal::ComplementNotComparability: return "complement is not a comparability graph";
        case GraphRefusal::NotComparability: return "not a comparability graph";
        case GraphRefusal::NotLinearSemiorder: return "orientation is not a linear-semiorder";
    }
    return "?";
}

struct GraphRecognition {
    bool yes = false;
    std::optional<PartialOrder> order;         // the orientation that was tested
    std::optional<Certificate> certificate;
    std::optional<GraphRefusal> refusal;
    std::optional<LinearOrder> ordering;        // incomparability mode only
};

/// Is g the incomparability graph of a linear-semiorder?  On success the
/// certificate's linear extension is returned as a pattern-free ordering.
inline GraphRecognition recognize_incomparability_graph(const Graph& g) {
    GraphRecognition out;
    auto oriented = transitive_orientation(g.complement());
    if (std::holds_alternative<NotComparability>(oriented)) {
        out.refusal = GraphRefusal::ComplementNotComparability;
        return out;
    }
    out.order = std::get<PartialOrder>(std::move(oriented));
    auto r = recognize(*out.order);
    if (!r.yes) {
        out.refusal = GraphRefusal::NotLinearSemiorder;
        return out;
    }
    out.yes = true;
    out.certificate = std::move(r.certificate);
    out.ordering = out.certificate->order;
    if (!check_vertex_ordering(g, *out.ordering).empty())
        throw ContractViolation("certificate ordering shows a forbidden pattern");
    return out;
}

/// Is g the comparability graph of a linear-semiorder?  Any transitive
/// orientation will do, since the property is a comparability invariant.
inline GraphRecognition recognize_comparability_graph(const Graph& g) {
    GraphRecognition out;
    auto oriented = transitive_orientation(g);
    if (std::holds_alternative<NotComparability>(oriented)) {
        out.refusal = GraphRefusal::NotComparability;
        return out;
    }
    out.order = std::get<PartialOrder>(std::move(oriented));
    auto r = recognize(*out.order);
    if (!r.yes) {
        out.refusal = GraphRefusal::NotLinearSemiorder;
        return out;
    }
    out.yes = true;
    out.certificate = std::move(r.certificate);
    return out;
}

}  // namespace lso

#endif  // LSO_GRAPH_RECOGNITION_HPP
