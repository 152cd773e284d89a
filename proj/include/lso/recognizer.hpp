#ifndef LSO_RECOGNIZER_HPP
#define LSO_RECOGNIZER_HPP

#include <array>
#include <optional>
#include <string>
#include <unordered_map>
#include <variant>
#include <vector>

#include "orientation.hpp"
#include "poset.hpp"
#include "semiorder.hpp"
#include "two_sat.hpp"

namespace lso {

/// Incomparability edges that lie on an induced C4 or claw of the
/// incomparability graph.  Edges are kept as a symmetric bit matrix.
class EoSet {
public:
    EoSet() = default;
    explicit EoSet(std::size_t n) : adj_(n) {}

    void add(Index u, Index v) {
        adj_.set(u, v);
        adj_.set(v, u);
    }
    bool contains(Index u, Index v) const { return adj_.test(u, v); }
    const Row& neighbors(Index v) const { return adj_.row(v); }
    std::size_t size() const { return adj_.count() / 2; }
    bool empty() const { return size() == 0; }

    /// Edges as (u, v) with u < v, lexicographic.
    std::vector<Arc> edges() const {
        std::vector<Arc> out;
        for (Index u = 0; u < adj_.size(); ++u)
            for (Index v = adj_.row(u).find_next(u); v != Row::npos; v = adj_.row(u).find_next(v)) out.emplace_back(u, v);
        return out;
    }

    friend bool operator==(const EoSet& a, const EoSet& b) { return a.adj_ == b.adj_; }

private:
    BitMatrix adj_;
};

namespace detail {

// U(u) & N(v), N(u) & U(v), L(u) & N(v), N(u) & L(v) for an incomparable pair
struct EdgeNeighborhoods {
    Row up_u_nb_v, nb_u_up_v, low_u_nb_v, nb_u_low_v;

    EdgeNeighborhoods(const PartialOrder& p, const std::vector<Row>& inc, Index u, Index v)
        : up_u_nb_v(p.upper(u) & inc[v]),
          nb_u_up_v(inc[u] & p.upper(v)),
          low_u_nb_v(p.lower(u) & inc[v]),
          nb_u_low_v(inc[u] & p.lower(v)) {}
};

inline std::vector<Row> incomparability_rows(const PartialOrder& p) {
    std::vector<Row> inc(p.size());
    for (Index v = 0; v < p.size(); ++v) inc[v] = p.incomparable_set(v);
    return inc;
}

}  // namespace detail

/// E_o by the four neighbourhood tests on every incomparability edge uv:
/// two C4 tests (upper and lower side) and two claw tests (u as the middle
/// of a 3-chain around v, and the mirror).
inline EoSet compute_Eo(const PartialOrder& p) {
    const std::size_t n = p.size();
    const auto inc = detail::incomparability_rows(p);
    EoSet eo(n);
    for (Index u = 0; u < n; ++u) {
        for (Index v = inc[u].find_next(u); v != Row::npos; v = inc[u].find_next(v)) {
            detail::EdgeNeighborhoods nb(p, inc, u, v);
            if (nb.up_u_nb_v.any() && nb.nb_u_up_v.any()) {
                eo.add(u, v);
                for_each_bit(nb.up_u_nb_v, [&](Index w) { eo.add(v, w); });
                for_each_bit(nb.nb_u_up_v, [&](Index z) { eo.add(u, z); });
            }
            if (nb.low_u_nb_v.any() && nb.nb_u_low_v.any()) {
                eo.add(u, v);
                for_each_bit(nb.low_u_nb_v, [&](Index w) { eo.add(v, w); });
                for_each_bit(nb.nb_u_low_v, [&](Index z) { eo.add(u, z); });
            }
            if (nb.up_u_nb_v.any() && nb.low_u_nb_v.any()) {
                eo.add(u, v);
                for_each_bit(nb.up_u_nb_v, [&](Index w) { eo.add(v, w); });
                for_each_bit(nb.low_u_nb_v, [&](Index z) { eo.add(v, z); });
            }
            if (nb.nb_u_up_v.any() && nb.nb_u_low_v.any()) {
                eo.add(u, v);
                for_each_bit(nb.nb_u_up_v, [&](Index w) { eo.add(u, w); });
                for_each_bit(nb.nb_u_low_v, [&](Index z) { eo.add(u, z); });
            }
        }
    }
    return eo;
}

/// 2-CNF over one variable per E_o edge.  The variable of edge {u, v} with
/// u < v is x_(u,v); x_(v,u) is its negation.  Setting x_(u,v) = 0 means
/// the arc (u, v) is chosen.
class OrientationFormula {
public:
    explicit OrientationFormula(const EoSet& eo) : edges_(eo.edges()) {
        for (std::size_t i = 0; i < edges_.size(); ++i) var_.emplace(key(edges_[i].first, edges_[i].second), i);
        formula_.num_vars = edges_.size();
    }

    /// Literal x_(a,b).
    sat::Literal lit(Index a, Index b) const {
        auto it = var_.find(key(std::min(a, b), std::max(a, b)));
        if (it == var_.end()) throw ContractViolation("clause mentions an edge outside E_o");
        return {it->second, a < b};
    }

    void add(Index a, Index b, Index c, Index d) { formula_.add(lit(a, b), lit(c, d)); }

    const sat::TwoCnf& formula() const noexcept { return formula_; }
    const std::vector<Arc>& edges() const noexcept { return edges_; }

    Orientation decode(std::size_t n, const sat::Assignment& a) const {
        Orientation f(n);
        for (std::size_t i = 0; i < edges_.size(); ++i) {
            auto [u, v] = edges_[i];
            if (!a[i])
                f.add(u, v);
            else
                f.add(v, u);
        }
        return f;
    }

private:
    static std::uint64_t key(Index u, Index v) { return (static_cast<std::uint64_t>(u) << 32) | v; }

    std::vector<Arc> edges_;
    std::unordered_map<std::uint64_t, std::size_t> var_;
    sat::TwoCnf formula_;
};

/// Clause families for the C4 edges, the claw edges and the 2+1
/// configurations, emitted per E_o edge exactly as the orientation
/// algorithm lists them (duplicates are kept).
inline OrientationFormula build_orientation_formula(const PartialOrder& p, const EoSet& eo) {
    OrientationFormula phi(eo);
    const auto inc = detail::incomparability_rows(p);
    for (auto [u, v] : eo.edges()) {
        detail::EdgeNeighborhoods nb(p, inc, u, v);
        if (nb.up_u_nb_v.any() && nb.nb_u_up_v.any()) {
            for_each_bit(nb.up_u_nb_v, [&](Index w) {
                phi.add(u, v, v, w);
                phi.add(w, v, v, u);
            });
            for_each_bit(nb.nb_u_up_v, [&](Index z) {
                phi.add(v, u, u, z);
                phi.add(z, u, u, v);
            });
        }
        if (nb.low_u_nb_v.any() && nb.nb_u_low_v.any()) {
            for_each_bit(nb.low_u_nb_v, [&](Index w) {
                phi.add(u, v, v, w);
                phi.add(w, v, v, u);
            });
            for_each_bit(nb.nb_u_low_v, [&](Index z) {
                phi.add(v, u, u, z);
                phi.add(z, u, u, v);
            });
        }
        if (nb.up_u_nb_v.any() && nb.low_u_nb_v.any()) {
            for_each_bit(nb.up_u_nb_v, [&](Index w) {
                phi.add(u, v, v, w);
                phi.add(w, v, v, u);
            });
            for_each_bit(nb.low_u_nb_v, [&](Index z) {
                phi.add(u, v, v, z);
                phi.add(z, v, v, u);
            });
        }
        if (nb.nb_u_up_v.any() && nb.nb_u_low_v.any()) {
            for_each_bit(nb.nb_u_up_v, [&](Index w) {
                phi.add(v, u, u, w);
                phi.add(w, u, u, v);
            });
            for_each_bit(nb.nb_u_low_v, [&](Index z) {
                phi.add(v, u, u, z);
                phi.add(z, u, u, v);
            });
        }
        for_each_bit(nb.up_u_nb_v, [&](Index w) {
            if (eo.contains(v, w)) phi.add(w, v, v, u);
        });
        for_each_bit(nb.nb_u_up_v, [&](Index z) {
            if (eo.contains(u, z)) phi.add(z, u, u, v);
        });
    }
    return phi;
}

struct NotOrientable {
    /// The E_o edge whose variable was forced both ways.
    Arc edge;
};

using OrientResult = std::variant<Orientation, NotOrientable>;

/// Orientation of E_o with no forbidden 2+2, 3+1 or 2+1 configuration in
/// P + F, or NotOrientable when the clause set is unsatisfiable.
inline OrientResult orient_forbidden_free(const PartialOrder& p, const EoSet& eo) {
    auto phi = build_orientation_formula(p, eo);
    auto res = sat::solve(phi.formula());
    if (auto* u = std::get_if<sat::Unsatisfiable>(&res)) return NotOrientable{phi.edges()[u->var]};
    return phi.decode(p.size(), std::get<sat::Assignment>(res));
}

enum class ConfigKind { Two2, Three1, Two1 };

inline const char* to_string(ConfigKind k) {
    switch (k) {
        case ConfigKind::Two2: return "2+2";
        case ConfigKind::Three1: return "3+1";
        case ConfigKind::Two1: return "2+1";
    }
    return "?";
}

/// Role-ordered vertices of a forbidden configuration in P + F.
///   Two2   (x,y,z,w): x<y, z<w in P; (z,y), (x,w) in F
///   Three1 (x,y,z,w): x<y<z in P; (w,z), (x,w) in F
///   Two1   (x,y,z):   x<y in P; (y,z), (z,x) in F   (vertices[3] unused)
struct ForbiddenConfig {
    ConfigKind kind;
    std::array<Index, 4> vertices;
    friend bool operator==(const ForbiddenConfig&, const ForbiddenConfig&) = default;
};

/// First forbidden configuration of P + F: kinds in the order 2+2, 3+1,
/// 2+1, and lexicographic role order within a kind.
inline std::optional<ForbiddenConfig> find_forbidden_config(const PartialOrder& p, const Orientation& f) {
    const std::size_t n = p.size();
    for (Index x = 0; x < n; ++x)
        for (Index y = p.upper(x).find_first(); y != Row::npos; y = p.upper(x).find_next(y)) {
            const Row& zs = f.in(y);
            for (Index z = zs.find_first(); z != Row::npos; z = zs.find_next(z)) {
                Row ws = p.upper(z) & f.out(x);
                if (auto w = ws.find_first(); w != Row::npos) return ForbiddenConfig{ConfigKind::Two2, {x, y, z, w}};
            }
        }
    for (Index x = 0; x < n; ++x)
        for (Index y = p.upper(x).find_first(); y != Row::npos; y = p.upper(x).find_next(y))
            for (Index z = p.upper(y).find_first(); z != Row::npos; z = p.upper(y).find_next(z)) {
                Row ws = f.in(z) & f.out(x);
                if (auto w = ws.find_first(); w != Row::npos)
                    return ForbiddenConfig{ConfigKind::Three1, {x, y, z, w}};
            }
    for (Index x = 0; x < n; ++x)
        for (Index y = p.upper(x).find_first(); y != Row::npos; y = p.upper(x).find_next(y)) {
            Row zs = f.out(y) & f.in(x);
            if (auto z = zs.find_first(); z != Row::npos) return ForbiddenConfig{ConfigKind::Two1, {x, y, z, 0}};
        }
    return std::nullopt;
}

enum class ObstructionKind { Regular, Skewed };

/// Six vertices v0..v5 of an obstruction in P + F.
///   Regular: (v0,v1), (v2,v3), (v4,v5) in P; (v2,v1), (v4,v3), (v0,v5) in F
///   Skewed:  (v0,v1), (v1,v2), (v4,v5) in P; (v3,v2), (v4,v3), (v0,v5), (v5,v3) in F
/// (v0, v1) is the base.
struct Obstruction {
    ObstructionKind kind;
    std::array<Index, 6> v;
    friend bool operator==(const Obstruction&, const Obstruction&) = default;
};

namespace detail {

// Lower sets of the F-successors of u: candidates for v4 in a regular
// obstruction with base (u, *) (v4 < v5 in P, (u, v5) in F).
inline Row regular_v4_candidates(const PartialOrder& p, const Orientation& f, Index u) {
    Row r(p.size());
    for_each_bit(f.out(u), [&](Index v5) { r |= p.lower(v5); });
    return r;
}

// Upper sets of the F-predecessors of v: candidates for v3 ((v2, v) in F, v2 < v3 in P).
inline Row regular_v3_candidates(const PartialOrder& p, const Orientation& f, Index v) {
    Row r(p.size());
    for_each_bit(f.in(v), [&](Index v2) { r |= p.upper(v2); });
    return r;
}

// For a skewed obstruction with v0 = u: the v3 that admit some v4, v5 with
// v4 < v5 in P and (v4, v3), (v5, v3), (u, v5) in F.
inline Row skewed_v3_candidates(const PartialOrder& p, const Orientation& f, Index u) {
    const std::size_t n = p.size();
    Row ok(n);
    for (Index v3 = 0; v3 < n; ++v3) {
        Row v5s = f.out(u) & f.in(v3);
        for (Index v5 = v5s.find_first(); v5 != Row::npos; v5 = v5s.find_next(v5))
            if (f.in(v3).intersects(p.lower(v5))) {
                ok.set(v3);
                break;
            }
    }
    return ok;
}

}  // namespace detail

/// First obstruction of P + F: regular ones before skewed ones, each in
/// lexicographic (v0, ..., v5) order.
inline std::optional<Obstruction> find_obstruction(const PartialOrder& p, const Orientation& f) {
    const std::size_t n = p.size();
    for (Index v0 = 0; v0 < n; ++v0) {
        if (p.upper(v0).none()) continue;
        Row s4 = detail::regular_v4_candidates(p, f, v0);
        Row s3ok(n);
        for (Index v3 = 0; v3 < n; ++v3)
            if (f.in(v3).intersects(s4)) s3ok.set(v3);
        for (Index v1 = p.upper(v0).find_first(); v1 != Row::npos; v1 = p.upper(v0).find_next(v1))
            for (Index v2 = f.in(v1).find_first(); v2 != Row::npos; v2 = f.in(v1).find_next(v2)) {
                Row v3s = p.upper(v2) & s3ok;
                Index v3 = v3s.find_first();
                if (v3 == Row::npos) continue;
                Index v4 = (f.in(v3) & s4).find_first();
                Index v5 = (p.upper(v4) & f.out(v0)).find_first();
                return Obstruction{ObstructionKind::Regular, {v0, v1, v2, v3, v4, v5}};
            }
    }
    for (Index v0 = 0; v0 < n; ++v0) {
        if (p.upper(v0).none()) continue;
        Row ok3 = detail::skewed_v3_candidates(p, f, v0);
        for (Index v1 = p.upper(v0).find_first(); v1 != Row::npos; v1 = p.upper(v0).find_next(v1))
            for (Index v2 = p.upper(v1).find_first(); v2 != Row::npos; v2 = p.upper(v1).find_next(v2)) {
                Row v3s = f.in(v2) & ok3;
                Index v3 = v3s.find_first();
                if (v3 == Row::npos) continue;
                Row v5s = f.out(v0) & f.in(v3);
                for (Index v4 = f.in(v3).find_first(); v4 != Row::npos; v4 = f.in(v3).find_next(v4)) {
                    Index v5 = (p.upper(v4) & v5s).find_first();
                    if (v5 != Row::npos) return Obstruction{ObstructionKind::Skewed, {v0, v1, v2, v3, v4, v5}};
                }
                throw ContractViolation("skewed obstruction candidate without a witness");
            }
    }
    return std::nullopt;
}

namespace detail {

// Collects the fronts of every regular obstruction with base (u, v):
// (v4,v3), (v5,v3), (v4,v2), (v5,v2).
inline std::vector<Arc> regular_fronts(const PartialOrder& p, const Orientation& f, Index u, Index v,
                                       const Row& s4) {
    const std::size_t n = p.size();
    Row s3 = regular_v3_candidates(p, f, v);
    std::vector<Arc> out;
    BitMatrix seen(n);
    auto push = [&](Index a, Index b) {
        if (!seen.test(a, b)) {
            seen.set(a, b);
            out.emplace_back(a, b);
        }
    };
    for (Index v4 = s4.find_first(); v4 != Row::npos; v4 = s4.find_next(v4)) {
        Row v3s = f.out(v4) & s3;
        if (v3s.none()) continue;
        Row v5s = f.out(u) & p.upper(v4);
        for (Index v3 = v3s.find_first(); v3 != Row::npos; v3 = v3s.find_next(v3)) {
            Row v2s = f.in(v) & p.lower(v3);
            push(v4, v3);
            for_each_bit(v5s, [&](Index v5) { push(v5, v3); });
            for_each_bit(v2s, [&](Index v2) {
                push(v4, v2);
                for_each_bit(v5s, [&](Index v5) { push(v5, v2); });
            });
        }
    }
    return out;
}

// Fronts (v4,v3), (v5,v3) of every skewed obstruction with base (u, v).
inline std::vector<Arc> skewed_fronts(const PartialOrder& p, const Orientation& f, Index u, Index v,
                                      const Row& ok3) {
    const std::size_t n = p.size();
    std::vector<Arc> out;
    BitMatrix seen(n);
    auto push = [&](Index a, Index b) {
        if (!seen.test(a, b)) {
            seen.set(a, b);
            out.emplace_back(a, b);
        }
    };
    for (Index v3 = ok3.find_first(); v3 != Row::npos; v3 = ok3.find_next(v3)) {
        if (!f.out(v3).intersects(p.upper(v))) continue;
        Row v5s = f.out(u) & f.in(v3);
        for (Index v5 = v5s.find_first(); v5 != Row::npos; v5 = v5s.find_next(v5)) {
            Row v4s = f.in(v3) & p.lower(v5);
            if (v4s.none()) continue;
            push(v5, v3);
            for_each_bit(v4s, [&](Index v4) { push(v4, v3); });
        }
    }
    return out;
}

inline void reverse_all(Orientation& f, const std::vector<Arc>& arcs) {
    for (auto [a, b] : arcs) {
        if (!f.has(a, b)) throw ContractViolation("obstruction front is not an arc of F");
        f.reverse(a, b);
    }
}

}  // namespace detail

/// Removes every obstruction from a forbidden-configuration-free P + F.
/// First, for each (u, v) in P in canonical order, the fronts of all regular
/// obstructions with base (u, v) are reversed together; then the same for
/// skewed obstructions.  The result is checked with find_forbidden_config
/// and find_obstruction; a failure throws ContractViolation.
inline Orientation remove_obstructions(const PartialOrder& p, Orientation f) {
    const std::size_t n = p.size();
    for (Index u = 0; u < n; ++u) {
        if (p.upper(u).none()) continue;
        Row s4 = detail::regular_v4_candidates(p, f, u);
        for (Index v = p.upper(u).find_first(); v != Row::npos; v = p.upper(u).find_next(v)) {
            bool any = false;
            for (Index v2 = f.in(v).find_first(); v2 != Row::npos && !any; v2 = f.in(v).find_next(v2))
                for (Index v3 = p.upper(v2).find_first(); v3 != Row::npos; v3 = p.upper(v2).find_next(v3))
                    if (f.in(v3).intersects(s4)) {
                        any = true;
                        break;
                    }
            if (!any) continue;
            auto fronts = detail::regular_fronts(p, f, u, v, s4);
            detail::reverse_all(f, fronts);
            s4 = detail::regular_v4_candidates(p, f, u);
        }
    }
    for (Index u = 0; u < n; ++u) {
        if (p.upper(u).none()) continue;
        Row ok3 = detail::skewed_v3_candidates(p, f, u);
        if (ok3.none()) continue;
        for (Index v = p.upper(u).find_first(); v != Row::npos; v = p.upper(u).find_next(v)) {
            auto fronts = detail::skewed_fronts(p, f, u, v, ok3);
            if (fronts.empty()) continue;
            detail::reverse_all(f, fronts);
            ok3 = detail::skewed_v3_candidates(p, f, u);
        }
    }
    if (auto c = find_forbidden_config(p, f))
        throw ContractViolation(std::string("obstruction removal left a ") + to_string(c->kind) + " configuration");
    if (find_obstruction(p, f)) throw ContractViolation("obstruction removal left an obstruction");
    return f;
}

/// Union of the arcs of P and F.
inline std::vector<Arc> union_arcs(const PartialOrder& p, const Orientation& f) {
    auto arcs = p.pairs();
    auto fa = f.arcs();
    arcs.insert(arcs.end(), fa.begin(), fa.end());
    return arcs;
}

enum class RefusalStage { Unsat2Cnf };

/// Result of the recognition pipeline with its intermediate stages.
struct Recognition {
    bool yes = false;
    std::optional<Certificate> certificate;
    std::optional<RefusalStage> refusal;
    std::optional<Arc> conflict_edge;  // E_o edge named by the 2-SAT refutation

    EoSet eo;
    std::optional<Orientation> orientation;    // after the 2-SAT step
    std::optional<Orientation> deobstructed;   // after obstruction removal
};

/// Decides whether P is the intersection of a linear order and a semiorder,
/// returning a verified certificate when it is.
inline Recognition recognize(const PartialOrder& p) {
    Recognition r;
    const std::size_t n = p.size();
    if (n <= 1 || p.is_chain()) {
        auto arcs = p.pairs();
        r.yes = true;
        r.certificate = build_semiorder(p, topological_order(n, arcs));
        return r;
    }
    r.eo = compute_Eo(p);
    auto oriented = orient_forbidden_free(p, r.eo);
    if (auto* no = std::get_if<NotOrientable>(&oriented)) {
        r.refusal = RefusalStage::Unsat2Cnf;
        r.conflict_edge = no->edge;
        return r;
    }
    r.orientation = std::get<Orientation>(std::move(oriented));
    if (auto c = find_forbidden_config(p, *r.orientation))
        throw ContractViolation(std::string("2-SAT orientation has a ") + to_string(c->kind) + " configuration");
    r.deobstructed = remove_obstructions(p, *r.orientation);
    LinearOrder l;
    try {
        l = topological_order(n, union_arcs(p, *r.deobstructed));
    } catch (const CycleError&) {
        throw ContractViolation("P + F is cyclic after obstruction removal");
    }
    r.yes = true;
    try {
        r.certificate = build_semiorder(p, l);
    } catch (const RuleViolation&) {
        throw ContractViolation("linear extension of P + F breaks a rule");
    }
    return r;
}

}  // namespace lso

#endif  // LSO_RECOGNIZER_HPP
