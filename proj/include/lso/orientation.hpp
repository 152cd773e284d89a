#ifndef LSO_ORIENTATION_HPP
#define LSO_ORIENTATION_HPP

#include <array>
#include <optional>
#include <queue>
#include <variant>
#include <vector>

#include "poset.hpp"

namespace lso {

/// A set of directed edges with at most one direction per vertex pair.
/// Keeps both the out- and in-neighbourhood rows so either side can be
/// scanned as a bitset.
class Orientation {
public:
    Orientation() = default;
    explicit Orientation(std::size_t n) : out_(n), in_(n) {}

    std::size_t vertex_count() const noexcept { return out_.size(); }
    std::size_t size() const noexcept { return arcs_; }

    bool has(Index u, Index v) const { return out_.test(u, v); }
    bool covers(Index u, Index v) const { return has(u, v) || has(v, u); }

    void add(Index u, Index v) {
        if (u == v) throw Error("orientation arcs must join distinct vertices");
        if (has(v, u)) throw Error("orientation already holds the reverse arc");
        if (has(u, v)) return;
        out_.set(u, v);
        in_.set(v, u);
        ++arcs_;
    }

    void remove(Index u, Index v) {
        if (!has(u, v)) return;
        out_.reset(u, v);
        in_.reset(v, u);
        --arcs_;
    }

    void reverse(Index u, Index v) {
        if (!has(u, v)) throw ContractViolation("reversing an arc that is not present");
        remove(u, v);
        add(v, u);
    }

    const Row& out(Index v) const { return out_.row(v); }
    const Row& in(Index v) const { return in_.row(v); }

    std::vector<Arc> arcs() const {
        std::vector<Arc> a;
        a.reserve(arcs_);
        for (Index u = 0; u < vertex_count(); ++u) for_each_bit(out_.row(u), [&](Index v) { a.emplace_back(u, v); });
        return a;
    }

    friend bool operator==(const Orientation& a, const Orientation& b) { return a.out_ == b.out_; }

private:
    BitMatrix out_;
    BitMatrix in_;
    std::size_t arcs_ = 0;
};

/// Why a graph has no transitive orientation: the computed full orientation
/// either breaks quasi-transitivity at (u, v, w) or contains a directed cycle.
struct NotComparability {
    std::optional<std::array<Index, 3>> triple;
    std::vector<Index> cycle;
};

using OrientationResult = std::variant<PartialOrder, NotComparability>;

/// For a full orientation `f` of `g`: returns the first (u, v, w) with uv, vw
/// edges, uw a non-edge and the two arcs not both pointing into v or both out
/// of v.  Throws IncompleteOrientation if an edge of g is unoriented.
inline std::optional<std::array<Index, 3>> check_quasi_transitive(const Graph& g, const Orientation& f) {
    const std::size_t n = g.size();
    for (auto [u, v] : g.edges())
        if (!f.covers(u, v))
            throw IncompleteOrientation("edge " + g.name(u) + "-" + g.name(v) + " is not oriented");
    for (Index v = 0; v < n; ++v) {
        const Row& nb = g.neighbors(v);
        for (Index u = nb.find_first(); u != Row::npos; u = nb.find_next(u)) {
            Row ws = nb - g.neighbors(u);
            ws.reset(u);
            for (Index w = ws.find_next(u); w != Row::npos; w = ws.find_next(w)) {
                bool into = f.has(u, v) && f.has(w, v);
                bool outof = f.has(v, u) && f.has(v, w);
                if (!into && !outof) return std::array<Index, 3>{u, v, w};
            }
        }
    }
    return std::nullopt;
}

namespace detail {

// Orients g by implication classes of the successively reduced graph: the
// smallest remaining edge seeds a class oriented low -> high, Gamma-forcing
// spreads it, and the class is deleted before the next seed.  A forced arc
// that contradicts the class is ignored; the caller verifies the result.
inline Orientation implication_class_orientation(const Graph& g) {
    const std::size_t n = g.size();
    Orientation f(n);
    BitMatrix remaining(n);
    for (auto [u, v] : g.edges()) {
        remaining.set(u, v);
        remaining.set(v, u);
    }
    for (Index s = 0; s < n; ++s) {
        for (Index t = remaining.row(s).find_next(s); t != Row::npos; t = remaining.row(s).find_next(s)) {
            std::vector<Arc> cls;
            std::queue<Arc> q;
            BitMatrix in_class(n);
            auto force = [&](Index a, Index b) {
                if (in_class.test(a, b) || in_class.test(b, a)) return;
                in_class.set(a, b);
                cls.emplace_back(a, b);
                q.emplace(a, b);
            };
            force(s, t);
            while (!q.empty()) {
                auto [a, b] = q.front();
                q.pop();
                Row ca = remaining.row(a) - remaining.row(b);
                ca.reset(b);
                for_each_bit(ca, [&](Index c) { force(a, c); });
                Row cb = remaining.row(b) - remaining.row(a);
                cb.reset(a);
                for_each_bit(cb, [&](Index c) { force(c, b); });
            }
            for (auto [a, b] : cls) {
                remaining.reset(a, b);
                remaining.reset(b, a);
                f.add(a, b);
            }
        }
    }
    return f;
}

}  // namespace detail

/// Transitive orientation of a comparability graph.  The implication-class
/// orientation is accepted only after it passes the quasi-transitivity and
/// acyclicity checks; otherwise the failing check is returned as witness.
inline OrientationResult transitive_orientation(const Graph& g) {
    Orientation f = detail::implication_class_orientation(g);
    if (auto t = check_quasi_transitive(g, f)) return NotComparability{t, {}};
    const auto arcs = f.arcs();
    try {
        (void)topological_order(g.size(), arcs);
    } catch (const CycleError& e) {
        return NotComparability{std::nullopt, e.cycle};
    }
    BitMatrix less(g.size());
    for (auto [u, v] : arcs) less.set(u, v);
    return PartialOrder(g.names(), std::move(less));
}

}  // namespace lso

#endif  // LSO_ORIENTATION_HPP
