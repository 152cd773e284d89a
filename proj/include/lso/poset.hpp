#ifndef LSO_POSET_HPP
#define LSO_POSET_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <queue>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "errors.hpp"

namespace lso {

using Index = std::size_t;
using Row = boost::dynamic_bitset<std::uint64_t>;
using Arc = std::pair<Index, Index>;

/// Square boolean matrix stored as one bitset per row.
class BitMatrix {
public:
    BitMatrix() = default;
    explicit BitMatrix(std::size_t n) : rows_(n, Row(n)) {}

    std::size_t size() const noexcept { return rows_.size(); }

    bool test(Index r, Index c) const { return rows_[r].test(c); }
    void set(Index r, Index c, bool value = true) { rows_[r].set(c, value); }
    void reset(Index r, Index c) { rows_[r].reset(c); }

    const Row& row(Index r) const { return rows_[r]; }
    Row& row(Index r) { return rows_[r]; }

    BitMatrix transposed() const {
        BitMatrix t(size());
        for (Index r = 0; r < size(); ++r)
            for (Index c = rows_[r].find_first(); c != Row::npos; c = rows_[r].find_next(c))
                t.set(c, r);
        return t;
    }

    std::size_t count() const {
        std::size_t total = 0;
        for (const auto& r : rows_) total += r.count();
        return total;
    }

    friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

private:
    std::vector<Row> rows_;
};

/// Iterate the set bits of a row in increasing order.
template <typename Fn>
void for_each_bit(const Row& row, Fn&& fn) {
    for (Index i = row.find_first(); i != Row::npos; i = row.find_next(i)) fn(i);
}

inline std::vector<std::string> default_names(std::size_t n) {
    std::vector<std::string> names;
    names.reserve(n);
    for (std::size_t i = 0; i < n; ++i) names.push_back("v" + std::to_string(i));
    return names;
}

/// A strict partial order on elements 0..n-1.  Element names are opaque
/// labels; the declaration order of the names is the canonical index order
/// used for every tie-break in the library.
class PartialOrder {
public:
    PartialOrder() = default;

    /// Wraps an already transitive, irreflexive relation.  Throws
    /// NotAPartialOrder if the matrix is not one.
    PartialOrder(std::vector<std::string> names, BitMatrix less)
        : names_(std::move(names)), less_(std::move(less)) {
        if (less_.size() != names_.size())
            throw NotAPartialOrder("relation size does not match element count");
        for (Index v = 0; v < size(); ++v)
            if (less_.test(v, v)) throw NotAPartialOrder("relation is not irreflexive at " + names_[v]);
        for (Index u = 0; u < size(); ++u) {
            Row reach(size());
            for_each_bit(less_.row(u), [&](Index v) { reach |= less_.row(v); });
            if (!reach.is_subset_of(less_.row(u)))
                throw NotAPartialOrder("relation is not transitive at " + names_[u]);
        }
        greater_ = less_.transposed();
        build_index();
    }

    static PartialOrder antichain(std::size_t n) { return {default_names(n), BitMatrix(n)}; }

    static PartialOrder chain(std::size_t n) {
        BitMatrix m(n);
        for (Index u = 0; u < n; ++u)
            for (Index v = u + 1; v < n; ++v) m.set(u, v);
        return {default_names(n), std::move(m)};
    }

    std::size_t size() const noexcept { return names_.size(); }
    const std::vector<std::string>& names() const noexcept { return names_; }
    const std::string& name(Index v) const { return names_[v]; }

    std::optional<Index> find(const std::string& name) const {
        auto it = index_.find(name);
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }

    Index index_of(const std::string& name) const {
        auto idx = find(name);
        if (!idx) throw UnknownElement("unknown element '" + name + "'");
        return *idx;
    }

    bool less(Index u, Index v) const { return less_.test(u, v); }
    bool comparable(Index u, Index v) const { return less_.test(u, v) || less_.test(v, u); }
    bool incomparable(Index u, Index v) const { return u != v && !comparable(u, v); }

    /// Elements strictly above v.
    const Row& upper(Index v) const { return less_.row(v); }
    /// Elements strictly below v.
    const Row& lower(Index v) const { return greater_.row(v); }

    /// Elements incomparable to v (v itself excluded).
    Row incomparable_set(Index v) const {
        Row r = upper(v) | lower(v);
        r.set(v);
        r.flip();
        return r;
    }

    const BitMatrix& relation() const noexcept { return less_; }

    std::size_t comparable_pairs() const { return less_.count(); }

    std::vector<Arc> pairs() const {
        std::vector<Arc> out;
        for (Index u = 0; u < size(); ++u) for_each_bit(less_.row(u), [&](Index v) { out.emplace_back(u, v); });
        return out;
    }

    bool is_chain() const { return 2 * comparable_pairs() == size() * (size() - (size() ? 1 : 0)); }

    /// The suborder induced by `keep` (in increasing canonical order).
    PartialOrder induced(std::span<const Index> keep) const {
        BitMatrix m(keep.size());
        std::vector<std::string> names;
        for (Index i = 0; i < keep.size(); ++i) {
            names.push_back(names_[keep[i]]);
            for (Index j = 0; j < keep.size(); ++j)
                if (less(keep[i], keep[j])) m.set(i, j);
        }
        return {std::move(names), std::move(m)};
    }

    PartialOrder without(Index v) const {
        std::vector<Index> keep;
        for (Index i = 0; i < size(); ++i)
            if (i != v) keep.push_back(i);
        return induced(keep);
    }

    /// Same elements with every relation reversed.
    PartialOrder dual() const { return {names_, greater_}; }

    friend bool operator==(const PartialOrder& a, const PartialOrder& b) {
        return a.names_ == b.names_ && a.less_ == b.less_;
    }

private:
    void build_index() {
        index_.clear();
        for (Index i = 0; i < names_.size(); ++i) index_.emplace(names_[i], i);
    }

    std::vector<std::string> names_;
    BitMatrix less_;
    BitMatrix greater_;
    std::unordered_map<std::string, Index> index_;
};

/// Simple undirected graph, no loops.
class Graph {
public:
    Graph() = default;
    explicit Graph(std::size_t n) : Graph(default_names(n)) {}
    explicit Graph(std::vector<std::string> names) : names_(std::move(names)), adj_(names_.size()) {}

    std::size_t size() const noexcept { return names_.size(); }
    const std::vector<std::string>& names() const noexcept { return names_; }
    const std::string& name(Index v) const { return names_[v]; }

    void add_edge(Index u, Index v) {
        if (u == v) throw Error("graph loops are not allowed");
        adj_.set(u, v);
        adj_.set(v, u);
    }
    void remove_edge(Index u, Index v) {
        adj_.reset(u, v);
        adj_.reset(v, u);
    }

    bool has_edge(Index u, Index v) const { return adj_.test(u, v); }
    const Row& neighbors(Index v) const { return adj_.row(v); }
    std::size_t edge_count() const { return adj_.count() / 2; }

    std::vector<std::pair<Index, Index>> edges() const {
        std::vector<std::pair<Index, Index>> out;
        for (Index u = 0; u < size(); ++u)
            for (Index v = adj_.row(u).find_next(u); v != Row::npos; v = adj_.row(u).find_next(v))
                out.emplace_back(u, v);
        return out;
    }

    Graph complement() const {
        Graph g(names_);
        for (Index u = 0; u < size(); ++u)
            for (Index v = u + 1; v < size(); ++v)
                if (!has_edge(u, v)) g.add_edge(u, v);
        return g;
    }

    friend bool operator==(const Graph& a, const Graph& b) { return a.names_ == b.names_ && a.adj_ == b.adj_; }

private:
    std::vector<std::string> names_;
    BitMatrix adj_;
};

/// A total order given as a permutation: perm()[r] is the element of rank r.
class LinearOrder {
public:
    LinearOrder() = default;
    explicit LinearOrder(std::vector<Index> perm) : perm_(std::move(perm)), pos_(perm_.size(), perm_.size()) {
        for (Index r = 0; r < perm_.size(); ++r) {
            if (perm_[r] >= perm_.size() || pos_[perm_[r]] != perm_.size())
                throw Error("linear order is not a permutation");
            pos_[perm_[r]] = r;
        }
    }

    static LinearOrder identity(std::size_t n) {
        std::vector<Index> p(n);
        for (Index i = 0; i < n; ++i) p[i] = i;
        return LinearOrder(std::move(p));
    }

    std::size_t size() const noexcept { return perm_.size(); }
    const std::vector<Index>& perm() const noexcept { return perm_; }
    Index at(Index rank) const { return perm_[rank]; }
    Index rank(Index v) const { return pos_[v]; }
    bool precedes(Index u, Index v) const { return pos_[u] < pos_[v]; }

    /// after(v): elements ranked strictly after v.
    std::vector<Row> after_sets() const {
        std::vector<Row> out(size(), Row(size()));
        for (Index r = size(); r-- > 0;) {
            if (r + 1 < size()) {
                out[perm_[r]] = out[perm_[r + 1]];
                out[perm_[r]].set(perm_[r + 1]);
            }
        }
        return out;
    }

    friend bool operator==(const LinearOrder&, const LinearOrder&) = default;

private:
    std::vector<Index> perm_;
    std::vector<Index> pos_;
};

enum class PatternKind { TwoPlusTwo, ThreePlusOne };

inline const char* to_string(PatternKind k) { return k == PatternKind::TwoPlusTwo ? "2+2" : "3+1"; }

/// Four elements in role order.  TwoPlusTwo: x<y and z<w with the cross pairs
/// incomparable.  ThreePlusOne: x<y<z with w incomparable to all three.
struct Quad {
    Index x, y, z, w;
    PatternKind kind;
    friend bool operator==(const Quad&, const Quad&) = default;
};

/// Thrown when a linear extension breaks the 2+2 or 3+1 rule.
struct RuleViolation : Error {
    Quad witness;
    RuleViolation(std::string what, Quad q) : Error(std::move(what)), witness(q) {}
};

/// Transitively closes `pairs` over the named elements.  Throws
/// UnknownElement for undeclared names and CycleError if the pairs
/// contain a directed cycle.
inline PartialOrder make_poset(std::vector<std::string> elems,
                               std::span<const std::pair<std::string, std::string>> pairs) {
    std::unordered_map<std::string, Index> index;
    for (Index i = 0; i < elems.size(); ++i)
        if (!index.emplace(elems[i], i).second) throw Error("duplicate element '" + elems[i] + "'");
    auto lookup = [&](const std::string& s) {
        auto it = index.find(s);
        if (it == index.end()) throw UnknownElement("unknown element '" + s + "'");
        return it->second;
    };

    const std::size_t n = elems.size();
    BitMatrix m(n);
    for (const auto& [a, b] : pairs) m.set(lookup(a), lookup(b));

    // Warshall closure on bit rows
    for (Index k = 0; k < n; ++k)
        for (Index i = 0; i < n; ++i)
            if (m.test(i, k)) m.row(i) |= m.row(k);

    for (Index v = 0; v < n; ++v) {
        if (!m.test(v, v)) continue;
        // recover one cycle through v from the original arcs
        std::vector<std::vector<Index>> out(n);
        for (const auto& [a, b] : pairs) out[lookup(a)].push_back(lookup(b));
        std::vector<Index> parent(n, n);
        std::queue<Index> q;
        q.push(v);
        std::vector<Index> cycle;
        while (!q.empty() && cycle.empty()) {
            Index u = q.front();
            q.pop();
            for (Index w : out[u]) {
                if (w == v) {
                    for (Index c = u; c != v; c = parent[c]) cycle.push_back(c);
                    cycle.push_back(v);
                    std::reverse(cycle.begin(), cycle.end());
                    break;
                }
                if (parent[w] == n) {
                    parent[w] = u;
                    q.push(w);
                }
            }
        }
        throw CycleError("pairs contain a cycle through '" + elems[v] + "'", std::move(cycle));
    }
    return {std::move(elems), std::move(m)};
}

inline PartialOrder make_poset(std::vector<std::string> elems,
                               std::initializer_list<std::pair<std::string, std::string>> pairs) {
    std::vector<std::pair<std::string, std::string>> v(pairs);
    return make_poset(std::move(elems), std::span<const std::pair<std::string, std::string>>(v));
}

/// Closure of an index-based relation on n anonymous elements.
inline PartialOrder make_poset(std::size_t n, std::span<const Arc> arcs) {
    auto names = default_names(n);
    std::vector<std::pair<std::string, std::string>> named;
    named.reserve(arcs.size());
    for (auto [u, v] : arcs) named.emplace_back(names[u], names[v]);
    return make_poset(std::move(names), std::span<const std::pair<std::string, std::string>>(named));
}

inline Graph comparability_graph(const PartialOrder& p) {
    Graph g(p.names());
    for (auto [u, v] : p.pairs()) g.add_edge(u, v);
    return g;
}

inline Graph incomparability_graph(const PartialOrder& p) { return comparability_graph(p).complement(); }

namespace detail {

// Calls `emit` for each induced occurrence in lexicographic (x, y, z, w)
// order until it returns false.
template <typename Emit>
void scan_pattern(const PartialOrder& p, PatternKind kind, Emit&& emit) {
    const std::size_t n = p.size();
    std::vector<Row> inc(n);
    for (Index v = 0; v < n; ++v) inc[v] = p.incomparable_set(v);
    if (kind == PatternKind::TwoPlusTwo) {
        for (Index x = 0; x < n; ++x)
            for (Index y = p.upper(x).find_first(); y != Row::npos; y = p.upper(x).find_next(y)) {
                Row zs = inc[x] & inc[y];
                for (Index z = zs.find_next(x); z != Row::npos; z = zs.find_next(z)) {
                    Row ws = p.upper(z) & inc[x] & inc[y];
                    for (Index w = ws.find_first(); w != Row::npos; w = ws.find_next(w))
                        if (!emit(Quad{x, y, z, w, kind})) return;
                }
            }
    } else {
        for (Index x = 0; x < n; ++x)
            for (Index y = p.upper(x).find_first(); y != Row::npos; y = p.upper(x).find_next(y)) {
                Row xy = inc[x] & inc[y];
                for (Index z = p.upper(y).find_first(); z != Row::npos; z = p.upper(y).find_next(z)) {
                    Row ws = xy & inc[z];
                    for (Index w = ws.find_first(); w != Row::npos; w = ws.find_next(w))
                        if (!emit(Quad{x, y, z, w, kind})) return;
                }
            }
    }
}

}  // namespace detail

/// All induced occurrences of the pattern.  2+2 occurrences are listed once
/// with x < z by index; results are in lexicographic (x, y, z, w) order.
inline std::vector<Quad> find_pattern(const PartialOrder& p, PatternKind kind) {
    std::vector<Quad> out;
    detail::scan_pattern(p, kind, [&](const Quad& q) {
        out.push_back(q);
        return true;
    });
    return out;
}

inline std::optional<Quad> first_pattern(const PartialOrder& p, PatternKind kind) {
    std::optional<Quad> found;
    detail::scan_pattern(p, kind, [&](const Quad& q) {
        found = q;
        return false;
    });
    return found;
}

inline bool is_interval_order(const PartialOrder& p) { return !first_pattern(p, PatternKind::TwoPlusTwo); }

inline bool is_semiorder_order(const PartialOrder& p) {
    return is_interval_order(p) && !first_pattern(p, PatternKind::ThreePlusOne);
}

inline bool is_linear_extension(const PartialOrder& p, const LinearOrder& l) {
    if (l.size() != p.size()) return false;
    for (auto [u, v] : p.pairs())
        if (!l.precedes(u, v)) return false;
    return true;
}

/// Outcome of a rule check: empty means both rules hold.
struct RuleVerdict {
    std::optional<Quad> violation;
    bool ok() const noexcept { return !violation.has_value(); }
};

/// Checks the 2+2 and 3+1 rules for the linear extension `l` of `p`.
///
/// A 2+2 violation is x<y, z<w in P with x||w, z||y in P but x before w and
/// z before y in L.  A 3+1 violation is x<y<z in P with w||x, w||z in P and
/// x before w before z in L.  The first violation is reported, 2+2 before
/// 3+1, each in lexicographic (x, y, z, w) order.
inline RuleVerdict fulfills_rules(const PartialOrder& p, const LinearOrder& l) {
    if (!is_linear_extension(p, l)) throw NotAnExtension("linear order is not an extension of the partial order");
    const std::size_t n = p.size();
    const auto after = l.after_sets();
    std::vector<Row> inc(n);
    for (Index v = 0; v < n; ++v) inc[v] = p.incomparable_set(v);

    for (Index x = 0; x < n; ++x) {
        for (Index y = p.upper(x).find_first(); y != Row::npos; y = p.upper(x).find_next(y)) {
            for (Index z = 0; z < n; ++z) {
                if (!inc[y].test(z) || !l.precedes(z, y)) continue;
                Row ws = p.upper(z) & inc[x] & after[x];
                if (auto w = ws.find_first(); w != Row::npos)
                    return {Quad{x, y, z, w, PatternKind::TwoPlusTwo}};
            }
        }
    }
    for (Index x = 0; x < n; ++x) {
        for (Index y = p.upper(x).find_first(); y != Row::npos; y = p.upper(x).find_next(y)) {
            for (Index z = p.upper(y).find_first(); z != Row::npos; z = p.upper(y).find_next(z)) {
                Row ws = inc[x] & inc[z] & after[x];
                ws -= after[z];
                ws.reset(z);
                if (auto w = ws.find_first(); w != Row::npos)
                    return {Quad{x, y, z, w, PatternKind::ThreePlusOne}};
            }
        }
    }
    return {};
}

/// Kahn's algorithm where, among available vertices, the one with the
/// smallest `key` goes first (ties by index).  Throws CycleError with one
/// directed cycle when the arcs are cyclic.
inline LinearOrder topological_order(std::size_t n, std::span<const Arc> arcs, std::span<const std::int64_t> key) {
    std::vector<std::vector<Index>> out(n);
    std::vector<std::size_t> indeg(n, 0);
    for (auto [u, v] : arcs) {
        out[u].push_back(v);
        ++indeg[v];
    }
    using Item = std::pair<std::int64_t, Index>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> ready;
    for (Index v = 0; v < n; ++v)
        if (indeg[v] == 0) ready.emplace(key.empty() ? std::int64_t(v) : key[v], v);
    std::vector<Index> perm;
    perm.reserve(n);
    while (!ready.empty()) {
        Index u = ready.top().second;
        ready.pop();
        perm.push_back(u);
        for (Index v : out[u])
            if (--indeg[v] == 0) ready.emplace(key.empty() ? std::int64_t(v) : key[v], v);
    }
    if (perm.size() == n) return LinearOrder(std::move(perm));

    // Every leftover vertex has a leftover predecessor; walk back until a repeat.
    std::vector<Index> pred(n, n);
    for (auto [u, v] : arcs)
        if (indeg[u] > 0 && indeg[v] > 0) pred[v] = u;
    Index start = n;
    for (Index v = 0; v < n; ++v)
        if (indeg[v] > 0) {
            start = v;
            break;
        }
    std::vector<Index> seen_at(n, n);
    std::vector<Index> walk;
    Index cur = start;
    while (seen_at[cur] == n) {
        seen_at[cur] = walk.size();
        walk.push_back(cur);
        cur = pred[cur];
    }
    std::vector<Index> cycle(walk.begin() + static_cast<std::ptrdiff_t>(seen_at[cur]), walk.end());
    std::reverse(cycle.begin(), cycle.end());
    throw CycleError("arc set contains a directed cycle", std::move(cycle));
}

/// Topological order with smallest canonical index first.
inline LinearOrder topological_order(std::size_t n, std::span<const Arc> arcs) {
    return topological_order(n, arcs, std::span<const std::int64_t>{});
}

}  // namespace lso

#endif  // LSO_POSET_HPP
