#ifndef LSO_ORACLE_HPP
#define LSO_ORACLE_HPP

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <random>
#include <vector>

#include "orientation.hpp"
#include "poset.hpp"

namespace lso {

/// Seeded generator: mt19937_64 with explicit mappings, so a seed yields the
/// same stream on every platform (the std distributions are not portable).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    /// Uniform in [0, 1) with 53 random bits.
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    bool bernoulli(double p) { return uniform() < p; }

    /// Uniform in [0, bound) by rejection.
    std::uint64_t below(std::uint64_t bound) {
        if (bound == 0) throw Error("empty range");
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
        std::uint64_t x;
        do x = next();
        while (x >= limit);
        return x % bound;
    }

    /// Uniform in [lo, hi].
    std::int64_t between(std::int64_t lo, std::int64_t hi) {
        return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo) + 1));
    }

    template <class T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[below(i)]);
    }

    std::vector<Index> permutation(std::size_t n) {
        std::vector<Index> p(n);
        std::iota(p.begin(), p.end(), Index{0});
        shuffle(p);
        return p;
    }

private:
    std::mt19937_64 engine_;
};

namespace detail {

// Does placing `e` after `placed` (e last so far) complete a 2+2 or 3+1
// rule violation?  Every violation is caught at its last element.
inline bool completes_violation(const PartialOrder& p, const std::vector<Index>& placed, Index e) {
    const std::size_t k = placed.size();
    auto inc = [&](Index a, Index b) { return p.incomparable(a, b); };
    auto lt = [&](Index a, Index b) { return p.less(a, b); };
    std::vector<std::size_t> rank(p.size(), SIZE_MAX);
    for (std::size_t i = 0; i < k; ++i) rank[placed[i]] = i;
    rank[e] = k;
    auto before = [&](Index a, Index b) { return rank[a] < rank[b]; };
    std::vector<Index> all(placed);
    all.push_back(e);
    // 2+2: x<y, z<w, x||w, z||y, x before w, z before y; e is y or w
    for (Index a : all)
        for (Index b : all)
            for (Index c : all) {
                if (a == b || a == c || b == c || a == e || b == e || c == e) continue;
                // e = y: x = a, z = b, w = c
                if (lt(a, e) && lt(b, c) && inc(a, c) && inc(b, e) && before(a, c) && before(b, e)) return true;
                // e = w: x = a, y = b, z = c
                if (lt(a, b) && lt(c, e) && inc(a, e) && inc(c, b) && before(a, e) && before(c, b)) return true;
                // 3+1 with e = z: x = a, y = b, w = c
                if (lt(a, b) && lt(b, e) && inc(c, a) && inc(c, e) && before(a, c) && before(c, e)) return true;
            }
    return false;
}

}  // namespace detail

/// Brute force: does some linear extension of P fulfil both rules?
/// Extensions are built by backtracking, smallest available element first,
/// abandoning a prefix as soon as it completes a violation.
inline bool oracle_recognize(const PartialOrder& p, std::vector<Index>* witness = nullptr) {
    const std::size_t n = p.size();
    if (n > 10) throw TooLarge("oracle is limited to 10 elements");
    std::vector<Index> prefix;
    std::vector<std::size_t> missing(n);
    for (Index v = 0; v < n; ++v) missing[v] = p.lower(v).count();
    std::vector<bool> used(n, false);
    std::function<bool()> go = [&]() -> bool {
        if (prefix.size() == n) {
            if (!fulfills_rules(p, LinearOrder(prefix)).ok()) throw ContractViolation("oracle pruning missed a violation");
            if (witness) *witness = prefix;
            return true;
        }
        for (Index v = 0; v < n; ++v) {
            if (used[v] || missing[v] != 0) continue;
            if (detail::completes_violation(p, prefix, v)) continue;
            used[v] = true;
            prefix.push_back(v);
            for_each_bit(p.upper(v), [&](Index w) { --missing[w]; });
            bool ok = go();
            for_each_bit(p.upper(v), [&](Index w) { ++missing[w]; });
            prefix.pop_back();
            used[v] = false;
            if (ok) return true;
        }
        return false;
    };
    return go();
}

/// Every strict partial order on n labelled elements, in a fixed order:
/// each pair i<j takes one of {none, i<j, j<i}, enumerated as base-3
/// digits, and only transitive relations are kept.
inline std::vector<PartialOrder> enumerate_posets(std::size_t n) {
    if (n > 5) throw TooLarge("poset enumeration is limited to 5 elements");
    std::vector<Arc> pairs;
    for (Index i = 0; i < n; ++i)
        for (Index j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
    std::vector<PartialOrder> out;
    std::vector<int> digit(pairs.size(), 0);
    const auto names = default_names(n);
    while (true) {
        BitMatrix m(n);
        for (std::size_t k = 0; k < pairs.size(); ++k) {
            auto [i, j] = pairs[k];
            if (digit[k] == 1) m.set(i, j);
            if (digit[k] == 2) m.set(j, i);
        }
        bool transitive = true;
        for (Index a = 0; a < n && transitive; ++a)
            for (Index b = 0; b < n && transitive; ++b) {
                if (!m.test(a, b)) continue;
                for (Index c = 0; c < n; ++c)
                    if (m.test(b, c) && !m.test(a, c)) {
                        transitive = false;
                        break;
                    }
            }
        // a transitive relation without 2-cycles has no loops, so it is a strict order
        if (transitive) out.emplace_back(names, std::move(m));
        std::size_t k = 0;
        while (k < digit.size() && digit[k] == 2) digit[k++] = 0;
        if (k == digit.size()) break;
        ++digit[k];
    }
    return out;
}

/// All transitive orientations of g, as partial orders, by backtracking
/// over edges with early rejection of non-transitive partial choices.
inline std::vector<PartialOrder> enumerate_transitive_orientations(const Graph& g) {
    const auto edges = g.edges();
    if (edges.size() > 21) throw TooLarge("orientation enumeration is limited to 21 edges");
    const std::size_t n = g.size();
    BitMatrix m(n);
    std::vector<PartialOrder> out;
    // an arc (a, b) is consistent with the arcs chosen so far
    auto consistent = [&](Index a, Index b) {
        for (Index c = 0; c < n; ++c) {
            if (c == a || c == b) continue;
            if (m.test(b, c) && (!g.has_edge(a, c) || m.test(c, a))) return false;
            if (m.test(c, a) && (!g.has_edge(c, b) || m.test(b, c))) return false;
        }
        return true;
    };
    std::function<void(std::size_t)> go = [&](std::size_t k) {
        if (k == edges.size()) {
            for (Index a = 0; a < n; ++a)
                for (Index b = 0; b < n; ++b)
                    if (m.test(a, b))
                        for (Index c = 0; c < n; ++c)
                            if (m.test(b, c) && !m.test(a, c)) return;
            out.emplace_back(g.names(), m);
            return;
        }
        auto [u, v] = edges[k];
        for (auto [a, b] : {Arc{u, v}, Arc{v, u}}) {
            if (!consistent(a, b)) continue;
            m.set(a, b);
            go(k + 1);
            m.reset(a, b);
        }
    };
    go(0);
    return out;
}

/// Random order: arcs along a random permutation, each kept with
/// probability p, then transitively closed.
inline PartialOrder random_poset(std::size_t n, double p, std::uint64_t seed) {
    if (!(p >= 0.0 && p <= 1.0)) throw Error("density must lie in [0, 1]");
    Rng rng(seed);
    auto perm = rng.permutation(n);
    std::vector<Arc> arcs;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (rng.bernoulli(p)) arcs.emplace_back(perm[i], perm[j]);
    return make_poset(n, arcs);
}

/// Random linear-semiorder: a random linear order intersected with the
/// semiorder of unit-length intervals at random distinct integer positions
/// (length `spread`; shorter means more comparable pairs).
inline PartialOrder random_linear_semiorder(std::size_t n, std::int64_t spread, std::uint64_t seed) {
    Rng rng(seed);
    auto perm = rng.permutation(n);
    std::vector<std::int64_t> slots(n);
    {
        std::vector<Index> pos = rng.permutation(2 * n + 1);
        for (Index v = 0; v < n; ++v) slots[v] = static_cast<std::int64_t>(pos[v]);
    }
    std::vector<std::size_t> rank(n);
    for (std::size_t i = 0; i < n; ++i) rank[perm[i]] = i;
    std::vector<Arc> arcs;
    for (Index u = 0; u < n; ++u)
        for (Index v = 0; v < n; ++v)
            if (u != v && rank[u] < rank[v] && slots[u] + spread < slots[v]) arcs.emplace_back(u, v);
    return make_poset(n, arcs);
}

/// G(n, p) random graph.
inline Graph random_graph(std::size_t n, double p, std::uint64_t seed) {
    Rng rng(seed);
    Graph g(n);
    for (Index u = 0; u < n; ++u)
        for (Index v = u + 1; v < n; ++v)
            if (rng.bernoulli(p)) g.add_edge(u, v);
    return g;
}

}  // namespace lso

#endif  // LSO_ORACLE_HPP
