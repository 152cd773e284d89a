// Shared fixtures and brute-force reference checks for the test suite.
// Everything here is deliberately naive: direct loops over tuples and
// permutations, independent of the bitset code in the library.
#pragma once

#include <algorithm>
#include <array>
#include <fstream>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "lso/lso.hpp"

namespace fixtures {

using lso::Index;

inline lso::PartialOrder chevron_dual() {
    return lso::make_poset({"a", "b", "c", "d", "e", "f"},
                           {{"a", "b"}, {"a", "e"}, {"b", "d"}, {"c", "d"}, {"c", "f"}, {"e", "f"}});
}

inline lso::PartialOrder p_i() {
    return lso::make_poset({"a1", "a2", "a3", "b1", "b2", "b3", "b4", "b5", "c1", "c2"},
                           {{"a1", "a2"},
                            {"a2", "a3"},
                            {"b1", "b2"},
                            {"b2", "b3"},
                            {"b3", "b4"},
                            {"b4", "b5"},
                            {"b2", "a2"},
                            {"a2", "b4"},
                            {"b2", "c2"},
                            {"c1", "b4"}});
}

inline lso::PartialOrder two_plus_two() { return lso::make_poset({"x", "y", "z", "w"}, {{"x", "y"}, {"z", "w"}}); }

inline lso::PartialOrder three_plus_one() {
    return lso::make_poset({"x", "y", "z", "w"}, {{"x", "y"}, {"y", "z"}});
}

inline lso::Graph cycle_graph(std::size_t n) {
    lso::Graph g(n);
    for (Index i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    return g;
}

inline lso::Graph complete_graph(std::size_t n) {
    lso::Graph g(n);
    for (Index i = 0; i < n; ++i)
        for (Index j = i + 1; j < n; ++j) g.add_edge(i, j);
    return g;
}

inline std::string data_path(const std::string& name) { return std::string(LSO_DATA_DIR) + "/" + name; }

inline lso::PartialOrder load_poset(const std::string& name) {
    std::ifstream in(data_path(name));
    return lso::io::read_poset(in);
}

inline lso::LinearOrder order_of(const lso::PartialOrder& p, std::initializer_list<const char*> names) {
    std::vector<Index> perm;
    for (auto s : names) perm.push_back(p.index_of(s));
    return lso::LinearOrder(perm);
}

inline std::vector<lso::Arc> arcs_by_name(const lso::PartialOrder& p,
                                          std::initializer_list<std::pair<const char*, const char*>> pairs) {
    std::vector<lso::Arc> out;
    for (auto [a, b] : pairs) out.emplace_back(p.index_of(a), p.index_of(b));
    std::sort(out.begin(), out.end());
    return out;
}

// Seeded search for inputs whose forbidden-configuration-free orientation
// still has obstructions; about one in a thousand random inputs with n <= 12.
inline std::vector<lso::PartialOrder> obstructed_inputs(std::size_t count, std::uint64_t seed) {
    lso::Rng rng(seed);
    std::vector<lso::PartialOrder> out;
    for (int i = 0; out.size() < count; ++i) {
        auto n = static_cast<std::size_t>(rng.between(6, 12));
        auto p = i % 2 ? lso::random_linear_semiorder(n, rng.between(1, static_cast<std::int64_t>(n)), rng.next())
                       : lso::random_poset(n, 0.05 + 0.4 * rng.uniform(), rng.next());
        auto eo = lso::compute_Eo(p);
        auto f = lso::orient_forbidden_free(p, eo);
        if (auto* o = std::get_if<lso::Orientation>(&f); o && lso::find_obstruction(p, *o)) out.push_back(std::move(p));
    }
    return out;
}

}  // namespace fixtures

namespace naive {

using lso::Index;

inline bool lt(const lso::PartialOrder& p, Index a, Index b) { return p.less(a, b); }
inline bool inc(const lso::PartialOrder& p, Index a, Index b) { return a != b && !p.less(a, b) && !p.less(b, a); }

inline bool distinct(std::initializer_list<Index> xs) {
    std::set<Index> s(xs);
    return s.size() == xs.size();
}

/// Induced 2+2 occurrences, as sets of two chains {x<y, z<w}, each once (x < z).
inline std::set<std::array<Index, 4>> two_plus_two(const lso::PartialOrder& p) {
    std::set<std::array<Index, 4>> out;
    const auto n = p.size();
    for (Index x = 0; x < n; ++x)
        for (Index y = 0; y < n; ++y)
            for (Index z = 0; z < n; ++z)
                for (Index w = 0; w < n; ++w) {
                    if (!distinct({x, y, z, w})) continue;
                    if (lt(p, x, y) && lt(p, z, w) && inc(p, x, z) && inc(p, x, w) && inc(p, y, z) && inc(p, y, w) &&
                        x < z)
                        out.insert({x, y, z, w});
                }
    return out;
}

/// Induced 3+1 occurrences (x<y<z, w incomparable to all three).
inline std::set<std::array<Index, 4>> three_plus_one(const lso::PartialOrder& p) {
    std::set<std::array<Index, 4>> out;
    const auto n = p.size();
    for (Index x = 0; x < n; ++x)
        for (Index y = 0; y < n; ++y)
            for (Index z = 0; z < n; ++z)
                for (Index w = 0; w < n; ++w) {
                    if (!distinct({x, y, z, w})) continue;
                    if (lt(p, x, y) && lt(p, y, z) && inc(p, w, x) && inc(p, w, y) && inc(p, w, z))
                        out.insert({x, y, z, w});
                }
    return out;
}

/// Does L (given as ranks) break the 2+2 or 3+1 rule?
inline bool breaks_rules(const lso::PartialOrder& p, const std::vector<Index>& perm) {
    const auto n = p.size();
    std::vector<std::size_t> r(n);
    for (std::size_t i = 0; i < n; ++i) r[perm[i]] = i;
    for (Index x = 0; x < n; ++x)
        for (Index y = 0; y < n; ++y)
            for (Index z = 0; z < n; ++z)
                for (Index w = 0; w < n; ++w) {
                    if (!distinct({x, y, z, w})) continue;
                    if (lt(p, x, y) && lt(p, z, w) && inc(p, x, w) && inc(p, z, y) && r[x] < r[w] && r[z] < r[y])
                        return true;
                    if (lt(p, x, y) && lt(p, y, z) && inc(p, w, x) && inc(p, w, z) && r[x] < r[w] && r[w] < r[z])
                        return true;
                }
    return false;
}

inline bool extends(const lso::PartialOrder& p, const std::vector<Index>& perm) {
    for (std::size_t i = 0; i < perm.size(); ++i)
        for (std::size_t j = i + 1; j < perm.size(); ++j)
            if (p.less(perm[j], perm[i])) return false;
    return true;
}

/// Linear-semiorder test over all n! permutations: some extension obeys both rules (n <= 8).
inline bool linear_semiorder_by_permutations(const lso::PartialOrder& p) {
    std::vector<Index> perm(p.size());
    std::iota(perm.begin(), perm.end(), Index{0});
    do {
        if (extends(p, perm) && !breaks_rules(p, perm)) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

/// Edges of the graph that lie on an induced C4 or an induced claw.
inline std::set<std::pair<Index, Index>> c4_claw_edges(const lso::Graph& g) {
    std::set<std::pair<Index, Index>> out;
    const auto n = g.size();
    auto add = [&](Index a, Index b) { out.insert({std::min(a, b), std::max(a, b)}); };
    auto e = [&](Index a, Index b) { return g.has_edge(a, b); };
    for (Index a = 0; a < n; ++a)
        for (Index b = 0; b < n; ++b)
            for (Index c = 0; c < n; ++c)
                for (Index d = 0; d < n; ++d) {
                    if (!distinct({a, b, c, d})) continue;
                    // cycle a-b-c-d-a without chords
                    if (e(a, b) && e(b, c) && e(c, d) && e(d, a) && !e(a, c) && !e(b, d)) {
                        add(a, b), add(b, c), add(c, d), add(d, a);
                    }
                    // claw centred at a
                    if (e(a, b) && e(a, c) && e(a, d) && !e(b, c) && !e(b, d) && !e(c, d)) {
                        add(a, b), add(a, c), add(a, d);
                    }
                }
    return out;
}

/// Truth-table 2-SAT.
inline bool satisfiable(const lso::sat::TwoCnf& f) {
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << f.num_vars); ++m) {
        lso::sat::Assignment a(f.num_vars);
        for (std::size_t v = 0; v < f.num_vars; ++v) a[v] = (m >> v) & 1;
        if (lso::sat::satisfies(f, a)) return true;
    }
    return false;
}

/// Is every arc composition present (and no loops)?
inline bool transitive(const lso::BitMatrix& m) {
    const auto n = m.size();
    for (Index a = 0; a < n; ++a) {
        if (m.test(a, a)) return false;
        for (Index b = 0; b < n; ++b)
            for (Index c = 0; c < n; ++c)
                if (m.test(a, b) && m.test(b, c) && !m.test(a, c)) return false;
    }
    return true;
}

/// Count of transitive orientations over all 2^|E| orientations.
inline std::size_t transitive_orientation_count(const lso::Graph& g) {
    auto edges = g.edges();
    std::size_t count = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << edges.size()); ++mask) {
        lso::BitMatrix m(g.size());
        for (std::size_t k = 0; k < edges.size(); ++k) {
            auto [u, v] = edges[k];
            if ((mask >> k) & 1)
                m.set(v, u);
            else
                m.set(u, v);
        }
        count += transitive(m);
    }
    return count;
}

/// Forbidden vertex-ordering patterns a-e by direct quadruple scan over positions.
inline std::size_t pattern_count(const lso::Graph& g, const std::vector<Index>& sigma) {
    const auto n = g.size();
    auto e = [&](std::size_t i, std::size_t j) { return g.has_edge(sigma[i], sigma[j]); };
    std::size_t count = 0;
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v)
            for (std::size_t x = v + 1; x < n; ++x)
                if (e(u, x) && !e(u, v) && !e(v, x)) ++count;
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v)
            for (std::size_t w = v + 1; w < n; ++w)
                for (std::size_t x = w + 1; x < n; ++x) {
                    if (e(u, w) && e(v, x) && !e(u, x) && !e(v, w)) ++count;
                    if (!e(u, w) && !e(v, x) && e(u, x) && e(v, w)) ++count;
                    if (e(u, w) && e(w, x) && !e(u, v) && !e(v, x)) ++count;
                    if (!e(u, w) && !e(w, x) && e(u, v) && e(v, x)) ++count;
                }
    return count;
}

inline bool has_pattern_free_ordering(const lso::Graph& g) {
    std::vector<Index> sigma(g.size());
    std::iota(sigma.begin(), sigma.end(), Index{0});
    do {
        if (pattern_count(g, sigma) == 0) return true;
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return false;
}

/// Forbidden configuration of P + F by direct tuple scan.
inline bool has_forbidden_config(const lso::PartialOrder& p, const lso::Orientation& f) {
    const auto n = p.size();
    for (Index x = 0; x < n; ++x)
        for (Index y = 0; y < n; ++y)
            for (Index z = 0; z < n; ++z) {
                if (!distinct({x, y, z})) continue;
                if (lt(p, x, y) && f.has(y, z) && f.has(z, x)) return true;
                for (Index w = 0; w < n; ++w) {
                    if (!distinct({x, y, z, w})) continue;
                    if (lt(p, x, y) && lt(p, z, w) && f.has(z, y) && f.has(x, w)) return true;
                    if (lt(p, x, y) && lt(p, y, z) && f.has(w, z) && f.has(x, w)) return true;
                }
            }
    return false;
}

/// Obstruction of P + F by direct scan over 6-tuples, pruned by the base arcs.
inline bool has_obstruction(const lso::PartialOrder& p, const lso::Orientation& f) {
    const auto n = p.size();
    std::vector<Index> v(6);
    for (v[0] = 0; v[0] < n; ++v[0])
        for (v[1] = 0; v[1] < n; ++v[1]) {
            if (!lt(p, v[0], v[1])) continue;
            for (v[2] = 0; v[2] < n; ++v[2])
                for (v[3] = 0; v[3] < n; ++v[3])
                    for (v[4] = 0; v[4] < n; ++v[4])
                        for (v[5] = 0; v[5] < n; ++v[5]) {
                            bool regular = lt(p, v[2], v[3]) && lt(p, v[4], v[5]) && f.has(v[2], v[1]) &&
                                           f.has(v[4], v[3]) && f.has(v[0], v[5]);
                            bool skewed = lt(p, v[1], v[2]) && lt(p, v[4], v[5]) && f.has(v[3], v[2]) &&
                                          f.has(v[4], v[3]) && f.has(v[0], v[5]) && f.has(v[5], v[3]);
                            if (regular || skewed) return true;
                        }
        }
    return false;
}

inline bool acyclic(const lso::PartialOrder& p, const lso::Orientation& f) {
    try {
        (void)lso::topological_order(p.size(), lso::union_arcs(p, f));
        return true;
    } catch (const lso::CycleError&) {
        return false;
    }
}

}  // namespace naive
