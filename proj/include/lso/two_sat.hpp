#ifndef LSO_TWO_SAT_HPP
#define LSO_TWO_SAT_HPP

#include <cstddef>
#include <cstdint>
#include <utility>
#include <variant>
#include <vector>

#include "errors.hpp"

namespace lso::sat {

/// A literal is a variable together with its polarity.
struct Literal {
    std::size_t var;
    bool positive = true;

    Literal operator!() const { return {var, !positive}; }
    friend bool operator==(const Literal&, const Literal&) = default;
};

inline Literal pos(std::size_t v) { return {v, true}; }
inline Literal neg(std::size_t v) { return {v, false}; }

using Clause = std::pair<Literal, Literal>;

/// 2-CNF formula.  A unit clause is written with its literal repeated.
struct TwoCnf {
    std::size_t num_vars = 0;
    std::vector<Clause> clauses;

    void add(Literal a, Literal b) {
        if (a.var >= num_vars || b.var >= num_vars) throw Error("2-CNF literal refers to an undeclared variable");
        clauses.emplace_back(a, b);
    }
};

using Assignment = std::vector<bool>;

struct Unsatisfiable {
    /// A variable whose two literals share a strongly connected component.
    std::size_t var;
};

using SatResult = std::variant<Assignment, Unsatisfiable>;

inline bool satisfies(const TwoCnf& f, const Assignment& a) {
    auto val = [&](Literal l) { return a[l.var] == l.positive; };
    for (const auto& [x, y] : f.clauses)
        if (!val(x) && !val(y)) return false;
    return true;
}

namespace detail {

// node 2v is the positive literal of v, 2v+1 the negative one
inline std::size_t node(Literal l) { return 2 * l.var + (l.positive ? 0 : 1); }

}  // namespace detail

/// Implication-graph / strongly-connected-component 2-SAT.  Components are
/// numbered in the order Tarjan's algorithm closes them, which is a reverse
/// topological order of the condensation; a variable is set true iff its
/// positive literal's component closes first.  Runs in O(vars + clauses)
/// and is deterministic for a fixed clause sequence.
inline SatResult solve(const TwoCnf& f) {
    const std::size_t nodes = 2 * f.num_vars;

    // CSR adjacency: clause (a or b) gives !a -> b and !b -> a
    std::vector<std::uint32_t> start(nodes + 1, 0);
    for (const auto& [a, b] : f.clauses) {
        ++start[detail::node(!a) + 1];
        ++start[detail::node(!b) + 1];
    }
    for (std::size_t i = 0; i < nodes; ++i) start[i + 1] += start[i];
    std::vector<std::uint32_t> adj(start[nodes]);
    {
        std::vector<std::uint32_t> fill(start.begin(), start.end() - 1);
        for (const auto& [a, b] : f.clauses) {
            adj[fill[detail::node(!a)]++] = static_cast<std::uint32_t>(detail::node(b));
            adj[fill[detail::node(!b)]++] = static_cast<std::uint32_t>(detail::node(a));
        }
    }

    // iterative Tarjan
    constexpr std::uint32_t unvisited = UINT32_MAX;
    std::vector<std::uint32_t> index(nodes, unvisited), low(nodes, 0), comp(nodes, unvisited);
    std::vector<std::uint32_t> stack;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> call;  // node, next edge
    std::uint32_t counter = 0, comps = 0;
    // negative literals are visited first so that unconstrained variables end up false
    for (std::uint32_t r = 0; r < nodes; ++r) {
        const std::uint32_t root = r ^ 1u;
        if (index[root] != unvisited) continue;
        call.emplace_back(root, start[root]);
        index[root] = low[root] = counter++;
        stack.push_back(root);
        while (!call.empty()) {
            auto& [v, e] = call.back();
            if (e < start[v + 1]) {
                std::uint32_t w = adj[e++];
                if (index[w] == unvisited) {
                    index[w] = low[w] = counter++;
                    stack.push_back(w);
                    call.emplace_back(w, start[w]);
                } else if (comp[w] == unvisited && index[w] < low[v]) {
                    low[v] = index[w];
                }
                continue;
            }
            if (low[v] == index[v]) {
                std::uint32_t w;
                do {
                    w = stack.back();
                    stack.pop_back();
                    comp[w] = comps;
                } while (w != v);
                ++comps;
            }
            std::uint32_t done = v;
            call.pop_back();
            if (!call.empty() && low[done] < low[call.back().first]) low[call.back().first] = low[done];
        }
    }

    Assignment a(f.num_vars, false);
    for (std::size_t v = 0; v < f.num_vars; ++v) {
        if (comp[2 * v] == comp[2 * v + 1]) return Unsatisfiable{v};
        a[v] = comp[2 * v] < comp[2 * v + 1];
    }
    return a;
}

}  // namespace lso::sat

#endif  // LSO_TWO_SAT_HPP
