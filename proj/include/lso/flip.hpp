#ifndef LSO_FLIP_HPP
#define LSO_FLIP_HPP

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <vector>

#include "recognizer.hpp"
#include "semiorder.hpp"

namespace lso {

/// Per element a triangle between an apex on the upper line and a base
/// interval on the lower line.  u < v iff apex(u) < apex(v) and the base of
/// u lies completely left of the base of v.
struct TriangleRep {
    std::vector<std::int64_t> apex;
    IntervalRep base;

    std::size_t size() const noexcept { return apex.size(); }

    bool left_of(Index u, Index v) const { return apex[u] < apex[v] && base.left_of(u, v); }

    /// Apex ranks 0..n-1 and the base intervals, from a certificate.
    static TriangleRep from_certificate(const Certificate& c) {
        TriangleRep t;
        t.apex.resize(c.order.size());
        for (Index v = 0; v < c.order.size(); ++v) t.apex[v] = static_cast<std::int64_t>(c.order.rank(v));
        t.base = c.intervals;
        return t;
    }

    /// Certificate reading L off the apex order.  Apexes must be distinct.
    Certificate to_certificate() const {
        std::vector<Index> perm(size());
        std::iota(perm.begin(), perm.end(), Index{0});
        std::sort(perm.begin(), perm.end(), [&](Index a, Index b) { return apex[a] < apex[b]; });
        for (std::size_t i = 1; i < perm.size(); ++i)
            if (apex[perm[i - 1]] == apex[perm[i]]) throw ContractViolation("triangle apexes are not distinct");
        return {LinearOrder(std::move(perm)), base};
    }

    /// The order this representation describes.
    PartialOrder decode(std::vector<std::string> names) const {
        BitMatrix m(size());
        for (Index u = 0; u < size(); ++u)
            for (Index v = 0; v < size(); ++v)
                if (u != v && left_of(u, v)) m.set(u, v);
        return {std::move(names), std::move(m)};
    }
};

inline Row member_row(std::size_t n, std::span<const Index> members) {
    Row r(n);
    for (Index v : members) {
        if (v >= n) throw UnknownElement("autonomous-set member out of range");
        r.set(v);
    }
    return r;
}

inline std::vector<Index> row_members(const Row& r) {
    std::vector<Index> out;
    for_each_bit(r, [&](Index v) { out.push_back(v); });
    return out;
}

/// Every outsider is above all of A, below all of A, or incomparable to all of A.
inline bool is_autonomous(const PartialOrder& p, const Row& a) {
    if (a.none()) return false;
    const Row outside = ~a;
    for (Index v = outside.find_first(); v != Row::npos; v = outside.find_next(v)) {
        Row below = p.lower(v) & a, above = p.upper(v) & a;
        const auto k = a.count();
        bool all_below = below.count() == k, all_above = above.count() == k;
        bool none = below.none() && above.none();
        if (!(all_below || all_above || none)) return false;
    }
    return true;
}

inline bool is_autonomous(const PartialOrder& p, std::span<const Index> a) {
    return is_autonomous(p, member_row(p.size(), a));
}

/// All autonomous sets with 2 <= |A| < n, ordered by size and then
/// lexicographically.  Brute force over subsets; n is limited to 16.
inline std::vector<std::vector<Index>> find_autonomous_sets(const PartialOrder& p) {
    const std::size_t n = p.size();
    if (n > 16) throw TooLarge("autonomous-set search is limited to 16 elements");
    std::vector<std::vector<Index>> out;
    for (std::size_t k = 2; k < n; ++k) {
        // subsets of size k in lexicographic order
        std::vector<Index> idx(k);
        std::iota(idx.begin(), idx.end(), Index{0});
        while (true) {
            if (is_autonomous(p, std::span<const Index>(idx))) out.push_back(idx);
            std::size_t i = k;
            while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
            if (i == 0) break;
            ++idx[i - 1];
            for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
        }
    }
    return out;
}

/// P with every relation inside A reversed.
inline PartialOrder reverse_autonomous(const PartialOrder& p, const Row& a) {
    if (!is_autonomous(p, a)) throw NotAutonomous("set is not autonomous");
    const std::size_t n = p.size();
    BitMatrix m(n);
    for (Index u = 0; u < n; ++u)
        for_each_bit(p.upper(u), [&](Index v) {
            if (a.test(u) && a.test(v))
                m.set(v, u);
            else
                m.set(u, v);
        });
    return {p.names(), std::move(m)};
}

inline PartialOrder reverse_autonomous(const PartialOrder& p, std::span<const Index> a) {
    return reverse_autonomous(p, member_row(p.size(), a));
}

/// Members of A comparable to at least one other member of A.
inline Row core_of(const PartialOrder& p, const Row& a) {
    Row core(p.size());
    for_each_bit(a, [&](Index v) {
        if (p.upper(v).intersects(a) || p.lower(v).intersects(a)) core.set(v);
    });
    return core;
}

struct FlipStep {
    TriangleRep rep;
    Row a_star;
    Row b;
    // corners of the trapezoid spanned by A*
    std::int64_t l1 = 0, r1 = 0, l2 = 0, r2 = 0;
};

/// Reflects every triangle inside the trapezoid spanned by A* (the
/// non-isolated part of A).  The result represents P | B when the flip is
/// sound; callers decode and check it.  Apexes are renumbered to ranks
/// afterwards; an outsider whose reflected neighbour lands on the same apex
/// is placed after it when its base lies to the left, before it otherwise.
inline FlipStep flip_representation(const TriangleRep& rep, const PartialOrder& p, const Row& a) {
    if (!is_autonomous(p, a)) throw NotAutonomous("set is not autonomous");
    const std::size_t n = p.size();
    FlipStep step{rep, core_of(p, a), Row(n)};
    if (step.a_star.none()) return step;

    Index first = step.a_star.find_first();
    step.l1 = step.r1 = rep.apex[first];
    step.l2 = rep.base[first].left;
    step.r2 = rep.base[first].right;
    for_each_bit(step.a_star, [&](Index v) {
        step.l1 = std::min(step.l1, rep.apex[v]);
        step.r1 = std::max(step.r1, rep.apex[v]);
        step.l2 = std::min(step.l2, rep.base[v].left);
        step.r2 = std::max(step.r2, rep.base[v].right);
    });
    for (Index v = 0; v < n; ++v)
        if (step.l1 <= rep.apex[v] && rep.apex[v] <= step.r1 && step.l2 <= rep.base[v].left &&
            rep.base[v].right <= step.r2)
            step.b.set(v);

    for (Index v = 0; v < n; ++v) {
        if (step.b.test(v)) {
            auto& iv = step.rep.base.intervals[v];
            iv = Interval{step.l2 + step.r2 - rep.base[v].right, step.l2 + step.r2 - rep.base[v].left};
            step.rep.apex[v] = step.l1 + step.r1 - rep.apex[v];
        }
    }
    std::vector<Index> perm(n);
    std::iota(perm.begin(), perm.end(), Index{0});
    std::sort(perm.begin(), perm.end(), [&](Index x, Index y) {
        if (step.rep.apex[x] != step.rep.apex[y]) return step.rep.apex[x] < step.rep.apex[y];
        // tie between a member of B and an outsider: the one with the base further left goes later
        const auto& bx = step.rep.base[x];
        const auto& by = step.rep.base[y];
        if (bx.right < by.left) return false;
        if (by.right < bx.left) return true;
        return x < y;
    });
    for (std::size_t i = 0; i < n; ++i) step.rep.apex[perm[i]] = static_cast<std::int64_t>(i);
    return step;
}

/// For v outside B: T(v) lies left of C(A*), right of it, or meets every
/// triangle of A* — the trichotomy the flip relies on.  Returns the first
/// outsider breaking it.
inline std::optional<Index> trichotomy_violation(const TriangleRep& rep, const PartialOrder& p, const FlipStep& step) {
    for (Index v = 0; v < p.size(); ++v) {
        if (step.b.test(v)) continue;
        bool left = rep.apex[v] < step.l1 && rep.base[v].right < step.l2;
        bool right = rep.apex[v] > step.r1 && rep.base[v].left > step.r2;
        bool meets = true;
        for_each_bit(step.a_star, [&](Index u) {
            if (!p.incomparable(u, v)) meets = false;
        });
        if (!(left || right || meets)) return v;
    }
    return std::nullopt;
}

struct FlipOutcome {
    Certificate certificate;
    std::size_t rounds = 0;
    bool rebuilt = false;   // reflected bases were not proper; intervals rebuilt from the flipped apex order
    bool fallback = false;  // the flip was abandoned and P | A recognized afresh
};

namespace detail {

inline std::optional<Certificate> iterate_flip(const PartialOrder& p, const Certificate& cert, Row a,
                                               std::size_t& rounds, bool& rebuilt) {
    const std::size_t n = p.size();
    const PartialOrder target = reverse_autonomous(p, a);
    PartialOrder pk = p;
    TriangleRep rep = TriangleRep::from_certificate(cert);
    for (rounds = 0; rounds <= 2 * n + 2; ++rounds) {
        if (a.none() || core_of(pk, a).none()) {
            if (!(pk == target)) return std::nullopt;
            Certificate out = rep.to_certificate();
            if (!verify_certificate(target, out)) return out;
            // the bases need not stay proper under reflection, but the apex order is still usable as L
            if (!fulfills_rules(target, out.order).ok()) return std::nullopt;
            out = build_semiorder(target, out.order);
            if (verify_certificate(target, out)) return std::nullopt;
            rebuilt = true;
            return out;
        }
        if (!is_autonomous(pk, a)) return std::nullopt;
        FlipStep step = flip_representation(rep, pk, a);
        if (!is_autonomous(pk, step.b)) return std::nullopt;
        PartialOrder next = reverse_autonomous(pk, step.b);
        if (!(step.rep.decode(pk.names()) == next)) return std::nullopt;
        pk = std::move(next);
        rep = std::move(step.rep);
        a = step.b - step.a_star;
    }
    throw ContractViolation("flip did not terminate");
}

}  // namespace detail

/// Certificate for P | A obtained by repeatedly flipping the triangle
/// representation of `cert`.  Each round is checked by decoding.  When the
/// reflected bases are not proper, the intervals are rebuilt from the flipped
/// apex order.  If any check fails the result comes from recognizing P | A
/// directly, which succeeds because reversal preserves the comparability graph.
inline FlipOutcome flip_certificate(const PartialOrder& p, const Certificate& cert, std::span<const Index> members) {
    Row a = member_row(p.size(), members);
    if (!is_autonomous(p, a)) throw NotAutonomous("set is not autonomous");
    if (auto err = verify_certificate(p, cert))
        throw Error(std::string("input certificate does not verify: ") + to_string(err->reason));
    FlipOutcome out{cert};
    if (auto c = detail::iterate_flip(p, cert, a, out.rounds, out.rebuilt)) {
        out.certificate = std::move(*c);
        return out;
    }
    const PartialOrder target = reverse_autonomous(p, a);
    auto r = recognize(target);
    if (!r.yes) throw ContractViolation("reversal of an autonomous set changed the recognition verdict");
    out.certificate = std::move(*r.certificate);
    out.fallback = true;
    return out;
}

}  // namespace lso

#endif  // LSO_FLIP_HPP
