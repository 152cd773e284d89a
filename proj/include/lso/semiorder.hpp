#ifndef LSO_SEMIORDER_HPP
#define LSO_SEMIORDER_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "poset.hpp"

namespace lso {

/// Closed interval [left/den, right/den] with an implicit common denominator.
struct Interval {
    std::int64_t left = 0;
    std::int64_t right = 0;
    friend bool operator==(const Interval&, const Interval&) = default;
};

/// Interval family indexed by element, all endpoints over one denominator.
/// Endpoints are exact scaled integers, so comparisons never tie by rounding.
struct IntervalRep {
    std::int64_t denominator = 1;
    std::vector<Interval> intervals;

    std::size_t size() const noexcept { return intervals.size(); }
    const Interval& operator[](Index v) const { return intervals[v]; }

    /// I(u) lies completely to the left of I(v).
    bool left_of(Index u, Index v) const { return intervals[u].right < intervals[v].left; }

    /// First pair (outer, inner) where intervals[outer] properly contains intervals[inner].
    std::optional<std::pair<Index, Index>> containment() const {
        for (Index u = 0; u < size(); ++u)
            for (Index v = 0; v < size(); ++v) {
                if (u == v) continue;
                const auto &a = intervals[u], &b = intervals[v];
                if (a.left <= b.left && b.right <= a.right && a != b) return std::pair{u, v};
            }
        return std::nullopt;
    }

    bool proper() const { return !containment().has_value(); }

    friend bool operator==(const IntervalRep&, const IntervalRep&) = default;
};

/// Order defined by the intervals: u < v iff right(u) < left(v).
inline PartialOrder semiorder_from_intervals(const IntervalRep& rep, std::vector<std::string> names) {
    const std::size_t n = rep.size();
    for (const auto& iv : rep.intervals)
        if (iv.left > iv.right) throw Error("interval has left endpoint after right endpoint");
    BitMatrix m(n);
    for (Index u = 0; u < n; ++u)
        for (Index v = 0; v < n; ++v)
            if (u != v && rep.left_of(u, v)) m.set(u, v);
    return {std::move(names), std::move(m)};
}

inline PartialOrder semiorder_from_intervals(const IntervalRep& rep) {
    return semiorder_from_intervals(rep, default_names(rep.size()));
}

/// A linear extension L together with a proper interval representation of a
/// semiorder S; it certifies P when L and S intersect exactly in P.
struct Certificate {
    LinearOrder order;
    IntervalRep intervals;

    PartialOrder semiorder(std::vector<std::string> names) const {
        return semiorder_from_intervals(intervals, std::move(names));
    }
    friend bool operator==(const Certificate&, const Certificate&) = default;
};

enum class CertificateFailure { SizeMismatch, NotExtension, NotProper, NotSemiorder, IntersectionMismatch };

inline const char* to_string(CertificateFailure f) {
    switch (f) {
        case CertificateFailure::SizeMismatch: return "size mismatch";
        case CertificateFailure::NotExtension: return "not a linear extension";
        case CertificateFailure::NotProper: return "not proper";
        case CertificateFailure::NotSemiorder: return "not a semiorder";
        case CertificateFailure::IntersectionMismatch: return "intersection mismatch";
    }
    return "unknown";
}

struct CertificateError {
    CertificateFailure reason;
    std::string detail;
};

/// Checks, in order: sizes agree, L extends P, the intervals are proper, the
/// interval order is a semiorder, and L and S intersect exactly in P.
inline std::optional<CertificateError> verify_certificate(const PartialOrder& p, const Certificate& cert) {
    const std::size_t n = p.size();
    if (cert.order.size() != n || cert.intervals.size() != n || cert.intervals.denominator <= 0)
        return CertificateError{CertificateFailure::SizeMismatch, "certificate does not match the element count"};
    if (!is_linear_extension(p, cert.order))
        return CertificateError{CertificateFailure::NotExtension, "L does not extend P"};
    for (Index v = 0; v < n; ++v)
        if (cert.intervals[v].left > cert.intervals[v].right)
            return CertificateError{CertificateFailure::NotProper, "interval of " + p.name(v) + " is empty"};
    if (auto c = cert.intervals.containment())
        return CertificateError{CertificateFailure::NotProper,
                                "I(" + p.name(c->first) + ") properly contains I(" + p.name(c->second) + ")"};
    const PartialOrder s = cert.semiorder(p.names());
    if (!is_semiorder_order(s))
        return CertificateError{CertificateFailure::NotSemiorder, "interval order contains 2+2 or 3+1"};
    for (Index u = 0; u < n; ++u)
        for (Index v = 0; v < n; ++v) {
            if (u == v) continue;
            bool both = cert.order.precedes(u, v) && s.less(u, v);
            if (both != p.less(u, v))
                return CertificateError{CertificateFailure::IntersectionMismatch,
                                        "pair (" + p.name(u) + ", " + p.name(v) + ") differs between L∩S and P"};
        }
    return std::nullopt;
}

/// R1 = {(x,y) : some z has x<z in P and y before z in L with y||z}.
/// R2 = {(x,y) : some z has z before x in L with z||x, and z<y in P}.
struct AuxiliaryRelations {
    BitMatrix r1;
    BitMatrix r2;

    std::vector<Arc> union_pairs() const {
        std::vector<Arc> out;
        for (Index x = 0; x < r1.size(); ++x) {
            Row row = r1.row(x) | r2.row(x);
            for_each_bit(row, [&](Index y) { out.emplace_back(x, y); });
        }
        return out;
    }

    /// Pairs of R1 + R2 that are not already in P: what Q adds to P.
    std::vector<Arc> new_pairs(const PartialOrder& p) const {
        std::vector<Arc> out;
        for (auto a : union_pairs())
            if (!p.less(a.first, a.second)) out.push_back(a);
        return out;
    }
};

/// Throws NotAnExtension, or RuleViolation carrying the first broken rule.
inline AuxiliaryRelations relations_R1_R2(const PartialOrder& p, const LinearOrder& l) {
    auto verdict = fulfills_rules(p, l);
    if (!verdict.ok())
        throw RuleViolation(std::string("linear extension breaks the ") + to_string(verdict.violation->kind) + " rule",
                            *verdict.violation);
    const std::size_t n = p.size();
    const auto after = l.after_sets();
    // strictly_after[y] & incomparable: the z with (y, z) in L - P
    std::vector<Row> lp_out(n), lp_in(n);
    for (Index v = 0; v < n; ++v) {
        Row inc = p.incomparable_set(v);
        lp_out[v] = after[v] & inc;
        Row before = after[v];
        before.set(v);
        before.flip();
        lp_in[v] = before & inc;
    }
    AuxiliaryRelations rel{BitMatrix(n), BitMatrix(n)};
    for (Index x = 0; x < n; ++x)
        for (Index y = 0; y < n; ++y) {
            if (lp_out[y].intersects(p.upper(x))) rel.r1.set(x, y);
            if (lp_in[x].intersects(p.lower(y))) rel.r2.set(x, y);
        }
    return rel;
}

/// Linear order containing Q = P + R1 + R2.  Among the available elements
/// the one latest in L is taken first; on the dual-chevron instance with
/// L = a..f this gives a, c, e, f, b, d.
inline LinearOrder order_LQ(const PartialOrder& p, const LinearOrder& l, const AuxiliaryRelations& rel) {
    std::vector<Arc> arcs = p.pairs();
    auto extra = rel.union_pairs();
    arcs.insert(arcs.end(), extra.begin(), extra.end());
    std::vector<std::int64_t> key(p.size());
    for (Index v = 0; v < p.size(); ++v) key[v] = -static_cast<std::int64_t>(l.rank(v));
    try {
        return topological_order(p.size(), arcs, key);
    } catch (const CycleError&) {
        throw ContractViolation("P + R1 + R2 is cyclic; the linear extension must break a rule");
    }
}

inline LinearOrder order_LQ(const PartialOrder& p, const LinearOrder& l) {
    return order_LQ(p, l, relations_R1_R2(p, l));
}

/// f over positions 1..n of L_Q, stored 0-based: level[j - 1] = f(j).
using LevelFunction = std::vector<std::size_t>;

/// f(1) = 0 and f(j) is the largest i > f(j-1) with v_i < v_j in P, or
/// f(j-1) if there is none.  The four defining properties are checked
/// before returning; `l` is needed only for the last one.
inline LevelFunction level_function(const PartialOrder& p, const LinearOrder& lq, const LinearOrder& l) {
    const std::size_t n = p.size();
    LevelFunction f(n, 0);
    auto elem = [&](std::size_t pos) { return lq.at(pos - 1); };
    for (std::size_t j = 2; j <= n; ++j) {
        f[j - 1] = f[j - 2];
        for (std::size_t i = j - 1; i > f[j - 2]; --i)
            if (p.less(elem(i), elem(j))) {
                f[j - 1] = i;
                break;
            }
    }
    for (std::size_t j = 1; j <= n; ++j) {
        if (f[j - 1] >= j) throw ContractViolation("level function: f(j) < j fails");
        if (j > 1 && f[j - 2] > f[j - 1]) throw ContractViolation("level function is not monotone");
        for (std::size_t i = 1; i <= n; ++i) {
            if (i == j) continue;
            if (p.less(elem(i), elem(j)) && !(i <= f[j - 1]))
                throw ContractViolation("level function: P pair not below f(j)");
            if (p.incomparable(elem(i), elem(j)) && l.precedes(elem(i), elem(j)) && !(f[j - 1] < i))
                throw ContractViolation("level function: L - P pair not above f(j)");
        }
    }
    return f;
}

/// Interval for position i is [f(i) + (i-1)/n, i], stored over denominator n.
inline IntervalRep build_intervals(const LevelFunction& f, const LinearOrder& lq) {
    const std::size_t n = f.size();
    const auto den = static_cast<std::int64_t>(n);
    IntervalRep rep{den == 0 ? 1 : den, std::vector<Interval>(n)};
    for (std::size_t i = 1; i <= n; ++i) {
        auto fi = static_cast<std::int64_t>(f[i - 1]);
        auto ii = static_cast<std::int64_t>(i);
        rep.intervals[lq.at(i - 1)] = Interval{den * fi + ii - 1, den * ii};
    }
    if (!rep.proper()) throw ContractViolation("constructed intervals are not proper");
    return rep;
}

/// Witness semiorder for a rule-fulfilling linear extension.  Throws
/// RuleViolation if `l` breaks a rule.
inline Certificate build_semiorder(const PartialOrder& p, const LinearOrder& l) {
    auto rel = relations_R1_R2(p, l);
    auto lq = order_LQ(p, l, rel);
    auto f = level_function(p, lq, l);
    Certificate cert{l, build_intervals(f, lq)};
    if (auto err = verify_certificate(p, cert))
        throw ContractViolation(std::string("constructed certificate fails: ") + to_string(err->reason));
    return cert;
}

}  // namespace lso

#endif  // LSO_SEMIORDER_HPP
