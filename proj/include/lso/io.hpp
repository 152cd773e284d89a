#ifndef LSO_IO_HPP
#define LSO_IO_HPP

#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <unordered_map>
#include <vector>

#include "poset.hpp"
#include "semiorder.hpp"

namespace lso::io {

namespace detail {

// Non-blank lines with comments stripped, each with its 1-based line number.
struct Lines {
    std::vector<std::pair<std::size_t, std::string>> lines;
    std::size_t pos = 0;

    explicit Lines(std::istream& in) {
        std::string s;
        std::size_t no = 0;
        while (std::getline(in, s)) {
            ++no;
            if (auto h = s.find('#'); h != std::string::npos) s.erase(h);
            if (!s.empty() && s.back() == '\r') s.pop_back();
            auto b = s.find_first_not_of(" \t");
            if (b == std::string::npos) continue;
            auto e = s.find_last_not_of(" \t");
            lines.emplace_back(no, s.substr(b, e - b + 1));
        }
    }

    bool done() const { return pos == lines.size(); }
    const std::pair<std::size_t, std::string>& next(const char* what) {
        if (done()) throw ParseError(std::string("unexpected end of input, expected ") + what);
        return lines[pos++];
    }
};

inline std::vector<std::string> words(const std::string& s) {
    std::istringstream is(s);
    std::vector<std::string> w;
    for (std::string t; is >> t;) w.push_back(t);
    return w;
}

[[noreturn]] inline void fail(std::size_t line, const std::string& msg) {
    throw ParseError("line " + std::to_string(line) + ": " + msg);
}

inline std::size_t parse_count(std::size_t line, const std::string& s) {
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos) fail(line, "bad count '" + s + "'");
    try {
        return std::stoull(s);
    } catch (const std::exception&) {
        fail(line, "bad count '" + s + "'");
    }
}

inline std::int64_t parse_int(std::size_t line, const std::string& s) {
    std::size_t used = 0;
    std::int64_t v = 0;
    try {
        v = std::stoll(s, &used);
    } catch (const std::exception&) {
        fail(line, "bad integer '" + s + "'");
    }
    if (used != s.size()) fail(line, "bad integer '" + s + "'");
    return v;
}

// header `<keyword> <n>` followed by n names and the pair lines
struct Relation {
    std::vector<std::string> names;
    std::vector<std::pair<std::string, std::string>> pairs;
};

inline Relation read_relation(std::istream& in, const char* keyword) {
    Lines ls(in);
    auto [hl, header] = ls.next("header");
    auto hw = words(header);
    if (hw.size() != 2 || hw[0] != keyword) fail(hl, std::string("expected '") + keyword + " <n>'");
    std::size_t n = parse_count(hl, hw[1]);
    Relation r;
    for (std::size_t i = 0; i < n; ++i) {
        auto [l, s] = ls.next("element name");
        if (words(s).size() != 1) fail(l, "element names must be single words");
        r.names.push_back(s);
    }
    while (!ls.done()) {
        auto [l, s] = ls.next("pair");
        auto w = words(s);
        if (w.size() != 2) fail(l, "expected '<u> <v>'");
        r.pairs.emplace_back(w[0], w[1]);
    }
    return r;
}

}  // namespace detail

/// Reads the `poset <n>` format; the relation is transitively closed.
inline PartialOrder read_poset(std::istream& in) {
    auto r = detail::read_relation(in, "poset");
    return make_poset(std::move(r.names), r.pairs);
}

/// Writes the covering pairs of P, which is enough to reconstruct it.
inline void write_poset(std::ostream& out, const PartialOrder& p) {
    out << "poset " << p.size() << '\n';
    for (const auto& s : p.names()) out << s << '\n';
    for (Index u = 0; u < p.size(); ++u)
        for_each_bit(p.upper(u), [&](Index v) {
            if (!(p.upper(u) & p.lower(v)).any()) out << p.name(u) << ' ' << p.name(v) << '\n';
        });
}

inline Graph read_graph(std::istream& in) {
    auto r = detail::read_relation(in, "graph");
    Graph g(r.names);
    std::unordered_map<std::string, Index> idx;
    for (Index i = 0; i < r.names.size(); ++i)
        if (!idx.emplace(r.names[i], i).second) throw Error("duplicate element name '" + r.names[i] + "'");
    for (auto& [a, b] : r.pairs) {
        auto ia = idx.find(a), ib = idx.find(b);
        if (ia == idx.end()) throw UnknownElement("unknown vertex '" + a + "'");
        if (ib == idx.end()) throw UnknownElement("unknown vertex '" + b + "'");
        g.add_edge(ia->second, ib->second);
    }
    return g;
}

inline void write_graph(std::ostream& out, const Graph& g) {
    out << "graph " << g.size() << '\n';
    for (const auto& s : g.names()) out << s << '\n';
    for (auto [u, v] : g.edges()) out << g.name(u) << ' ' << g.name(v) << '\n';
}

/// A certificate read from text: element names in interval-line order, with
/// L and the intervals indexed the same way.
struct NamedCertificate {
    std::vector<std::string> names;
    Certificate certificate;

    /// Re-indexes onto P's elements.
    Certificate bind(const PartialOrder& p) const {
        if (names.size() != p.size()) throw Error("certificate size differs from the poset");
        std::vector<Index> to(names.size());
        for (Index i = 0; i < names.size(); ++i) to[i] = p.index_of(names[i]);
        std::vector<Index> perm(p.size());
        for (Index r = 0; r < p.size(); ++r) perm[r] = to[certificate.order.at(r)];
        IntervalRep rep{certificate.intervals.denominator, std::vector<Interval>(p.size())};
        for (Index i = 0; i < names.size(); ++i) rep.intervals[to[i]] = certificate.intervals[i];
        return {LinearOrder(std::move(perm)), std::move(rep)};
    }
};

inline NamedCertificate read_certificate(std::istream& in) {
    detail::Lines ls(in);
    auto [hl, header] = ls.next("header");
    auto hw = detail::words(header);
    if (hw.size() != 2 || hw[0] != "certificate") detail::fail(hl, "expected 'certificate <n>'");
    const std::size_t n = detail::parse_count(hl, hw[1]);

    auto [ll, lline] = ls.next("'L:' line");
    auto lw = detail::words(lline);
    if (lw.empty() || lw[0] != "L:" || lw.size() != n + 1) detail::fail(ll, "expected 'L:' followed by the n elements");

    NamedCertificate nc;
    std::unordered_map<std::string, Index> idx;
    std::vector<Interval> ivs;
    std::int64_t den = 0;
    for (std::size_t i = 0; i < n; ++i) {
        auto [l, s] = ls.next("interval line");
        auto w = detail::words(s);
        if (w.size() != 6 || w[0] != "interval" || w[4] != "/")
            detail::fail(l, "expected 'interval <name> <left> <right> / <den>'");
        if (!idx.emplace(w[1], i).second) detail::fail(l, "duplicate element '" + w[1] + "'");
        nc.names.push_back(w[1]);
        ivs.push_back({detail::parse_int(l, w[2]), detail::parse_int(l, w[3])});
        auto d = detail::parse_int(l, w[5]);
        if (d <= 0) detail::fail(l, "denominator must be positive");
        if (i > 0 && d != den) detail::fail(l, "all intervals must share one denominator");
        den = d;
    }
    if (!ls.done()) detail::fail(ls.lines[ls.pos].first, "trailing content after the intervals");
    std::vector<Index> perm;
    for (std::size_t i = 1; i < lw.size(); ++i) {
        auto it = idx.find(lw[i]);
        if (it == idx.end()) detail::fail(ll, "L names '" + lw[i] + "' which has no interval");
        perm.push_back(it->second);
    }
    try {
        nc.certificate = {LinearOrder(std::move(perm)), IntervalRep{n ? den : 1, std::move(ivs)}};
    } catch (const Error&) {
        detail::fail(ll, "L lists an element twice");
    }
    return nc;
}

/// Intervals are listed in P's canonical order.
inline void write_certificate(std::ostream& out, const PartialOrder& p, const Certificate& c) {
    out << "certificate " << p.size() << '\n';
    out << "L:";
    for (Index v : c.order.perm()) out << ' ' << p.name(v);
    out << '\n';
    for (Index v = 0; v < p.size(); ++v)
        out << "interval " << p.name(v) << ' ' << c.intervals[v].left << ' ' << c.intervals[v].right << " / "
            << c.intervals.denominator << '\n';
}

template <class T, class W>
std::string to_text(const T& value, W write) {
    std::ostringstream os;
    write(os, value);
    return os.str();
}

inline PartialOrder poset_from_string(const std::string& s) {
    std::istringstream is(s);
    return read_poset(is);
}

inline Graph graph_from_string(const std::string& s) {
    std::istringstream is(s);
    return read_graph(is);
}

}  // namespace lso::io

#endif  // LSO_IO_HPP
