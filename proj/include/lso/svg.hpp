#ifndef LSO_SVG_HPP
#define LSO_SVG_HPP

#include <cstdint>
#include <cstdio>
#include <string>
#include <vector>

#include "semiorder.hpp"

namespace lso {

namespace detail {

inline std::string fixed3(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3f", x);
    return buf;
}

inline std::string xml_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out += c;
        }
    }
    return out;
}

}  // namespace detail

/// Triangle drawing of a certificate: apexes on the line y = 0 at 40 * rank,
/// bases on the line y = 100 at 40 * endpoint.  Output is byte-stable.
inline std::string render_svg(const std::vector<std::string>& names, const Certificate& c) {
    constexpr double unit = 40.0, margin = 20.0;
    const std::size_t n = c.order.size();
    const double den = static_cast<double>(c.intervals.denominator);
    double max_x = unit * (n ? static_cast<double>(n - 1) : 0.0);
    for (const auto& iv : c.intervals.intervals) max_x = std::max(max_x, unit * static_cast<double>(iv.right) / den);
    const double width = max_x + 2 * margin, height = 100 + 2 * margin;

    std::string s;
    s += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    s += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + detail::fixed3(width) +
         "\" height=\"" + detail::fixed3(height) + "\" viewBox=\"" + detail::fixed3(-margin) + " " +
         detail::fixed3(-margin) + " " + detail::fixed3(width) + " " + detail::fixed3(height) + "\">\n";
    s += "<line x1=\"0.000\" y1=\"0.000\" x2=\"" + detail::fixed3(max_x) + "\" y2=\"0.000\" stroke=\"black\"/>\n";
    s += "<line x1=\"0.000\" y1=\"100.000\" x2=\"" + detail::fixed3(max_x) +
         "\" y2=\"100.000\" stroke=\"black\"/>\n";
    for (Index r = 0; r < n; ++r) {
        Index v = c.order.at(r);
        double ax = unit * static_cast<double>(r);
        double lx = unit * static_cast<double>(c.intervals[v].left) / den;
        double rx = unit * static_cast<double>(c.intervals[v].right) / den;
        s += "<polygon points=\"" + detail::fixed3(ax) + ",0.000 " + detail::fixed3(lx) + ",100.000 " +
             detail::fixed3(rx) + ",100.000\" fill=\"steelblue\" fill-opacity=\"0.2\" stroke=\"steelblue\"/>\n";
        s += "<text x=\"" + detail::fixed3(ax) + "\" y=\"-6.000\" font-size=\"10\" text-anchor=\"middle\">" +
             detail::xml_escape(names[v]) + "</text>\n";
    }
    s += "</svg>\n";
    return s;
}

}  // namespace lso

#endif  // LSO_SVG_HPP
