#include <gtest/gtest.h>

#include <sstream>

#include "support.hpp"

using namespace lso;

namespace {

std::string parse_error(const std::string& text, bool graph = false) {
    try {
        if (graph)
            (void)io::graph_from_string(text);
        else
            (void)io::poset_from_string(text);
    } catch (const ParseError& e) {
        return e.what();
    }
    return "";
}

io::NamedCertificate cert_from(const std::string& text) {
    std::istringstream is(text);
    return io::read_certificate(is);
}

}  // namespace

TEST(PosetFormat, ReadsDataFile) {
    auto p = fixtures::load_poset("chevron_dual.poset");
    EXPECT_EQ(p, fixtures::chevron_dual());
    EXPECT_EQ(fixtures::load_poset("p_i.poset"), fixtures::p_i());
}

TEST(PosetFormat, WritesCoveringPairs) {
    auto p = make_poset({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}, {"a", "c"}});
    EXPECT_EQ(io::to_text(p, io::write_poset), "poset 3\na\nb\nc\na b\nb c\n");
}

TEST(PosetFormat, RoundTrip) {
    Rng rng(10);
    for (int i = 0; i < 100; ++i) {
        auto p = random_poset(static_cast<std::size_t>(rng.between(0, 12)), rng.uniform(), rng.next());
        ASSERT_EQ(io::poset_from_string(io::to_text(p, io::write_poset)), p);
    }
}

TEST(PosetFormat, CommentsAndBlankLines) {
    auto p = io::poset_from_string("# header comment\n\nposet 2  # two\n x \ny\n\nx y # pair\n");
    EXPECT_EQ(p.names(), (std::vector<std::string>{"x", "y"}));
    EXPECT_TRUE(p.less(0, 1));
}

TEST(PosetFormat, Errors) {
    EXPECT_EQ(parse_error(""), "unexpected end of input, expected header");
    EXPECT_EQ(parse_error("graph 1\nx\n"), "line 1: expected 'poset <n>'");
    EXPECT_EQ(parse_error("poset -1\n"), "line 1: bad count '-1'");
    EXPECT_EQ(parse_error("poset 2\nx\n"), "unexpected end of input, expected element name");
    EXPECT_EQ(parse_error("poset 2\nx\ny\nx y z\n"), "line 4: expected '<u> <v>'");
    EXPECT_EQ(parse_error("poset 1\ntwo words\n"), "line 2: element names must be single words");
    EXPECT_THROW((void)io::poset_from_string("poset 2\nx\ny\nx q\n"), UnknownElement);
    EXPECT_THROW((void)io::poset_from_string("poset 2\nx\ny\nx y\ny x\n"), CycleError);
}

TEST(GraphFormat, RoundTrip) {
    auto g = io::graph_from_string(io::to_text(fixtures::cycle_graph(5), io::write_graph));
    EXPECT_EQ(g, fixtures::cycle_graph(5));
    std::ifstream in(fixtures::data_path("c5.graph"));
    EXPECT_EQ(io::read_graph(in), fixtures::cycle_graph(5));
}

TEST(GraphFormat, ChevronIncomparabilityFile) {
    std::ifstream in(fixtures::data_path("chevron_dual_incomparability.graph"));
    auto g = io::read_graph(in);
    auto p = fixtures::chevron_dual();
    EXPECT_EQ(g, incomparability_graph(p));
}

TEST(GraphFormat, Errors) {
    EXPECT_EQ(parse_error("poset 1\nx\n", true), "line 1: expected 'graph <n>'");
    EXPECT_THROW((void)io::graph_from_string("graph 1\nx\nx x\n"), Error);
    EXPECT_THROW((void)io::graph_from_string("graph 1\nx\nx y\n"), UnknownElement);
    EXPECT_THROW((void)io::graph_from_string("graph 2\nx\nx\n"), Error);
}

TEST(CertificateFormat, RoundTripBindsByName) {
    auto p = fixtures::chevron_dual();
    auto c = *recognize(p).certificate;
    auto text = io::to_text(p, [&](std::ostream& os, const PartialOrder& q) { io::write_certificate(os, q, c); });
    auto nc = cert_from(text);
    EXPECT_EQ(nc.names, p.names());
    auto bound = nc.bind(p);
    EXPECT_EQ(bound.order, c.order);
    EXPECT_EQ(bound.intervals, c.intervals);
}

TEST(CertificateFormat, IntervalLinesInAnyOrder) {
    auto p = make_poset({"x", "y"}, {{"x", "y"}});
    auto nc = cert_from("certificate 2\nL: x y\ninterval y 2 3 / 1\ninterval x 0 1 / 1\n");
    auto c = nc.bind(p);
    EXPECT_EQ(c.order.perm(), (std::vector<Index>{0, 1}));
    EXPECT_EQ(c.intervals[0], (Interval{0, 1}));
    EXPECT_FALSE(verify_certificate(p, c).has_value());
}

TEST(CertificateFormat, Errors) {
    auto err = [](const std::string& t) {
        try {
            (void)cert_from(t);
        } catch (const ParseError& e) {
            return std::string(e.what());
        }
        return std::string();
    };
    EXPECT_EQ(err("certificate 1\nL: x y\n"), "line 2: expected 'L:' followed by the n elements");
    EXPECT_EQ(err("certificate 1\nL: x\ninterval x 0 1\n"), "line 3: expected 'interval <name> <left> <right> / <den>'");
    EXPECT_EQ(err("certificate 1\nL: x\ninterval x 0 a / 1\n"), "line 3: bad integer 'a'");
    EXPECT_EQ(err("certificate 1\nL: x\ninterval x 0 1 / 0\n"), "line 3: denominator must be positive");
    EXPECT_EQ(err("certificate 2\nL: x y\ninterval x 0 1 / 1\ninterval y 0 1 / 2\n"),
              "line 4: all intervals must share one denominator");
    EXPECT_EQ(err("certificate 1\nL: y\ninterval x 0 1 / 1\n"), "line 2: L names 'y' which has no interval");
    EXPECT_EQ(err("certificate 2\nL: x x\ninterval x 0 1 / 1\ninterval y 2 3 / 1\n"), "line 2: L lists an element twice");
    EXPECT_EQ(err("certificate 1\nL: x\ninterval x 0 1 / 1\nextra\n"), "line 4: trailing content after the intervals");
    auto nc = cert_from("certificate 1\nL: q\ninterval q 0 1 / 1\n");
    EXPECT_THROW((void)nc.bind(make_poset({"x"}, {})), UnknownElement);
}

TEST(Svg, OnePolygonPerElement) {
    auto p = fixtures::chevron_dual();
    auto svg = render_svg(p.names(), *recognize(p).certificate);
    std::size_t polygons = 0;
    for (auto pos = svg.find("<polygon"); pos != std::string::npos; pos = svg.find("<polygon", pos + 1)) ++polygons;
    EXPECT_EQ(polygons, 6u);
    EXPECT_EQ(svg.rfind("<svg", 0) == 0 || svg.rfind("<?xml", 0) == 0, true);
    EXPECT_NE(svg.find(">a</text>"), std::string::npos);
}
