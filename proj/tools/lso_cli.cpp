// lso: command-line front end for linear-semiorder recognition.
//
// exit codes: 0 yes/ok, 1 no/failed check, 2 usage or I/O error, 3 internal error

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "lso/lso.hpp"

namespace {

enum Exit { kYes = 0, kNo = 1, kUsage = 2, kInternal = 3 };

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::ifstream open_in(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open '" + path + "'");
    return in;
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << text)) throw IoError("cannot write '" + path + "'");
}

lso::PartialOrder load_poset(const std::string& path) {
    auto in = open_in(path);
    return lso::io::read_poset(in);
}

int cmd_recognize(const std::string& path, const std::string& certify) {
    auto p = load_poset(path);
    auto r = lso::recognize(p);
    if (!r.yes) {
        std::cout << "NO\n";
        if (r.conflict_edge)
            std::cerr << "2-CNF unsatisfiable at edge " << p.name(r.conflict_edge->first) << '-'
                      << p.name(r.conflict_edge->second) << '\n';
        return kNo;
    }
    std::cout << "YES\n";
    if (!certify.empty()) write_file(certify, lso::io::to_text(*r.certificate, [&](std::ostream& os, const auto& c) {
                                         lso::io::write_certificate(os, p, c);
                                     }));
    return kYes;
}

int cmd_verify(const std::string& poset_path, const std::string& cert_path) {
    auto p = load_poset(poset_path);
    auto in = open_in(cert_path);
    auto named = lso::io::read_certificate(in);
    lso::Certificate cert;
    try {
        cert = named.bind(p);
    } catch (const lso::Error& e) {
        std::cout << "FAIL size mismatch: " << e.what() << '\n';
        return kNo;
    }
    if (auto err = lso::verify_certificate(p, cert)) {
        std::cout << "FAIL " << lso::to_string(err->reason) << ": " << err->detail << '\n';
        return kNo;
    }
    std::cout << "OK\n";
    return kYes;
}

int cmd_graph(const std::string& path, const std::string& mode) {
    auto in = open_in(path);
    auto g = lso::io::read_graph(in);
    auto r = mode == "comparability" ? lso::recognize_comparability_graph(g) : lso::recognize_incomparability_graph(g);
    if (!r.yes) {
        std::cout << "NO\n";
        std::cerr << lso::to_string(*r.refusal) << '\n';
        return kNo;
    }
    std::cout << "YES\n";
    if (r.ordering) {
        std::cout << "ordering:";
        for (auto v : r.ordering->perm()) std::cout << ' ' << g.name(v);
        std::cout << '\n';
    }
    return kYes;
}

int cmd_oracle(const std::string& path) {
    auto p = load_poset(path);
    bool yes = lso::oracle_recognize(p);
    std::cout << (yes ? "YES" : "NO") << '\n';
    return yes ? kYes : kNo;
}

int cmd_gen(std::size_t n, double density, std::uint64_t seed, const std::string& out) {
    auto p = lso::random_poset(n, density, seed);
    std::ostringstream os;
    lso::io::write_poset(os, p);
    if (out.empty())
        std::cout << os.str();
    else
        write_file(out, os.str());
    return kYes;
}

int cmd_render(const std::string& cert_path, const std::string& out) {
    auto in = open_in(cert_path);
    auto named = lso::io::read_certificate(in);
    write_file(out, lso::render_svg(named.names, named.certificate));
    return kYes;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Recognize linear-semiorders and their comparability/incomparability graphs"};
    app.require_subcommand(1);

    std::string poset, cert, out, graph, mode = "incomparability";
    std::size_t n = 0;
    double density = 0.3;
    std::uint64_t seed = 0;

    auto* rec = app.add_subcommand("recognize", "decide whether a poset is a linear-semiorder");
    rec->add_option("poset", poset, "poset file")->required();
    rec->add_option("--certify", cert, "write the certificate to this file");

    auto* ver = app.add_subcommand("verify", "check a certificate against a poset");
    ver->add_option("poset", poset, "poset file")->required();
    ver->add_option("certificate", cert, "certificate file")->required();

    auto* gr = app.add_subcommand("graph", "recognize (in)comparability graphs of linear-semiorders");
    gr->add_option("graph", graph, "graph file")->required();
    gr->add_option("--mode", mode, "comparability or incomparability")
        ->check(CLI::IsMember({"comparability", "incomparability"}));

    auto* orc = app.add_subcommand("oracle", "brute-force decision (at most 10 elements)");
    orc->add_option("poset", poset, "poset file")->required();

    auto* gen = app.add_subcommand("gen", "write a random poset");
    gen->add_option("n", n, "element count")->required();
    gen->add_option("--density", density, "arc probability")->check(CLI::Range(0.0, 1.0));
    gen->add_option("--seed", seed, "random seed");
    gen->add_option("--out", out, "output file (default stdout)");

    auto* ren = app.add_subcommand("render", "draw a certificate as triangles (SVG)");
    ren->add_option("certificate", cert, "certificate file")->required();
    ren->add_option("--out", out, "SVG file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kUsage;
    }

    try {
        if (*rec) return cmd_recognize(poset, cert);
        if (*ver) return cmd_verify(poset, cert);
        if (*gr) return cmd_graph(graph, mode);
        if (*orc) return cmd_oracle(poset);
        if (*gen) return cmd_gen(n, density, seed, out);
        if (*ren) return cmd_render(cert, out);
    } catch (const lso::ContractViolation& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kInternal;
    } catch (const lso::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}
