// Command-line surface: runs the constructions, verifies certificates, and
// prints feasibility data.  Exit codes: 0 success, 1 infeasible (with a
// mathematical witness), 2 invalid input.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "qdist/constructions.hpp"
#include "qdist/diophantine.hpp"
#include "qdist/distance_graphs.hpp"
#include "qdist/exact_arith.hpp"
#include "qdist/lattice_geom.hpp"
#include "qdist/regularizer.hpp"
#include "qdist/serialize.hpp"

namespace {

using namespace qdist;

void write_output(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(out_path, std::ios::binary);
    if (!f) throw std::invalid_argument("cannot open output file " + out_path);
    f << text;
}

Json load_json(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::invalid_argument("cannot open " + path);
    Json j;
    f >> j;
    return j;
}

int cmd_embed(const std::string& graph, std::optional<std::size_t> n_opt,
              const std::string& r_str, std::optional<std::size_t> m_opt,
              const std::string& out_path) {
    Rational r = Rational::parse(r_str);
    Embedding e;
    Json command{{"subcommand", "embed"}, {"graph", graph}, {"r", r.to_string()}};
    if (graph == "k23") {
        if (n_opt && *n_opt != 3) throw std::invalid_argument("k23 lives in Q^3");
        auto outcome = embed_k23_q3(r);
        if (!outcome.ok()) {
            std::cerr << "infeasible: " << outcome.witness << "\n";
            return 1;
        }
        e = *outcome.embedding;
        command["n"] = 3;
    } else if (graph == "book") {
        if (!n_opt) throw std::invalid_argument("book requires --n");
        if (r != 2) throw std::invalid_argument("the book construction targets r = 2");
        e = embed_book_sqrt2(*n_opt);
        command["n"] = *n_opt;
    } else if (graph == "k133") {
        if (n_opt && *n_opt != 5) throw std::invalid_argument("k133 lives in Q^5");
        e = embed_k133_q5(r);
        command["n"] = 5;
    } else if (graph == "clique-ext") {
        if (!m_opt) throw std::invalid_argument("clique-ext requires --m");
        e = clique_extension(*m_opt, r);
        command["m"] = *m_opt;
        command["n"] = 4 * *m_opt + 3;
    } else {
        throw std::invalid_argument("unknown graph " + graph);
    }
    auto report = verify_embedding(e);
    Json cert = make_certificate(command, embedding_to_json(e), report_to_json(report, e.names));
    write_output(dump_certificate(cert), out_path);
    return report.pass ? 0 : 1;
}

int cmd_verify(const std::string& path, bool faithful) {
    Json cert = load_json(path);
    const Json& payload = cert.at("embedding");
    if (payload.contains("vertex_count")) {
        PlaneEmbedding g = plane_embedding_from_json(payload);
        g.validate();
        std::cout << "pass (worst edge deviation " << double_to_string(g.worst_edge_deviation)
                  << ")\n";
        return 0;
    }
    Embedding e = embedding_from_json(payload);
    auto report = verify_embedding(e, faithful);
    Json recomputed = report_to_json(report, e.names);
    if (!report.pass) {
        for (const auto& c : report.edges) {
            if (!c.ok) {
                std::cerr << "fail: edge (" << e.names[c.u] << "," << e.names[c.v]
                          << ") has squared distance " << c.actual.to_string() << " != "
                          << e.r.to_string() << "\n";
            }
        }
        for (const auto& c : report.nonedges_at_r) {
            std::cerr << "fail: non-edge (" << e.names[c.u] << "," << e.names[c.v]
                      << ") at the edge distance\n";
        }
        return 1;
    }
    if (!faithful && cert.contains("report") && cert.at("report") != recomputed) {
        std::cerr << "fail: stored report does not match recomputation\n";
        return 1;
    }
    std::cout << "pass (" << report.edges.size() << " edges exact)\n";
    return 0;
}

int cmd_realized(std::size_t n, const std::string& r_str) {
    Rational r = Rational::parse(r_str);
    if (is_distance_realized(n, r)) {
        auto p = rational_point_on_sphere(n, r);
        std::cout << "true  witness point " << p->to_string() << "\n";
        return 0;
    }
    std::cout << "false ";
    Int s = square_free_part(r).s;
    if (n == 3) {
        std::cout << "square-free part " << s.get_str() << " is 7 (mod 8)\n";
    } else if (n == 2) {
        std::cout << "square-free part " << s.get_str() << " has a prime factor 3 (mod 4)\n";
    } else {
        std::cout << "r is not the square of a rational\n";
    }
    return 1;
}

int cmd_cliques(std::size_t n, const std::string& r_str, long height, long den) {
    std::cout << "C1(Q^" << n << ") = " << schoenberg_c1(n) << "\n";
    auto search = [&](const Rational& r) {
        auto w = clique_search_bruteforce(n, r, height, den);
        std::cout << "omega(Q^" << n << ", sqrt(" << r.to_string() << ")) >= " << w.size
                  << "   witness:";
        for (const auto& p : w.points) std::cout << " " << p.to_string();
        std::cout << "\n";
    };
    if (!r_str.empty()) {
        search(Rational::parse(r_str));
    } else {
        for (long r = 1; r <= 4; ++r) search(Rational(r));
    }
    return 0;
}

int cmd_solve41(long m, long r) {
    auto sol = solve_eq41(m, r);
    std::cout << "x = " << sol[0].to_string() << ", y = " << sol[1].to_string()
              << ", z = " << sol[2].to_string() << ", w = " << sol[3].to_string() << "\n";
    // substitution check, printed for the skeptical reader
    Rational lhs = Rational(r * (4 * m - 1), 8 * m) + Rational(2 * r * m) * sol[0] * sol[0] +
                   sol[1] * sol[1] + sol[2] * sol[2] + sol[3] * sol[3];
    std::cout << "check: lhs = " << lhs.to_string() << " = r = " << r << "\n";
    return lhs == Rational(r) ? 0 : 1;
}

int cmd_triangle(const std::string& a, const std::string& b, const std::string& c) {
    TriangleSq t{Rational::parse(a), Rational::parse(b), Rational::parse(c)};
    auto emb = embed_triangle_q4(t);
    if (!emb) {
        Int s = square_free_part(t.area16()).s;
        std::cout << "infeasible: square-free part " << s.get_str()
                  << " of 16*Area^2 = " << t.area16().to_string() << " is 7 (mod 8)\n";
        return 1;
    }
    std::cout << "O  = " << emb->origin.to_string() << "\n";
    std::cout << "P1 = " << emb->p1.to_string() << "\n";
    std::cout << "P2 = " << emb->p2.to_string() << "\n";
    return 0;
}

int cmd_regularize(const std::string& path, std::size_t r, std::uint64_t seed,
                   const std::string& out_path, const std::string& svg_path) {
    Json in = load_json(path);
    PlaneEmbedding g =
        plane_embedding_from_json(in.contains("embedding") ? in.at("embedding") : in);
    PlaneEmbedding h = regular_supergraph(g, r, seed);
    Json command{{"subcommand", "regularize"}, {"r", r}, {"seed", seed}, {"input", path}};
    Json report{{"pass", true},
                {"regular_degree", r},
                {"vertex_count", h.graph.vertex_count},
                {"worst_edge_deviation", double_to_string(h.worst_edge_deviation)}};
    Json cert = make_certificate(command, plane_embedding_to_json(h), report);
    write_output(dump_certificate(cert), out_path);
    if (!svg_path.empty()) write_output(render_svg(h), svg_path);
    return 0;
}

int cmd_three_squares(long k) {
    if (k < 0) throw std::invalid_argument("k must be non-negative");
    auto d = decompose_three_squares(Int(k));
    if (!d) {
        // exhibit the 4^a (8b + 7) witness
        long a = 0, kk = k;
        while (kk % 4 == 0) {
            kk /= 4;
            ++a;
        }
        std::cout << k << " = 4^" << a << " * (8*" << (kk - 7) / 8 << " + 7)\n";
        return 1;
    }
    std::cout << k << " = " << (*d)[0].get_str() << "^2 + " << (*d)[1].get_str() << "^2 + "
              << (*d)[2].get_str() << "^2\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact rational distance-graph embeddings and certificates"};
    app.require_subcommand(1);

    std::string graph, r_str = "2", out_path, svg_path, file, a_str, b_str, c_str;
    std::optional<std::size_t> n_opt, m_opt;
    std::size_t n = 3, reg_r = 2;
    long m41 = 1, r41 = 1, height = 1, den = 1, k3 = 0;
    std::uint64_t seed = 1;
    bool faithful = false;

    auto* embed = app.add_subcommand("embed", "construct a verified embedding certificate");
    embed->add_option("--graph", graph, "k23 | book | k133 | clique-ext")->required();
    embed->add_option("--n", n_opt, "ambient dimension");
    embed->add_option("--r", r_str, "squared edge distance, p/q");
    embed->add_option("--m", m_opt, "clique-ext parameter (K_{4m+1} in Q^{4m+3})");
    embed->add_option("--out", out_path, "output file (default stdout)");

    auto* verify = app.add_subcommand("verify", "re-check a stored certificate exactly");
    verify->add_option("file", file, "certificate file")->required();
    verify->add_flag("--faithful", faithful, "also require non-edges off the edge distance");

    auto* realized = app.add_subcommand("realized", "is sqrt(r) realized between points of Q^n");
    realized->add_option("--n", n, "dimension")->required();
    realized->add_option("--r", r_str, "squared distance, p/q")->required();

    auto* cliques = app.add_subcommand("cliques", "Schoenberg clique number and brute-force bound");
    cliques->add_option("--n", n, "dimension")->required();
    cliques->add_option("--r", r_str, "squared distance (default: scan r = 1..4)")->default_val("");
    cliques->add_option("--height", height, "coordinate bound for the lattice search");
    cliques->add_option("--den", den, "lattice denominator");

    auto* solve41 = app.add_subcommand("solve41", "solve the clique-extension equation");
    solve41->add_option("--m", m41, "m >= 1")->required();
    solve41->add_option("--r", r41, "square-free r >= 1")->required();

    auto* triangle = app.add_subcommand("triangle", "embed a triangle with squared sides in Q^4");
    triangle->add_option("--a", a_str)->required();
    triangle->add_option("--b", b_str)->required();
    triangle->add_option("--c", c_str)->required();

    auto* regularize = app.add_subcommand("regularize", "r-regular unit-distance supergraph");
    regularize->add_option("file", file, "plane embedding JSON")->required();
    regularize->add_option("--r", reg_r, "target degree")->required();
    regularize->add_option("--seed", seed, "generic-position seed");
    regularize->add_option("--out", out_path, "output file (default stdout)");
    regularize->add_option("--svg", svg_path, "also render a static SVG");

    auto* three = app.add_subcommand("three-squares", "three-square decomposition or witness");
    three->add_option("k", k3, "non-negative integer")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        app.exit(e);
        return 2;
    }

    try {
        if (embed->parsed()) return cmd_embed(graph, n_opt, r_str, m_opt, out_path);
        if (verify->parsed()) return cmd_verify(file, faithful);
        if (realized->parsed()) return cmd_realized(n, r_str);
        if (cliques->parsed()) return cmd_cliques(n, r_str, height, den);
        if (solve41->parsed()) return cmd_solve41(m41, r41);
        if (triangle->parsed()) return cmd_triangle(a_str, b_str, c_str);
        if (regularize->parsed()) return cmd_regularize(file, reg_r, seed, out_path, svg_path);
        if (three->parsed()) return cmd_three_squares(k3);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
