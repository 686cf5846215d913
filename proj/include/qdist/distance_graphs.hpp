#pragma once

// Graph and embedding model, exact certificate verification, the closed-form
// parameters (multipartite dimension, Schoenberg clique number), and a
// brute-force clique oracle over lattice points.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qdist/exact_arith.hpp"
#include "qdist/qvec.hpp"

namespace qdist {

/// Finite graph on vertices 0..vertex_count-1 with an optional complete
/// multipartite descriptor.  When the part list is present it must match the
/// edge set exactly: all cross-part pairs, no intra-part pairs.
struct Graph {
    std::size_t vertex_count = 0;
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    std::optional<std::vector<std::vector<std::size_t>>> parts;

    void validate() const {
        for (auto [u, v] : edges) {
            if (u == v) throw std::domain_error("Graph: loop edge");
            if (u >= vertex_count || v >= vertex_count) {
                throw std::domain_error("Graph: edge references invalid vertex");
            }
        }
        if (!parts) return;
        std::vector<int> part_of(vertex_count, -1);
        for (std::size_t p = 0; p < parts->size(); ++p) {
            for (auto v : (*parts)[p]) {
                if (v >= vertex_count || part_of[v] != -1) {
                    throw std::domain_error("Graph: bad multipartite descriptor");
                }
                part_of[v] = static_cast<int>(p);
            }
        }
        std::size_t expected = 0;
        for (std::size_t u = 0; u < vertex_count; ++u) {
            for (std::size_t v = u + 1; v < vertex_count; ++v) {
                if (part_of[u] >= 0 && part_of[v] >= 0 && part_of[u] != part_of[v]) ++expected;
            }
        }
        if (expected != edges.size()) {
            throw std::domain_error("Graph: descriptor does not match edge set");
        }
        for (auto [u, v] : edges) {
            if (part_of[u] < 0 || part_of[v] < 0 || part_of[u] == part_of[v]) {
                throw std::domain_error("Graph: intra-part edge");
            }
        }
    }

    bool has_edge(std::size_t u, std::size_t v) const {
        for (auto [a, b] : edges) {
            if ((a == u && b == v) || (a == v && b == u)) return true;
        }
        return false;
    }

    /// Complete multipartite graph from a part-size list.
    static Graph complete_multipartite(const std::vector<std::size_t>& sizes) {
        Graph g;
        std::vector<std::vector<std::size_t>> parts;
        for (auto s : sizes) {
            std::vector<std::size_t> part;
            for (std::size_t i = 0; i < s; ++i) part.push_back(g.vertex_count++);
            parts.push_back(std::move(part));
        }
        for (std::size_t p = 0; p < parts.size(); ++p) {
            for (std::size_t q = p + 1; q < parts.size(); ++q) {
                for (auto u : parts[p]) {
                    for (auto v : parts[q]) g.edges.emplace_back(u, v);
                }
            }
        }
        g.parts = std::move(parts);
        return g;
    }

    static Graph complete(std::size_t n) {
        return complete_multipartite(std::vector<std::size_t>(n, 1));
    }
};

/// Coordinate assignment in Q^n with a target squared edge distance r.
struct Embedding {
    Graph graph;
    std::size_t n = 0;
    Rational r;
    std::vector<QVec> coords;        // indexed by vertex
    std::vector<std::string> names;  // optional vertex labels
};

struct EdgeCheck {
    std::size_t u, v;
    Rational actual;  // exact squared distance
    bool ok;
};

struct VerifyReport {
    std::vector<EdgeCheck> edges;
    bool edges_pass = true;
    bool faithful_checked = false;
    std::vector<EdgeCheck> nonedges_at_r;  // non-edges found exactly at distance r
    bool pass = true;
};

/// Exact per-edge verification.  With `faithful`, non-edges at the edge
/// distance are listed and fail the overall report (never the edge check).
inline VerifyReport verify_embedding(const Embedding& e, bool faithful = false) {
    e.graph.validate();
    if (e.coords.size() != e.graph.vertex_count) {
        throw std::domain_error("verify_embedding: coords must cover all vertices");
    }
    for (const auto& p : e.coords) {
        if (p.dim() != e.n) throw std::domain_error("verify_embedding: dimension mismatch");
    }
    VerifyReport rep;
    for (auto [u, v] : e.graph.edges) {
        Rational d2 = squared_dist(e.coords[u], e.coords[v]);
        bool ok = (d2 == e.r);
        rep.edges.push_back({u, v, d2, ok});
        if (!ok) rep.edges_pass = false;
    }
    rep.pass = rep.edges_pass;
    if (faithful) {
        rep.faithful_checked = true;
        for (std::size_t u = 0; u < e.graph.vertex_count; ++u) {
            for (std::size_t v = u + 1; v < e.graph.vertex_count; ++v) {
                if (e.graph.has_edge(u, v)) continue;
                Rational d2 = squared_dist(e.coords[u], e.coords[v]);
                if (d2 == e.r) {
                    rep.nonedges_at_r.push_back({u, v, d2, false});
                    rep.pass = false;
                }
            }
        }
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Closed-form parameters

/// Maehara's dimension of the complete multipartite graph with alpha parts
/// of size 1, beta of size 2, gamma of size >= 3.
inline std::size_t multipartite_dimension(std::size_t alpha, std::size_t beta,
                                          std::size_t gamma) {
    if (alpha + beta + gamma < 2) {
        throw std::domain_error("multipartite_dimension: need at least two parts");
    }
    if (beta + gamma <= 1) return alpha + beta + 2 * gamma - 1;
    return alpha + beta + 2 * gamma;
}

/// Schoenberg: C1(Q^n) = n + 1 exactly when (i) n even and n+1 a perfect
/// square, (ii) n = 3 (mod 4), or (iii) n = 1 (mod 4) and n+1 a sum of two
/// squares; otherwise C1(Q^n) = n.
inline std::size_t schoenberg_c1(std::size_t n) {
    if (n < 1) throw std::domain_error("schoenberg_c1: n must be positive");
    Int np1(static_cast<unsigned long>(n + 1));
    if (n % 2 == 0 && is_perfect_square(np1)) return n + 1;
    if (n % 4 == 3) return n + 1;
    if (n % 4 == 1 && is_sum_two_squares(np1)) return n + 1;
    return n;
}

// ---------------------------------------------------------------------------
// Brute-force clique oracle

struct CliqueWitness {
    std::size_t size = 0;
    std::vector<QVec> points;
};

namespace detail {

inline void max_clique_extend(const std::vector<std::vector<std::uint8_t>>& adj,
                              std::vector<std::size_t>& current,
                              std::vector<std::size_t>& candidates,
                              std::vector<std::size_t>& best) {
    if (current.size() + candidates.size() <= best.size()) return;
    if (candidates.empty()) {
        if (current.size() > best.size()) best = current;
        return;
    }
    // deterministic order: candidates ascending
    for (std::size_t idx = 0; idx < candidates.size(); ++idx) {
        if (current.size() + (candidates.size() - idx) <= best.size()) return;
        std::size_t v = candidates[idx];
        std::vector<std::size_t> next;
        for (std::size_t k = idx + 1; k < candidates.size(); ++k) {
            if (adj[v][candidates[k]]) next.push_back(candidates[k]);
        }
        current.push_back(v);
        max_clique_extend(adj, current, next, best);
        current.pop_back();
    }
}

}  // namespace detail

/// Lower bound on omega(Q^n, sqrt(r)) from the points of (1/denominator) Z^n
/// with coordinates of absolute value at most `height`.  Exact adjacency,
/// deterministic witness.
inline CliqueWitness clique_search_bruteforce(std::size_t n, const Rational& r,
                                              long height, long denominator = 1) {
    if (n < 1 || height < 1 || denominator < 1) {
        throw std::domain_error("clique_search_bruteforce: bad parameters");
    }
    // Enumerate integer points X with |X_i| <= height * denominator; the
    // rational point is X / denominator and adjacency is |X - Y|^2 == r d^2.
    const long bound = height * denominator;
    const long side = 2 * bound + 1;
    std::vector<std::vector<long>> pts;
    std::vector<long> cur(n, -bound);
    for (;;) {
        pts.push_back(cur);
        std::size_t i = 0;
        while (i < n && ++cur[i] > bound) cur[i++] = -bound;
        if (i == n) break;
    }
    Rational target = r * Rational(denominator) * Rational(denominator);
    std::optional<long> target_int;
    if (target.is_integer() && target.num().fits_slong_p()) target_int = target.num().get_si();

    const std::size_t m = pts.size();
    std::vector<std::vector<std::uint8_t>> adj(m, std::vector<std::uint8_t>(m, 0));
    if (target_int) {
        for (std::size_t i = 0; i < m; ++i) {
            for (std::size_t j = i + 1; j < m; ++j) {
                long d2 = 0;
                for (std::size_t k = 0; k < n; ++k) {
                    long d = pts[i][k] - pts[j][k];
                    d2 += d * d;
                }
                if (d2 == *target_int) adj[i][j] = adj[j][i] = 1;
            }
        }
    }
    std::vector<std::size_t> current, best, candidates(m);
    for (std::size_t i = 0; i < m; ++i) candidates[i] = i;
    detail::max_clique_extend(adj, current, candidates, best);

    CliqueWitness w;
    w.size = std::max<std::size_t>(best.size(), 1);
    for (auto idx : best) {
        QVec p(n);
        for (std::size_t k = 0; k < n; ++k) p[k] = Rational(pts[idx][k], denominator);
        w.points.push_back(std::move(p));
    }
    if (w.points.empty() && m > 0) {
        QVec p(n);
        for (std::size_t k = 0; k < n; ++k) p[k] = Rational(pts[0][k], denominator);
        w.points.push_back(std::move(p));
    }
    return w;
}

}  // namespace qdist
