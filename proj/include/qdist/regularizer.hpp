#pragma once

// Embeds a given plane unit-distance graph (with coordinates) into an
// r-regular unit-distance supergraph.  This is the only module using
// approximate real arithmetic; certificates record the worst edge-length
// deviation.

#include <array>
#include <cmath>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "qdist/distance_graphs.hpp"

namespace qdist {

using PlanePoint = std::array<double, 2>;

inline double plane_dist(const PlanePoint& a, const PlanePoint& b) {
    return std::hypot(a[0] - b[0], a[1] - b[1]);
}

/// A unit-distance drawing in the plane, correct to `tolerance`.
struct PlaneEmbedding {
    Graph graph;
    std::vector<PlanePoint> coords;
    double tolerance = 1e-9;
    double worst_edge_deviation = 0.0;

    std::vector<std::size_t> degrees() const {
        std::vector<std::size_t> deg(graph.vertex_count, 0);
        for (auto [u, v] : graph.edges) {
            ++deg[u];
            ++deg[v];
        }
        return deg;
    }

    void update_worst_deviation() {
        worst_edge_deviation = 0.0;
        for (auto [u, v] : graph.edges) {
            double dev = std::abs(plane_dist(coords[u], coords[v]) - 1.0);
            if (dev > worst_edge_deviation) worst_edge_deviation = dev;
        }
    }

    void validate() const {
        graph.validate();
        if (coords.size() != graph.vertex_count) {
            throw std::domain_error("PlaneEmbedding: coords must cover all vertices");
        }
        for (auto [u, v] : graph.edges) {
            if (std::abs(plane_dist(coords[u], coords[v]) - 1.0) > tolerance) {
                throw std::domain_error("PlaneEmbedding: edge (" + std::to_string(u) + "," +
                                        std::to_string(v) + ") is not unit length");
            }
        }
        for (std::size_t u = 0; u < coords.size(); ++u) {
            for (std::size_t v = u + 1; v < coords.size(); ++v) {
                if (plane_dist(coords[u], coords[v]) <= tolerance) {
                    throw std::domain_error("PlaneEmbedding: coinciding vertices " +
                                            std::to_string(u) + "," + std::to_string(v));
                }
            }
        }
    }
};

namespace detail {

constexpr double kSeparation = 1e-6;  // generic-position safety margin

inline bool too_close_to_any(const PlanePoint& p, const std::vector<PlanePoint>& pts) {
    for (const auto& q : pts) {
        if (plane_dist(p, q) < kSeparation) return true;
    }
    return false;
}

}  // namespace detail

/// An r-regular unit-distance graph with 2^r vertices, built by iterated
/// translation doubling from K2.
inline PlaneEmbedding base_regular_graph(std::size_t r) {
    if (r < 1) throw std::domain_error("base_regular_graph: r must be positive");
    PlaneEmbedding g;
    g.graph.vertex_count = 2;
    g.graph.edges = {{0, 1}};
    g.coords = {{0.0, 0.0}, {1.0, 0.0}};
    for (std::size_t step = 2; step <= r; ++step) {
        for (int attempt = 0;; ++attempt) {
            if (attempt > 64) throw std::runtime_error("base_regular_graph: placement failed");
            double theta = 0.9 + 0.377214 * static_cast<double>(step) + 0.1371 * attempt;
            PlanePoint shift{std::cos(theta), std::sin(theta)};
            bool clash = false;
            std::vector<PlanePoint> shifted;
            for (const auto& p : g.coords) {
                PlanePoint q{p[0] + shift[0], p[1] + shift[1]};
                if (detail::too_close_to_any(q, g.coords)) clash = true;
                shifted.push_back(q);
            }
            if (clash) continue;
            std::size_t base = g.graph.vertex_count;
            auto edges = g.graph.edges;
            for (auto [u, v] : edges) g.graph.edges.emplace_back(base + u, base + v);
            for (std::size_t v = 0; v < base; ++v) g.graph.edges.emplace_back(v, base + v);
            for (auto& q : shifted) g.coords.push_back(q);
            g.graph.vertex_count += base;
            break;
        }
    }
    g.update_worst_deviation();
    return g;
}

namespace detail {

// Intersection of unit circles around p (radius ra) and q (radius rb);
// `side` picks one of the two solutions.
inline PlanePoint circle_intersection(const PlanePoint& p, double ra, const PlanePoint& q,
                                      double rb, int side) {
    double d = plane_dist(p, q);
    double x = (d * d + ra * ra - rb * rb) / (2.0 * d);
    double h2 = ra * ra - x * x;
    double h = h2 > 0 ? std::sqrt(h2) : 0.0;
    double ux = (q[0] - p[0]) / d, uy = (q[1] - p[1]) / d;
    return {p[0] + x * ux - side * h * uy, p[1] + x * uy + side * h * ux};
}

// Waypoints p_0 = a, ..., p_n = b, consecutive points exactly unit apart.
// n is odd and large enough that the walk can always close.  Returns an
// empty vector when the stall walk cannot avoid revisiting a waypoint.
inline std::vector<PlanePoint> unit_polyline(const PlanePoint& a, const PlanePoint& b,
                                             std::size_t n, std::mt19937_64& rng) {
    std::vector<PlanePoint> pts{a};
    std::uniform_int_distribution<int> coin(0, 1);
    // pick a circle-intersection side that lands on a fresh point
    auto stall_step = [&](const PlanePoint& p) -> bool {
        PlanePoint c1 = circle_intersection(p, 1.0, b, 1.0, 1);
        PlanePoint c2 = circle_intersection(p, 1.0, b, 1.0, -1);
        bool ok1 = !too_close_to_any(c1, pts), ok2 = !too_close_to_any(c2, pts);
        if (ok1 && ok2) {
            pts.push_back(coin(rng) ? c1 : c2);
        } else if (ok1) {
            pts.push_back(c1);
        } else if (ok2) {
            pts.push_back(c2);
        } else {
            return false;
        }
        return true;
    };
    for (std::size_t i = 1; i + 2 <= n; ++i) {
        const PlanePoint& p = pts.back();
        double d = plane_dist(p, b);
        if (d > 2.0) {
            pts.push_back({p[0] + (b[0] - p[0]) / d, p[1] + (b[1] - p[1]) / d});
        } else if (!stall_step(p)) {
            return {};
        }
    }
    // close with two exact unit segments via the apex
    if (!stall_step(pts.back())) return {};
    pts.push_back(b);
    return pts;
}

}  // namespace detail

/// r-regular unit-distance supergraph of g, preserving g's vertices and
/// edges.  Deficient vertices get pendant neighbors on their unit circles;
/// pendants are then paired up through chains of near-regular gadget copies.
inline PlaneEmbedding regular_supergraph(const PlaneEmbedding& g, std::size_t r,
                                         std::uint64_t seed) {
    g.validate();
    auto deg = g.degrees();
    for (auto d : deg) {
        if (d > r) throw std::domain_error("regular_supergraph: r below maximum degree");
    }

    PlaneEmbedding gadget = base_regular_graph(r);
    auto [gu, gv] = gadget.graph.edges.front();
    std::vector<std::pair<std::size_t, std::size_t>> gadget_inner(gadget.graph.edges.begin() + 1,
                                                                  gadget.graph.edges.end());

    for (int attempt = 0; attempt < 20; ++attempt) {
        std::mt19937_64 rng(seed + 0x9e3779b97f4a7c15ull * attempt);
        std::uniform_real_distribution<double> angle(0.0, 2.0 * 3.14159265358979323846);
        PlaneEmbedding h = g;
        bool failed = false;

        auto add_vertex = [&](const PlanePoint& p) {
            if (detail::too_close_to_any(p, h.coords)) failed = true;
            h.coords.push_back(p);
            return h.graph.vertex_count++;
        };

        // pendant vertices on unit circles around deficient vertices
        std::vector<std::size_t> pendants;
        for (std::size_t v = 0; v < g.graph.vertex_count; ++v) {
            for (std::size_t k = deg[v]; k < r; ++k) {
                std::size_t p = 0;
                for (int tries = 0; tries < 32; ++tries) {
                    double th = angle(rng);
                    PlanePoint pos{h.coords[v][0] + std::cos(th), h.coords[v][1] + std::sin(th)};
                    if (!detail::too_close_to_any(pos, h.coords)) {
                        p = add_vertex(pos);
                        break;
                    }
                    if (tries == 31) failed = true;
                }
                if (failed) break;
                h.graph.edges.emplace_back(v, p);
                pendants.push_back(p);
            }
            if (failed) break;
        }
        if (failed) continue;
        // for r = 1 the pendants themselves reach the target degree
        if (r == 1) pendants.clear();
        if (pendants.empty()) {
            bool regular = true;
            for (auto d : h.degrees()) {
                if (d != r) regular = false;
            }
            if (!regular) continue;
            h.update_worst_deviation();
            h.validate();
            return h;
        }

        std::optional<std::size_t> lone;
        if (pendants.size() % 2) {
            lone = pendants.back();
            pendants.pop_back();
        }

        // places one copy of the gadget minus its (gu, gv) edge with gu at
        // vertex `from` and gv landing on a fresh vertex at position `to`
        auto place_gadget = [&](std::size_t from, const PlanePoint& to,
                                std::optional<std::size_t> to_vertex) -> std::size_t {
            const PlanePoint A = h.coords[from];
            double phi = std::atan2(to[1] - A[1], to[0] - A[0]) -
                         std::atan2(gadget.coords[gv][1] - gadget.coords[gu][1],
                                    gadget.coords[gv][0] - gadget.coords[gu][0]);
            double cs = std::cos(phi), sn = std::sin(phi);
            std::vector<std::size_t> map(gadget.graph.vertex_count);
            for (std::size_t w = 0; w < gadget.graph.vertex_count; ++w) {
                if (w == gu) {
                    map[w] = from;
                    continue;
                }
                double dx = gadget.coords[w][0] - gadget.coords[gu][0];
                double dy = gadget.coords[w][1] - gadget.coords[gu][1];
                PlanePoint pos{A[0] + cs * dx - sn * dy, A[1] + sn * dx + cs * dy};
                map[w] = (w == gv && to_vertex) ? *to_vertex : add_vertex(pos);
            }
            for (auto [x, y] : gadget_inner) h.graph.edges.emplace_back(map[x], map[y]);
            return map[gv];
        };

        for (std::size_t i = 0; i + 1 < pendants.size() && !failed; i += 2) {
            std::size_t a = pendants[i], b = pendants[i + 1];
            double d0 = plane_dist(h.coords[a], h.coords[b]);
            std::size_t n = static_cast<std::size_t>(std::ceil(d0)) + 3;
            if (n % 2 == 0) ++n;
            auto line = detail::unit_polyline(h.coords[a], h.coords[b], n, rng);
            if (line.empty()) {
                failed = true;
                break;
            }
            // odd segments carry gadget copies, even segments are plain edges
            std::size_t cur = a;
            for (std::size_t s = 1; s <= n && !failed; ++s) {
                if (s % 2 == 1) {
                    std::optional<std::size_t> tv;
                    if (s == n) tv = b;
                    cur = place_gadget(cur, line[s], tv);
                } else {
                    std::size_t next = add_vertex(line[s]);
                    h.graph.edges.emplace_back(cur, next);
                    cur = next;
                }
            }
        }
        if (failed) continue;

        if (lone) {
            // r copies of the whole structure sharing only the degree-1 vertex
            PlanePoint c = h.coords[*lone];
            PlaneEmbedding base = h;
            for (std::size_t copy = 1; copy < r && !failed; ++copy) {
                double phi = angle(rng);
                double cs = std::cos(phi), sn = std::sin(phi);
                std::vector<std::size_t> map(base.graph.vertex_count);
                for (std::size_t w = 0; w < base.graph.vertex_count; ++w) {
                    if (w == *lone) {
                        map[w] = *lone;
                        continue;
                    }
                    double dx = base.coords[w][0] - c[0];
                    double dy = base.coords[w][1] - c[1];
                    map[w] = add_vertex({c[0] + cs * dx - sn * dy, c[1] + sn * dx + cs * dy});
                }
                for (auto [x, y] : base.graph.edges) h.graph.edges.emplace_back(map[x], map[y]);
            }
            if (failed) continue;
        }

        auto final_deg = h.degrees();
        for (auto d : final_deg) {
            if (d != r) failed = true;
        }
        if (failed) continue;
        h.update_worst_deviation();
        if (h.worst_edge_deviation > h.tolerance) continue;
        h.validate();
        return h;
    }
    throw std::runtime_error("regular_supergraph: placement failed for seed " +
                             std::to_string(seed));
}

/// Minimal static SVG rendering of a plane embedding.
inline std::string render_svg(const PlaneEmbedding& g, double scale = 80.0) {
    double minx = 1e9, miny = 1e9, maxx = -1e9, maxy = -1e9;
    for (const auto& p : g.coords) {
        minx = std::min(minx, p[0]);
        maxx = std::max(maxx, p[0]);
        miny = std::min(miny, p[1]);
        maxy = std::max(maxy, p[1]);
    }
    double pad = 0.5;
    auto tx = [&](double x) { return (x - minx + pad) * scale; };
    auto ty = [&](double y) { return (maxy - y + pad) * scale; };
    std::string svg = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" +
                      std::to_string((maxx - minx + 2 * pad) * scale) + "\" height=\"" +
                      std::to_string((maxy - miny + 2 * pad) * scale) + "\">\n";
    for (auto [u, v] : g.graph.edges) {
        svg += "  <line x1=\"" + std::to_string(tx(g.coords[u][0])) + "\" y1=\"" +
               std::to_string(ty(g.coords[u][1])) + "\" x2=\"" +
               std::to_string(tx(g.coords[v][0])) + "\" y2=\"" +
               std::to_string(ty(g.coords[v][1])) + "\" stroke=\"black\" stroke-width=\"1\"/>\n";
    }
    for (const auto& p : g.coords) {
        svg += "  <circle cx=\"" + std::to_string(tx(p[0])) + "\" cy=\"" +
               std::to_string(ty(p[1])) + "\" r=\"3\" fill=\"crimson\"/>\n";
    }
    svg += "</svg>\n";
    return svg;
}

}  // namespace qdist
