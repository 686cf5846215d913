#pragma once

// Exact geometry over Q^n: rational points on spheres, the sqrt(q)
// distance-scaling map on Q^{4k}, quaternion orthogonal frames, triangle
// embedding in Q^4, circumcenters, and equidistant affine subspaces.

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <tuple>
#include <vector>

#include "qdist/diophantine.hpp"
#include "qdist/exact_arith.hpp"
#include "qdist/linalg.hpp"
#include "qdist/qvec.hpp"

namespace qdist {

// ---------------------------------------------------------------------------
// Realizability of sqrt(r) as a distance in Q^n

/// With r = p/q, sqrt(r) is a sum of n rational squares iff the integer p*q
/// is a sum of n integer squares (multiply through by q^2).
inline bool is_distance_realized(std::size_t n, const Rational& r) {
    if (n < 1) throw std::domain_error("is_distance_realized: n must be positive");
    if (r <= 0) throw std::domain_error("is_distance_realized: r must be positive");
    if (n >= 4) return true;  // Lagrange
    Int pq = r.num() * r.den();
    switch (n) {
        case 3: return is_sum_three_squares(pq);
        case 2: return is_sum_two_squares(pq);
        default: return is_perfect_square(pq);
    }
}

/// One exact point of Q^n with squared norm r, or infeasible.
inline std::optional<QVec> rational_point_on_sphere(std::size_t n, const Rational& r) {
    if (n < 1) throw std::domain_error("rational_point_on_sphere: n must be positive");
    if (r <= 0) throw std::domain_error("rational_point_on_sphere: r must be positive");
    if (!is_distance_realized(n, r)) return std::nullopt;
    Int pq = r.num() * r.den();
    Rational den(r.den());
    QVec v(n);
    if (n == 1) {
        v[0] = *rational_sqrt(r);
    } else if (n == 2) {
        auto d = *decompose_two_squares(pq);
        v[0] = Rational(d[0]) / den;
        v[1] = Rational(d[1]) / den;
    } else if (n == 3) {
        auto d = *decompose_three_squares(pq);
        for (std::size_t i = 0; i < 3; ++i) v[i] = Rational(d[i]) / den;
    } else {
        auto d = decompose_four_squares(pq);
        for (std::size_t i = 0; i < 4; ++i) v[i] = Rational(d[i]) / den;
    }
    return v;
}

/// `count` pairwise-distinct points of squared norm r, generated by the
/// chord method on two-coordinate slices through a base point.  Slices are
/// visited in a fixed order, so the output is deterministic.
inline std::optional<std::vector<QVec>> sphere_points(std::size_t n, const Rational& r,
                                                      std::size_t count) {
    auto base_opt = rational_point_on_sphere(n, r);
    if (!base_opt) return std::nullopt;
    std::vector<QVec> out;
    auto push = [&](const QVec& p) {
        for (const auto& q : out) {
            if (q == p) return;
        }
        out.push_back(p);
    };
    // Visit slices round-robin with a growing per-slice quota so the output
    // is spread over many coordinate planes, not exhausted from the first.
    for (std::size_t quota = 4; out.size() < count; quota *= 4) {
        std::size_t before = out.size();
        for (const QVec& base : {*base_opt, Rational(-1) * (*base_opt)}) {
            push(base);
            if (out.size() >= count) break;
            for (std::size_t i = 0; i + 1 < n && out.size() < count; ++i) {
                for (std::size_t j = i + 1; j < n && out.size() < count; ++j) {
                    Rational c = base[i] * base[i] + base[j] * base[j];
                    if (c.is_zero()) continue;  // slice circle degenerates to a point
                    Conic2 circle(1, 0, 1, 0, 0, -c);
                    try {
                        auto sols = chord_solutions(circle, {base[i], base[j]},
                                                    std::min(quota, count + 2));
                        for (const auto& [x, y] : sols) {
                            QVec p = base;
                            p[i] = x;
                            p[j] = y;
                            push(p);
                            if (out.size() >= count) break;
                        }
                    } catch (const ChordExhausted&) {
                        // try the next slice
                    }
                }
            }
            if (out.size() >= count) break;
        }
        if (out.size() == before && quota > count + 2) break;  // no progress possible
    }
    if (out.size() < count) {
        throw std::runtime_error("sphere_points: could not produce enough distinct points");
    }
    out.resize(count);
    return out;
}

// ---------------------------------------------------------------------------
// Quaternion machinery

/// Hamilton product of two dimension-4 vectors read as quaternions.
inline QVec quaternion_mul(const QVec& u, const QVec& v) {
    if (u.dim() != 4 || v.dim() != 4) throw std::domain_error("quaternion_mul: need dim 4");
    return QVec{u[0] * v[0] - u[1] * v[1] - u[2] * v[2] - u[3] * v[3],
                u[0] * v[1] + u[1] * v[0] + u[2] * v[3] - u[3] * v[2],
                u[0] * v[2] - u[1] * v[3] + u[2] * v[0] + u[3] * v[1],
                u[0] * v[3] + u[1] * v[2] - u[2] * v[1] + u[3] * v[0]};
}

/// Rational quaternion of norm q, from a four-square decomposition of
/// numerator times denominator.
inline QVec quaternion_of_norm(const Rational& q) {
    if (q <= 0) throw std::domain_error("quaternion_of_norm: q must be positive");
    auto d = decompose_four_squares(q.num() * q.den());
    Rational den(q.den());
    return QVec{Rational(d[0]) / den, Rational(d[1]) / den, Rational(d[2]) / den,
                Rational(d[3]) / den};
}

/// The frame p*i, p*j, p*k: pairwise orthogonal, orthogonal to p, all of
/// squared norm |p|^2.
inline std::array<QVec, 3> quaternion_orthobasis(const QVec& p) {
    if (p.dim() != 4) throw std::domain_error("quaternion_orthobasis: need dim 4");
    if (p.is_zero()) throw std::domain_error("quaternion_orthobasis: zero vector");
    return {quaternion_mul(p, QVec{0, 1, 0, 0}), quaternion_mul(p, QVec{0, 0, 1, 0}),
            quaternion_mul(p, QVec{0, 0, 0, 1})};
}

/// The bijection of Q^n (n = 0 mod 4) scaling every squared distance by
/// exactly q: blockwise right multiplication by a quaternion of norm q.
inline std::vector<QVec> scale_sqrt_q(const std::vector<QVec>& points, const Rational& q) {
    if (points.empty()) return {};
    const std::size_t n = points[0].dim();
    if (n == 0 || n % 4 != 0) {
        throw std::domain_error("scale_sqrt_q: dimension must be a positive multiple of 4");
    }
    QVec h = quaternion_of_norm(q);
    std::vector<QVec> out;
    out.reserve(points.size());
    for (const auto& p : points) {
        if (p.dim() != n) throw std::domain_error("scale_sqrt_q: mixed dimensions");
        QVec image(n);
        for (std::size_t b = 0; b < n; b += 4) {
            QVec block{p[b], p[b + 1], p[b + 2], p[b + 3]};
            QVec mapped = quaternion_mul(block, h);
            for (std::size_t i = 0; i < 4; ++i) image[b + i] = mapped[i];
        }
        out.push_back(std::move(image));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Triangles in Q^4

/// Squared side lengths of a triangle.
struct TriangleSq {
    Rational a, b, c;

    /// 16 * Area^2 = 2(ab + ac + bc) - a^2 - b^2 - c^2; zero iff degenerate.
    Rational area16() const {
        return Rational(2) * (a * b + a * c + b * c) - a * a - b * b - c * c;
    }
};

/// Beeson's criterion over Q^4: the triangle embeds iff the square-free part
/// of 16 Area^2 is a sum of three squares.
inline bool triangle_embeddable_q4(const TriangleSq& t) {
    Rational area16 = t.area16();
    if (area16 <= 0) throw std::domain_error("triangle_embeddable_q4: degenerate triangle");
    return is_sum_three_squares(square_free_part(area16).s);
}

struct TriangleEmbedding {
    QVec origin, p1, p2;  // |O p1|^2 = a, |p1 p2|^2 = b, |O p2|^2 = c
};

/// Exact vertices in Q^4 for a triangle with squared sides (a, b, c), or
/// infeasible when the three-square criterion fails.  p2 is built in the
/// quaternion frame of p1, so that |O p2|^2 = lambda^2 a + mu a with
/// lambda = (c + a - b)/(2a) and mu = (c - lambda^2 a)/a.
inline std::optional<TriangleEmbedding> embed_triangle_q4(const TriangleSq& t) {
    if (t.a <= 0 || t.b <= 0 || t.c <= 0) {
        throw std::domain_error("embed_triangle_q4: sides must be positive");
    }
    if (t.area16() <= 0) throw std::domain_error("embed_triangle_q4: degenerate triangle");
    QVec p1 = *rational_point_on_sphere(4, t.a);
    Rational lambda = (t.c + t.a - t.b) / (Rational(2) * t.a);
    Rational mu = (t.c - lambda * lambda * t.a) / t.a;
    auto uvw = rational_three_squares(mu);
    if (!uvw) return std::nullopt;
    auto frame = quaternion_orthobasis(p1);
    QVec p2 = lambda * p1 + (*uvw)[0] * frame[0] + (*uvw)[1] * frame[1] + (*uvw)[2] * frame[2];
    return TriangleEmbedding{QVec(4), p1, p2};
}

// ---------------------------------------------------------------------------
// Circumcenters and equidistant subspaces

/// Circumcenter of the triangle b1 b2 b3 inside its own affine plane.  When
/// `require_plane_off_origin` is set, the plane passing through the origin is
/// a precondition error (the reflection trick 2C needs it).
inline QVec circumcenter(const QVec& b1, const QVec& b2, const QVec& b3,
                         bool require_plane_off_origin = false) {
    QVec u = b2 - b1, v = b3 - b1;
    Rational uu = dot(u, u), uv = dot(u, v), vv = dot(v, v);
    Rational det = uu * vv - uv * uv;
    if (det.is_zero()) throw std::domain_error("circumcenter: collinear points");
    if (require_plane_off_origin) {
        RMatrix m;
        for (const QVec* w : {&u, &v}) {
            std::vector<Rational> row(w->coords());
            m.push_back(row);
        }
        std::size_t rank_uv = rank(m);
        m.push_back(b1.coords());
        if (rank(m) == rank_uv) {
            throw std::domain_error("circumcenter: plane passes through the origin");
        }
    }
    // C = b1 + s u + t v with 2 C . (bi - b1) = |bi|^2 - |b1|^2.
    Rational half(1, 2);
    Rational r1 = half * (squared_norm(b2) - squared_norm(b1)) - dot(b1, u);
    Rational r2 = half * (squared_norm(b3) - squared_norm(b1)) - dot(b1, v);
    Rational s = (r1 * vv - r2 * uv) / det;
    Rational t = (r2 * uu - r1 * uv) / det;
    return b1 + s * u + t * v;
}

/// Exact parameterization of all points of Q^ambient equidistant from every
/// input point (inputs zero-padded to the ambient dimension).  Empty locus
/// is reported as infeasible.
inline std::optional<AffineSet> equidistant_affine(const std::vector<QVec>& points,
                                                   std::size_t ambient) {
    if (points.size() < 2) throw std::domain_error("equidistant_affine: need two points");
    std::vector<QVec> padded;
    padded.reserve(points.size());
    for (const auto& p : points) {
        if (p.dim() > ambient) throw std::domain_error("equidistant_affine: ambient too small");
        padded.push_back(p.padded(ambient));
    }
    for (std::size_t i = 0; i < padded.size(); ++i) {
        for (std::size_t j = i + 1; j < padded.size(); ++j) {
            if (padded[i] == padded[j]) {
                throw std::domain_error("equidistant_affine: points must be distinct");
            }
        }
    }
    // |X - p0|^2 = |X - pi|^2  <=>  2 X . (pi - p0) = |pi|^2 - |p0|^2
    RMatrix a;
    std::vector<Rational> b;
    for (std::size_t i = 1; i < padded.size(); ++i) {
        QVec d = padded[i] - padded[0];
        std::vector<Rational> row;
        row.reserve(ambient);
        for (std::size_t j = 0; j < ambient; ++j) row.push_back(Rational(2) * d[j]);
        a.push_back(std::move(row));
        b.push_back(squared_norm(padded[i]) - squared_norm(padded[0]));
    }
    return solve_affine(a, b);
}

}  // namespace qdist
