#pragma once

// The headline constructions, each returning an exactly verified Embedding:
// K_{2,3} in Q^3 at any realized distance, the book graph in Q^n at sqrt(2),
// K_{1,3,3} in Q^5 at any sqrt(r), and the K_{4m+1} clique extension in
// Q^{4m+3}.

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qdist/diophantine.hpp"
#include "qdist/distance_graphs.hpp"
#include "qdist/exact_arith.hpp"
#include "qdist/lattice_geom.hpp"
#include "qdist/linalg.hpp"
#include "qdist/qvec.hpp"

namespace qdist {

/// Construction result: either a verified embedding or an infeasibility
/// witness (the failing congruence, spelled out).
struct EmbedOutcome {
    std::optional<Embedding> embedding;
    std::string witness;
    bool ok() const { return embedding.has_value(); }
};

namespace detail {

inline void require_verified(const Embedding& e, const char* who) {
    if (!verify_embedding(e).pass) {
        throw std::logic_error(std::string(who) + ": constructed embedding failed verification");
    }
}

// As many distinct sphere points as the slice enumeration yields, up to
// `want`; never throws.
inline std::vector<QVec> sphere_point_pool(std::size_t n, const Rational& r,
                                           std::size_t want) {
    std::vector<QVec> pool;
    try {
        if (auto pts = sphere_points(n, r, want)) pool = *pts;
    } catch (const std::runtime_error&) {
        for (std::size_t k = want; k-- > 1;) {
            try {
                if (auto pts = sphere_points(n, r, k)) {
                    pool = *pts;
                    break;
                }
            } catch (const std::runtime_error&) {
            }
        }
    }
    return pool;
}

inline bool plane_misses_origin(const QVec& b1, const QVec& b2, const QVec& b3) {
    RMatrix m{(b2 - b1).coords(), (b3 - b1).coords()};
    if (rank(m) != 2) return false;  // collinear
    m.push_back(b1.coords());
    return rank(m) == 3;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// K_{2,3} in Q^3

/// Parts {a1, a2} and {b1, b2, b3}; a1 at the origin, the b's on the sphere
/// of squared radius r with their plane avoiding the origin, a2 at twice the
/// circumcenter of the b triangle.
inline EmbedOutcome embed_k23_q3(const Rational& r) {
    if (r <= 0) throw std::domain_error("embed_k23_q3: r must be positive");
    if (!is_distance_realized(3, r)) {
        Int s = square_free_part(r).s;
        return {std::nullopt,
                "square-free part " + s.get_str() + " of r = " + r.to_string() +
                    " is congruent to 7 (mod 8), so r is not a sum of three rational squares"};
    }
    auto pool = detail::sphere_point_pool(3, r, 12);
    for (std::size_t i = 0; i < pool.size(); ++i) {
        for (std::size_t j = i + 1; j < pool.size(); ++j) {
            for (std::size_t k = j + 1; k < pool.size(); ++k) {
                const QVec &b1 = pool[i], &b2 = pool[j], &b3 = pool[k];
                if (!detail::plane_misses_origin(b1, b2, b3)) continue;
                QVec c = circumcenter(b1, b2, b3, true);
                Embedding e;
                e.graph = Graph::complete_multipartite({2, 3});
                e.n = 3;
                e.r = r;
                e.coords = {QVec(3), Rational(2) * c, b1, b2, b3};
                e.names = {"a1", "a2", "b1", "b2", "b3"};
                detail::require_verified(e, "embed_k23_q3");
                return {e, ""};
            }
        }
    }
    throw std::logic_error("embed_k23_q3: no admissible sphere-point triple found");
}

// ---------------------------------------------------------------------------
// Book graph at sqrt(2)

/// Complete multipartite graph with n-1 singleton parts {v_i = e_i} and one
/// part {b1, b2, b3} placed at points (t, ..., t, w) with
/// (n-2) t^2 + (t-1)^2 + w^2 = 2, via chord solutions seeded at (0, 1).
inline Embedding embed_book_sqrt2(std::size_t n) {
    if (n < 2) throw std::domain_error("embed_book_sqrt2: need n >= 2");
    // expanded: (n-1) t^2 - 2t + w^2 - 1 = 0
    Conic2 conic(Rational(static_cast<long>(n - 1)), 0, 1, -2, 0, -1);
    auto sols = chord_solutions(conic, {Rational(0), Rational(1)}, 3);

    std::vector<std::size_t> sizes(n - 1, 1);
    sizes.push_back(3);
    Embedding e;
    e.graph = Graph::complete_multipartite(sizes);
    e.n = n;
    e.r = 2;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        e.coords.push_back(unit_vector(n, i));
        e.names.push_back("v" + std::to_string(i + 1));
    }
    for (std::size_t s = 0; s < 3; ++s) {
        QVec b(n);
        for (std::size_t i = 0; i + 1 < n; ++i) b[i] = sols[s].first;
        b[n - 1] = sols[s].second;
        e.coords.push_back(std::move(b));
        e.names.push_back("b" + std::to_string(s + 1));
    }
    detail::require_verified(e, "embed_book_sqrt2");
    return e;
}

// ---------------------------------------------------------------------------
// K_{1,3,3} in Q^5

/// Parameter plan for one square-free integer target distance.  r1 = (a/b) r'
/// is the squared leg of the right triangle, q = b/(2a) the equidistant
/// scaling, k0 the fifth-coordinate seed.
struct K133Plan {
    Int r_sf;     // square-free normalized distance
    Int d, e;     // case parameters (e = 0 in the even case)
    Int a, b;
    Rational r1, q, k0;

    bool invariants_hold() const {
        if (!(a < b) || !(3 * a > r_sf)) return false;
        Rational cond_i = Rational(r_sf * (4 * a - b), a);
        if (!is_rational_square(cond_i)) return false;
        return is_sum_three_squares(a * b - a * a);
    }
};

/// Deviating-case selection per the residue of r' mod 4.  `index` > 0 asks
/// for the next larger admissible parameter set (deterministic retry).
inline K133Plan plan_k133(const Int& r_sf, unsigned index = 0) {
    K133Plan plan;
    plan.r_sf = r_sf;
    unsigned long mod4 = mpz_fdiv_ui(r_sf.get_mpz_t(), 4);
    if (mod4 == 2) {
        // r' even: a the minimal odd square with 3a > r', b = 4a - r'.
        Int d = 1;
        while (3 * d * d <= r_sf) d += 2;
        d += 2 * index;
        plan.d = d;
        plan.e = 0;
        plan.a = d * d;
        plan.b = 4 * plan.a - r_sf;
    } else {
        // r' odd: a = r' d^2 with d odd (r' = 1 mod 4) or even (r' = 3 mod 4),
        // b = 4a - e^2 for the largest odd e with e^2 < 3a.
        Int d = (mod4 == 1) ? 1 : 2;
        d += 2 * index;
        plan.d = d;
        plan.a = r_sf * d * d;
        Int e = isqrt(3 * plan.a - 1);
        if (e % 2 == 0) e -= 1;
        plan.e = e;
        plan.b = 4 * plan.a - e * e;
    }
    plan.r1 = Rational(plan.a, plan.b) * Rational(r_sf);
    plan.q = Rational(plan.b, 2 * plan.a);
    Rational k0_sq = Rational(r_sf * (4 * plan.a - plan.b), 4 * plan.a);
    auto k0 = rational_sqrt(k0_sq);
    if (!k0) throw std::logic_error("plan_k133: condition (i) violated");
    plan.k0 = *k0;
    return plan;
}

namespace detail {

inline std::optional<Embedding> try_embed_k133(const K133Plan& plan) {
    const Rational r(plan.r_sf);
    QVec p1 = *rational_point_on_sphere(4, plan.r1);
    auto uvw_int = decompose_three_squares(plan.a * plan.b - plan.a * plan.a);
    if (!uvw_int) return std::nullopt;
    Rational a_r(plan.a);
    Rational u = Rational((*uvw_int)[0]) / a_r;
    Rational v = Rational((*uvw_int)[1]) / a_r;
    Rational w = Rational((*uvw_int)[2]) / a_r;
    auto frame = quaternion_orthobasis(p1);
    QVec p2 = p1 + u * frame[0] + v * frame[1] + w * frame[2];

    // P3 direction: inside the frame, orthogonal to (u, v, w).
    QVec dir3 = (!u.is_zero() || !v.is_zero())
                    ? v * frame[0] - u * frame[1]
                    : w * frame[0] - u * frame[2];
    if (dir3.is_zero()) return std::nullopt;

    // a-vertices: chord solutions of |P1 + s uvec + t vvec|^2 = r seeded at
    // P2 (s = 1, t = 0).
    QVec uvec = p2 - p1, vvec = dir3;
    Conic2 eq32(dot(uvec, uvec), Rational(2) * dot(uvec, vvec), dot(vvec, vvec),
                Rational(2) * dot(p1, uvec), Rational(2) * dot(p1, vvec), plan.r1 - r);
    std::vector<ConicPoint> sols32;
    try {
        sols32 = chord_solutions(eq32, {Rational(1), Rational(0)}, 8);
    } catch (const ChordExhausted&) {
        return std::nullopt;
    }
    std::vector<QVec> a_candidates;
    for (const auto& [s, t] : sols32) a_candidates.push_back(p1 + s * uvec + t * vvec);

    QVec beta = plan.q * p1;
    const QVec origin4(4);
    for (std::size_t i = 0; i < a_candidates.size(); ++i) {
        for (std::size_t j = i + 1; j < a_candidates.size(); ++j) {
            for (std::size_t k = j + 1; k < a_candidates.size(); ++k) {
                std::array<QVec, 3> av{a_candidates[i], a_candidates[j], a_candidates[k]};
                auto locus = equidistant_affine({av[0], av[1], av[2], origin4}, 4);
                if (!locus || locus->dimension() != 1) continue;
                bool beta_ok = true;
                for (const auto& ai : av) {
                    if (squared_dist(beta, ai) != squared_norm(beta)) beta_ok = false;
                }
                if (!beta_ok) continue;
                const QVec& alpha = locus->directions[0];

                // b-vertices: |beta + t alpha|^2 + k^2 = r seeded at (0, k0).
                Conic2 eq33(dot(alpha, alpha), 0, 1, Rational(2) * dot(alpha, beta), 0,
                            squared_norm(beta) - r);
                std::vector<ConicPoint> sols33;
                try {
                    sols33 = chord_solutions(eq33, {Rational(0), plan.k0}, 10);
                } catch (const ChordExhausted&) {
                    continue;
                }
                std::vector<QVec> bv;
                for (const auto& [t, kk] : sols33) {
                    if (kk.is_zero()) continue;
                    QVec b4 = beta + t * alpha;
                    QVec b5 = b4.padded(5);
                    b5[4] = kk;
                    bv.push_back(std::move(b5));
                    if (bv.size() == 3) break;
                }
                if (bv.size() < 3) continue;

                Embedding e;
                e.graph = Graph::complete_multipartite({1, 3, 3});
                e.n = 5;
                e.r = r;
                e.coords = {QVec(5)};
                e.names = {"c"};
                for (std::size_t x = 0; x < 3; ++x) {
                    e.coords.push_back(av[x].padded(5));
                    e.names.push_back("a" + std::to_string(x + 1));
                }
                for (std::size_t x = 0; x < 3; ++x) {
                    e.coords.push_back(bv[x]);
                    e.names.push_back("b" + std::to_string(x + 1));
                }
                if (!verify_embedding(e).pass) continue;
                return e;
            }
        }
    }
    return std::nullopt;
}

}  // namespace detail

/// K_{1,3,3} at distance sqrt(r), any positive rational r.  The target is
/// normalized to its square-free integer part r' and the finished embedding
/// is scaled back by the square factor.
inline Embedding embed_k133_q5(const Rational& r) {
    if (r <= 0) throw std::domain_error("embed_k133_q5: r must be positive");
    auto sf = square_free_part(r);
    for (unsigned index = 0; index < 5; ++index) {
        K133Plan plan = plan_k133(sf.s, index);
        if (!plan.invariants_hold()) continue;
        if (auto e = detail::try_embed_k133(plan)) {
            if (sf.f != 1) {
                for (auto& p : e->coords) p *= sf.f;
                e->r = r;
                detail::require_verified(*e, "embed_k133_q5");
            }
            return *e;
        }
    }
    throw std::logic_error("embed_k133_q5: construction failed for r = " + r.to_string());
}

// ---------------------------------------------------------------------------
// Clique extension: K_{4m+1} in Q^{4m+3}

/// Scale the standard basis simplex e_1..e_{4m} (pairwise squared distance 2)
/// to pairwise squared distance r, zero-pad by three coordinates, and extend
/// by one rational point of the equidistant locus at squared distance r.
inline Embedding clique_extension(std::size_t m, const Rational& r) {
    if (m < 1) throw std::domain_error("clique_extension: m must be positive");
    if (r <= 0) throw std::domain_error("clique_extension: r must be positive");
    const std::size_t n0 = 4 * m, amb = 4 * m + 3;

    std::vector<QVec> pre;
    for (std::size_t i = 0; i < n0; ++i) pre.push_back(unit_vector(n0, i));
    QVec ones(n0);
    for (std::size_t i = 0; i < n0; ++i) ones[i] = 1;
    pre.push_back(ones);
    auto mapped = scale_sqrt_q(pre, r / Rational(2));
    QVec normal = mapped.back().padded(amb);  // orthogonal to the simplex hull
    mapped.pop_back();

    QVec centroid(n0);
    for (const auto& p : mapped) centroid += p;
    centroid *= Rational(1, static_cast<long>(n0));
    QVec c0 = centroid.padded(amb);

    std::vector<QVec> simplex;
    for (const auto& p : mapped) simplex.push_back(p.padded(amb));

    Rational rho = squared_dist(c0, simplex[0]);
    auto sol = solve_scaled_three_square(squared_norm(normal), r - rho);
    if (!sol) throw std::logic_error("clique_extension: equidistant quadratic unsolved");
    const auto& [t, y, z, w] = *sol;
    QVec extension = c0 + t * normal;
    extension[n0] += y;
    extension[n0 + 1] += z;
    extension[n0 + 2] += w;

    Embedding e;
    e.graph = Graph::complete(n0 + 1);
    e.n = amb;
    e.r = r;
    e.coords = simplex;
    e.coords.push_back(extension);
    for (std::size_t i = 0; i < n0; ++i) e.names.push_back("P" + std::to_string(i + 1));
    e.names.push_back("P");
    detail::require_verified(e, "clique_extension");
    return e;
}

}  // namespace qdist
