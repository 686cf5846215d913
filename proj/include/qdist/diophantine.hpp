#pragma once

// Rational-solution machinery for the quadratic Diophantine equations the
// constructions hinge on: the chord method (one rational point on a conic
// yields infinitely many) and the reduction chain behind the clique
// extension equation.

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qdist/exact_arith.hpp"

namespace qdist {

/// Bivariate quadratic a x^2 + b xy + c y^2 + d x + e y + f = 0.
struct Conic2 {
    Rational a, b, c, d, e, f;

    Conic2(Rational a_, Rational b_, Rational c_, Rational d_, Rational e_, Rational f_)
        : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), d(std::move(d_)),
          e(std::move(e_)), f(std::move(f_)) {
        if (a.is_zero() && b.is_zero() && c.is_zero()) {
            throw std::domain_error("Conic2: not genuinely quadratic");
        }
    }

    Rational evaluate(const Rational& x, const Rational& y) const {
        return a * x * x + b * x * y + c * y * y + d * x + e * y + f;
    }
};

using ConicPoint = std::pair<Rational, Rational>;

/// Thrown when the bounded slope search cannot produce the requested number
/// of distinct solutions (degenerate conics whose rational points form a
/// finite set).
class ChordExhausted : public std::runtime_error {
public:
    ChordExhausted(std::size_t slopes_tried, std::size_t found, std::size_t wanted)
        : std::runtime_error("chord_solutions: only " + std::to_string(found) + " of " +
                             std::to_string(wanted) + " solutions after " +
                             std::to_string(slopes_tried) + " chord lines"),
          slopes_tried(slopes_tried) {}
    std::size_t slopes_tried;
};

namespace detail {

// Second intersection of the line through (x0, y0) with slope m, or nullopt
// for tangent / degenerate lines.
inline std::optional<ConicPoint> chord_step(const Conic2& k, const ConicPoint& p,
                                            const Rational& m) {
    const auto& [x0, y0] = p;
    // Substitute x = x0 + u, y = y0 + m u; the constant term vanishes
    // because the seed lies on the conic.
    Rational quad = k.a + k.b * m + k.c * m * m;
    Rational lin = Rational(2) * k.a * x0 + k.b * (y0 + m * x0) +
                   Rational(2) * k.c * m * y0 + k.d + k.e * m;
    if (quad.is_zero()) return std::nullopt;
    Rational u = -lin / quad;
    if (u.is_zero()) return std::nullopt;  // tangent at the seed
    return ConicPoint{x0 + u, y0 + m * u};
}

// Second intersection with the vertical line x = x0.
inline std::optional<ConicPoint> chord_step_vertical(const Conic2& k, const ConicPoint& p) {
    const auto& [x0, y0] = p;
    if (k.c.is_zero()) return std::nullopt;
    // c y^2 + (b x0 + e) y + (a x0^2 + d x0 + f) = 0 has root y0; the other
    // root follows from the sum of roots.
    Rational y1 = -(k.b * x0 + k.e) / k.c - y0;
    if (y1 == y0) return std::nullopt;
    return ConicPoint{x0, y1};
}

}  // namespace detail

/// Chord method: `count` pairwise-distinct exact solutions, the seed first.
/// Lines through the seed are tried in the fixed order slope 0, vertical,
/// 1, -1, 2, -2, ...
inline std::vector<ConicPoint> chord_solutions(const Conic2& conic, const ConicPoint& seed,
                                               std::size_t count) {
    if (count < 1) throw std::domain_error("chord_solutions: count must be positive");
    if (!conic.evaluate(seed.first, seed.second).is_zero()) {
        throw std::domain_error("chord_solutions: seed does not satisfy the conic");
    }
    std::vector<ConicPoint> out{seed};
    auto push = [&](const std::optional<ConicPoint>& p) {
        if (!p) return;
        for (const auto& q : out) {
            if (q == *p) return;
        }
        out.push_back(*p);
    };

    const std::size_t max_lines = 64 + 8 * count;
    std::size_t lines = 0;
    push(detail::chord_step(conic, seed, Rational(0)));
    ++lines;
    if (out.size() < count) {
        push(detail::chord_step_vertical(conic, seed));
        ++lines;
    }
    for (long m = 1; out.size() < count && lines < max_lines; ++m) {
        push(detail::chord_step(conic, seed, Rational(m)));
        ++lines;
        if (out.size() >= count) break;
        push(detail::chord_step(conic, seed, Rational(-m)));
        ++lines;
    }
    if (out.size() < count) throw ChordExhausted(lines, out.size(), count);
    out.resize(count);
    return out;
}

// ---------------------------------------------------------------------------

/// Rationals (t, y, z, w) with A t^2 + y^2 + z^2 + w^2 = C, found by a
/// deterministic height-ordered scan over t followed by a three-rational-
/// square decomposition of the remainder.  Requires A > 0.
inline std::optional<std::array<Rational, 4>> solve_scaled_three_square(const Rational& A,
                                                                       const Rational& C) {
    if (A <= 0) throw std::domain_error("solve_scaled_three_square: A must be positive");
    if (C < 0) return std::nullopt;
    auto try_t = [&](const Rational& t) -> std::optional<std::array<Rational, 4>> {
        Rational mu = C - A * t * t;
        if (mu < 0) return std::nullopt;
        if (auto yzw = rational_three_squares(mu)) {
            return std::array<Rational, 4>{t, (*yzw)[0], (*yzw)[1], (*yzw)[2]};
        }
        return std::nullopt;
    };
    if (auto sol = try_t(Rational(0))) return sol;
    const long max_height = 64;
    for (long h = 1; h <= max_height; ++h) {
        // candidates t = p/q in lowest terms with max(p, q) == h
        for (long p = 1; p <= h; ++p) {
            for (long q = 1; q <= h; ++q) {
                if (p != h && q != h) continue;
                Rational t(p, q);
                if (t.num() != p || t.den() != q) continue;  // not in lowest terms
                if (auto sol = try_t(t)) return sol;
            }
        }
    }
    return std::nullopt;
}

/// Exact solution (x, y, z, w) of
///     r(4m-1)/(8m) + 2rm x^2 + y^2 + z^2 + w^2 = r.
/// Homogenize, substitute t = 4m t0, strip the square part of 2rm, pick
/// (t1, x1) by congruence class so the right-hand side is a sum of three
/// squares, then dehomogenize.
inline std::array<Rational, 4> solve_eq41(long m, long r) {
    if (m < 1 || r < 1) throw std::domain_error("solve_eq41: m and r must be positive");
    auto sf = square_free_part(Rational(Int(2) * r * m));
    Int s = sf.s;
    Int alpha = sf.f.num();  // 2rm is an integer, so f is too

    // If s = 3 (mod 4): t1 = 0, x1 = 1 (mod 4); else t1 = 1, x1 = 0 (mod 4).
    // Minimal non-negative representatives keeping (4m+1) t1^2 - x1^2 > 0.
    Int t1, x1;
    if (mpz_fdiv_ui(s.get_mpz_t(), 4) == 3) {
        t1 = 4;
        x1 = 1;
    } else {
        t1 = 1;
        x1 = 0;
    }
    Int gamma = s * (Int(4 * m + 1) * t1 * t1 - x1 * x1);
    auto yzw = decompose_three_squares(gamma);
    if (!yzw) throw std::logic_error("solve_eq41: gamma fails the Gauss condition");

    // t = 4m t0 = 4m t1 / alpha; divide the homogeneous solution through.
    Rational t(Int(4 * m) * t1, alpha);
    return {Rational(x1, alpha) / t, Rational((*yzw)[0]) / t, Rational((*yzw)[1]) / t,
            Rational((*yzw)[2]) / t};
}

}  // namespace qdist
