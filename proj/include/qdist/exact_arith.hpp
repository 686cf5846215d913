#pragma once

// Exact rational arithmetic plus the sum-of-squares primitives (square-free
// parts, two/three/four-square representability and decomposition) that gate
// every construction in this library.  No rounding happens anywhere here.

#include <gmpxx.h>

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qdist {

using Int = mpz_class;

/// Exact rational number, always in lowest terms with positive denominator.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(int n) : v_(n) {}
    Rational(long n) : v_(n) {}
    Rational(const Int& n) : v_(n) {}
    Rational(const Int& num, const Int& den) : v_(num, den) {
        if (den == 0) throw std::domain_error("Rational: zero denominator");
        v_.canonicalize();
    }
    Rational(long num, long den) : Rational(Int(num), Int(den)) {}

    Int num() const { return v_.get_num(); }
    Int den() const { return v_.get_den(); }

    bool is_zero() const { return v_ == 0; }
    bool is_integer() const { return v_.get_den() == 1; }

    Rational operator-() const {
        Rational out;
        out.v_ = -v_;
        return out;
    }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.v_ == 0) throw std::domain_error("Rational: division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    /// "p/q" in lowest terms, or just "p" when the denominator is 1.
    std::string to_string() const {
        if (is_integer()) return v_.get_num().get_str();
        return v_.get_num().get_str() + "/" + v_.get_den().get_str();
    }

    static Rational parse(const std::string& s) {
        auto slash = s.find('/');
        try {
            if (slash == std::string::npos) return Rational(Int(s));
            return Rational(Int(s.substr(0, slash)), Int(s.substr(slash + 1)));
        } catch (const std::invalid_argument&) {
            throw std::invalid_argument("Rational: cannot parse \"" + s + "\"");
        }
    }

    double to_double() const { return v_.get_d(); }

private:
    mpq_class v_;
};

inline Rational abs(const Rational& r) { return r < 0 ? -r : r; }

// ---------------------------------------------------------------------------
// Integer helpers

inline Int isqrt(const Int& n) {
    Int r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

inline bool is_perfect_square(const Int& n) {
    if (n < 0) return false;
    return mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

namespace detail {

// Deterministic small-prime sieve, extended on demand.
inline const std::vector<unsigned long>& small_primes() {
    static const std::vector<unsigned long> primes = [] {
        const unsigned long limit = 1 << 16;
        std::vector<bool> comp(limit, false);
        std::vector<unsigned long> ps;
        for (unsigned long p = 2; p < limit; ++p) {
            if (comp[p]) continue;
            ps.push_back(p);
            for (unsigned long q = p * p; q < limit; q += p) comp[q] = true;
        }
        return ps;
    }();
    return primes;
}

}  // namespace detail

/// Prime factorization by trial division.  Inputs in this artifact are
/// desk-scale; anything left after the sieve is divided out with a simple
/// incremental scan.
inline std::vector<std::pair<Int, int>> factorize(Int n) {
    if (n <= 0) throw std::domain_error("factorize: input must be positive");
    std::vector<std::pair<Int, int>> out;
    for (unsigned long p : detail::small_primes()) {
        if (Int(p) * p > n) break;
        int e = 0;
        while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
            n /= p;
            ++e;
        }
        if (e) out.emplace_back(Int(p), e);
    }
    if (n > 1) {
        Int p = detail::small_primes().back() + 2;
        while (p * p <= n) {
            int e = 0;
            while (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t())) {
                n /= p;
                ++e;
            }
            if (e) out.emplace_back(p, e);
            p += 2;
        }
        if (n > 1) out.emplace_back(n, 1);
    }
    return out;
}

struct SquareFreePart {
    Int s;       // square-free
    Rational f;  // positive, with q = s * f^2
};

/// Writes a positive rational q as s * f^2 with s a square-free positive
/// integer.  The square-free part of p/q equals that of the integer p*q.
inline SquareFreePart square_free_part(const Rational& q) {
    if (q <= 0) throw std::domain_error("square_free_part: input must be positive");
    Int n = q.num() * q.den();
    Int s = 1, g = 1;
    for (const auto& [p, e] : factorize(n)) {
        if (e % 2) s *= p;
        for (int i = 0; i < e / 2; ++i) g *= p;
    }
    return {s, Rational(g, q.den())};
}

/// Gauss: k is a sum of three integer squares iff k is not of the form
/// 4^a (8b + 7).
inline bool is_sum_three_squares(Int k) {
    if (k < 0) throw std::domain_error("is_sum_three_squares: negative input");
    while (k > 0 && mpz_divisible_ui_p(k.get_mpz_t(), 4)) k /= 4;
    return mpz_fdiv_ui(k.get_mpz_t(), 8) != 7;
}

/// Descending search, largest square first; deterministic output.
inline std::optional<std::array<Int, 3>> decompose_three_squares(const Int& k) {
    if (k < 0) throw std::domain_error("decompose_three_squares: negative input");
    if (!is_sum_three_squares(k)) return std::nullopt;
    for (Int x = isqrt(k); x >= 0; --x) {
        Int rem = k - x * x;
        Int ytop = isqrt(rem);
        if (ytop > x) ytop = x;
        for (Int y = ytop; y * y * 2 >= rem; --y) {
            Int z2 = rem - y * y;
            if (is_perfect_square(z2)) return std::array<Int, 3>{x, y, isqrt(z2)};
        }
    }
    // Unreachable when the Gauss condition holds.
    throw std::logic_error("decompose_three_squares: search exhausted");
}

/// Lagrange: always succeeds.  Largest square first.
inline std::array<Int, 4> decompose_four_squares(const Int& k) {
    if (k < 0) throw std::domain_error("decompose_four_squares: negative input");
    for (Int a = isqrt(k); a >= 0; --a) {
        if (auto rest = decompose_three_squares(k - a * a)) {
            return {a, (*rest)[0], (*rest)[1], (*rest)[2]};
        }
    }
    throw std::logic_error("decompose_four_squares: search exhausted");
}

/// Two-square decomposition (Fermat condition via factorization).
inline std::optional<std::array<Int, 2>> decompose_two_squares(const Int& k) {
    if (k < 0) throw std::domain_error("decompose_two_squares: negative input");
    if (k > 0) {
        for (const auto& [p, e] : factorize(k)) {
            if (mpz_fdiv_ui(p.get_mpz_t(), 4) == 3 && e % 2) return std::nullopt;
        }
    }
    for (Int x = isqrt(k); x * x * 2 >= k; --x) {
        Int y2 = k - x * x;
        if (is_perfect_square(y2)) return std::array<Int, 2>{x, isqrt(y2)};
    }
    throw std::logic_error("decompose_two_squares: search exhausted");
}

inline bool is_sum_two_squares(const Int& k) {
    return decompose_two_squares(k).has_value();
}

/// Exact rational square root, if one exists.
inline std::optional<Rational> rational_sqrt(const Rational& q) {
    if (q < 0) return std::nullopt;
    if (!is_perfect_square(q.num()) || !is_perfect_square(q.den())) return std::nullopt;
    return Rational(isqrt(q.num()), isqrt(q.den()));
}

inline bool is_rational_square(const Rational& q) { return rational_sqrt(q).has_value(); }

/// mu >= 0 as a sum of three rational squares, when the square-free part of
/// mu allows it.  With mu = p/q this reduces to the integer p*q.
inline std::optional<std::array<Rational, 3>> rational_three_squares(const Rational& mu) {
    if (mu < 0) throw std::domain_error("rational_three_squares: negative input");
    Int pq = mu.num() * mu.den();
    auto d = decompose_three_squares(pq);
    if (!d) return std::nullopt;
    Rational q(mu.den());
    return std::array<Rational, 3>{Rational((*d)[0]) / q, Rational((*d)[1]) / q,
                                   Rational((*d)[2]) / q};
}

}  // namespace qdist
