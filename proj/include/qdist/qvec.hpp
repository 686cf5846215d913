#pragma once

// Fixed-dimension coordinate vectors over Rational with exact squared
// norms and distances.

#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

#include "qdist/exact_arith.hpp"

namespace qdist {

class QVec {
public:
    QVec() = default;
    explicit QVec(std::size_t dim) : c_(dim) {}
    QVec(std::initializer_list<Rational> xs) : c_(xs) {}
    explicit QVec(std::vector<Rational> xs) : c_(std::move(xs)) {}

    std::size_t dim() const { return c_.size(); }
    const Rational& operator[](std::size_t i) const { return c_.at(i); }
    Rational& operator[](std::size_t i) { return c_.at(i); }
    const std::vector<Rational>& coords() const { return c_; }

    QVec& operator+=(const QVec& o) {
        check_dim(o);
        for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
        return *this;
    }
    QVec& operator-=(const QVec& o) {
        check_dim(o);
        for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
        return *this;
    }
    QVec& operator*=(const Rational& s) {
        for (auto& x : c_) x *= s;
        return *this;
    }

    friend QVec operator+(QVec a, const QVec& b) { return a += b; }
    friend QVec operator-(QVec a, const QVec& b) { return a -= b; }
    friend QVec operator*(const Rational& s, QVec v) { return v *= s; }
    friend QVec operator*(QVec v, const Rational& s) { return v *= s; }

    friend bool operator==(const QVec& a, const QVec& b) { return a.c_ == b.c_; }
    friend bool operator!=(const QVec& a, const QVec& b) { return !(a == b); }
    friend bool operator<(const QVec& a, const QVec& b) {
        if (a.dim() != b.dim()) return a.dim() < b.dim();
        for (std::size_t i = 0; i < a.dim(); ++i) {
            if (a.c_[i] != b.c_[i]) return a.c_[i] < b.c_[i];
        }
        return false;
    }

    bool is_zero() const {
        for (const auto& x : c_) {
            if (!x.is_zero()) return false;
        }
        return true;
    }

    /// Same vector with zeroes appended up to dimension n.
    QVec padded(std::size_t n) const {
        if (n < dim()) throw std::domain_error("QVec::padded: target dimension too small");
        QVec out(*this);
        out.c_.resize(n);
        return out;
    }

    std::string to_string() const {
        std::string s = "(";
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (i) s += ", ";
            s += c_[i].to_string();
        }
        return s + ")";
    }

private:
    void check_dim(const QVec& o) const {
        if (dim() != o.dim()) throw std::domain_error("QVec: dimension mismatch");
    }
    std::vector<Rational> c_;
};

inline Rational dot(const QVec& u, const QVec& v) {
    if (u.dim() != v.dim()) throw std::domain_error("dot: dimension mismatch");
    Rational s;
    for (std::size_t i = 0; i < u.dim(); ++i) s += u[i] * v[i];
    return s;
}

inline Rational squared_norm(const QVec& v) { return dot(v, v); }

inline Rational squared_dist(const QVec& u, const QVec& v) { return squared_norm(u - v); }

inline QVec unit_vector(std::size_t dim, std::size_t axis) {
    QVec e(dim);
    e[axis] = 1;
    return e;
}

}  // namespace qdist
