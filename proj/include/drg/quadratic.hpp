#pragma once

#include <stdexcept>
#include <string>

#include "drg/rational.hpp"

namespace drg {

// Exact element a + b*sqrt(n) of a real quadratic field.  n is a square-free
// positive integer when b != 0; rational values are normalised to b == 0,
// n == 0.  Arithmetic between two irrational values is only defined within
// the same field (same n); mixing fields throws.
class Quad {
public:
    Quad() : a_(0), b_(0), n_(0) {}
    Quad(const Rat& a) : a_(a), b_(0), n_(0) { a_.canonicalize(); }
    Quad(long a) : a_(a), b_(0), n_(0) {}
    Quad(const Int& a) : a_(Rat(a)), b_(0), n_(0) {}

    // a + b*sqrt(n) for arbitrary n >= 0; the square part of n is folded
    // into b so that the stored radicand is square-free.
    Quad(const Rat& a, const Rat& b, const Int& n);

    const Rat& rational_part() const { return a_; }
    const Rat& surd_coeff() const { return b_; }
    const Int& radicand() const { return n_; }

    bool is_rational() const { return b_ == 0; }
    bool is_zero() const { return a_ == 0 && b_ == 0; }

    Quad conj() const { return Quad(a_, -b_, n_, raw_tag{}); }

    Quad operator-() const { return Quad(-a_, -b_, n_, raw_tag{}); }
    Quad& operator+=(const Quad& o);
    Quad& operator-=(const Quad& o);
    Quad& operator*=(const Quad& o);
    Quad& operator/=(const Quad& o);

    friend Quad operator+(Quad x, const Quad& y) { return x += y; }
    friend Quad operator-(Quad x, const Quad& y) { return x -= y; }
    friend Quad operator*(Quad x, const Quad& y) { return x *= y; }
    friend Quad operator/(Quad x, const Quad& y) { return x /= y; }

    friend bool operator==(const Quad& x, const Quad& y) {
        return x.a_ == y.a_ && x.b_ == y.b_ && x.n_ == y.n_;
    }

    // Exact sign, -1/0/+1.
    int sign() const;

    double to_double() const;
    std::string str() const;

private:
    struct raw_tag {};
    Quad(const Rat& a, const Rat& b, const Int& n, raw_tag)
        : a_(a), b_(b), n_(n) {
        if (b_ == 0) n_ = 0;
    }

    Rat a_, b_;
    Int n_;
};

// Exact three-way comparison; handles values from different quadratic
// fields (at most two distinct radicands) by repeated squaring.
int cmp(const Quad& x, const Quad& y);

inline bool operator<(const Quad& x, const Quad& y) { return cmp(x, y) < 0; }
inline bool operator>(const Quad& x, const Quad& y) { return cmp(x, y) > 0; }
inline bool operator<=(const Quad& x, const Quad& y) { return cmp(x, y) <= 0; }
inline bool operator>=(const Quad& x, const Quad& y) { return cmp(x, y) >= 0; }

// n = s^2 * m with m square-free; returns (s, m).
void squarefree_decompose(const Int& n, Int& s, Int& m);

}  // namespace drg
