#include "drg/quadratic.hpp"

#include <cmath>
#include <sstream>

namespace drg {

void squarefree_decompose(const Int& n, Int& s, Int& m) {
    if (n < 0) throw std::invalid_argument("negative radicand");
    s = 1;
    m = n;
    if (n <= 1) return;
    // Trial division is plenty: radicands in this project come from
    // discriminants of quadratics with single-word coefficients.
    Int d = 2;
    Int rest = n;
    Int sq;
    while (true) {
        sq = d * d;
        if (sq > rest) break;
        while (mpz_divisible_p(rest.get_mpz_t(), sq.get_mpz_t())) {
            rest /= sq;
            s *= d;
        }
        d += 1;
    }
    m = rest;
}

Quad::Quad(const Rat& a, const Rat& b, const Int& n) : a_(a), b_(b), n_(n) {
    a_.canonicalize();
    b_.canonicalize();
    if (b_ == 0 || n_ == 0) {
        b_ = 0;
        n_ = 0;
        return;
    }
    Int s, m;
    squarefree_decompose(n_, s, m);
    b_ *= Rat(s);
    n_ = m;
    if (n_ == 1) {  // perfect square: value is rational
        a_ += b_;
        b_ = 0;
        n_ = 0;
    }
}

namespace {

void require_same_field(const Quad& x, const Quad& y) {
    if (!x.is_rational() && !y.is_rational() &&
        x.radicand() != y.radicand()) {
        throw std::invalid_argument("quadratic field mismatch");
    }
}

}  // namespace

Quad& Quad::operator+=(const Quad& o) {
    require_same_field(*this, o);
    a_ += o.a_;
    b_ += o.b_;
    if (!o.is_rational()) n_ = o.n_;
    if (b_ == 0) n_ = 0;
    return *this;
}

Quad& Quad::operator-=(const Quad& o) { return *this += -o; }

Quad& Quad::operator*=(const Quad& o) {
    require_same_field(*this, o);
    Int n = is_rational() ? o.n_ : n_;
    Rat a = a_ * o.a_ + b_ * o.b_ * Rat(n);
    Rat b = a_ * o.b_ + b_ * o.a_;
    a_ = a;
    b_ = b;
    n_ = (b_ == 0) ? Int(0) : n;
    return *this;
}

Quad& Quad::operator/=(const Quad& o) {
    if (o.is_zero()) throw std::domain_error("division by zero");
    if (o.is_rational()) {
        a_ /= o.a_;
        b_ /= o.a_;
        return *this;
    }
    // 1/(a+b*sqrt(n)) = (a-b*sqrt(n)) / (a^2 - n b^2)
    Rat norm = o.a_ * o.a_ - Rat(o.n_) * o.b_ * o.b_;
    Quad inv(o.a_ / norm, -o.b_ / norm, o.n_, raw_tag{});
    return *this *= inv;
}

int Quad::sign() const {
    int sa = sgn(a_);
    int sb = sgn(b_);
    if (sb == 0) return sa;
    if (sa == 0) return sb;
    if (sa == sb) return sa;
    // Opposite signs: compare a^2 with n b^2.
    Rat d = a_ * a_ - Rat(n_) * b_ * b_;
    int sd = sgn(d);
    // |a| > |b|sqrt(n) ? value has the sign of a : sign of b.
    return sd == 0 ? 0 : (sd > 0 ? sa : sb);
}

double Quad::to_double() const {
    return a_.get_d() + b_.get_d() * std::sqrt(n_.get_d());
}

std::string Quad::str() const {
    if (is_rational()) return to_string(a_);
    std::ostringstream os;
    if (a_ != 0) os << to_string(a_);
    if (b_ == 1) {
        if (a_ != 0) os << "+";
    } else if (b_ == -1) {
        os << "-";
    } else {
        if (a_ != 0 && b_ > 0) os << "+";
        os << to_string(b_) << "*";
    }
    os << "sqrt(" << to_string(n_) << ")";
    return os.str();
}

int cmp(const Quad& x, const Quad& y) {
    if (x.is_rational() || y.is_rational() || x.radicand() == y.radicand()) {
        Int n = x.is_rational() ? y.radicand() : x.radicand();
        Quad d(x.rational_part() - y.rational_part(),
               x.surd_coeff() - y.surd_coeff(), n);
        return d.sign();
    }
    // r + b1*sqrt(n1) - b2*sqrt(n2) with n1 != n2, both square-free.
    Rat r = x.rational_part() - y.rational_part();
    const Rat& b1 = x.surd_coeff();
    Rat b2 = -y.surd_coeff();
    // t = b1*sqrt(n1) + b2*sqrt(n2); irrational, so never zero.
    int st;
    if (sgn(b1) == sgn(b2) || sgn(b1) == 0 || sgn(b2) == 0) {
        st = sgn(b1) != 0 ? sgn(b1) : sgn(b2);
    } else {
        // the term with the larger square dominates
        Rat d = b1 * b1 * Rat(x.radicand()) - b2 * b2 * Rat(y.radicand());
        st = sgn(d) > 0 ? sgn(b1) : sgn(b2);
    }
    int sr = sgn(r);
    if (sr == 0) return st;
    if (st == 0 || st == sr) return sr;
    // r and t have opposite signs: compare r^2 with t^2 exactly.
    // t^2 = b1^2 n1 + b2^2 n2 + 2 b1 b2 sqrt(n1 n2) is again quadratic.
    Quad t2(b1 * b1 * Rat(x.radicand()) + b2 * b2 * Rat(y.radicand()),
            2 * b1 * b2, x.radicand() * y.radicand());
    Quad diff = Quad(r * r) - t2;
    int sd = diff.sign();
    // |r| > |t| ? sign of r : sign of t.
    return sd > 0 ? sr : st;
}

}  // namespace drg
