#pragma once

#include <cstdint>
#include <vector>

#include "drg/intersection_array.hpp"
#include "drg/quadratic.hpp"
#include "drg/rational.hpp"

namespace drg {

// Dense polynomials, coeff[i] multiplies x^i.  The search instantiates the
// templates with long long (coefficient bounds are proven by the row-sum
// bound |theta| <= k <= 952); the public spectral pipeline uses Int.

template <typename T>
using Poly = std::vector<T>;

template <typename T>
T eval_poly(const Poly<T>& p, const T& x) {
    T acc = T(0);
    for (size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
    return acc;
}

double eval_poly_d(const std::vector<double>& p, double x);
Rat eval_poly_rat(const Poly<Int>& p, const Rat& x);
Quad eval_poly_quad(const Poly<Int>& p, const Quad& x);

// Characteristic polynomial of the tridiagonal matrix L1 by the three-term
// determinant recurrence p_{i+1}(x) = (x - a_i) p_i(x) - b_{i-1} c_i p_{i-1}(x).
template <typename T>
Poly<T> charpoly_l1(const IntersectionArray& arr) {
    Poly<T> pm1{T(1)};            // p_0
    Poly<T> p{T(0), T(1)};        // p_1 = x - a_0 = x
    for (int i = 1; i <= arr.D; ++i) {
        Poly<T> nxt(p.size() + 1, T(0));
        T ai = T(arr.ai(i));
        T bc = T(arr.bi(i - 1)) * T(arr.ci(i));
        for (size_t j = 0; j < p.size(); ++j) {
            nxt[j + 1] += p[j];
            nxt[j] -= ai * p[j];
        }
        for (size_t j = 0; j < pm1.size(); ++j) nxt[j] -= bc * pm1[j];
        pm1 = std::move(p);
        p = std::move(nxt);
    }
    return p;
}

// Synthetic division by (x - r).  Returns true and replaces p by the
// quotient when the remainder is zero; otherwise leaves p untouched.
template <typename T>
bool deflate_root(Poly<T>& p, const T& r) {
    Poly<T> q(p.size() - 1);
    T acc = p.back();
    for (size_t i = p.size() - 1; i-- > 0;) {
        q[i] = acc;
        acc = acc * r + p[i];
    }
    if (acc != T(0)) return false;
    p = std::move(q);
    return true;
}

// Coefficients of p(x + c).
template <typename T>
Poly<T> taylor_shift(const Poly<T>& p, const T& c) {
    Poly<T> q(p);
    size_t n = q.size();
    for (size_t i = 0; i + 1 < n; ++i)
        for (size_t j = n - 1; j-- > i;) q[j] += c * q[j + 1];
    return q;
}

template <typename T>
int sign_of(const T& x) {
    return x > T(0) ? 1 : (x < T(0) ? -1 : 0);
}

template <typename T>
int sign_variations(const Poly<T>& p) {
    int var = 0, last = 0;
    for (const T& c : p) {
        int s = sign_of(c);
        if (s == 0) continue;
        if (last != 0 && s != last) ++var;
        last = s;
    }
    return var;
}

// Number of roots strictly greater than c, for a polynomial with all roots
// real (Descartes' rule is exact there).  Requires p(c) != 0.
template <typename T>
int count_roots_gt(const Poly<T>& p, const T& c) {
    return sign_variations(taylor_shift(p, c));
}

// A real root certified to lie inside [lo, hi].
struct IsolatedRoot {
    double approx;
    Rat lo, hi;
};

// Isolates and refines all real roots of a monic integer polynomial with
// distinct real roots.  Enclosures are certified by exact sign evaluation
// and have width <= tol (scaled by max(1,|root|)).
std::vector<IsolatedRoot> isolate_real_roots(const Poly<Int>& p, double tol);

// Classic Brent root refinement on doubles inside a bracketing interval.
double brent_root(const std::vector<double>& p, double a, double b,
                  double tol);

}  // namespace drg
