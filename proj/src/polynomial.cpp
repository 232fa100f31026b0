#include "drg/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace drg {

double eval_poly_d(const std::vector<double>& p, double x) {
    double acc = 0;
    for (size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
    return acc;
}

Rat eval_poly_rat(const Poly<Int>& p, const Rat& x) {
    Rat acc = 0;
    for (size_t i = p.size(); i-- > 0;) acc = acc * x + Rat(p[i]);
    acc.canonicalize();
    return acc;
}

Quad eval_poly_quad(const Poly<Int>& p, const Quad& x) {
    Quad acc(Rat(0));
    for (size_t i = p.size(); i-- > 0;) acc = acc * x + Quad(Rat(p[i]));
    return acc;
}

double brent_root(const std::vector<double>& p, double a, double b,
                  double tol) {
    double fa = eval_poly_d(p, a), fb = eval_poly_d(p, b);
    if (fa == 0) return a;
    if (fb == 0) return b;
    if (fa * fb > 0) throw std::invalid_argument("brent: no sign change");
    double c = a, fc = fa, d = b - a, e = d;
    for (int iter = 0; iter < 200; ++iter) {
        if (std::abs(fc) < std::abs(fb)) {
            a = b; b = c; c = a;
            fa = fb; fb = fc; fc = fa;
        }
        double tol1 = 2 * 1e-16 * std::abs(b) + 0.5 * tol;
        double xm = 0.5 * (c - b);
        if (std::abs(xm) <= tol1 || fb == 0) return b;
        if (std::abs(e) >= tol1 && std::abs(fa) > std::abs(fb)) {
            double s = fb / fa, pp, q;
            if (a == c) {
                pp = 2 * xm * s;
                q = 1 - s;
            } else {
                double qq = fa / fc, r = fb / fc;
                pp = s * (2 * xm * qq * (qq - r) - (b - a) * (r - 1));
                q = (qq - 1) * (r - 1) * (s - 1);
            }
            if (pp > 0) q = -q;
            pp = std::abs(pp);
            if (2 * pp < std::min(3 * xm * q - std::abs(tol1 * q),
                                  std::abs(e * q))) {
                e = d;
                d = pp / q;
            } else {
                d = xm;
                e = d;
            }
        } else {
            d = xm;
            e = d;
        }
        a = b;
        fa = fb;
        b += (std::abs(d) > tol1) ? d : (xm > 0 ? tol1 : -tol1);
        fb = eval_poly_d(p, b);
        if ((fb > 0) == (fc > 0)) {
            c = a;
            fc = fa;
            d = b - a;
            e = d;
        }
    }
    return b;
}

namespace {

// Approximate real roots, assuming all roots real: recursive interlacing by
// the derivative, Brent inside each sign-change bracket.
std::vector<double> approx_real_roots(const std::vector<double>& p) {
    size_t deg = p.size() - 1;
    if (deg == 0) return {};
    if (deg == 1) return {-p[0] / p[1]};
    std::vector<double> dp(deg);
    for (size_t i = 1; i <= deg; ++i) dp[i - 1] = p[i] * double(i);
    std::vector<double> crit = approx_real_roots(dp);
    std::sort(crit.begin(), crit.end());
    double bound = 1;
    for (size_t i = 0; i < deg; ++i)
        bound = std::max(bound, std::abs(p[i] / p[deg]));
    bound += 1;
    std::vector<double> pts;
    pts.push_back(-bound);
    for (double c : crit) pts.push_back(c);
    pts.push_back(bound);
    std::vector<double> roots;
    for (size_t i = 0; i + 1 < pts.size(); ++i) {
        double fa = eval_poly_d(p, pts[i]), fb = eval_poly_d(p, pts[i + 1]);
        if (fa == 0) {
            roots.push_back(pts[i]);
            continue;
        }
        if (fa * fb < 0)
            roots.push_back(brent_root(p, pts[i], pts[i + 1], 1e-15));
    }
    return roots;
}

int sign_at(const Poly<Int>& p, const Rat& x) { return sgn(eval_poly_rat(p, x)); }

}  // namespace

std::vector<IsolatedRoot> isolate_real_roots(const Poly<Int>& p, double tol) {
    std::vector<double> pd(p.size());
    for (size_t i = 0; i < p.size(); ++i) pd[i] = p[i].get_d();
    std::vector<double> approx = approx_real_roots(pd);
    std::sort(approx.begin(), approx.end());
    size_t deg = p.size() - 1;
    if (approx.size() != deg)
        throw std::logic_error("root isolation lost a root");

    std::vector<IsolatedRoot> out;
    for (size_t i = 0; i < approx.size(); ++i) {
        double x = approx[i];
        // Initial certified bracket around the numeric root.  Separation to
        // the neighbours bounds how far we may stretch.
        double sep = 1e300;
        if (i > 0) sep = std::min(sep, (x - approx[i - 1]) / 2);
        if (i + 1 < approx.size()) sep = std::min(sep, (approx[i + 1] - x) / 2);
        double h = std::max(tol, 4 * std::abs(x) * 1e-16);
        if (sep < 1e290) h = std::min(h, sep / 2);
        Rat lo(x - h), hi(x + h);
        int slo = sign_at(p, lo), shi = sign_at(p, hi);
        while (slo == 0 || shi == 0 || slo == shi) {
            // widen (rare: root hit exactly or numeric error)
            h *= 2;
            if (sep < 1e290 && h > sep)
                throw std::logic_error("failed to certify root bracket");
            lo = Rat(x - h);
            hi = Rat(x + h);
            slo = sign_at(p, lo);
            shi = sign_at(p, hi);
        }
        // Exact bisection until the width target holds.
        Rat width_target(tol);
        width_target *= std::max(1.0, std::abs(x));
        while (hi - lo > width_target) {
            Rat mid = (lo + hi) / 2;
            int sm = sign_at(p, mid);
            if (sm == 0) {  // exact rational root: shrink to a point
                lo = mid;
                hi = mid;
                break;
            }
            (sm == slo ? lo : hi) = mid;
        }
        IsolatedRoot r;
        r.lo = lo;
        r.hi = hi;
        r.approx = (lo.get_d() + hi.get_d()) / 2;
        out.push_back(r);
    }
    return out;
}

}  // namespace drg
