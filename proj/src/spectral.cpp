#include "drg/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <sstream>
#include <stdexcept>

namespace drg {

namespace {

// Certified rational enclosure of an exact quadratic-field value.
void quad_enclosure(const Quad& v, Rat& lo, Rat& hi) {
    if (v.is_rational()) {
        lo = hi = v.rational_part();
        return;
    }
    double d = v.to_double();
    double h = std::max(1e-12, std::abs(d) * 1e-14);
    for (int i = 0; i < 200; ++i) {
        lo = Rat(d - h);
        hi = Rat(d + h);
        if (cmp(Quad(lo), v) < 0 && cmp(v, Quad(hi)) < 0) return;
        h = h * 2 + 1e-12;
    }
    throw std::logic_error("failed to enclose surd");
}

EigValue make_int_eig(const Int& n) {
    EigValue e;
    e.kind = EigKind::Integer;
    e.ival = n;
    e.approx = n.get_d();
    e.lo = Rat(n);
    e.hi = Rat(n);
    return e;
}

EigValue make_surd_eig(const Quad& q) {
    EigValue e;
    e.kind = EigKind::Surd;
    e.sval = q;
    e.approx = q.to_double();
    quad_enclosure(q, e.lo, e.hi);
    return e;
}

int sign_at_rat(const std::vector<Int>& g, const Rat& x) {
    return sgn(eval_poly_rat(g, x));
}

// sign of (approx root a) - (exact value e); e may not lie in a's factor.
int cmp_approx_exact(const EigValue& a, const Quad& e,
                     const std::vector<Int>& g) {
    if (cmp(e, Quad(a.lo)) <= 0) return 1;
    if (cmp(e, Quad(a.hi)) >= 0) return -1;
    Quad ge = eval_poly_quad(g, e);
    int s = ge.sign();
    if (s == 0) return 0;
    int sl = sign_at_rat(g, a.lo);
    return s == sl ? 1 : -1;
}

struct FactorRef {
    std::shared_ptr<const std::vector<Int>> g;
};

}  // namespace

// Shared factor polynomials for approx eigenvalues live here; an EigValue
// carries only the index into Spectrum::factors, so cross-value comparison
// of two approx roots needs their polynomials passed in.
static thread_local const Spectrum* g_cmp_ctx = nullptr;

Quad EigValue::as_quad() const {
    if (kind == EigKind::Integer) return Quad(Rat(ival));
    if (kind == EigKind::Surd) return sval;
    throw std::logic_error("as_quad on approx eigenvalue");
}

std::string EigValue::str() const {
    switch (kind) {
        case EigKind::Integer:
            return ival.get_str();
        case EigKind::Surd:
            return sval.str();
        default: {
            std::ostringstream os;
            os.precision(15);
            os << approx;
            return os.str();
        }
    }
}

std::string Mult::str() const {
    switch (kind) {
        case MultKind::Rational:
            return to_string(value);
        case MultKind::Irrational:
            return irr.str();
        default: {
            std::ostringstream os;
            os.precision(12);
            os << approx;
            return os.str();
        }
    }
}

bool Spectrum::all_exact() const {
    for (const auto& t : theta)
        if (!t.is_exact()) return false;
    return true;
}

CharPoly char_poly(const IntersectionArray& arr) {
    if (!arr.admissible())
        throw InadmissibleArray("char_poly: some a_i < 0 in {" + render(arr) +
                                "}");
    CharPoly cp;
    cp.coeff = charpoly_l1<Int>(arr);
    return cp;
}

namespace {

// All integer roots of the monic integer polynomial q, each of which must
// divide the constant coefficient and lie in [-bound, bound]; q is deflated
// in place.
std::vector<Int> extract_integer_roots(std::vector<Int>& q, long bound) {
    std::vector<Int> roots;
    bool progress = true;
    while (progress && q.size() > 1) {
        progress = false;
        if (q[0] == 0) {
            roots.emplace_back(0);
            q.erase(q.begin());
            progress = true;
            continue;
        }
        for (long d = 1; d <= bound && q.size() > 1; ++d) {
            if (!mpz_divisible_ui_p(q[0].get_mpz_t(), d)) continue;
            for (long s : {d, -d}) {
                Int r(s);
                if (eval_poly(q, r) == 0) {
                    deflate_root(q, r);
                    roots.push_back(r);
                    progress = true;
                    break;
                }
            }
            if (progress) break;
        }
    }
    return roots;
}

// Monic integer quartic -> product of two monic integer quadratics, if one
// exists.  Root sums are bounded by 2*bound.
bool split_quartic(const std::vector<Int>& q, long bound,
                   std::vector<Int>& f1, std::vector<Int>& f2) {
    const Int &t3 = q[3], &t2 = q[2], &t1 = q[1], &t0 = q[0];
    for (long pp = -2 * bound; pp <= 2 * bound; ++pp) {
        Int p(pp), r = t3 - p;
        Int S = t2 - p * r, P = t0;
        Int disc = S * S - 4 * P;
        if (disc < 0) continue;
        Int sq;
        mpz_sqrt(sq.get_mpz_t(), disc.get_mpz_t());
        if (sq * sq != disc) continue;
        if (mpz_odd_p(Int(S + sq).get_mpz_t())) continue;
        Int u = (S + sq) / 2, w = (S - sq) / 2;
        if (p * w + r * u == t1) {
            f1 = {u, p, Int(1)};
            f2 = {w, r, Int(1)};
            return true;
        }
        if (p * u + r * w == t1) {
            f1 = {w, p, Int(1)};
            f2 = {u, r, Int(1)};
            return true;
        }
    }
    return false;
}

// The two conjugate roots of a monic integer quadratic with non-square
// positive discriminant.
std::pair<Quad, Quad> quadratic_roots(const std::vector<Int>& f) {
    Int B = f[1], C = f[0];
    Int disc = B * B - 4 * C;
    if (disc <= 0) throw std::logic_error("complex or repeated roots");
    Quad plus(Rat(-B, 2), Rat(1, 2), disc);
    Quad minus(Rat(-B, 2), Rat(-1, 2), disc);
    if (plus.is_rational()) throw std::logic_error("square discriminant");
    return {plus, minus};
}

}  // namespace

int cmp(const EigValue& x, const Rat& y) {
    if (x.is_exact()) return cmp(x.as_quad(), Quad(y));
    if (!g_cmp_ctx) {
        // Fall back to the certified interval.
        if (x.hi < y) return -1;
        if (x.lo > y) return 1;
        throw std::logic_error("approx comparison needs spectrum context");
    }
    const auto& g = g_cmp_ctx->factors.at(x.factor).g;
    return cmp_approx_exact(x, Quad(y), g);
}

namespace {

int cmp_with_ctx(const Spectrum& s, const EigValue& x, const EigValue& y) {
    if (x.is_exact() && y.is_exact()) return cmp(x.as_quad(), y.as_quad());
    if (x.is_exact()) {
        const auto& g = s.factors.at(y.factor).g;
        return -cmp_approx_exact(y, x.as_quad(), g);
    }
    if (y.is_exact()) {
        const auto& g = s.factors.at(x.factor).g;
        return cmp_approx_exact(x, y.as_quad(), g);
    }
    // two approx roots: refine enclosures until disjoint
    EigValue a = x, b = y;
    const auto& ga = s.factors.at(a.factor).g;
    const auto& gb = s.factors.at(b.factor).g;
    for (int round = 0; round < 512; ++round) {
        if (a.hi < b.lo) return -1;
        if (b.hi < a.lo) return 1;
        EigValue& w = (a.hi - a.lo) > (b.hi - b.lo) ? a : b;
        const auto& g = (&w == &a) ? ga : gb;
        Rat mid = (w.lo + w.hi) / 2;
        int sm = sign_at_rat(g, mid);
        if (sm == 0) {
            w.lo = w.hi = mid;
            continue;
        }
        (sm == sign_at_rat(g, w.lo) ? w.lo : w.hi) = mid;
    }
    throw std::logic_error("approx eigenvalues failed to separate");
}

}  // namespace

int cmp(const EigValue& x, const EigValue& y) {
    if (x.is_exact() && y.is_exact()) return cmp(x.as_quad(), y.as_quad());
    if (!g_cmp_ctx) throw std::logic_error("approx comparison needs context");
    return cmp_with_ctx(*g_cmp_ctx, x, y);
}

StandardSequence standard_sequence(const IntersectionArray& arr,
                                   const Quad& theta) {
    StandardSequence seq;
    seq.exact = true;
    int D = arr.D;
    seq.u.resize(D + 1);
    seq.ud.resize(D + 1);
    seq.u[0] = Quad(Rat(1));
    if (D >= 1) seq.u[1] = theta / Quad(Rat(arr.k()));
    for (int i = 1; i < D; ++i) {
        // b_i u_{i+1} = (theta - a_i) u_i - c_i u_{i-1}
        Quad t = (theta - Quad(Rat(arr.ai(i)))) * seq.u[i] -
                 Quad(Rat(arr.ci(i))) * seq.u[i - 1];
        seq.u[i + 1] = t / Quad(Rat(arr.bi(i)));
    }
    for (int i = 0; i <= D; ++i) seq.ud[i] = seq.u[i].to_double();
    seq.err = 0;
    return seq;
}

namespace {

StandardSequence standard_sequence_numeric(const IntersectionArray& arr,
                                           double theta, double theta_err) {
    StandardSequence seq;
    seq.exact = false;
    int D = arr.D;
    seq.ud.resize(D + 1);
    seq.ud[0] = 1;
    std::vector<double> err(D + 1, 0);
    if (D >= 1) {
        seq.ud[1] = theta / arr.k();
        err[1] = theta_err / arr.k() + 1e-16;
    }
    for (int i = 1; i < D; ++i) {
        seq.ud[i + 1] =
            ((theta - arr.ai(i)) * seq.ud[i] - arr.ci(i) * seq.ud[i - 1]) /
            arr.bi(i);
        err[i + 1] = ((std::abs(theta) + arr.ai(i)) * err[i] +
                      std::abs(seq.ud[i]) * theta_err +
                      arr.ci(i) * err[i - 1]) /
                         arr.bi(i) +
                     1e-15 * std::abs(seq.ud[i + 1]);
    }
    seq.err = 0;
    for (double e : err) seq.err = std::max(seq.err, e);
    return seq;
}

}  // namespace

StandardSequence standard_sequence(const IntersectionArray& arr,
                                   const EigValue& theta) {
    if (theta.is_exact()) return standard_sequence(arr, theta.as_quad());
    double w = theta.hi.get_d() - theta.lo.get_d();
    return standard_sequence_numeric(arr, theta.approx, w / 2 + 1e-15);
}

std::vector<Rat> biggs_denominator_mod(const IntersectionArray& arr,
                                       const std::vector<Int>& g) {
    size_t deg = g.size() - 1;
    if (deg < 1) throw std::invalid_argument("constant modulus");
    auto reduce = [&](std::vector<Rat>& p) {
        while (p.size() > deg) {
            Rat lead = p.back();
            size_t sh = p.size() - 1 - deg;
            if (lead != 0)
                for (size_t i = 0; i <= deg; ++i) p[sh + i] -= lead * Rat(g[i]);
            p.pop_back();
        }
        p.resize(deg, Rat(0));
    };
    auto mulmod = [&](const std::vector<Rat>& x, const std::vector<Rat>& y) {
        std::vector<Rat> r(x.size() + y.size() - 1, Rat(0));
        for (size_t i = 0; i < x.size(); ++i)
            for (size_t j = 0; j < y.size(); ++j) r[i + j] += x[i] * y[j];
        reduce(r);
        return r;
    };
    DerivedParams dp = derive(arr);
    int D = arr.D;
    std::vector<Rat> um1{Rat(1)}, u{Rat(0), Rat(1, arr.k())};
    um1.resize(deg, Rat(0));
    u.resize(std::max<size_t>(deg, 2), Rat(0));
    reduce(u);
    std::vector<Rat> S(deg, Rat(0));
    S[0] = Rat(1);  // k_0 * u_0^2
    if (D >= 1) {
        auto u1sq = mulmod(u, u);
        for (size_t t = 0; t < deg; ++t) S[t] += dp.k_i[1] * u1sq[t];
    }
    std::vector<Rat> xpoly{Rat(0), Rat(1)};
    xpoly.resize(std::max<size_t>(deg, 2), Rat(0));
    reduce(xpoly);
    for (int i = 1; i < D; ++i) {
        // u_{i+1} = ((x - a_i) u_i - c_i u_{i-1}) / b_i
        std::vector<Rat> t = mulmod(xpoly, u);
        for (size_t j = 0; j < deg; ++j)
            t[j] = (t[j] - Rat(arr.ai(i)) * u[j] - Rat(arr.ci(i)) * um1[j]) /
                   Rat(arr.bi(i));
        um1 = u;
        u = t;
        auto usq = mulmod(u, u);
        for (size_t j = 0; j < deg; ++j) S[j] += dp.k_i[i + 1] * usq[j];
    }
    for (auto& q : S) q.canonicalize();
    return S;
}

Mult multiplicity(const IntersectionArray& arr, const EigValue& theta) {
    DerivedParams dp = derive(arr);
    Mult m;
    if (theta.is_exact()) {
        StandardSequence seq = standard_sequence(arr, theta.as_quad());
        Quad S(Rat(0));
        for (int i = 0; i <= arr.D; ++i)
            S += Quad(dp.k_i[i]) * seq.u[i] * seq.u[i];
        Quad res = Quad(dp.v) / S;
        if (res.is_rational()) {
            m.kind = MultKind::Rational;
            m.value = res.rational_part();
            m.approx = m.value.get_d();
        } else {
            m.kind = MultKind::Irrational;
            m.irr = res;
            m.approx = res.to_double();
        }
        return m;
    }
    StandardSequence seq = standard_sequence(arr, theta);
    double S = 0;
    for (int i = 0; i <= arr.D; ++i)
        S += dp.k_i[i].get_d() * seq.ud[i] * seq.ud[i];
    m.kind = MultKind::Approx;
    m.approx = dp.v.get_d() / S;
    return m;
}

Spectrum spectrum(const IntersectionArray& arr, double tol) {
    if (tol <= 0) throw std::invalid_argument("tol must be positive");
    DerivedParams dp = derive(arr);
    CharPoly cp = char_poly(arr);
    std::vector<Int> q = cp.coeff;
    long k = arr.k();
    if (!deflate_root(q, Int(k)))
        throw std::logic_error("k is not a root of the characteristic polynomial");

    Spectrum S;
    S.D = arr.D;

    auto add_factor = [&](std::vector<Int> g) {
        SpectrumFactor f;
        f.g = std::move(g);
        S.factors.push_back(std::move(f));
        return static_cast<int>(S.factors.size()) - 1;
    };

    // theta_0 = k
    {
        EigValue e = make_int_eig(Int(k));
        e.factor = add_factor({Int(-k), Int(1)});
        S.theta.push_back(e);
        S.factors.back().roots.push_back(0);
    }

    std::vector<Int> iroots = extract_integer_roots(q, k);
    for (const Int& r : iroots) {
        EigValue e = make_int_eig(r);
        e.factor = add_factor({Int(-r), Int(1)});
        S.factors.back().roots.push_back(static_cast<int>(S.theta.size()));
        S.theta.push_back(e);
    }

    std::vector<std::vector<Int>> residuals;
    if (q.size() - 1 == 2) {
        residuals.push_back(q);
    } else if (q.size() - 1 == 4) {
        std::vector<Int> f1, f2;
        if (split_quartic(q, k, f1, f2)) {
            residuals.push_back(f1);
            residuals.push_back(f2);
        } else {
            residuals.push_back(q);
        }
    } else if (q.size() - 1 >= 3) {
        residuals.push_back(q);
    } else if (q.size() - 1 == 1) {
        throw std::logic_error("linear residual escaped divisor testing");
    }

    for (auto& g : residuals) {
        int deg = static_cast<int>(g.size()) - 1;
        int fid = add_factor(g);
        if (deg == 2) {
            auto [plus, minus] = quadratic_roots(g);
            for (const Quad& r : {plus, minus}) {
                EigValue e = make_surd_eig(r);
                e.factor = fid;
                S.factors[fid].roots.push_back(
                    static_cast<int>(S.theta.size()));
                S.theta.push_back(e);
            }
        } else {
            auto iso = isolate_real_roots(g, tol);
            if (static_cast<int>(iso.size()) != deg)
                throw std::logic_error("eigenvalue isolation incomplete");
            for (const auto& r : iso) {
                EigValue e;
                e.kind = EigKind::Approx;
                e.approx = r.approx;
                e.lo = r.lo;
                e.hi = r.hi;
                e.factor = fid;
                S.factors[fid].roots.push_back(
                    static_cast<int>(S.theta.size()));
                S.theta.push_back(e);
            }
        }
    }

    if (S.theta.size() != static_cast<size_t>(arr.D + 1))
        throw std::logic_error("expected D+1 distinct eigenvalues");

    // Sort strictly decreasing with exact comparisons; keep factor root
    // indices in sync.
    g_cmp_ctx = &S;
    std::vector<int> order(S.theta.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        return cmp_with_ctx(S, S.theta[a], S.theta[b]) > 0;
    });
    std::vector<EigValue> sorted;
    std::vector<int> pos(order.size());
    for (size_t i = 0; i < order.size(); ++i) {
        sorted.push_back(S.theta[order[i]]);
        pos[order[i]] = static_cast<int>(i);
    }
    S.theta = std::move(sorted);
    for (auto& f : S.factors)
        for (auto& r : f.roots) r = pos[r];
    g_cmp_ctx = nullptr;

    // Multiplicities, factor by factor.
    S.m.resize(S.theta.size());
    for (size_t fi = 0; fi < S.factors.size(); ++fi) {
        SpectrumFactor& f = S.factors[fi];
        int deg = static_cast<int>(f.g.size()) - 1;
        if (deg <= 2) {
            for (int ri : f.roots) S.m[ri] = multiplicity(arr, S.theta[ri]);
            if (deg == 1) {
                f.mult_rational = S.m[f.roots[0]].kind == MultKind::Rational;
                if (f.mult_rational) f.mult_value = S.m[f.roots[0]].value;
            }
        } else {
            std::vector<Rat> Smod = biggs_denominator_mod(arr, f.g);
            bool constant = true;
            for (size_t j = 1; j < Smod.size(); ++j)
                if (Smod[j] != 0) constant = false;
            if (constant && Smod[0] != 0) {
                f.mult_rational = true;
                f.mult_value = dp.v / Smod[0];
                f.mult_value.canonicalize();
                for (int ri : f.roots) {
                    S.m[ri].kind = MultKind::Rational;
                    S.m[ri].value = f.mult_value;
                    S.m[ri].approx = f.mult_value.get_d();
                }
            } else {
                f.mult_rational = false;
                for (int ri : f.roots)
                    S.m[ri] = multiplicity(arr, S.theta[ri]);
            }
        }
    }

    if (!(S.m[0].kind == MultKind::Rational && S.m[0].value == 1))
        throw std::logic_error("Perron multiplicity is not 1");
    return S;
}

std::vector<EigValue> eigenvalues(const IntersectionArray& arr, double tol) {
    return spectrum(arr, tol).theta;
}

namespace {

// Power sums p_1..p_maxpow of the roots of a monic integer polynomial, by
// Newton's identities.
std::vector<Rat> power_sums(const std::vector<Int>& g, int maxpow) {
    int n = static_cast<int>(g.size()) - 1;
    // e_i with sign: coeff[n-i] = (-1)^i e_i
    std::vector<Rat> e(maxpow + 1, Rat(0));
    for (int i = 1; i <= maxpow; ++i)
        if (i <= n) e[i] = Rat((i % 2 ? -1 : 1) * g[n - i]);
    std::vector<Rat> p(maxpow + 1, Rat(0));
    for (int l = 1; l <= maxpow; ++l) {
        Rat acc = Rat(l) * e[l];
        int sign = -1;
        for (int i = 1; i < l; ++i) {
            acc += Rat(sign) * e[i] * p[l - i];
            sign = -sign;
        }
        // p_l = e_1 p_{l-1} - e_2 p_{l-2} + ... + (-1)^{l-1} l e_l
        p[l] = acc * Rat((l % 2) ? 1 : -1);
    }
    return p;
}

}  // namespace

TraceCheck trace_check(const IntersectionArray& arr, const Spectrum& s,
                       int maxpow, double tol) {
    if (maxpow < 1 || maxpow > 3)
        throw std::invalid_argument("maxpow must be in {1,2,3}");
    DerivedParams dp = derive(arr);
    std::vector<Rat> expected{Rat(0), dp.v * arr.k(),
                              dp.v * arr.k() * arr.ai(1)};

    // Exact route: every factor contributes either exact per-root terms or
    // a rational common multiplicity times a Newton power sum.
    bool exact = true;
    for (const auto& f : s.factors) {
        bool roots_exact = true;
        for (int ri : f.roots) roots_exact &= s.theta[ri].is_exact();
        if (!roots_exact && !f.mult_rational) exact = false;
    }

    TraceCheck tc;
    tc.exact = exact;
    if (exact) {
        for (int l = 1; l <= maxpow; ++l) {
            Rat sum(0);
            for (const auto& f : s.factors) {
                bool roots_exact = true;
                for (int ri : f.roots)
                    roots_exact &= s.theta[ri].is_exact();
                if (roots_exact) {
                    Quad acc{Rat(0)};
                    for (int ri : f.roots) {
                        Quad t = s.theta[ri].as_quad();
                        Quad pw{Rat(1)};
                        for (int j = 0; j < l; ++j) pw *= t;
                        Quad mq = s.m[ri].kind == MultKind::Rational
                                      ? Quad(s.m[ri].value)
                                      : s.m[ri].irr;
                        acc += mq * pw;
                    }
                    if (!acc.is_rational())
                        throw std::logic_error(
                            "conjugate trace contributions did not cancel");
                    sum += acc.rational_part();
                } else {
                    auto p = power_sums(f.g, l);
                    sum += f.mult_value * p[l];
                }
            }
            Rat resid = sum - expected[l - 1];
            resid.canonicalize();
            tc.residuals.push_back(resid);
            tc.residuals_d.push_back(resid.get_d());
        }
        tc.pass = true;
        for (const Rat& r : tc.residuals)
            if (r != 0) tc.pass = false;
        return tc;
    }

    for (int l = 1; l <= maxpow; ++l) {
        double sum = 0;
        for (size_t i = 0; i < s.theta.size(); ++i)
            sum += s.m[i].approx * std::pow(s.theta[i].approx, l);
        double resid = sum - expected[l - 1].get_d();
        tc.residuals_d.push_back(resid);
    }
    tc.pass = true;
    for (int l = 1; l <= maxpow; ++l) {
        double scale = std::max(1.0, std::abs(expected[l - 1].get_d()));
        if (std::abs(tc.residuals_d[l - 1]) > tol * scale) tc.pass = false;
    }
    return tc;
}

Spectrum taylor_spectrum(long k, long c2) {
    if (!(k > c2 && c2 >= 1))
        throw std::invalid_argument("taylor_spectrum requires k > c2 >= 1");
    IntersectionArray arr;
    arr.D = 3;
    arr.b = {k, c2, 1};
    arr.c = {1, c2, k};

    long s = k - 2 * c2 - 1;
    Int disc = Int(s) * Int(s) + 4 * Int(k);
    Quad theta1(Rat(s, 2), Rat(1, 2), disc);
    Quad theta3(Rat(s, 2), Rat(-1, 2), disc);

    Spectrum S;
    S.D = 3;
    auto push = [&](EigValue e, std::vector<Int> g) {
        SpectrumFactor f;
        f.g = std::move(g);
        f.roots.push_back(static_cast<int>(S.theta.size()));
        e.factor = static_cast<int>(S.factors.size());
        S.factors.push_back(std::move(f));
        S.theta.push_back(e);
    };

    // m_1 = k(k+1)/(theta1^2+k), m_2 = k, m_3 = theta1^2 (k+1)/(theta1^2+k)
    Quad t1sq = theta1 * theta1;
    Quad den = t1sq + Quad(Rat(k));
    Quad m1q = Quad(Rat(Int(k) * Int(k + 1))) / den;
    Quad m3q = t1sq * Quad(Rat(k + 1)) / den;

    push(make_int_eig(Int(k)), {Int(-k), Int(1)});
    if (theta1.is_rational()) {
        Int t1(theta1.rational_part().get_num());
        Int t3(theta3.rational_part().get_num());
        push(make_int_eig(t1), {-t1, Int(1)});
        push(make_int_eig(Int(-1)), {Int(1), Int(1)});
        push(make_int_eig(t3), {-t3, Int(1)});
    } else {
        // shared quadratic factor x^2 - s x - k
        SpectrumFactor f;
        f.g = {Int(-k), Int(-s), Int(1)};
        int fid = static_cast<int>(S.factors.size());
        EigValue e1 = make_surd_eig(theta1);
        e1.factor = fid;
        f.roots.push_back(static_cast<int>(S.theta.size()));
        S.theta.push_back(e1);
        S.factors.push_back(f);
        push(make_int_eig(Int(-1)), {Int(1), Int(1)});
        EigValue e3 = make_surd_eig(theta3);
        e3.factor = fid;
        S.factors[fid].roots.push_back(static_cast<int>(S.theta.size()));
        S.theta.push_back(e3);
    }

    auto to_mult = [](const Quad& q) {
        Mult m;
        if (q.is_rational()) {
            m.kind = MultKind::Rational;
            m.value = q.rational_part();
            m.approx = m.value.get_d();
        } else {
            m.kind = MultKind::Irrational;
            m.irr = q;
            m.approx = q.to_double();
        }
        return m;
    };
    Mult m0;
    m0.kind = MultKind::Rational;
    m0.value = 1;
    m0.approx = 1;
    Mult m2;
    m2.kind = MultKind::Rational;
    m2.value = k;
    m2.approx = double(k);
    S.m = {m0, to_mult(m1q), m2, to_mult(m3q)};
    return S;
}

}  // namespace drg
