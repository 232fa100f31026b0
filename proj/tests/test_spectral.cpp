#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "drg/spectral.hpp"

using namespace drg;

namespace {

IntersectionArray A(const char* s) { return parse_array(s); }

std::vector<long> int_coeffs(const CharPoly& p) {
    std::vector<long> out;
    for (const auto& c : p.coeff) out.push_back(c.get_si());
    return out;
}

}  // namespace

TEST_CASE("char_poly: {10,6,1;1,3,10} expands to x^4-9x^3-20x^2+90x+100") {
    auto p = char_poly(A("10,6,1;1,3,10"));
    CHECK(int_coeffs(p) == std::vector<long>{100, 90, -20, -9, 1});
}

TEST_CASE("char_poly: complete graph {k;1} is (x-k)(x+1)") {
    auto p = char_poly(A("9;1"));
    CHECK(int_coeffs(p) == std::vector<long>{-9, -8, 1});
}

TEST_CASE("char_poly: {39,24,1;1,4,39} has roots 39,13,-1,-3") {
    auto p = char_poly(A("39,24,1;1,4,39"));
    for (long r : {39, 13, -1, -3})
        CHECK(eval_poly(p.coeff, Int(r)) == 0);
    CHECK(p.degree() == 4);
    CHECK(p.coeff.back() == 1);
}

TEST_CASE("eigenvalues: {10,6,1;1,3,10} -> 10, sqrt10, -1, -sqrt10") {
    auto s = spectrum(A("10,6,1;1,3,10"));
    REQUIRE(s.theta.size() == 4);
    CHECK(s.theta[0].kind == EigKind::Integer);
    CHECK(s.theta[0].ival == 10);
    CHECK(s.theta[1].kind == EigKind::Surd);
    CHECK(s.theta[1].sval.radicand() == 10);
    CHECK(s.theta[1].sval.rational_part() == 0);
    CHECK(s.theta[1].sval.surd_coeff() == 1);
    CHECK(s.theta[2].kind == EigKind::Integer);
    CHECK(s.theta[2].ival == -1);
    CHECK(s.theta[3].sval.surd_coeff() == -1);
}

TEST_CASE("eigenvalues: {45,28,4;1,2,42} -> all integers 45,17,-1,-3") {
    // deflated cubic is x^3 - 13x^2 - 65x - 51
    auto p = char_poly(A("45,28,4;1,2,42"));
    std::vector<Int> q = p.coeff;
    REQUIRE(deflate_root(q, Int(45)));
    CHECK(q == std::vector<Int>{-51, -65, -13, 1});

    auto s = spectrum(A("45,28,4;1,2,42"));
    std::vector<long> got;
    for (const auto& t : s.theta) {
        REQUIRE(t.kind == EigKind::Integer);
        got.push_back(t.ival.get_si());
    }
    CHECK(got == std::vector<long>{45, 17, -1, -3});
}

TEST_CASE("eigenvalues: {7,4,1;1,2,7} -> 7, sqrt7, -1, -sqrt7") {
    auto s = spectrum(A("7,4,1;1,2,7"));
    CHECK(s.theta[0].ival == 7);
    CHECK(s.theta[1].sval.radicand() == 7);
    CHECK(s.theta[2].ival == -1);
    CHECK(s.theta[3].sval == s.theta[1].sval.conj());
}

TEST_CASE("standard sequence at theta = k is all ones") {
    for (const char* a : {"39,24,1;1,4,39", "6,4,2,1;1,1,4,6", "9;1"}) {
        auto arr = A(a);
        auto seq = standard_sequence(arr, Quad(Rat(arr.k())));
        for (const auto& u : seq.u) {
            CHECK(u.is_rational());
            CHECK(u.rational_part() == 1);
        }
    }
}

TEST_CASE("standard sequence {39,24,1;1,4,39} at theta=13") {
    // Recurrence gives (1, 1/3, -1/18, -1/6); Biggs then yields m(13) = 45,
    // the value in the source table.
    auto seq = standard_sequence(A("39,24,1;1,4,39"), Quad(Rat(13)));
    REQUIRE(seq.u.size() == 4);
    CHECK(seq.u[0].rational_part() == 1);
    CHECK(seq.u[1].rational_part() == Rat(1, 3));
    CHECK(seq.u[2].rational_part() == Rat(-1, 18));
    CHECK(seq.u[3].rational_part() == Rat(-1, 6));
}

TEST_CASE("standard sequence {10,6,1;1,3,10} at theta=-1") {
    auto seq = standard_sequence(A("10,6,1;1,3,10"), Quad(Rat(-1)));
    CHECK(seq.u[1].rational_part() == Rat(-1, 10));
    CHECK(seq.u[2].rational_part() == Rat(-1, 10));
    CHECK(seq.u[3].rational_part() == 1);
}

TEST_CASE("multiplicities of {39,24,1;1,4,39} are 1,45,39,195") {
    auto s = spectrum(A("39,24,1;1,4,39"));
    std::vector<long> m;
    for (const auto& mm : s.m) {
        REQUIRE(mm.kind == MultKind::Rational);
        m.push_back(long(mm.value.get_d()));
        CHECK(is_integer(mm.value));
    }
    CHECK(m == std::vector<long>{1, 45, 39, 195});
}

TEST_CASE("multiplicities of {10,6,1;1,3,10}: surd pair has m=11") {
    auto s = spectrum(A("10,6,1;1,3,10"));
    CHECK(s.m[1].kind == MultKind::Rational);
    CHECK(s.m[1].value == 11);
    CHECK(s.m[2].value == 10);
    CHECK(s.m[3].value == 11);
    Rat sum(0);
    for (const auto& mm : s.m) sum += mm.value;
    CHECK(sum == 33);
}

TEST_CASE("multiplicity at theta=k is 1") {
    for (const char* a : {"39,24,1;1,4,39", "10,6,1;1,3,10", "6,4,2,1;1,1,4,6"}) {
        auto s = spectrum(A(a));
        CHECK(s.m[0].value == 1);
    }
}

TEST_CASE("conjugate surd eigenvalues receive equal multiplicities") {
    std::mt19937 rng(11);
    int done = 0;
    while (done < 40) {
        long k = 4 + long(rng() % 40);
        long c2 = 1 + long(rng() % (k - 2));
        auto s = taylor_spectrum(k, c2);
        if (s.theta[1].kind != EigKind::Surd) continue;
        ++done;
        if (s.m[1].kind == MultKind::Rational) {
            CHECK(s.m[3].kind == MultKind::Rational);
            CHECK(s.m[1].value == s.m[3].value);
        }
    }
}

TEST_CASE("trace identities hold exactly for exact spectra") {
    for (const char* a :
         {"39,24,1;1,4,39", "10,6,1;1,3,10", "7,4,1;1,2,7", "9;1",
          "6,4,2,1;1,1,4,6", "715,432,25;1,80,675"}) {
        auto arr = A(a);
        auto s = spectrum(arr);
        auto tc = trace_check(arr, s, 3);
        CHECK(tc.exact);
        CHECK(tc.pass);
        for (const Rat& r : tc.residuals) CHECK(r == 0);
    }
}

TEST_CASE("trace check fails on a perturbed multiplicity") {
    auto arr = A("39,24,1;1,4,39");
    auto s = spectrum(arr);
    s.m[1].value += 1;
    auto tc = trace_check(arr, s, 3);
    CHECK(!tc.pass);
    CHECK(tc.residuals[0] != 0);
}

TEST_CASE("taylor_spectrum (27,10): theta 27,9,-1,-3; m 1,7,27,21") {
    auto s = taylor_spectrum(27, 10);
    std::vector<long> th, m;
    for (const auto& t : s.theta) {
        REQUIRE(t.kind == EigKind::Integer);
        th.push_back(t.ival.get_si());
    }
    for (const auto& mm : s.m) m.push_back(long(mm.value.get_d()));
    CHECK(th == std::vector<long>{27, 9, -1, -3});
    CHECK(m == std::vector<long>{1, 7, 27, 21});
}

TEST_CASE("taylor_spectrum (15,8): theta1=3 theta3=-5, m1=10 m3=6") {
    auto s = taylor_spectrum(15, 8);
    CHECK(s.theta[1].ival == 3);
    CHECK(s.theta[3].ival == -5);
    CHECK(s.m[1].value == 10);
    CHECK(s.m[3].value == 6);
    CHECK(s.m[2].value == 15);
}

TEST_CASE("taylor_spectrum (13,6): theta1 = -theta3 = sqrt13, m1=m3=7") {
    auto s = taylor_spectrum(13, 6);
    CHECK(s.theta[1].kind == EigKind::Surd);
    CHECK(s.theta[1].sval.radicand() == 13);
    CHECK(s.theta[1].sval.rational_part() == 0);
    CHECK(s.theta[3].sval == -s.theta[1].sval);
    CHECK(s.m[1].value == 7);
    CHECK(s.m[3].value == 7);
}

TEST_CASE("taylor_spectrum agrees exactly with the char-poly pipeline, k<=60") {
    for (long k = 2; k <= 60; ++k) {
        for (long c2 = 1; c2 < k; ++c2) {
            auto ts = taylor_spectrum(k, c2);
            IntersectionArray arr;
            arr.D = 3;
            arr.b = {k, c2, 1};
            arr.c = {1, c2, k};
            auto s = spectrum(arr);
            for (int i = 0; i <= 3; ++i) {
                REQUIRE(s.theta[i].is_exact());
                REQUIRE(ts.theta[i].is_exact());
                CHECK(cmp(s.theta[i].as_quad(), ts.theta[i].as_quad()) == 0);
                CHECK(s.m[i].kind == ts.m[i].kind);
                if (s.m[i].kind == MultKind::Rational)
                    CHECK(s.m[i].value == ts.m[i].value);
                else
                    CHECK(s.m[i].irr == ts.m[i].irr);
            }
        }
    }
}

TEST_CASE("D=4 array with an irreducible quartic factor: numeric pipeline") {
    // {4,3,2,1;1,1,1,2}: residual x^4-x^3-7x^2+6x+2 has no rational roots
    // and no integer quadratic split.
    auto arr = A("4,3,2,1;1,1,1,2");
    auto s = spectrum(arr, 1e-12);
    REQUIRE(s.theta.size() == 5);
    CHECK(s.theta[0].ival == 4);
    int napprox = 0;
    for (const auto& t : s.theta) napprox += (t.kind == EigKind::Approx);
    CHECK(napprox == 4);
    // residual bound |p(theta)| <= tol * ||p||
    auto p = char_poly(arr);
    double norm = 0;
    for (const auto& c : p.coeff) norm += std::abs(c.get_d());
    for (const auto& t : s.theta) {
        if (t.kind != EigKind::Approx) continue;
        double scale = std::pow(std::max(1.0, std::abs(t.approx)), p.degree());
        std::vector<double> pd;
        for (const auto& c : p.coeff) pd.push_back(c.get_d());
        CHECK(std::abs(eval_poly_d(pd, t.approx)) <= 1e-9 * norm * scale);
        CHECK(t.hi - t.lo <= Rat(1e-10));
        // enclosure is certified
        CHECK(sgn(eval_poly_rat(p.coeff, t.lo)) !=
              sgn(eval_poly_rat(p.coeff, t.hi)));
    }
    // multiplicities sum to v numerically
    double msum = 0;
    for (const auto& m : s.m) msum += m.approx;
    auto d = derive(arr);
    CHECK(std::abs(msum - d.v.get_d()) < 1e-6);
    // eigenvalues sorted strictly decreasing
    for (size_t i = 0; i + 1 < s.theta.size(); ++i)
        CHECK(s.theta[i].approx > s.theta[i + 1].approx);
}

TEST_CASE("halved Foster array {6,4,2,1;1,1,4,6} has integral spectrum") {
    auto s = spectrum(A("6,4,2,1;1,1,4,6"));
    std::vector<long> th;
    for (const auto& t : s.theta) {
        REQUIRE(t.kind == EigKind::Integer);
        th.push_back(t.ival.get_si());
    }
    CHECK(th == std::vector<long>{6, 3, 1, -2, -3});
    Rat sum(0);
    for (const auto& m : s.m) {
        CHECK(m.kind == MultKind::Rational);
        sum += m.value;
    }
    CHECK(sum == derive(A("6,4,2,1;1,1,4,6")).v);
}

TEST_CASE("random admissible arrays: exact roots really are roots") {
    std::mt19937 rng(5);
    int built = 0;
    while (built < 60) {
        IntersectionArray arr;
        arr.D = 2 + int(rng() % 3);
        long k = 3 + long(rng() % 30);
        arr.b.assign(1, k);
        for (int i = 1; i < arr.D; ++i)
            arr.b.push_back(1 + long(rng() % arr.b.back()));
        arr.c.assign(1, 1);
        for (int i = 2; i <= arr.D; ++i)
            arr.c.push_back(arr.c.back() + long(rng() % 4));
        if (!arr.admissible()) continue;
        ++built;
        auto p = char_poly(arr);
        auto s = spectrum(arr);
        Rat msum(0);
        bool all_rat = true;
        for (size_t i = 0; i < s.theta.size(); ++i) {
            if (s.theta[i].is_exact()) {
                Quad r = eval_poly_quad(p.coeff, s.theta[i].as_quad());
                CHECK(r.is_zero());
            }
            if (s.m[i].kind == MultKind::Rational)
                msum += s.m[i].value;
            else
                all_rat = false;
        }
        if (s.all_exact() && all_rat) CHECK(msum == derive(arr).v);
    }
}
