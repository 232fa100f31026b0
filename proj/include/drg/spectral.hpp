#pragma once

#include <string>
#include <vector>

#include "drg/intersection_array.hpp"
#include "drg/polynomial.hpp"
#include "drg/quadratic.hpp"

namespace drg {

// Monic integer characteristic polynomial of L1, degree D+1.
struct CharPoly {
    std::vector<Int> coeff;
    int degree() const { return static_cast<int>(coeff.size()) - 1; }
};

CharPoly char_poly(const IntersectionArray& arr);

enum class EigKind { Integer, Surd, Approx };

struct EigValue {
    EigKind kind = EigKind::Integer;
    Int ival;      // Integer
    Quad sval;     // Surd
    double approx = 0;  // midpoint, filled for every kind
    Rat lo, hi;    // certified enclosure, filled for every kind
    int factor = -1;  // index of the owning factor in Spectrum::factors

    bool is_exact() const { return kind != EigKind::Approx; }
    // Exact value as a quadratic-field element (Integer or Surd only).
    Quad as_quad() const;
    std::string str() const;
};

enum class MultKind { Rational, Irrational, Approx };

struct Mult {
    MultKind kind = MultKind::Rational;
    Rat value;       // Rational
    Quad irr;        // Irrational: exact value with nonzero surd part
    double approx = 0;  // filled for every kind

    bool is_positive_int() const {
        return kind == MultKind::Rational && is_positive_integer(value);
    }
    std::string str() const;
};

// One irreducible (over Q) factor of the characteristic polynomial together
// with the indices of its roots in the spectrum.  Multiplicities of all
// roots of a factor of degree >= 3 coincide when rational; that common
// value is cached here.
struct SpectrumFactor {
    std::vector<Int> g;
    std::vector<int> roots;
    bool mult_rational = false;
    Rat mult_value;
};

struct Spectrum {
    int D = 0;
    std::vector<EigValue> theta;  // strictly decreasing, D+1 entries
    std::vector<Mult> m;          // parallel to theta
    std::vector<SpectrumFactor> factors;

    bool all_exact() const;
    // Index of theta_i; theta[0] is k.
    const EigValue& operator[](int i) const { return theta.at(i); }
};

// theta_0 = k exactly; all integer roots extracted by divisor testing on
// the deflated polynomial; quadratic residues as exact conjugate surds;
// higher-degree residues isolated by bracketing + Brent with certified
// rational enclosures of width <= tol.  Throws logic_error if D+1 distinct
// real roots cannot be produced.
Spectrum spectrum(const IntersectionArray& arr, double tol = 1e-12);

// Just the sorted eigenvalue list.
std::vector<EigValue> eigenvalues(const IntersectionArray& arr,
                                  double tol = 1e-12);

struct StandardSequence {
    bool exact = false;
    std::vector<Quad> u;        // exact path
    std::vector<double> ud;     // numeric path (filled in both cases)
    double err = 0;             // propagated error bound for ud
};

// u_0 = 1, u_1 = theta/k, c_i u_{i-1} + a_i u_i + b_i u_{i+1} = theta u_i.
StandardSequence standard_sequence(const IntersectionArray& arr,
                                   const EigValue& theta);
StandardSequence standard_sequence(const IntersectionArray& arr,
                                   const Quad& theta);

// Biggs' formula m(theta) = v / sum k_i u_i(theta)^2.
Mult multiplicity(const IntersectionArray& arr, const EigValue& theta);

// sum_i k_i u_i(x)^2 reduced modulo the monic integer polynomial g; the
// multiplicity of every root of an irreducible g is rational iff this
// reduction is a constant.
std::vector<Rat> biggs_denominator_mod(const IntersectionArray& arr,
                                       const std::vector<Int>& g);

struct TraceCheck {
    bool pass = false;
    bool exact = false;
    // residuals[l-1] = sum m_i theta_i^l - expected_l for l = 1..maxpow,
    // as exact rationals when the spectrum is exact.
    std::vector<Rat> residuals;
    std::vector<double> residuals_d;
};

// Verifies sum m_i theta_i = 0, sum m_i theta_i^2 = v k and
// sum m_i theta_i^3 = v k a_1 (closed-walk counts for l = 1,2,3).
TraceCheck trace_check(const IntersectionArray& arr, const Spectrum& s,
                       int maxpow, double tol = 1e-9);

// Closed-form spectrum of the Taylor array {k,c2,1;1,c2,k}.
Spectrum taylor_spectrum(long k, long c2);

// Exact comparison helpers that refine certified enclosures on demand.
int cmp(const EigValue& x, const EigValue& y);
int cmp(const EigValue& x, const Rat& y);

}  // namespace drg
