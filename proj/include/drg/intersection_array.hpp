#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "drg/rational.hpp"

namespace drg {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InadmissibleArray : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// The array {b0,...,b_{D-1}; c1,...,c_D}.  Parsing enforces positivity and
// c1 == 1 only; monotonicity and a_i >= 0 are checkable properties, not
// parse invariants.
struct IntersectionArray {
    int D = 0;
    std::vector<long> b;  // b_0 .. b_{D-1}
    std::vector<long> c;  // c_1 .. c_D, stored so that c[i-1] is c_i

    long k() const { return b.at(0); }
    // b_i with the convention b_D = 0.
    long bi(int i) const { return i < D ? b.at(i) : 0; }
    // c_i with the convention c_0 = 0.
    long ci(int i) const { return i == 0 ? 0 : c.at(i - 1); }
    // a_i = k - b_i - c_i.
    long ai(int i) const { return k() - bi(i) - ci(i); }

    bool admissible() const {
        for (int i = 0; i <= D; ++i)
            if (ai(i) < 0) return false;
        return true;
    }

    bool operator==(const IntersectionArray& o) const {
        return b == o.b && c == o.c;
    }
    bool operator<(const IntersectionArray& o) const {
        if (b != o.b) return b < o.b;
        return c < o.c;
    }
};

// Exact derived parameters: a_i, k_i and v = sum k_i.
struct DerivedParams {
    std::vector<long> a;   // a_0 .. a_D
    std::vector<Rat> k_i;  // k_0 .. k_D
    Rat v;
};

// Parses "b0,b1,...,b_{D-1};c1,...,c_D" (whitespace allowed).  Throws
// ParseError on malformed syntax, unequal halves, c1 != 1 or a
// non-positive entry.
IntersectionArray parse_array(const std::string& text);

// Canonical textual form, the inverse of parse_array.
std::string render(const IntersectionArray& arr);

// Exact k_i via c_{i+1} k_{i+1} = b_i k_i; throws InadmissibleArray when
// some a_i < 0.
DerivedParams derive(const IntersectionArray& arr);

}  // namespace drg
