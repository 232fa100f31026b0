#pragma once

#include <array>
#include <string>
#include <vector>

#include "drg/intersection_array.hpp"
#include "drg/spectral.hpp"

namespace drg {

// Triple intersection numbers p[h][i][j], exact rationals.
struct PTensor {
    int D = 0;
    std::vector<Rat> data;  // (D+1)^3, h-major

    Rat& at(int h, int i, int j) {
        return data[(h * (D + 1) + i) * (D + 1) + j];
    }
    const Rat& at(int h, int i, int j) const {
        return data[(h * (D + 1) + i) * (D + 1) + j];
    }

    bool nonnegative_integral(std::string* witness = nullptr) const;
};

// Full tensor from the A*A_i expansion recurrence
//   c_i p[h][i][j] = c_{j+1} p[h][i-1][j+1] + (a_j - a_{i-1}) p[h][i-1][j]
//                    + b_{j-1} p[h][i-1][j-1] - b_{i-2} p[h][i-2][j],
// seeded by p[h][1][h-1] = c_h, p[h][1][h] = a_h, p[h][1][h+1] = b_h.
PTensor p_tensor(const IntersectionArray& arr);

struct CheckVerdict {
    bool pass = false;
    std::string witness;  // e.g. the non-integral k_i
};

struct FeasibilityReport {
    IntersectionArray arr;
    DerivedParams params;
    Spectrum spec;
    std::array<CheckVerdict, 5> checks;  // F1..F5
    bool feasible = false;               // all of F1..F5
    // true when F4 was decided without exact arithmetic (never happens in
    // the search pipeline; kept for numeric spectra of large-D arrays)
    bool f4_numeric = false;
};

// Evaluates F1..F5 in order; all verdicts are retained.
FeasibilityReport feasibility(const IntersectionArray& arr,
                              double tol = 1e-12);

}  // namespace drg
