#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

namespace drg {

// All derived parameters and feasibility verdicts are computed in exact
// arbitrary-precision arithmetic; integrality is a property check, never a
// rounding decision.
using Int = mpz_class;
using Rat = mpq_class;

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

inline bool is_positive_integer(const Rat& q) {
    return is_integer(q) && q.get_num() > 0;
}

// Floor of an exact rational.
inline Int floor_rat(const Rat& q) {
    Int f;
    mpz_fdiv_q(f.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return f;
}

inline std::string to_string(const Int& z) { return z.get_str(); }

inline std::string to_string(const Rat& q) {
    Rat c(q);
    c.canonicalize();
    return c.get_str();
}

// Nearest integer to an mpq (ties toward even are irrelevant here; the
// callers always verify candidates exactly afterwards).
inline Int round_rat(const Rat& q) { return floor_rat(q + Rat(1, 2)); }

}  // namespace drg
