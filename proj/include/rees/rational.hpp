#pragma once

#include <gmpxx.h>
#include <string>

namespace rees {

// Exact rational coefficients. All arithmetic in the library is exact;
// there is no floating-point mode anywhere.
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
    Rat q(num, den);
    q.canonicalize();
    return q;
}

inline bool rat_is_zero(const Rat& q) { return sgn(q) == 0; }

// Canonical text form: "p" or "p/q" with q > 0.
inline std::string rat_str(const Rat& q) { return q.get_str(); }

} // namespace rees
