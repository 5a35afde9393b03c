#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace restree {

// Exact arithmetic only; no floating point anywhere in the library.
using Int = mpz_class;
using Rat = mpq_class;

// gmpxx has no long long overloads; route 64-bit values through long.
static_assert(sizeof(long) >= sizeof(std::int64_t), "needs 64-bit long");

inline Int to_int(std::int64_t v) { return Int(static_cast<long>(v)); }

inline Rat to_rat(std::int64_t v) { return Rat(static_cast<long>(v)); }

inline Rat make_rat(std::int64_t num, std::int64_t den) {
    if (den == 0) throw std::invalid_argument("make_rat: zero denominator");
    Rat r(static_cast<long>(num), static_cast<long>(den));
    r.canonicalize();
    return r;
}

inline std::string to_string(const Int& v) { return v.get_str(); }

// "p" for integers, "p/q" otherwise.
inline std::string to_string(const Rat& v) {
    if (v.get_den() == 1) return v.get_num().get_str();
    return v.get_num().get_str() + "/" + v.get_den().get_str();
}

inline std::int64_t to_ll(const Int& v) {
    if (!v.fits_slong_p()) throw std::overflow_error("integer does not fit in 64 bits");
    return v.get_si();
}

}  // namespace restree
