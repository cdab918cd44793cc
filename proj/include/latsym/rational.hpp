#pragma once

#include <gmpxx.h>
#include <string>

#include "latsym/errors.hpp"

namespace latsym {

// Exact rational coefficients. mpq_class keeps values canonical
// (reduced, positive denominator) after every operation.
using Rat = mpq_class;

inline std::string rat_to_string(const Rat& r) { return r.get_str(); }

// Parses "p", "-p", or "p/q".
inline Rat rat_parse(const std::string& s) {
    if (s.empty()) throw ParseError("empty rational");
    for (char c : s) {
        if (!(c == '-' || c == '/' || (c >= '0' && c <= '9')))
            throw ParseError("bad rational: " + s);
    }
    Rat r;
    if (r.set_str(s, 10) != 0) throw ParseError("bad rational: " + s);
    r.canonicalize();
    return r;
}

inline bool rat_is_integer(const Rat& r) { return r.get_den() == 1; }

} // namespace latsym
