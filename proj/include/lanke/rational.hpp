#pragma once

#include <gmpxx.h>

#include <string>

namespace lanke {

using Rat = mpq_class;
using Int = mpz_class;

inline std::string rat_to_string(const Rat& q) { return q.get_str(); }

inline Rat rat_from_string(const std::string& s) {
    Rat q(s);
    q.canonicalize();
    return q;
}

}  // namespace lanke
