#ifndef SYDLAB_RATIONAL_HPP
#define SYDLAB_RATIONAL_HPP

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace sydlab {

using Integer = mpz_class;
using Rational = mpq_class;

// Integers print without a denominator, everything else as "a/b".
inline std::string to_string(const Rational& r)
{
    Rational c(r);
    c.canonicalize();
    return c.get_str();
}

inline Rational rational(std::int64_t num, std::int64_t den = 1)
{
    Rational r(Integer(std::to_string(num)), Integer(std::to_string(den)));
    r.canonicalize();
    return r;
}

inline bool is_integer(const Rational& r)
{
    return r.get_den() == 1;
}

} // namespace sydlab

#endif
