#pragma once

#include <gmpxx.h>

#include <cctype>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace tetleb {

// Exact rational scalar. mpq_class keeps values in lowest terms with a
// positive denominator, which is exactly the invariant we need for hashing
// and string round-trips.
using Rational = mpq_class;

struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// Parses "p", "-p", "p/q". Whitespace around the token is rejected.
inline Rational parse_rational(std::string_view text) {
    if (text.empty())
        throw ParseError("empty rational literal");
    std::string s(text);
    for (char c : s) {
        if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '+' || c == '/'))
            throw ParseError("bad rational literal: '" + s + "'");
    }
    mpq_class q;
    if (q.set_str(s, 10) != 0)
        throw ParseError("bad rational literal: '" + s + "'");
    if (q.get_den() == 0)
        throw ParseError("zero denominator in '" + s + "'");
    q.canonicalize();
    return q;
}

inline std::string to_string(const Rational& q) {
    return q.get_str();
}

inline double to_double(const Rational& q) {
    return q.get_d();
}

inline std::size_t hash_mpz(const mpz_srcptr z) {
    std::size_t h = static_cast<std::size_t>(mpz_sgn(z)) + 0x9e3779b97f4a7c15ull;
    const std::size_t n = mpz_size(z);
    for (std::size_t i = 0; i < n; ++i) {
        h ^= static_cast<std::size_t>(mpz_getlimbn(z, static_cast<mp_size_t>(i))) +
             0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h;
}

inline std::size_t hash_value(const Rational& q) {
    std::size_t h = hash_mpz(q.get_num().get_mpz_t());
    h ^= hash_mpz(q.get_den().get_mpz_t()) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    return h;
}

}  // namespace tetleb
