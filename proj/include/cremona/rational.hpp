#ifndef CREMONA_RATIONAL_HPP
#define CREMONA_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <string_view>

#include "error.hpp"

namespace cremona {

// gmpxx keeps mpq_class canonical after every arithmetic operation:
// denominator positive, numerator and denominator coprime, zero as 0/1.
using Integer = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
    if (den == 0) throw Error(ErrorCode::InvalidArgument, "zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

/// "a" when integral, "a/b" otherwise.
inline std::string to_string(const Rational& r) { return r.get_str(); }

inline Rational parse_rational(std::string_view text) {
    Rational r;
    if (text.empty() || r.set_str(std::string(text), 10) != 0) {
        throw Error(ErrorCode::InvalidArgument, "malformed rational '" + std::string(text) + "'");
    }
    if (r.get_den() == 0) throw Error(ErrorCode::InvalidArgument, "zero denominator");
    r.canonicalize();
    return r;
}

inline int sign(const Rational& r) { return sgn(r); }

inline Integer floor(const Rational& r) {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    return q;
}

inline Integer gcd(const Integer& a, const Integer& b) {
    Integer g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

inline Integer lcm(const Integer& a, const Integer& b) {
    Integer l;
    mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return l;
}

}  // namespace cremona

#endif  // CREMONA_RATIONAL_HPP
