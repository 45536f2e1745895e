#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace conegeo {

/* Exact rational scalar. mpq_class keeps values in lowest terms with a
 * positive denominator as long as every entry point canonicalizes, so all
 * construction from raw integers goes through rat() or rat_parse(). */
using Rat = mpq_class;
using Int = mpz_class;

struct parse_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline Rat rat(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

inline Rat rat(const Int& num, const Int& den) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

inline const Int& num(const Rat& q) { return q.get_num(); }
inline const Int& den(const Rat& q) { return q.get_den(); }

inline int sign(const Rat& q) { return sgn(q); }
inline bool is_zero(const Rat& q) { return sgn(q) == 0; }
inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

/* "p/q" or "p"; whitespace is not tolerated, signs only on the numerator. */
inline Rat rat_parse(const std::string& s) {
    if (s.empty()) throw parse_error("empty rational literal");
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) {
            Int n(s);
            return Rat(n);
        }
        Int n(s.substr(0, slash));
        Int d(s.substr(slash + 1));
        if (sgn(d) <= 0) throw parse_error("rational literal needs a positive denominator: " + s);
        return rat(n, d);
    } catch (const std::invalid_argument&) {
        throw parse_error("bad rational literal: " + s);
    }
}

inline std::string rat_str(const Rat& q) {
    if (is_integer(q)) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

/* Largest integer <= q resp. smallest integer >= q. */
inline Int rat_floor(const Rat& q) {
    Int r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    return r;
}

inline Int rat_ceil(const Rat& q) {
    Int r;
    mpz_cdiv_q(r.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    return r;
}

}  // namespace conegeo
