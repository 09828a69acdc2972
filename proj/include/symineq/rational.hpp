#ifndef SYMINEQ_RATIONAL_HPP
#define SYMINEQ_RATIONAL_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace symineq {

using BigInt = mpz_class;
using Rational = mpq_class;

struct domain_error : std::domain_error {
    using std::domain_error::domain_error;
};

// Zero normalizer (e.g. Schur with more parts than variables).
struct degenerate_error : domain_error {
    using domain_error::domain_error;
};

inline Rational make_rational(const BigInt& num, const BigInt& den) {
    if (den == 0)
        throw domain_error("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

// Accepts "p" or "p/q"; canonicalizes.
Rational parse_rational(const std::string& s);

// Canonical rendering: "p" when the denominator is 1, else "p/q".
std::string rat_str(const Rational& q);

inline int sign_of(const Rational& q) { return sgn(q); }

// C(n, k) for n >= 0; zero when k < 0 or k > n.
BigInt binomial(long n, long k);

inline BigInt lcm(const BigInt& a, const BigInt& b) {
    BigInt r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline BigInt gcd(const BigInt& a, const BigInt& b) {
    BigInt r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline BigInt pow_int(const BigInt& base, unsigned long e) {
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

Rational pow_rat(const Rational& base, long e);

} // namespace symineq

#endif
