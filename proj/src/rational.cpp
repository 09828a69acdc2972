#include "symineq/rational.hpp"

namespace symineq {

Rational parse_rational(const std::string& s) {
    if (s.empty())
        throw domain_error("empty rational literal");
    Rational q;
    if (q.set_str(s, 10) != 0)
        throw domain_error("malformed rational literal: " + s);
    if (q.get_den() == 0)
        throw domain_error("rational with zero denominator: " + s);
    q.canonicalize();
    return q;
}

std::string rat_str(const Rational& q) {
    return q.get_str();
}

BigInt binomial(long n, long k) {
    if (k < 0 || k > n)
        return BigInt(0);
    if (n < 0)
        throw domain_error("binomial with negative upper index");
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n),
                 static_cast<unsigned long>(k));
    return r;
}

Rational pow_rat(const Rational& base, long e) {
    if (e < 0)
        throw domain_error("negative exponent");
    Rational r(1);
    Rational b = base;
    long k = e;
    while (k > 0) {
        if (k & 1)
            r *= b;
        b *= b;
        k >>= 1;
    }
    return r;
}

} // namespace symineq
