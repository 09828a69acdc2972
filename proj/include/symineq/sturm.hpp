#ifndef SYMINEQ_STURM_HPP
#define SYMINEQ_STURM_HPP

#include <vector>

#include "symineq/rational.hpp"
#include "symineq/unipoly.hpp"

namespace symineq {

// Signed remainder sequence P, P', -rem(...), each element scaled to its
// positive-primitive integer form (positive scaling preserves all signs).
struct SturmChain {
    std::vector<UniPoly> polys;
};

SturmChain sturm_chain(const UniPoly& p); // domain_error on the zero polynomial

struct Bound {
    enum Kind { NegInf, Finite, PosInf } kind = Finite;
    Rational value;
    static Bound neg_inf() { return {NegInf, Rational(0)}; }
    static Bound pos_inf() { return {PosInf, Rational(0)}; }
    static Bound at(const Rational& v) { return {Finite, v}; }
};

int sign_variations(const SturmChain& chain, const Bound& x);

// Distinct real roots in (a, b]; the square-free part is taken internally.
int count_roots(const UniPoly& p, const Bound& a, const Bound& b);

} // namespace symineq

#endif
