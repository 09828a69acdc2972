#include "symineq/sturm.hpp"

namespace symineq {

SturmChain sturm_chain(const UniPoly& p) {
    if (p.is_zero())
        throw domain_error("Sturm chain of the zero polynomial");
    SturmChain chain;
    chain.polys.push_back(p.primitive_positive_scale());
    if (p.degree() == 0)
        return chain;
    UniPoly d = p.derivative().primitive_positive_scale();
    chain.polys.push_back(d);
    while (true) {
        const UniPoly& a = chain.polys[chain.polys.size() - 2];
        const UniPoly& b = chain.polys.back();
        if (b.is_zero() || b.degree() < 0)
            break;
        UniPoly q, r;
        UniPoly::divmod(a, b, q, r);
        if (r.is_zero())
            break; // the last element is the gcd
        chain.polys.push_back((-r).primitive_positive_scale());
        if (chain.polys.back().degree() == 0)
            break;
    }
    return chain;
}

static int sign_at(const UniPoly& p, const Bound& x) {
    if (p.is_zero())
        return 0;
    switch (x.kind) {
    case Bound::Finite:
        return sign_of(p.eval(x.value));
    case Bound::PosInf:
        return sign_of(Rational(p.leading()));
    case Bound::NegInf: {
        int s = sign_of(Rational(p.leading()));
        return (p.degree() % 2 == 0) ? s : -s;
    }
    }
    return 0;
}

int sign_variations(const SturmChain& chain, const Bound& x) {
    int variations = 0;
    int prev = 0;
    for (const auto& p : chain.polys) {
        int s = sign_at(p, x);
        if (s == 0)
            continue;
        if (prev != 0 && s != prev)
            ++variations;
        prev = s;
    }
    return variations;
}

int count_roots(const UniPoly& p, const Bound& a, const Bound& b) {
    if (p.is_zero())
        throw domain_error("root count of the zero polynomial");
    if (a.kind == Bound::PosInf || b.kind == Bound::NegInf)
        throw domain_error("invalid interval bounds");
    if (a.kind == Bound::Finite && b.kind == Bound::Finite && !(a.value < b.value))
        throw domain_error("count_roots needs a < b");
    UniPoly s = squarefree_part(p);
    if (s.degree() <= 0)
        return 0;
    SturmChain chain = sturm_chain(s);
    return sign_variations(chain, a) - sign_variations(chain, b);
}

} // namespace symineq
