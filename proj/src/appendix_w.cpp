#include "symineq/paperlab.hpp"

namespace symineq {

namespace {

// c * k^a * l^b
struct KlTerm {
    int ka;
    int lb;
    long c;
};

MultiPoly kl_poly(std::initializer_list<KlTerm> terms) {
    MultiPoly out{std::vector<std::string>{"k", "l"}};
    for (const auto& t : terms)
        out.add_term({t.ka, t.lb}, Rational(t.c));
    return out;
}

MultiPoly k_plus(long c) {
    return MultiPoly::variable("k") + MultiPoly(Rational(c));
}
MultiPoly l_plus(long c) {
    return MultiPoly::variable("l") + MultiPoly(Rational(c));
}

} // namespace

// The published coefficients of W by powers of t, in their factored form.
MultiPoly appendix_W() {
    const MultiPoly c6 =
        k_plus(2) * k_plus(1).pow(3) *
        kl_poly({{4, 0, 1}, {3, 1, 2}, {2, 2, 1}, {3, 0, 12}, {2, 1, 17}, {1, 2, 5},
                 {2, 0, 49}, {1, 1, 43}, {0, 2, 5}, {1, 0, 82}, {0, 1, 32}, {0, 0, 47}});
    const MultiPoly c5 =
        Rational(2) * (k_plus(2) * k_plus(1).pow(3)) *
        kl_poly({{3, 1, 3}, {2, 2, 6}, {1, 3, 3}, {3, 0, 2}, {2, 1, 32}, {1, 2, 37},
                 {0, 3, 7}, {2, 0, 21}, {1, 1, 106}, {0, 2, 52}, {1, 0, 64},
                 {0, 1, 109}, {0, 0, 60}});
    const MultiPoly c4 =
        l_plus(1) * k_plus(1).pow(2) *
        kl_poly({{4, 1, 15}, {3, 2, 30}, {2, 3, 15}, {4, 0, 11}, {3, 1, 173},
                 {2, 2, 208}, {1, 3, 46}, {3, 0, 121}, {2, 1, 677}, {1, 2, 426},
                 {0, 3, 35}, {2, 0, 442}, {1, 1, 1074}, {0, 2, 272}, {1, 0, 662},
                 {0, 1, 599}, {0, 0, 354}});
    const MultiPoly c3 =
        Rational(4) * (l_plus(1).pow(2) * k_plus(1).pow(2)) *
        kl_poly({{3, 1, 5}, {2, 2, 10}, {1, 3, 5}, {3, 0, 6}, {2, 1, 53}, {1, 2, 53},
                 {0, 3, 6}, {2, 0, 51}, {1, 1, 157}, {0, 2, 51}, {1, 0, 125},
                 {0, 1, 125}, {0, 0, 88}});
    const MultiPoly c2 =
        l_plus(1).pow(2) * k_plus(1) *
        kl_poly({{3, 2, 15}, {2, 3, 30}, {1, 4, 15}, {3, 1, 46}, {2, 2, 208},
                 {1, 3, 173}, {0, 4, 11}, {3, 0, 35}, {2, 1, 426}, {1, 2, 677},
                 {0, 3, 121}, {2, 0, 272}, {1, 1, 1074}, {0, 2, 442}, {1, 0, 599},
                 {0, 1, 662}, {0, 0, 354}});
    const MultiPoly c1 =
        Rational(2) * (l_plus(2) * l_plus(1).pow(3)) *
        kl_poly({{3, 1, 3}, {2, 2, 6}, {1, 3, 3}, {3, 0, 7}, {2, 1, 37}, {1, 2, 32},
                 {0, 3, 2}, {2, 0, 52}, {1, 1, 106}, {0, 2, 21}, {1, 0, 109},
                 {0, 1, 64}, {0, 0, 60}});
    const MultiPoly c0 =
        l_plus(2) * l_plus(1).pow(3) *
        kl_poly({{2, 2, 1}, {1, 3, 2}, {0, 4, 1}, {2, 1, 5}, {1, 2, 17}, {0, 3, 12},
                 {2, 0, 5}, {1, 1, 43}, {0, 2, 49}, {1, 0, 32}, {0, 1, 82},
                 {0, 0, 47}});

    const MultiPoly t = MultiPoly::variable("t");
    const MultiPoly coeffs[7] = {c0, c1, c2, c3, c4, c5, c6};
    MultiPoly w;
    for (int a = 6; a >= 0; --a)
        w = w * t + coeffs[a];
    return w;
}

} // namespace symineq
