#include "symineq/symfun.hpp"

#include <algorithm>
#include <numeric>

namespace symineq {

SymFamily family_from_string(const std::string& s) {
    if (s == "M" || s == "monomial" || s == "Monomial")
        return SymFamily::Monomial;
    if (s == "E" || s == "elementary" || s == "Elementary")
        return SymFamily::Elementary;
    if (s == "P" || s == "powersum" || s == "PowerSum" || s == "power-sum")
        return SymFamily::PowerSum;
    if (s == "S" || s == "schur" || s == "Schur")
        return SymFamily::Schur;
    if (s == "H" || s == "complete" || s == "CompleteHomogeneous")
        return SymFamily::CompleteHomogeneous;
    throw domain_error("unknown symmetric-function family: " + s);
}

std::string family_letter(SymFamily f) {
    switch (f) {
    case SymFamily::Monomial: return "M";
    case SymFamily::Elementary: return "E";
    case SymFamily::PowerSum: return "P";
    case SymFamily::Schur: return "S";
    case SymFamily::CompleteHomogeneous: return "H";
    }
    return "?";
}

static std::vector<std::string> x_vars(int n) {
    std::vector<std::string> vs;
    vs.reserve(n);
    for (int i = 1; i <= n; ++i)
        vs.push_back("x" + std::to_string(i));
    return vs;
}

MultiPoly h_single(int n, int m) {
    if (n < 1)
        throw domain_error("h_single needs n >= 1");
    if (m < 0)
        throw domain_error("h_single needs m >= 0");
    MultiPoly out{x_vars(n)};
    std::vector<int> e(n, 0);
    // all exponent vectors of total degree m
    auto rec = [&](auto&& self, int pos, int remaining) -> void {
        if (pos == n - 1) {
            e[pos] = remaining;
            out.add_term(e, Rational(1));
            e[pos] = 0;
            return;
        }
        for (int a = 0; a <= remaining; ++a) {
            e[pos] = a;
            self(self, pos + 1, remaining - a);
        }
        e[pos] = 0;
    };
    rec(rec, 0, m);
    return out;
}

MultiPoly e_single(int n, int m) {
    if (n < 1)
        throw domain_error("e_single needs n >= 1");
    if (m < 0)
        throw domain_error("e_single needs m >= 0");
    MultiPoly out{x_vars(n)};
    if (m > n)
        return out; // zero
    std::vector<int> e(n, 0);
    auto rec = [&](auto&& self, int start, int left) -> void {
        if (left == 0) {
            out.add_term(e, Rational(1));
            return;
        }
        for (int i = start; i <= n - left; ++i) {
            e[i] = 1;
            self(self, i + 1, left - 1);
            e[i] = 0;
        }
    };
    rec(rec, 0, m);
    return out;
}

MultiPoly p_single(int n, int m) {
    if (n < 1)
        throw domain_error("p_single needs n >= 1");
    if (m == 0)
        return MultiPoly(Rational(n));
    MultiPoly out{x_vars(n)};
    for (int i = 0; i < n; ++i) {
        std::vector<int> e(n, 0);
        e[i] = m;
        out.add_term(std::move(e), Rational(1));
    }
    return out;
}

// det of a matrix of polynomials by cofactor expansion (sizes here <= 6)
static MultiPoly poly_det(const std::vector<std::vector<MultiPoly>>& a) {
    std::size_t k = a.size();
    if (k == 0)
        return MultiPoly(Rational(1));
    if (k == 1)
        return a[0][0];
    MultiPoly det;
    int sign = 1;
    for (std::size_t j = 0; j < k; ++j) {
        std::vector<std::vector<MultiPoly>> minor(k - 1);
        for (std::size_t r = 1; r < k; ++r)
            for (std::size_t c = 0; c < k; ++c)
                if (c != j)
                    minor[r - 1].push_back(a[r][c]);
        MultiPoly term = a[0][j] * poly_det(minor);
        det = (sign > 0) ? det + term : det - term;
        sign = -sign;
    }
    return det;
}

static MultiPoly schur_jacobi_trudi(int n, const Partition& lambda) {
    int len = lambda.length();
    if (len > n)
        return MultiPoly{x_vars(n)}; // zero polynomial
    if (len == 0)
        return MultiPoly(Rational(1));
    std::vector<std::vector<MultiPoly>> m(len, std::vector<MultiPoly>());
    for (int i = 1; i <= len; ++i) {
        for (int j = 1; j <= len; ++j) {
            int idx = lambda.part(i) - i + j;
            if (idx < 0)
                m[i - 1].push_back(MultiPoly{x_vars(n)});
            else
                m[i - 1].push_back(h_single(n, idx));
        }
    }
    return poly_det(m);
}

MultiPoly generate(SymFamily f, int n, const Partition& lambda) {
    if (n < 1)
        throw domain_error("generate needs n >= 1");
    switch (f) {
    case SymFamily::CompleteHomogeneous: {
        MultiPoly out(Rational(1));
        for (int p : lambda.parts())
            out = out * h_single(n, p);
        return out.embedded(merge_vars(out.vars(), x_vars(n)));
    }
    case SymFamily::Elementary: {
        MultiPoly out(Rational(1));
        for (int p : lambda.parts())
            out = out * e_single(n, p);
        return out.embedded(merge_vars(out.vars(), x_vars(n)));
    }
    case SymFamily::PowerSum: {
        MultiPoly out(Rational(1));
        for (int p : lambda.parts())
            out = out * p_single(n, p);
        return out.embedded(merge_vars(out.vars(), x_vars(n)));
    }
    case SymFamily::Monomial: {
        if (lambda.length() > n)
            throw domain_error("monomial generator needs length(lambda) <= n");
        MultiPoly out{x_vars(n)};
        std::vector<int> pattern(n, 0);
        for (int i = 0; i < lambda.length(); ++i)
            pattern[i] = lambda.parts()[i];
        std::sort(pattern.begin(), pattern.end());
        do {
            out.add_term(pattern, Rational(1));
        } while (std::next_permutation(pattern.begin(), pattern.end()));
        return out;
    }
    case SymFamily::Schur:
        return schur_jacobi_trudi(n, lambda);
    }
    throw domain_error("unreachable family");
}

// integer determinant, fraction-free Bareiss
static BigInt int_det(std::vector<std::vector<BigInt>> a) {
    std::size_t k = a.size();
    if (k == 0)
        return BigInt(1);
    BigInt prev(1);
    int sign = 1;
    for (std::size_t i = 0; i + 1 < k; ++i) {
        if (a[i][i] == 0) {
            std::size_t p = i + 1;
            while (p < k && a[p][i] == 0)
                ++p;
            if (p == k)
                return BigInt(0);
            std::swap(a[i], a[p]);
            sign = -sign;
        }
        for (std::size_t r = i + 1; r < k; ++r)
            for (std::size_t c = i + 1; c < k; ++c)
                a[r][c] = (a[r][c] * a[i][i] - a[r][i] * a[i][c]) / prev;
        prev = a[i][i];
    }
    return sign > 0 ? a[k - 1][k - 1] : -a[k - 1][k - 1];
}

Rational norm_const(SymFamily f, int n, const Partition& lambda) {
    if (n < 1)
        throw domain_error("norm_const needs n >= 1");
    switch (f) {
    case SymFamily::CompleteHomogeneous: {
        BigInt r(1);
        for (int p : lambda.parts())
            r *= binomial(n + p - 1, p);
        return Rational(r);
    }
    case SymFamily::Elementary: {
        BigInt r(1);
        for (int p : lambda.parts()) {
            if (p > n)
                throw degenerate_error("e-generator vanishes: part " +
                                       std::to_string(p) + " exceeds n");
            r *= binomial(n, p);
        }
        return Rational(r);
    }
    case SymFamily::PowerSum:
        return Rational(pow_int(BigInt(n), lambda.length()));
    case SymFamily::Monomial: {
        if (lambda.length() > n)
            throw domain_error("monomial generator needs length(lambda) <= n");
        // distinct arrangements of the zero-padded part multiset
        BigInt r;
        mpz_fac_ui(r.get_mpz_t(), n);
        std::vector<int> pattern(lambda.parts());
        pattern.resize(n, 0);
        std::sort(pattern.begin(), pattern.end());
        for (std::size_t i = 0; i < pattern.size();) {
            std::size_t j = i;
            while (j < pattern.size() && pattern[j] == pattern[i])
                ++j;
            BigInt f_;
            mpz_fac_ui(f_.get_mpz_t(), j - i);
            r /= f_;
            i = j;
        }
        return Rational(r);
    }
    case SymFamily::Schur: {
        int len = lambda.length();
        if (len > n)
            throw degenerate_error("schur normalizer vanishes: length(lambda) > n");
        std::vector<std::vector<BigInt>> m(len, std::vector<BigInt>(len));
        for (int i = 1; i <= len; ++i)
            for (int j = 1; j <= len; ++j) {
                int idx = lambda.part(i) - i + j;
                m[i - 1][j - 1] = idx < 0 ? BigInt(0) : binomial(n + idx - 1, idx);
            }
        BigInt d = int_det(m);
        if (d <= 0)
            throw degenerate_error("schur normalizer vanished unexpectedly");
        return Rational(d);
    }
    }
    throw domain_error("unreachable family");
}

std::pair<MultiPoly, Rational> normalized_diff(SymFamily f, int n,
                                               const Partition& mu,
                                               const Partition& lambda) {
    if (mu.weight() != lambda.weight())
        throw domain_error("normalized_diff compares partitions of equal weight");
    Rational cmu = norm_const(f, n, mu);
    Rational clam = norm_const(f, n, lambda);
    BigInt d = lcm(BigInt(cmu.get_num()), BigInt(clam.get_num()));
    Rational smu(d / cmu.get_num());
    Rational slam(d / clam.get_num());
    MultiPoly num = smu * generate(f, n, mu) - slam * generate(f, n, lambda);
    return {num, Rational(d)};
}

// number of degree-a monomials in u variables (stars and bars, u = 0 allowed)
static BigInt multiset_count(int u, int a) {
    if (u == 0)
        return BigInt(a == 0 ? 1 : 0);
    return binomial(u + a - 1, a);
}

UniPoly two_block_h_row(int u, int v, int m) {
    std::vector<Rational> coeffs(static_cast<std::size_t>(m) + 1, Rational(0));
    for (int a = 0; a <= m; ++a)
        coeffs[a] = Rational(multiset_count(u, a) * multiset_count(v, m - a));
    return UniPoly("t", std::move(coeffs));
}

UniPoly two_block_h(int n, const Partition& lambda, int u) {
    if (u < 0 || u > n)
        throw domain_error("two-block u out of range");
    UniPoly out = UniPoly::constant("t", Rational(1));
    for (int p : lambda.parts())
        out = out * two_block_h_row(u, n - u, p);
    return out;
}

UniPoly two_block(SymFamily f, int n, const Partition& lambda, int u) {
    if (u < 0 || u > n)
        throw domain_error("two-block u out of range");
    if (f == SymFamily::CompleteHomogeneous)
        return two_block_h(n, lambda, u);
    MultiPoly g = generate(f, n, lambda);
    MultiPoly tpoly = MultiPoly::variable("t");
    for (int i = 1; i <= n; ++i) {
        const std::string xi = "x" + std::to_string(i);
        if (!g.var_index(xi))
            continue;
        g = (i <= u) ? g.substitute(xi, tpoly) : g.substitute(xi, Rational(1));
    }
    return UniPoly::from_multipoly(g, "t");
}

// C(var + a, a) expanded as a degree-a polynomial in var
static MultiPoly binomial_shift_poly(const std::string& var, int a) {
    MultiPoly v = MultiPoly::variable(var);
    MultiPoly out(Rational(1));
    for (int j = 1; j <= a; ++j)
        out = out * (v + MultiPoly(Rational(j)));
    BigInt fact;
    mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(a));
    return make_rational(BigInt(1), fact) * out;
}

MultiPoly two_block_symbolic_H(const Partition& lambda) {
    if (lambda.length() == 0)
        throw domain_error("two_block_symbolic_H needs a nonempty partition");
    MultiPoly t = MultiPoly::variable("t");
    MultiPoly out(Rational(1));
    for (int m : lambda.parts()) {
        MultiPoly row;
        for (int a = 0; a <= m; ++a) {
            MultiPoly term =
                binomial_shift_poly("k", a) * binomial_shift_poly("l", m - a) * t.pow(a);
            row = row + term;
        }
        out = out * row;
    }
    return out;
}

int expected_degree(SymFamily f, const Partition& lambda, int u) {
    if (u < 1)
        throw domain_error("expected_degree needs u >= 1");
    switch (f) {
    case SymFamily::Monomial:
    case SymFamily::Schur: {
        return static_cast<int>(lambda.prefix_sum(u));
    }
    case SymFamily::Elementary: {
        return static_cast<int>(lambda.conjugate().prefix_sum(u));
    }
    case SymFamily::PowerSum:
    case SymFamily::CompleteHomogeneous:
        return lambda.weight();
    }
    throw domain_error("unreachable family");
}

// ---- exact evaluation kit ---------------------------------------------

template <typename S>
static std::vector<S> h_values_impl(const std::vector<S>& x, int dmax) {
    std::vector<S> h(static_cast<std::size_t>(dmax) + 1, S(0));
    h[0] = 1;
    for (const S& xi : x)
        for (int k = 1; k <= dmax; ++k)
            h[k] += xi * h[k - 1];
    return h;
}

template <typename S>
static std::vector<S> e_values_impl(const std::vector<S>& x, int dmax) {
    std::vector<S> e(static_cast<std::size_t>(dmax) + 1, S(0));
    e[0] = 1;
    for (const S& xi : x)
        for (int k = dmax; k >= 1; --k)
            e[k] += xi * e[k - 1];
    return e;
}

template <typename S>
static std::vector<S> p_values_impl(const std::vector<S>& x, int dmax) {
    std::vector<S> p(static_cast<std::size_t>(dmax) + 1, S(0));
    p[0] = x.size();
    for (const S& xi : x) {
        S pw = xi;
        for (int k = 1; k <= dmax; ++k) {
            p[k] += pw;
            if (k < dmax)
                pw *= xi;
        }
    }
    return p;
}

std::vector<BigInt> h_values(const std::vector<BigInt>& x, int dmax) {
    return h_values_impl(x, dmax);
}
std::vector<BigInt> e_values(const std::vector<BigInt>& x, int dmax) {
    return e_values_impl(x, dmax);
}
std::vector<BigInt> p_values(const std::vector<BigInt>& x, int dmax) {
    return p_values_impl(x, dmax);
}

template <typename S>
static S det_impl(std::vector<std::vector<S>> a) {
    std::size_t k = a.size();
    if (k == 0)
        return S(1);
    S prev(1);
    int sign = 1;
    for (std::size_t i = 0; i + 1 < k; ++i) {
        if (a[i][i] == 0) {
            std::size_t p = i + 1;
            while (p < k && a[p][i] == 0)
                ++p;
            if (p == k)
                return S(0);
            std::swap(a[i], a[p]);
            sign = -sign;
        }
        for (std::size_t r = i + 1; r < k; ++r)
            for (std::size_t c = i + 1; c < k; ++c)
                a[r][c] = (a[r][c] * a[i][i] - a[r][i] * a[i][c]) / prev;
        prev = a[i][i];
    }
    S d = a[k - 1][k - 1];
    return sign > 0 ? d : S(-d);
}

template <typename S>
static S eval_generator_impl(SymFamily f, int n, const Partition& lambda,
                             const std::vector<S>& x) {
    if (static_cast<int>(x.size()) != n)
        throw domain_error("evaluation point length does not match n");
    int dmax = 0;
    for (int p : lambda.parts())
        dmax = std::max(dmax, p);
    switch (f) {
    case SymFamily::CompleteHomogeneous: {
        auto h = h_values_impl(x, dmax);
        S out(1);
        for (int p : lambda.parts())
            out *= h[p];
        return out;
    }
    case SymFamily::Elementary: {
        auto e = e_values_impl(x, dmax);
        S out(1);
        for (int p : lambda.parts())
            out *= e[p];
        return out;
    }
    case SymFamily::PowerSum: {
        auto p = p_values_impl(x, dmax);
        S out(1);
        for (int q : lambda.parts())
            out *= p[q];
        return out;
    }
    case SymFamily::Monomial: {
        if (lambda.length() > n)
            throw domain_error("monomial generator needs length(lambda) <= n");
        std::vector<std::vector<S>> pw(x.size());
        for (std::size_t i = 0; i < x.size(); ++i) {
            pw[i].resize(dmax + 1);
            pw[i][0] = 1;
            for (int k = 1; k <= dmax; ++k)
                pw[i][k] = pw[i][k - 1] * x[i];
        }
        std::vector<int> pattern(lambda.parts());
        pattern.resize(n, 0);
        std::sort(pattern.begin(), pattern.end());
        S out(0);
        do {
            S term(1);
            for (int i = 0; i < n; ++i)
                if (pattern[i] != 0)
                    term *= pw[i][pattern[i]];
            out += term;
        } while (std::next_permutation(pattern.begin(), pattern.end()));
        return out;
    }
    case SymFamily::Schur: {
        int len = lambda.length();
        if (len > n)
            return S(0);
        int hmax = 0;
        for (int i = 1; i <= len; ++i)
            hmax = std::max(hmax, lambda.part(i) - i + len);
        auto h = h_values_impl(x, std::max(hmax, 0));
        std::vector<std::vector<S>> m(len, std::vector<S>(len));
        for (int i = 1; i <= len; ++i)
            for (int j = 1; j <= len; ++j) {
                int idx = lambda.part(i) - i + j;
                m[i - 1][j - 1] = idx < 0 ? S(0) : h[idx];
            }
        return det_impl(std::move(m));
    }
    }
    throw domain_error("unreachable family");
}

BigInt eval_generator(SymFamily f, int n, const Partition& lambda,
                      const std::vector<BigInt>& x) {
    return eval_generator_impl(f, n, lambda, x);
}

// rational-point variant used by the probe grids
Rational eval_generator_rat(SymFamily f, int n, const Partition& lambda,
                            const std::vector<Rational>& x) {
    return eval_generator_impl(f, n, lambda, x);
}

} // namespace symineq
