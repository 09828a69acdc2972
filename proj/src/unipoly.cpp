#include "symineq/unipoly.hpp"

#include <algorithm>
#include <sstream>

namespace symineq {

UniPoly::UniPoly(std::string var, std::vector<Rational> coeffs)
    : var_(std::move(var)), coeffs_(std::move(coeffs)) {
    trim();
}

void UniPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0)
        coeffs_.pop_back();
}

UniPoly UniPoly::constant(const std::string& var, const Rational& c) {
    return UniPoly(var, {c});
}

UniPoly UniPoly::monomial(const std::string& var, const Rational& c, int power) {
    std::vector<Rational> cs(static_cast<std::size_t>(power) + 1, Rational(0));
    cs.back() = c;
    return UniPoly(var, std::move(cs));
}

UniPoly UniPoly::from_multipoly(const MultiPoly& p, const std::string& var) {
    UniPoly out(var);
    out.coeffs_.assign(static_cast<std::size_t>(std::max(p.total_degree(), 0)) + 1,
                       Rational(0));
    auto idx = p.var_index(var);
    for (const auto& [e, c] : p.terms()) {
        int pow = 0;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0)
                continue;
            if (idx && i == *idx)
                pow = e[i];
            else
                throw domain_error("from_multipoly: polynomial involves " + p.vars()[i]);
        }
        out.coeffs_[pow] = c;
    }
    out.trim();
    return out;
}

MultiPoly UniPoly::to_multipoly() const {
    MultiPoly out{std::vector<std::string>{var_}};
    for (std::size_t k = 0; k < coeffs_.size(); ++k)
        if (coeffs_[k] != 0)
            out.add_term({static_cast<int>(k)}, coeffs_[k]);
    return out;
}

Rational UniPoly::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(coeffs_.size()))
        return Rational(0);
    return coeffs_[k];
}

Rational UniPoly::leading() const {
    return coeffs_.empty() ? Rational(0) : coeffs_.back();
}

UniPoly operator+(const UniPoly& a, const UniPoly& b) {
    UniPoly out(a.var_);
    out.coeffs_.resize(std::max(a.coeffs_.size(), b.coeffs_.size()), Rational(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        out.coeffs_[i] += a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i)
        out.coeffs_[i] += b.coeffs_[i];
    out.trim();
    return out;
}

UniPoly operator-(const UniPoly& a, const UniPoly& b) {
    return a + (-b);
}

UniPoly UniPoly::operator-() const {
    UniPoly out(var_);
    out.coeffs_.reserve(coeffs_.size());
    for (const auto& c : coeffs_)
        out.coeffs_.push_back(-c);
    return out;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    UniPoly out(a.var_);
    if (a.is_zero() || b.is_zero())
        return out;
    out.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0)
            continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            if (b.coeffs_[j] != 0)
                out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    out.trim();
    return out;
}

UniPoly operator*(const Rational& c, const UniPoly& p) {
    UniPoly out(p.var_);
    if (c == 0)
        return out;
    out.coeffs_.reserve(p.coeffs_.size());
    for (const auto& pc : p.coeffs_)
        out.coeffs_.push_back(c * pc);
    return out;
}

UniPoly UniPoly::pow(long e) const {
    if (e < 0)
        throw domain_error("negative polynomial power");
    UniPoly result = constant(var_, Rational(1));
    UniPoly base = *this;
    long k = e;
    while (k > 0) {
        if (k & 1)
            result = result * base;
        k >>= 1;
        if (k > 0)
            base = base * base;
    }
    return result;
}

bool UniPoly::operator==(const UniPoly& o) const {
    return coeffs_ == o.coeffs_;
}

Rational UniPoly::eval(const Rational& t) const {
    Rational acc(0);
    for (std::size_t i = coeffs_.size(); i-- > 0;)
        acc = acc * t + coeffs_[i];
    return acc;
}

UniPoly UniPoly::derivative() const {
    UniPoly out(var_);
    if (coeffs_.size() <= 1)
        return out;
    out.coeffs_.resize(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        out.coeffs_[i - 1] = Rational(static_cast<long>(i)) * coeffs_[i];
    out.trim();
    return out;
}

std::pair<UniPoly, int> UniPoly::strip_low() const {
    if (is_zero())
        return {*this, 0};
    std::size_t k = 0;
    while (coeffs_[k] == 0)
        ++k;
    UniPoly out(var_);
    out.coeffs_.assign(coeffs_.begin() + static_cast<long>(k), coeffs_.end());
    return {out, static_cast<int>(k)};
}

UniPoly UniPoly::mirror() const {
    if (is_zero())
        return *this;
    if (coeffs_.front() == 0)
        throw domain_error("mirror of a polynomial with zero constant term; strip first");
    UniPoly out(var_);
    out.coeffs_.assign(coeffs_.rbegin(), coeffs_.rend());
    out.trim();
    return out;
}

std::pair<UniPoly, int> UniPoly::mirror_stripped() const {
    auto [stripped, mult] = strip_low();
    return {stripped.mirror(), mult};
}

bool UniPoly::coefficients_nonnegative() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(),
                       [](const Rational& c) { return c >= 0; });
}

void UniPoly::divmod(const UniPoly& a, const UniPoly& b, UniPoly& q, UniPoly& r) {
    if (b.is_zero())
        throw domain_error("division by the zero polynomial");
    q = UniPoly(a.var_);
    r = a;
    int db = b.degree();
    Rational lb = b.leading();
    while (!r.is_zero() && r.degree() >= db) {
        int shift = r.degree() - db;
        Rational c = r.leading() / lb;
        if (q.coeffs_.size() < static_cast<std::size_t>(shift) + 1)
            q.coeffs_.resize(static_cast<std::size_t>(shift) + 1, Rational(0));
        q.coeffs_[shift] += c;
        for (std::size_t i = 0; i < b.coeffs_.size(); ++i)
            r.coeffs_[i + shift] -= c * b.coeffs_[i];
        r.trim();
    }
    q.trim();
}

UniPoly UniPoly::exact_div(const UniPoly& b) const {
    UniPoly q, r;
    divmod(*this, b, q, r);
    if (!r.is_zero())
        throw domain_error("univariate division leaves a remainder");
    return q;
}

UniPoly UniPoly::primitive_positive_scale() const {
    if (is_zero())
        return *this;
    BigInt num_gcd(0), den_lcm(1);
    for (const auto& c : coeffs_) {
        if (c == 0)
            continue;
        num_gcd = gcd(num_gcd, BigInt(c.get_num()));
        den_lcm = lcm(den_lcm, BigInt(c.get_den()));
    }
    Rational scale = make_rational(den_lcm, abs(num_gcd));
    return scale * *this;
}

UniPoly UniPoly::primitive_monic_sign() const {
    UniPoly p = primitive_positive_scale();
    if (!p.is_zero() && p.leading() < 0)
        return -p;
    return p;
}

std::string UniPoly::str() const {
    return to_multipoly().str();
}

UniPoly gcd(const UniPoly& a, const UniPoly& b) {
    UniPoly x = a.primitive_monic_sign();
    UniPoly y = b.primitive_monic_sign();
    while (!y.is_zero()) {
        UniPoly q, r;
        UniPoly::divmod(x, y, q, r);
        x = y;
        y = r.primitive_monic_sign();
    }
    return x;
}

std::vector<UniPoly> squarefree_decomposition(const UniPoly& p) {
    if (p.is_zero())
        throw domain_error("square-free decomposition of the zero polynomial");
    std::vector<UniPoly> out;
    if (p.degree() == 0)
        return out;
    // Yun's algorithm over Q
    UniPoly g = gcd(p, p.derivative());
    UniPoly c = p.exact_div(g);
    UniPoly d = p.derivative().exact_div(g) - c.derivative();
    while (c.degree() > 0) {
        UniPoly s = gcd(c, d);
        out.push_back(s.primitive_monic_sign());
        c = c.exact_div(s);
        d = d.exact_div(s) - c.derivative();
    }
    return out;
}

UniPoly squarefree_part(const UniPoly& p) {
    if (p.is_zero())
        throw domain_error("square-free part of the zero polynomial");
    if (p.degree() == 0)
        return UniPoly::constant(p.var(), Rational(1));
    UniPoly g = gcd(p, p.derivative());
    return p.exact_div(g).primitive_monic_sign();
}

UniPoly odd_multiplicity_part(const UniPoly& p) {
    auto factors = squarefree_decomposition(p);
    UniPoly out = UniPoly::constant(p.var(), Rational(1));
    for (std::size_t i = 0; i < factors.size(); ++i)
        if (i % 2 == 0) // multiplicity i+1 odd
            out = out * factors[i];
    return out.primitive_monic_sign();
}

} // namespace symineq
