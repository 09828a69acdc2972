#include "symineq/multipoly.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace symineq {

bool GrlexLess::operator()(const std::vector<int>& a, const std::vector<int>& b) const {
    long da = std::accumulate(a.begin(), a.end(), 0L);
    long db = std::accumulate(b.begin(), b.end(), 0L);
    if (da != db)
        return da < db;
    return a < b;
}

// "x2" < "x10": compare the alphabetic prefix, then the numeric suffix.
bool var_name_less(const std::string& a, const std::string& b) {
    auto split = [](const std::string& s) {
        std::size_t i = s.size();
        while (i > 0 && std::isdigit(static_cast<unsigned char>(s[i - 1])))
            --i;
        long num = -1;
        if (i < s.size())
            num = std::stol(s.substr(i));
        return std::make_pair(s.substr(0, i), num);
    };
    auto [pa, na] = split(a);
    auto [pb, nb] = split(b);
    if (pa != pb)
        return pa < pb;
    return na < nb;
}

std::vector<std::string> merge_vars(const std::vector<std::string>& a,
                                    const std::vector<std::string>& b) {
    std::vector<std::string> out;
    out.reserve(a.size() + b.size());
    std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out),
               var_name_less);
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

MultiPoly::MultiPoly(const Rational& c) {
    if (c != 0)
        terms_.emplace(Exponents{}, c);
}

MultiPoly::MultiPoly(std::vector<std::string> variables) : vars_(std::move(variables)) {
    std::sort(vars_.begin(), vars_.end(), var_name_less);
    vars_.erase(std::unique(vars_.begin(), vars_.end()), vars_.end());
}

MultiPoly MultiPoly::variable(const std::string& name) {
    MultiPoly p{std::vector<std::string>{name}};
    p.terms_.emplace(Exponents{1}, Rational(1));
    return p;
}

int MultiPoly::total_degree() const {
    int deg = -1;
    for (const auto& [e, c] : terms_)
        deg = std::max(deg, static_cast<int>(std::accumulate(e.begin(), e.end(), 0L)));
    return deg;
}

int MultiPoly::degree_in(const std::string& var) const {
    auto idx = var_index(var);
    if (!idx)
        return 0;
    int deg = 0;
    for (const auto& [e, c] : terms_)
        deg = std::max(deg, e[*idx]);
    return deg;
}

std::optional<std::size_t> MultiPoly::var_index(const std::string& var) const {
    auto it = std::lower_bound(vars_.begin(), vars_.end(), var, var_name_less);
    if (it == vars_.end() || *it != var)
        return std::nullopt;
    return static_cast<std::size_t>(it - vars_.begin());
}

Rational MultiPoly::coeff(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

void MultiPoly::add_term(Exponents e, const Rational& c) {
    if (e.size() != vars_.size())
        throw domain_error("exponent vector length does not match variable count");
    if (c == 0)
        return;
    auto [it, inserted] = terms_.emplace(std::move(e), c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

MultiPoly MultiPoly::embedded(const std::vector<std::string>& superset) const {
    if (superset == vars_)
        return *this;
    std::vector<int> where(vars_.size());
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        auto it = std::lower_bound(superset.begin(), superset.end(), vars_[i], var_name_less);
        if (it == superset.end() || *it != vars_[i])
            throw domain_error("embedding target misses variable " + vars_[i]);
        where[i] = static_cast<int>(it - superset.begin());
    }
    MultiPoly out{superset};
    for (const auto& [e, c] : terms_) {
        Exponents ne(superset.size(), 0);
        for (std::size_t i = 0; i < e.size(); ++i)
            ne[where[i]] = e[i];
        out.terms_.emplace(std::move(ne), c);
    }
    return out;
}

MultiPoly MultiPoly::trimmed() const {
    std::vector<bool> used(vars_.size(), false);
    for (const auto& [e, c] : terms_)
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] != 0)
                used[i] = true;
    std::vector<std::string> kept;
    for (std::size_t i = 0; i < vars_.size(); ++i)
        if (used[i])
            kept.push_back(vars_[i]);
    if (kept.size() == vars_.size())
        return *this;
    MultiPoly out{kept};
    for (const auto& [e, c] : terms_) {
        Exponents ne;
        ne.reserve(kept.size());
        for (std::size_t i = 0; i < e.size(); ++i)
            if (used[i])
                ne.push_back(e[i]);
        out.terms_.emplace(std::move(ne), c);
    }
    return out;
}

static void align(const MultiPoly& a, const MultiPoly& b, MultiPoly& ea, MultiPoly& eb) {
    if (a.vars() == b.vars()) {
        ea = a;
        eb = b;
        return;
    }
    auto u = merge_vars(a.vars(), b.vars());
    ea = a.embedded(u);
    eb = b.embedded(u);
}

MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly ea, eb;
    align(a, b, ea, eb);
    MultiPoly out{ea.vars_};
    out.terms_ = ea.terms_;
    for (const auto& [e, c] : eb.terms_)
        out.add_term(e, c);
    return out;
}

MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) {
    return a + (-b);
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly out{vars_};
    for (const auto& [e, c] : terms_)
        out.terms_.emplace(e, -c);
    return out;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly ea, eb;
    align(a, b, ea, eb);
    MultiPoly out{ea.vars_};
    for (const auto& [e1, c1] : ea.terms_) {
        for (const auto& [e2, c2] : eb.terms_) {
            MultiPoly::Exponents e(e1.size());
            for (std::size_t i = 0; i < e.size(); ++i)
                e[i] = e1[i] + e2[i];
            out.add_term(std::move(e), c1 * c2);
        }
    }
    return out;
}

MultiPoly operator*(const Rational& c, const MultiPoly& p) {
    MultiPoly out{p.vars_};
    if (c == 0)
        return out;
    for (const auto& [e, pc] : p.terms_)
        out.terms_.emplace(e, c * pc);
    return out;
}

MultiPoly MultiPoly::pow(long e) const {
    if (e < 0)
        throw domain_error("negative polynomial power");
    MultiPoly result{Rational(1)};
    MultiPoly base = *this;
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

bool MultiPoly::operator==(const MultiPoly& o) const {
    if (vars_ == o.vars_)
        return terms_ == o.terms_;
    MultiPoly ea, eb;
    align(*this, o, ea, eb);
    return ea.terms_ == eb.terms_;
}

Rational MultiPoly::eval(const std::vector<Rational>& point) const {
    if (point.size() != vars_.size())
        throw domain_error("evaluation point length does not match variable count");
    // power tables per variable
    std::vector<std::vector<Rational>> pows(vars_.size());
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        int d = 0;
        for (const auto& [e, c] : terms_)
            d = std::max(d, e[i]);
        pows[i].resize(d + 1);
        pows[i][0] = 1;
        for (int k = 1; k <= d; ++k)
            pows[i][k] = pows[i][k - 1] * point[i];
    }
    Rational sum(0);
    for (const auto& [e, c] : terms_) {
        Rational term = c;
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] != 0)
                term *= pows[i][e[i]];
        sum += term;
    }
    return sum;
}

MultiPoly MultiPoly::substitute(const std::string& var, const MultiPoly& value) const {
    auto idx = var_index(var);
    if (!idx)
        throw domain_error("substitute: unknown variable " + var);
    std::vector<std::string> rest;
    for (std::size_t i = 0; i < vars_.size(); ++i)
        if (i != *idx)
            rest.push_back(vars_[i]);
    auto by_power = as_univariate(var);
    // Horner in the remaining variables
    MultiPoly result{rest};
    for (std::size_t a = by_power.size(); a-- > 0;)
        result = result * value + by_power[a];
    return result;
}

MultiPoly MultiPoly::substitute(const std::string& var, const Rational& value) const {
    return substitute(var, MultiPoly(value));
}

MultiPoly MultiPoly::exact_div(const MultiPoly& divisor) const {
    if (divisor.is_zero())
        throw domain_error("division by the zero polynomial");
    MultiPoly r, q0;
    align(*this, divisor, r, q0);
    MultiPoly quot{r.vars_};
    const auto& dlead = *q0.terms_.rbegin(); // grlex-leading term
    while (!r.terms_.empty()) {
        const auto& rlead = *r.terms_.rbegin();
        Exponents qe(rlead.first.size());
        bool divisible = true;
        for (std::size_t i = 0; i < qe.size(); ++i) {
            qe[i] = rlead.first[i] - dlead.first[i];
            if (qe[i] < 0) {
                divisible = false;
                break;
            }
        }
        if (!divisible)
            throw divisibility_error("no exact quotient", r);
        Rational qc = rlead.second / dlead.second;
        MultiPoly term{r.vars_};
        term.terms_.emplace(qe, qc);
        quot.add_term(std::move(qe), qc);
        r = r - term * q0;
    }
    return quot;
}

std::vector<MultiPoly> MultiPoly::as_univariate(const std::string& var) const {
    auto idx = var_index(var);
    if (!idx)
        throw domain_error("as_univariate: unknown variable " + var);
    std::vector<std::string> rest;
    for (std::size_t i = 0; i < vars_.size(); ++i)
        if (i != *idx)
            rest.push_back(vars_[i]);
    int d = degree_in(var);
    std::vector<MultiPoly> out(static_cast<std::size_t>(d) + 1, MultiPoly{rest});
    for (const auto& [e, c] : terms_) {
        Exponents ne;
        ne.reserve(rest.size());
        for (std::size_t i = 0; i < e.size(); ++i)
            if (i != *idx)
                ne.push_back(e[i]);
        out[e[*idx]].add_term(std::move(ne), c);
    }
    return out;
}

bool MultiPoly::coefficients_nonnegative() const {
    for (const auto& [e, c] : terms_)
        if (c < 0)
            return false;
    return true;
}

bool MultiPoly::coefficients_nonpositive() const {
    for (const auto& [e, c] : terms_)
        if (c > 0)
            return false;
    return true;
}

bool MultiPoly::is_homogeneous() const {
    if (terms_.empty())
        return true;
    long d = -1;
    for (const auto& [e, c] : terms_) {
        long td = std::accumulate(e.begin(), e.end(), 0L);
        if (d < 0)
            d = td;
        else if (td != d)
            return false;
    }
    return true;
}

bool MultiPoly::is_symmetric() const {
    // adjacent transpositions generate the full symmetric group
    for (std::size_t i = 0; i + 1 < vars_.size(); ++i) {
        for (const auto& [e, c] : terms_) {
            if (e[i] == e[i + 1])
                continue;
            Exponents swapped = e;
            std::swap(swapped[i], swapped[i + 1]);
            auto it = terms_.find(swapped);
            if (it == terms_.end() || it->second != c)
                return false;
        }
    }
    return true;
}

std::string MultiPoly::str() const {
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        Rational ac = abs(c);
        if (first) {
            if (c < 0)
                os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        bool any_var = std::any_of(e.begin(), e.end(), [](int x) { return x != 0; });
        if (ac != 1 || !any_var) {
            os << rat_str(ac);
            if (any_var)
                os << "*";
        }
        bool firstv = true;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0)
                continue;
            if (!firstv)
                os << "*";
            firstv = false;
            os << vars_[i];
            if (e[i] > 1)
                os << "^" << e[i];
        }
    }
    return os.str();
}

} // namespace symineq
