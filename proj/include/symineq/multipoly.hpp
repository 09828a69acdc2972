#ifndef SYMINEQ_MULTIPOLY_HPP
#define SYMINEQ_MULTIPOLY_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "symineq/rational.hpp"

namespace symineq {

// Graded-lexicographic order on exponent vectors: total degree first, then lex.
struct GrlexLess {
    bool operator()(const std::vector<int>& a, const std::vector<int>& b) const;
};

// Variable names are ordered naturally: "x2" < "x10", "k" < "l" < "t".
bool var_name_less(const std::string& a, const std::string& b);
std::vector<std::string> merge_vars(const std::vector<std::string>& a,
                                    const std::vector<std::string>& b);

// Sparse multivariate polynomial with exact rational coefficients.
// Variables are kept sorted in the canonical name order; no zero
// coefficients are stored, so equality is structural.
class MultiPoly {
  public:
    using Exponents = std::vector<int>;
    using TermMap = std::map<Exponents, Rational, GrlexLess>;

    MultiPoly() = default; // zero polynomial over no variables
    explicit MultiPoly(const Rational& c);
    explicit MultiPoly(std::vector<std::string> variables); // zero over variables
    static MultiPoly variable(const std::string& name);
    static MultiPoly constant(const Rational& c) { return MultiPoly(c); }

    const std::vector<std::string>& vars() const { return vars_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    int total_degree() const; // -1 for the zero polynomial
    int degree_in(const std::string& var) const;
    std::optional<std::size_t> var_index(const std::string& var) const;
    Rational coeff(const Exponents& e) const; // 0 if absent

    // Accumulates c * x^e; drops the term if the sum cancels.
    void add_term(Exponents e, const Rational& c);

    // Same polynomial over a superset of the variables (canonical order).
    MultiPoly embedded(const std::vector<std::string>& superset) const;
    // Drops variables that do not occur in any term.
    MultiPoly trimmed() const;

    friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator*(const Rational& c, const MultiPoly& p);
    MultiPoly operator-() const;
    MultiPoly pow(long e) const; // e >= 0, else domain_error

    bool operator==(const MultiPoly& o) const;
    bool operator!=(const MultiPoly& o) const { return !(*this == o); }

    Rational eval(const std::vector<Rational>& point) const;
    MultiPoly substitute(const std::string& var, const MultiPoly& value) const;
    MultiPoly substitute(const std::string& var, const Rational& value) const;
    // Exact quotient; throws divisibility_error (carrying the remainder)
    // when the division leaves a nonzero remainder under grlex order.
    MultiPoly exact_div(const MultiPoly& divisor) const;
    // Coefficients of var^0, var^1, ... as polynomials in the other variables.
    std::vector<MultiPoly> as_univariate(const std::string& var) const;

    bool coefficients_nonnegative() const;
    bool coefficients_nonpositive() const;
    bool is_homogeneous() const;
    // Invariance under all permutations of this polynomial's variables.
    bool is_symmetric() const;

    // Deterministic human-readable form, leading term first.
    std::string str() const;

  private:
    std::vector<std::string> vars_;
    TermMap terms_;
};

struct divisibility_error : std::runtime_error {
    divisibility_error(const std::string& what, MultiPoly rem)
        : std::runtime_error(what), remainder(std::move(rem)) {}
    MultiPoly remainder;
};

} // namespace symineq

#endif
