#ifndef SYMINEQ_UNIPOLY_HPP
#define SYMINEQ_UNIPOLY_HPP

#include <string>
#include <utility>
#include <vector>

#include "symineq/multipoly.hpp"
#include "symineq/rational.hpp"

namespace symineq {

// Dense univariate polynomial, constant term first.
class UniPoly {
  public:
    UniPoly() : var_("t") {}
    explicit UniPoly(std::string var) : var_(std::move(var)) {}
    UniPoly(std::string var, std::vector<Rational> coeffs);
    static UniPoly constant(const std::string& var, const Rational& c);
    static UniPoly monomial(const std::string& var, const Rational& c, int power);
    // p must involve no variable other than var.
    static UniPoly from_multipoly(const MultiPoly& p, const std::string& var);
    MultiPoly to_multipoly() const;

    const std::string& var() const { return var_; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; } // -1: zero
    bool is_zero() const { return coeffs_.empty(); }
    Rational coeff(int k) const;
    Rational leading() const;
    Rational constant_term() const { return coeff(0); }

    friend UniPoly operator+(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator-(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator*(const Rational& c, const UniPoly& p);
    UniPoly operator-() const;
    UniPoly pow(long e) const;

    bool operator==(const UniPoly& o) const;
    bool operator!=(const UniPoly& o) const { return !(*this == o); }

    Rational eval(const Rational& t) const;
    UniPoly derivative() const;
    // Factors out the largest power of the variable: p = var^k * q, q(0) != 0.
    std::pair<UniPoly, int> strip_low() const;
    // Coefficient reversal t^deg * p(1/t); requires nonzero constant term.
    UniPoly mirror() const;
    // Reversal of the stripped part, with the stripped multiplicity.
    std::pair<UniPoly, int> mirror_stripped() const;

    bool coefficients_nonnegative() const;

    // a = q*b + r with deg r < deg b (field arithmetic, exact).
    static void divmod(const UniPoly& a, const UniPoly& b, UniPoly& q, UniPoly& r);
    UniPoly exact_div(const UniPoly& b) const; // throws on nonzero remainder

    // Scales by a positive rational so coefficients are coprime integers.
    UniPoly primitive_positive_scale() const;
    // Additionally flips the sign so the leading coefficient is positive.
    UniPoly primitive_monic_sign() const;

    std::string str() const;

  private:
    void trim();
    std::string var_;
    std::vector<Rational> coeffs_;
};

// Primitive gcd with positive leading coefficient (zero if both inputs zero).
UniPoly gcd(const UniPoly& a, const UniPoly& b);
// Yun decomposition: p = c * prod S_i^i with S_i square-free and coprime.
std::vector<UniPoly> squarefree_decomposition(const UniPoly& p);
UniPoly squarefree_part(const UniPoly& p);
// Product of the square-free factors of odd multiplicity: the polynomial
// whose real roots are exactly the sign changes of p.
UniPoly odd_multiplicity_part(const UniPoly& p);

} // namespace symineq

#endif
