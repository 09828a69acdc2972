#ifndef SYMINEQ_SYMFUN_HPP
#define SYMINEQ_SYMFUN_HPP

#include <string>
#include <utility>
#include <vector>

#include "symineq/multipoly.hpp"
#include "symineq/partition.hpp"
#include "symineq/unipoly.hpp"

namespace symineq {

enum class SymFamily { Monomial, Elementary, PowerSum, Schur, CompleteHomogeneous };

// Accepts "M","E","P","S","H" or the long names.
SymFamily family_from_string(const std::string& s);
std::string family_letter(SymFamily f);

// Evaluation point (t,...,t,1,...,1) with u copies of t and v of 1.
struct TwoBlockPoint {
    int u = 0;
    int v = 0;
    int n() const { return u + v; }
};

// Degree-m complete homogeneous polynomial in x1..xn (all coefficients 1).
MultiPoly h_single(int n, int m);
MultiPoly e_single(int n, int m);
MultiPoly p_single(int n, int m);

// Generator f_{n,lambda} of the family: products of single-row generators
// for E/P/H, sum over distinct exponent permutations for M, Jacobi-Trudi
// determinant in h's for S (zero polynomial when length > n).
MultiPoly generate(SymFamily f, int n, const Partition& lambda);

// f_{n,lambda}(1,...,1), via closed forms; always a positive integer for
// nondegenerate input, degenerate_error otherwise.
Rational norm_const(SymFamily f, int n, const Partition& lambda);

// (N, D) with F_mu - F_lambda = N/D, D > 0 and N integer-coefficient:
// N = (D/c_mu) f_mu - (D/c_lambda) f_lambda with D = lcm(c_mu, c_lambda).
std::pair<MultiPoly, Rational> normalized_diff(SymFamily f, int n,
                                               const Partition& mu,
                                               const Partition& lambda);

// Generator evaluated at the two-block point, as a polynomial in t.
UniPoly two_block(SymFamily f, int n, const Partition& lambda, int u);

// Stars-and-bars closed form for a single h row:
// coeff of t^a in h_{n,m}(t_u,1_v) is C(u+a-1,a) * C(v+m-a-1,m-a).
UniPoly two_block_h_row(int u, int v, int m);
// Product over the parts (the H fast path used by the scan drivers).
UniPoly two_block_h(int n, const Partition& lambda, int u);

// h_{n,lambda}(t_{k+1},1_{l+1}) with n = k+l+2, exact in variables k,l,t.
MultiPoly two_block_symbolic_H(const Partition& lambda);

// deg_t of the two-block reduction: M,S -> sum of the first u parts;
// E -> same on the conjugate; P,H -> the weight d. Requires u >= 1.
int expected_degree(SymFamily f, const Partition& lambda, int u);

// ---- exact evaluation kit (integer lattice points) --------------------
// h_1..h_dmax at an integer point, by the DP h_k^{(i)} = h_k^{(i-1)} + x_i h_{k-1}^{(i)}.
std::vector<BigInt> h_values(const std::vector<BigInt>& x, int dmax);
std::vector<BigInt> e_values(const std::vector<BigInt>& x, int dmax);
std::vector<BigInt> p_values(const std::vector<BigInt>& x, int dmax);
// Exact f_{n,lambda}(x) for any family (S via an integer Jacobi-Trudi
// determinant, M via the exponent-orbit enumeration).
BigInt eval_generator(SymFamily f, int n, const Partition& lambda,
                      const std::vector<BigInt>& x);
Rational eval_generator_rat(SymFamily f, int n, const Partition& lambda,
                            const std::vector<Rational>& x);

} // namespace symineq

#endif
