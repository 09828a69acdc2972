#ifndef SYMINEQ_POSITIVITY_HPP
#define SYMINEQ_POSITIVITY_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "symineq/multipoly.hpp"
#include "symineq/rational.hpp"
#include "symineq/sturm.hpp"
#include "symineq/unipoly.hpp"

namespace symineq {

enum class VerdictStatus { ProvedNonnegative, NegativeWitness, Unknown };

std::string status_name(VerdictStatus s);

struct Witness {
    std::vector<Rational> point;
    Rational value; // exact evaluation at point; negative for NegativeWitness
};

// Three-valued certification result.
struct Verdict {
    VerdictStatus status = VerdictStatus::Unknown;
    std::string certificate; // "coefficient-sign" | "sturm" | "ds-depth-k"
    std::optional<Witness> witness;
    long ds_branches = 0;
    long samples_used = 0;

    static Verdict proved(const std::string& cert) {
        return {VerdictStatus::ProvedNonnegative, cert, std::nullopt, 0, 0};
    }
};

// Exact decision of P(t) >= 0 for all t >= 0. Coefficient-sign shortcut,
// then leading/constant sign plus a Sturm root count of the odd-multiplicity
// part on (0, inf); failures produce an exact rational negative witness.
Verdict nonneg_on_ray(const UniPoly& p);

// True iff every stored coefficient is >= 0 (one-sided orthant test).
bool coeff_nonneg(const MultiPoly& p);

// Successive difference substitution on simplex chambers; semidecision.
// depth_budget bounds the substitution depth, branch_budget the total
// number of expanded nodes.
Verdict ds_nonneg_on_simplex(const MultiPoly& p, int depth_budget,
                             long branch_budget = 1000000);

struct SampleHit {
    std::vector<Rational> point; // on the simplex, coordinates sum to 1
    Rational value;              // exact (negative) evaluation
    long index = 0;              // which sample found it
};

// Deterministic stream of integer compositions of `denom` into n parts
// (sorted-uniform-gaps construction); point i is c/denom on the simplex.
class SimplexSampler {
  public:
    SimplexSampler(int nvars, unsigned long long seed, long denom = 1000000);
    std::vector<long> next();
    long denom() const { return denom_; }

  private:
    int nvars_;
    long denom_;
    unsigned long long state_;
    unsigned long long next_raw();
};

// First sampled point with exact negative evaluation, if any.
std::optional<SampleHit> sample_search(const MultiPoly& p, long samples,
                                       unsigned long long seed);

// Same stream, caller-supplied exact evaluator on lattice compositions.
// The evaluator receives integer coordinates summing to denom and must
// return the exact value at the *scaled simplex point* c/denom times an
// arbitrary fixed positive constant (only the sign and exactness matter
// for the search; the reported value is re-derived by `value_at`).
std::optional<SampleHit>
sample_search(const std::function<Rational(const std::vector<long>&)>& sign_eval,
              const std::function<Rational(const std::vector<Rational>&)>& value_at,
              int nvars, long samples, unsigned long long seed);

} // namespace symineq

#endif
