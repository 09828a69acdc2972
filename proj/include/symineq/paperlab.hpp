#ifndef SYMINEQ_PAPERLAB_HPP
#define SYMINEQ_PAPERLAB_HPP

#include <functional>
#include <string>
#include <vector>

#include "symineq/multipoly.hpp"
#include "symineq/partition.hpp"
#include "symineq/positivity.hpp"
#include "symineq/scan.hpp"

namespace symineq {

struct CheckResult {
    std::string name;
    std::string status; // "pass" | "fail" | "unknown"
    std::string detail;
    double ms = 0.0;
};

struct LemmaReport {
    std::string lemma;
    std::vector<CheckResult> checks;

    void add(const std::string& name, bool pass, const std::string& detail, double ms = 0.0);
    void add_status(const std::string& name, const std::string& status,
                    const std::string& detail, double ms = 0.0);
    // "pass" iff every check passed; any "fail" wins over "unknown".
    std::string overall() const;
    bool passed() const { return overall() == "pass"; }
};

// Cleared two-block difference for mu=(2_4), lambda=(3,1_5): the quotient
// W with n^6 (n+1)^4 (n+2) J_n(t_{k+1},1_{l+1}) = (k+1)(l+1)(t-1)^2 W(k,l,t),
// n = k+l+2 expanded symbolically.
MultiPoly compute_W();
// The published W, transcribed by powers of t and expanded.
MultiPoly appendix_W();
// n^6 (n+1)^4 (n+2) for integer n.
Rational w_clearing_constant(long n);

LemmaReport verify_W();
LemmaReport verify_J2();

// H_{n+1,lambda}(x,0) / H_{n,lambda}(x) = prod_i n/(n+lambda_i), exact.
Rational boundary_ratio(const Partition& lambda, long n);
LemmaReport verify_boundary_gap();
LemmaReport verify_relaxation_chain(int n_max, int m_max);

struct FamilyOptions {
    long samples = 10000;
    unsigned long long seed = 0;
    int ds_depth = 0; // 0 disables the optional DS pass
    long branch_budget = 1000000;
};
LemmaReport verify_family(int d, int n, const FamilyOptions& opt = {});

LemmaReport verify_hs_counterexample(long samples, unsigned long long seed,
                                     int ds_depth, long branch_budget = 1000000);

struct ScanOptions {
    long samples = 1000;
    unsigned long long seed = 0;
    int ds_depth = 0;
    long branch_budget = 1000000;
    int threads = 1;
    ScanCache* cache = nullptr;
    // Called once per result line (JSON), in deterministic task order.
    std::function<void(const std::string&)> emit;
};

LemmaReport known_results_scan(int d_max, int n_max, const ScanOptions& opt);
LemmaReport conjecture_rhs_harness(int d, int n, const ScanOptions& opt);

} // namespace symineq

#endif
