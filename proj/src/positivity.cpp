#include "symineq/positivity.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <unordered_set>

namespace symineq {

std::string status_name(VerdictStatus s) {
    switch (s) {
    case VerdictStatus::ProvedNonnegative: return "ProvedNonnegative";
    case VerdictStatus::NegativeWitness: return "NegativeWitness";
    case VerdictStatus::Unknown: return "Unknown";
    }
    return "?";
}

static Verdict ray_witness(const Rational& t, const Rational& value) {
    Verdict v;
    v.status = VerdictStatus::NegativeWitness;
    v.certificate = "sturm";
    v.witness = Witness{{t}, value};
    return v;
}

// Smallest power of two beyond which sign(lc) dominates, by doubling.
static Verdict witness_beyond(const UniPoly& p) {
    Rational t(1);
    while (true) {
        Rational v = p.eval(t);
        if (v < 0)
            return ray_witness(t, v);
        t *= 2;
    }
}

// p changes sign at root; probe shrinking two-sided neighborhoods until an
// exact negative value shows up (one side must be negative).
static Verdict probe_around(const UniPoly& p, const Rational& root, Rational delta) {
    while (true) {
        Rational r = root + delta, l = root - delta;
        Rational vr = p.eval(r);
        if (vr < 0)
            return ray_witness(r, vr);
        if (l > 0) {
            Rational vl = p.eval(l);
            if (vl < 0)
                return ray_witness(l, vl);
        }
        delta /= 2;
    }
}

// Exact negative point of p between the sign changes located by the roots
// of its odd-multiplicity part; a single root is isolated in (lo, hi].
static Verdict locate_witness(const UniPoly& p, const UniPoly& odd, Rational lo,
                              Rational hi) {
    while (true) {
        if (odd.eval(hi) == 0)
            return probe_around(p, hi, (hi - lo) / 4);
        Rational vhi = p.eval(hi);
        if (vhi < 0)
            return ray_witness(hi, vhi);
        if (lo > 0) {
            Rational vlo = p.eval(lo);
            if (vlo < 0)
                return ray_witness(lo, vlo);
        }
        Rational mid = (lo + hi) / 2;
        Rational vmid = p.eval(mid);
        if (vmid < 0)
            return ray_witness(mid, vmid);
        if (odd.eval(mid) == 0)
            return probe_around(p, mid, (hi - lo) / 4);
        if (count_roots(odd, Bound::at(lo), Bound::at(mid)) >= 1)
            hi = mid;
        else
            lo = mid;
    }
}

Verdict nonneg_on_ray(const UniPoly& p) {
    if (p.is_zero() || p.coefficients_nonnegative())
        return Verdict::proved("coefficient-sign");
    if (p.leading() < 0)
        return witness_beyond(p); // p -> -inf as t -> +inf
    Rational p0 = p.constant_term();
    if (p0 < 0)
        return ray_witness(Rational(0), p0);
    UniPoly odd = odd_multiplicity_part(p);
    if (odd.degree() <= 0 ||
        count_roots(odd, Bound::at(Rational(0)), Bound::pos_inf()) == 0)
        return Verdict::proved("sturm");
    // Cauchy bound on the roots of the odd part
    Rational bound(1);
    for (int i = 0; i < odd.degree(); ++i) {
        Rational q = abs(odd.coeff(i) / odd.leading());
        if (q > bound)
            bound = q;
    }
    bound += 1;
    // shrink (lo, hi] until it isolates a single sign change
    Rational lo(0), hi = bound;
    while (count_roots(odd, Bound::at(lo), Bound::at(hi)) > 1) {
        Rational mid = (lo + hi) / 2;
        if (count_roots(odd, Bound::at(lo), Bound::at(mid)) >= 1)
            hi = mid;
        else
            lo = mid;
    }
    return locate_witness(p, odd, lo, hi);
}

bool coeff_nonneg(const MultiPoly& p) {
    return p.coefficients_nonnegative();
}

// ---- successive difference substitution --------------------------------

namespace {

using Matrix = std::vector<std::vector<BigInt>>;

Matrix identity(std::size_t n) {
    Matrix m(n, std::vector<BigInt>(n, BigInt(0)));
    for (std::size_t i = 0; i < n; ++i)
        m[i][i] = 1;
    return m;
}

Matrix mat_mul(const Matrix& a, const Matrix& b) {
    std::size_t n = a.size();
    Matrix c(n, std::vector<BigInt>(n, BigInt(0)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            if (a[i][k] == 0)
                continue;
            for (std::size_t j = 0; j < n; ++j)
                c[i][j] += a[i][k] * b[k][j];
        }
    return c;
}

// chamber x_{sigma(i)} = y_i + ... + y_n
Matrix chamber_matrix(const std::vector<int>& sigma) {
    std::size_t n = sigma.size();
    Matrix m(n, std::vector<BigInt>(n, BigInt(0)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j)
            m[sigma[i]][j] = 1;
    return m;
}

// p(A y) for an integer matrix A, with per-variable power caching
MultiPoly compose_linear(const MultiPoly& p, const Matrix& a) {
    const auto& vars = p.vars();
    std::size_t n = vars.size();
    std::vector<MultiPoly> images(n, MultiPoly{vars});
    for (std::size_t i = 0; i < n; ++i) {
        MultiPoly img{vars};
        for (std::size_t j = 0; j < n; ++j) {
            if (a[i][j] == 0)
                continue;
            std::vector<int> e(n, 0);
            e[j] = 1;
            img.add_term(std::move(e), Rational(a[i][j]));
        }
        images[i] = img;
    }
    std::vector<std::vector<MultiPoly>> pow_cache(n);
    auto power_of = [&](std::size_t i, int e) -> const MultiPoly& {
        auto& cache = pow_cache[i];
        if (cache.empty())
            cache.push_back(MultiPoly(Rational(1)));
        while (static_cast<int>(cache.size()) <= e)
            cache.push_back(cache.back() * images[i]);
        return cache[e];
    };
    MultiPoly out{vars};
    for (const auto& [e, c] : p.terms()) {
        MultiPoly term(c);
        for (std::size_t i = 0; i < n; ++i)
            if (e[i] != 0)
                term = term * power_of(i, e[i]);
        out = out + term;
    }
    return out;
}

std::string poly_key(const MultiPoly& p) {
    std::ostringstream os;
    for (const auto& [e, c] : p.terms()) {
        for (int x : e)
            os << x << ",";
        os << ":" << rat_str(c) << ";";
    }
    return os.str();
}

struct DsNode {
    MultiPoly poly;
    Matrix transform;
    int depth;
};

Verdict ds_witness(const MultiPoly& original, const Matrix& transform,
                   const std::vector<BigInt>& y, long branches) {
    std::size_t n = transform.size();
    std::vector<BigInt> x(n, BigInt(0));
    BigInt total(0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j)
            x[i] += transform[i][j] * y[j];
        total += x[i];
    }
    std::vector<Rational> point(n);
    for (std::size_t i = 0; i < n; ++i)
        point[i] = make_rational(x[i], total);
    Rational value = original.eval(point);
    Verdict v;
    v.status = VerdictStatus::NegativeWitness;
    v.certificate = "ds";
    v.witness = Witness{std::move(point), value};
    v.ds_branches = branches;
    if (!(value < 0))
        v.status = VerdictStatus::Unknown; // exact re-check failed: stay sound
    return v;
}

} // namespace

Verdict ds_nonneg_on_simplex(const MultiPoly& p, int depth_budget, long branch_budget) {
    if (!p.is_homogeneous())
        throw domain_error("difference substitution needs a homogeneous polynomial");
    std::size_t n = p.vars().size();
    if (n == 0 && !p.coefficients_nonnegative()) {
        Verdict v;
        v.status = VerdictStatus::NegativeWitness;
        v.certificate = "ds";
        v.witness = Witness{{}, p.terms().begin()->second};
        return v;
    }
    if (p.is_zero() || n == 0 || p.coefficients_nonnegative())
        return Verdict::proved("ds-depth-0");
    long d = p.total_degree();

    std::deque<DsNode> queue;
    queue.push_back({p, identity(n), 0});
    std::unordered_set<std::string> seen;
    seen.insert(poly_key(p));

    long branches = 0;
    int max_closed_depth = 0;
    bool survivors = false;

    std::vector<int> base_perm(n);
    for (std::size_t i = 0; i < n; ++i)
        base_perm[i] = static_cast<int>(i);

    while (!queue.empty()) {
        DsNode node = std::move(queue.front());
        queue.pop_front();
        ++branches;
        if (branches > branch_budget) {
            Verdict v;
            v.status = VerdictStatus::Unknown;
            v.certificate = "ds-depth-" + std::to_string(node.depth);
            v.ds_branches = branches;
            return v;
        }
        if (node.poly.coefficients_nonnegative()) {
            max_closed_depth = std::max(max_closed_depth, node.depth);
            continue;
        }
        // vertex values are the pure-power coefficients
        bool found_vertex = false;
        for (std::size_t i = 0; i < n && !found_vertex; ++i) {
            std::vector<int> e(n, 0);
            e[i] = static_cast<int>(d);
            Rational c = node.poly.coeff(e);
            if (c < 0) {
                std::vector<BigInt> y(n, BigInt(0));
                y[i] = 1;
                Verdict v = ds_witness(p, node.transform, y, branches);
                if (v.status == VerdictStatus::NegativeWitness)
                    return v;
                found_vertex = true; // re-check failed; fall through
            }
        }
        if (node.poly.coefficients_nonpositive()) {
            // nonzero and everywhere <= 0 on the orthant: all-ones is negative
            Verdict v = ds_witness(p, node.transform, std::vector<BigInt>(n, BigInt(1)),
                                   branches);
            if (v.status == VerdictStatus::NegativeWitness)
                return v;
        }
        if (node.depth >= depth_budget) {
            survivors = true;
            continue;
        }
        bool symmetric = node.poly.is_symmetric();
        std::vector<int> perm = base_perm;
        do {
            MultiPoly child = compose_linear(node.poly, chamber_matrix(perm));
            if (seen.insert(poly_key(child)).second)
                queue.push_back({std::move(child),
                                 mat_mul(node.transform, chamber_matrix(perm)),
                                 node.depth + 1});
            if (symmetric)
                break; // all chambers of a symmetric node coincide
        } while (std::next_permutation(perm.begin(), perm.end()));
    }

    Verdict v;
    if (survivors) {
        v.status = VerdictStatus::Unknown;
        v.certificate = "ds-depth-" + std::to_string(depth_budget);
    } else {
        v = Verdict::proved("ds-depth-" + std::to_string(max_closed_depth));
    }
    v.ds_branches = branches;
    return v;
}

// ---- randomized simplex sampling ---------------------------------------

static unsigned long long splitmix64(unsigned long long& state) {
    unsigned long long z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

SimplexSampler::SimplexSampler(int nvars, unsigned long long seed, long denom)
    : nvars_(nvars), denom_(denom), state_(seed ^ 0x6a09e667f3bcc909ULL) {
    if (nvars < 1)
        throw domain_error("sampler needs at least one variable");
    // warm up the mixer so small seeds decorrelate
    for (int i = 0; i < 4; ++i)
        splitmix64(state_);
}

unsigned long long SimplexSampler::next_raw() {
    return splitmix64(state_);
}

std::vector<long> SimplexSampler::next() {
    std::vector<long> cuts(nvars_ - 1);
    for (auto& c : cuts)
        c = static_cast<long>(next_raw() % static_cast<unsigned long long>(denom_ + 1));
    std::sort(cuts.begin(), cuts.end());
    std::vector<long> parts(nvars_);
    long prev = 0;
    for (int i = 0; i + 1 < nvars_; ++i) {
        parts[i] = cuts[i] - prev;
        prev = cuts[i];
    }
    parts[nvars_ - 1] = denom_ - prev;
    return parts;
}

std::optional<SampleHit>
sample_search(const std::function<Rational(const std::vector<long>&)>& sign_eval,
              const std::function<Rational(const std::vector<Rational>&)>& value_at,
              int nvars, long samples, unsigned long long seed) {
    SimplexSampler sampler(nvars, seed);
    for (long i = 0; i < samples; ++i) {
        std::vector<long> c = sampler.next();
        Rational s = sign_eval(c);
        if (s < 0) {
            std::vector<Rational> point(nvars);
            for (int j = 0; j < nvars; ++j)
                point[j] = make_rational(BigInt(c[j]), BigInt(sampler.denom()));
            Rational value = value_at(point);
            return SampleHit{std::move(point), value, i};
        }
    }
    return std::nullopt;
}

std::optional<SampleHit> sample_search(const MultiPoly& p, long samples,
                                       unsigned long long seed) {
    if (p.is_zero())
        return std::nullopt;
    int nvars = static_cast<int>(p.vars().size());
    if (nvars == 0) {
        // constant polynomial: the empty product point is the whole simplex
        Rational c = p.terms().begin()->second;
        if (c < 0)
            return SampleHit{{}, c, 0};
        return std::nullopt;
    }
    bool hom = p.is_homogeneous();
    auto value_at = [&](const std::vector<Rational>& pt) -> Rational { return p.eval(pt); };
    if (hom) {
        auto sign_eval = [&](const std::vector<long>& c) -> Rational {
            std::vector<Rational> pt(c.size());
            for (std::size_t i = 0; i < c.size(); ++i)
                pt[i] = Rational(c[i]);
            return p.eval(pt); // same sign as at the scaled simplex point
        };
        return sample_search(sign_eval, value_at, nvars, samples, seed);
    }
    auto sign_eval = [&](const std::vector<long>& c) -> Rational {
        std::vector<Rational> pt(c.size());
        for (std::size_t i = 0; i < c.size(); ++i)
            pt[i] = make_rational(BigInt(c[i]), BigInt(1000000));
        return p.eval(pt);
    };
    return sample_search(sign_eval, value_at, nvars, samples, seed);
}

} // namespace symineq
