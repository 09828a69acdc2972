#include <doctest.h>

#include <algorithm>

#include "symineq/positivity.hpp"
#include "symineq/sturm.hpp"

using namespace symineq;

namespace {

UniPoly up(std::initializer_list<long> coeffs) {
    std::vector<Rational> cs;
    for (long c : coeffs)
        cs.emplace_back(c);
    return UniPoly("t", std::move(cs));
}

bool proportional(const UniPoly& a, const UniPoly& b) {
    if (a.degree() != b.degree())
        return false;
    if (a.is_zero())
        return true;
    Rational ratio = a.leading() / b.leading();
    return ratio > 0 && a == ratio * b;
}

struct Rng {
    unsigned long long state;
    explicit Rng(unsigned long long seed) : state(seed) {}
    unsigned long long operator()() {
        unsigned long long z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    long uniform(long lo, long hi) {
        return lo + static_cast<long>((*this)() % static_cast<unsigned long long>(
                                          hi - lo + 1));
    }
};

} // namespace

TEST_CASE("sturm_chain: textbook examples up to positive scaling") {
    auto chain = sturm_chain(up({-2, 0, 1})).polys; // t^2 - 2
    REQUIRE(chain.size() == 3);
    CHECK(proportional(chain[0], up({-2, 0, 1})));
    CHECK(proportional(chain[1], up({0, 2})));
    CHECK(proportional(chain[2], up({2})));

    auto lin = sturm_chain(up({-1, 1})).polys; // t - 1
    REQUIRE(lin.size() == 2);
    CHECK(proportional(lin[1], up({1})));

    auto sq = sturm_chain(up({1, -2, 1})).polys; // (t-1)^2 ends at the gcd
    REQUIRE(sq.size() == 2);
    CHECK(proportional(sq.back(), up({-1, 1})));

    CHECK_THROWS_AS(sturm_chain(UniPoly()), domain_error);
}

TEST_CASE("sturm_chain: negated-remainder recurrence up to positive scaling") {
    Rng rng(606);
    for (int trial = 0; trial < 20; ++trial) {
        int deg = static_cast<int>(rng.uniform(2, 7));
        std::vector<Rational> cs;
        for (int i = 0; i <= deg; ++i)
            cs.push_back(Rational(rng.uniform(-9, 9)));
        UniPoly p("t", cs);
        if (p.degree() < 2)
            continue;
        auto chain = sturm_chain(p).polys;
        for (std::size_t i = 0; i + 2 < chain.size(); ++i) {
            UniPoly q, r;
            UniPoly::divmod(chain[i], chain[i + 1], q, r);
            CHECK(proportional(chain[i + 2], -r));
        }
    }
}

TEST_CASE("count_roots: examples") {
    CHECK(count_roots(up({0, -1, 0, 1}), Bound::at(Rational(0)), Bound::pos_inf()) ==
          1); // t^3 - t has roots -1, 0, 1
    CHECK(count_roots(up({1, 0, 1}), Bound::neg_inf(), Bound::pos_inf()) == 0);
    CHECK(count_roots(up({2, -3, 1}), Bound::at(Rational(0)), Bound::pos_inf()) == 2);
    // non-square-free input is reduced internally
    CHECK(count_roots(up({1, -2, 1}), Bound::neg_inf(), Bound::pos_inf()) == 1);
    CHECK_THROWS_AS(count_roots(up({1, 1}), Bound::at(Rational(2)),
                                Bound::at(Rational(1))),
                    domain_error);
}

TEST_CASE("count_roots agrees with known linear factorizations") {
    Rng rng(31337);
    for (int trial = 0; trial < 40; ++trial) {
        int deg = static_cast<int>(rng.uniform(1, 8));
        std::vector<Rational> roots;
        UniPoly p = UniPoly::constant("t", Rational(1));
        for (int i = 0; i < deg; ++i) {
            Rational r = make_rational(BigInt(rng.uniform(-20, 20)),
                                       BigInt(rng.uniform(1, 4)));
            roots.push_back(r);
            p = p * UniPoly("t", {-r, Rational(1)});
        }
        std::sort(roots.begin(), roots.end());
        roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
        Rational a = make_rational(BigInt(rng.uniform(-25, 0)), BigInt(1));
        Rational b = make_rational(BigInt(rng.uniform(1, 25)), BigInt(1));
        long expected = std::count_if(roots.begin(), roots.end(), [&](const Rational& r) {
            return a < r && r <= b;
        });
        CHECK(count_roots(p, Bound::at(a), Bound::at(b)) == expected);
        long expected_ray = std::count_if(roots.begin(), roots.end(),
                                          [&](const Rational& r) { return r > 0; });
        CHECK(count_roots(p, Bound::at(Rational(0)), Bound::pos_inf()) == expected_ray);
    }
}

TEST_CASE("nonneg_on_ray: examples") {
    Verdict sq = nonneg_on_ray(up({1, -2, 1})); // (t-1)^2
    CHECK(sq.status == VerdictStatus::ProvedNonnegative);
    CHECK(sq.certificate == "sturm");

    Verdict bad = nonneg_on_ray(up({2, -3, 1})); // roots 1 and 2
    CHECK(bad.status == VerdictStatus::NegativeWitness);
    REQUIRE(bad.witness.has_value());
    REQUIRE(bad.witness->point.size() == 1);
    CHECK(bad.witness->point[0] > 0);
    CHECK(bad.witness->value < 0);
    CHECK(up({2, -3, 1}).eval(bad.witness->point[0]) == bad.witness->value);

    Verdict pos = nonneg_on_ray(up({0, 1, 0, 1})); // t^3 + t
    CHECK(pos.status == VerdictStatus::ProvedNonnegative);
    CHECK(pos.certificate == "coefficient-sign");

    CHECK(nonneg_on_ray(UniPoly()).status == VerdictStatus::ProvedNonnegative);
}

TEST_CASE("nonneg_on_ray: boundary and leading-sign cases") {
    Verdict at0 = nonneg_on_ray(up({-1, 5}));
    CHECK(at0.status == VerdictStatus::NegativeWitness);
    CHECK(at0.witness->point[0] == 0);

    Verdict lead = nonneg_on_ray(up({5, 0, -1})); // 5 - t^2
    CHECK(lead.status == VerdictStatus::NegativeWitness);
    CHECK(lead.witness->value < 0);

    // t (t-1)^2 touches zero inside the ray but stays nonnegative
    Verdict touch = nonneg_on_ray(up({0, 1, -2, 1}));
    CHECK(touch.status == VerdictStatus::ProvedNonnegative);
    CHECK(touch.certificate == "sturm");
}

TEST_CASE("nonneg_on_ray: proved verdicts are sound on a rational grid") {
    Rng rng(2024);
    for (int trial = 0; trial < 20; ++trial) {
        int deg = static_cast<int>(rng.uniform(0, 4));
        std::vector<Rational> cs;
        for (int i = 0; i <= deg; ++i)
            cs.push_back(make_rational(BigInt(rng.uniform(-9, 9)),
                                       BigInt(rng.uniform(1, 3))));
        UniPoly p("t", cs);
        UniPoly psq = p * p; // squares are nonnegative
        Verdict v = nonneg_on_ray(psq);
        CHECK(v.status == VerdictStatus::ProvedNonnegative);
        for (int s = 0; s < 1000; ++s) {
            Rational t = make_rational(BigInt(rng.uniform(0, 1000000)), BigInt(1));
            CHECK(psq.eval(t) >= 0);
        }
    }
}

TEST_CASE("nonneg_on_ray: fuzz against a dense evaluation grid") {
    Rng rng(13579);
    for (int trial = 0; trial < 120; ++trial) {
        int deg = static_cast<int>(rng.uniform(0, 6));
        std::vector<Rational> cs;
        for (int i = 0; i <= deg; ++i)
            cs.push_back(make_rational(BigInt(rng.uniform(-8, 8)),
                                       BigInt(rng.uniform(1, 3))));
        UniPoly p("t", cs);
        Verdict v = nonneg_on_ray(p);
        bool grid_negative = false;
        for (int j = 0; j <= 512 && !grid_negative; ++j)
            grid_negative = p.eval(make_rational(BigInt(j), BigInt(16))) < 0;
        for (int e = 6; e <= 24 && !grid_negative; e += 3)
            grid_negative = p.eval(Rational(1L << e)) < 0;
        if (v.status == VerdictStatus::ProvedNonnegative) {
            CHECK_FALSE(grid_negative);
        } else {
            REQUIRE(v.status == VerdictStatus::NegativeWitness);
            REQUIRE(v.witness.has_value());
            CHECK(v.witness->point[0] >= 0);
            CHECK(v.witness->value < 0);
            CHECK(p.eval(v.witness->point[0]) == v.witness->value);
        }
        if (grid_negative)
            CHECK(v.status == VerdictStatus::NegativeWitness);
    }
}

TEST_CASE("mirror/ray duality: t -> 1/t bijects the open ray") {
    Rng rng(555);
    for (int trial = 0; trial < 40; ++trial) {
        int deg = static_cast<int>(rng.uniform(1, 6));
        std::vector<Rational> cs;
        for (int i = 0; i <= deg; ++i)
            cs.push_back(Rational(rng.uniform(-6, 6)));
        if (cs[0] == 0)
            cs[0] = 1; // nonzero constant term so mirror is defined
        UniPoly p("t", cs);
        if (p.degree() < 1)
            continue;
        bool a = nonneg_on_ray(p).status == VerdictStatus::ProvedNonnegative;
        bool b = nonneg_on_ray(p.mirror()).status == VerdictStatus::ProvedNonnegative;
        CHECK(a == b);
    }
}

TEST_CASE("coeff_nonneg: examples") {
    MultiPoly x = MultiPoly::variable("x"), y = MultiPoly::variable("y");
    CHECK(coeff_nonneg(x.pow(2) + Rational(2) * x * y + y.pow(2)));
    CHECK_FALSE(coeff_nonneg(x.pow(2) - Rational(2) * x * y + y.pow(2)));
    CHECK(coeff_nonneg(MultiPoly()));
}

TEST_CASE("ds_nonneg_on_simplex: examples") {
    MultiPoly x = MultiPoly::variable("x"), y = MultiPoly::variable("y");
    Verdict amgm = ds_nonneg_on_simplex(x.pow(2) - Rational(2) * x * y + y.pow(2), 1);
    CHECK(amgm.status == VerdictStatus::ProvedNonnegative);

    Verdict lin = ds_nonneg_on_simplex(x - Rational(2) * y, 4);
    CHECK(lin.status == VerdictStatus::NegativeWitness);
    REQUIRE(lin.witness.has_value());
    CHECK(lin.witness->value < 0);
    // witness coordinates are on the simplex
    Rational sum(0);
    for (const auto& c : lin.witness->point) {
        CHECK(c >= 0);
        sum += c;
    }
    CHECK(sum == 1);

    CHECK_THROWS_AS(ds_nonneg_on_simplex(x.pow(2) + y, 2), domain_error);

    // all-nonpositive branch with zero vertex pattern: -xy is caught at all-ones
    Verdict prod = ds_nonneg_on_simplex(Rational(-1) * x * y, 3);
    CHECK(prod.status == VerdictStatus::NegativeWitness);
    REQUIRE(prod.witness.has_value());
    CHECK(prod.witness->value < 0);
}

TEST_CASE("ds under a tiny budget reports Unknown, never a fake proof") {
    MultiPoly x = MultiPoly::variable("x"), y = MultiPoly::variable("y"),
              z = MultiPoly::variable("z");
    // positive semidefinite with boundary zeros; hard for low depth
    MultiPoly p = (x - y).pow(2) * (x + y).pow(2) + z.pow(2) * (x - z).pow(2);
    Verdict v = ds_nonneg_on_simplex(p, 0, 10);
    CHECK(v.status == VerdictStatus::Unknown);
}

TEST_CASE("ds never proves a polynomial with a sampled negative point") {
    Rng rng(808);
    MultiPoly x = MultiPoly::variable("x"), y = MultiPoly::variable("y"),
              z = MultiPoly::variable("z");
    for (int trial = 0; trial < 25; ++trial) {
        MultiPoly p;
        for (int k = 0; k < 4; ++k) {
            MultiPoly term(Rational(rng.uniform(-4, 4)));
            int ex = static_cast<int>(rng.uniform(0, 2));
            int ey = static_cast<int>(rng.uniform(0, 2 - ex));
            int ez = 2 - ex - ey;
            p = p + term * x.pow(ex) * y.pow(ey) * z.pow(ez);
        }
        if (p.is_zero())
            continue;
        auto hit = sample_search(p, 300, trial);
        Verdict v = ds_nonneg_on_simplex(p, 3, 5000);
        if (hit)
            CHECK(v.status != VerdictStatus::ProvedNonnegative);
        if (v.status == VerdictStatus::NegativeWitness) {
            REQUIRE(v.witness.has_value());
            CHECK(v.witness->value < 0);
        }
    }
}

TEST_CASE("sample_search: examples") {
    MultiPoly x = MultiPoly::variable("x"), y = MultiPoly::variable("y");
    CHECK_FALSE(sample_search((x - y).pow(2), 200, 17).has_value());
    auto hit = sample_search(x - Rational(2) * y, 100, 1);
    REQUIRE(hit.has_value());
    CHECK(hit->value < 0);
    Rational sum(0);
    for (const auto& c : hit->point)
        sum += c;
    CHECK(sum == 1);
    CHECK_FALSE(sample_search(MultiPoly(), 50, 0).has_value());
}

TEST_CASE("sample_search is deterministic for a fixed seed") {
    MultiPoly x = MultiPoly::variable("x"), y = MultiPoly::variable("y");
    auto a = sample_search(x - Rational(2) * y, 100, 42);
    auto b = sample_search(x - Rational(2) * y, 100, 42);
    REQUIRE(a.has_value());
    REQUIRE(b.has_value());
    CHECK(a->point == b->point);
    CHECK(a->value == b->value);
    CHECK(a->index == b->index);
}

TEST_CASE("simplex sampler: compositions sum to the denominator") {
    SimplexSampler s(4, 9);
    for (int i = 0; i < 50; ++i) {
        auto c = s.next();
        REQUIRE(c.size() == 4);
        long sum = 0;
        for (long v : c) {
            CHECK(v >= 0);
            sum += v;
        }
        CHECK(sum == s.denom());
    }
}
