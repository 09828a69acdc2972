#include <doctest.h>

#include "symineq/json_io.hpp"
#include "symineq/multipoly.hpp"
#include "symineq/unipoly.hpp"

using namespace symineq;

namespace {

MultiPoly x() { return MultiPoly::variable("x"); }
MultiPoly y() { return MultiPoly::variable("y"); }
MultiPoly t() { return MultiPoly::variable("t"); }
MultiPoly c(long v) { return MultiPoly(Rational(v)); }

// small deterministic generator for property tests
struct Rng {
    unsigned long long state;
    explicit Rng(unsigned long long seed) : state(seed) {}
    unsigned long long operator()() {
        unsigned long long z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    long uniform(long lo, long hi) { // inclusive
        return lo + static_cast<long>((*this)() % static_cast<unsigned long long>(
                                          hi - lo + 1));
    }
};

MultiPoly random_poly(Rng& rng, const std::vector<std::string>& vars, int max_deg,
                      int terms) {
    MultiPoly p{vars};
    for (int i = 0; i < terms; ++i) {
        std::vector<int> e(vars.size());
        for (auto& x : e)
            x = static_cast<int>(rng.uniform(0, max_deg));
        p.add_term(std::move(e), Rational(rng.uniform(-9, 9)));
    }
    return p;
}

} // namespace

TEST_CASE("rational helpers") {
    CHECK(make_rational(BigInt(4), BigInt(-6)) == make_rational(BigInt(-2), BigInt(3)));
    CHECK(rat_str(make_rational(BigInt(4), BigInt(2))) == "2");
    CHECK(rat_str(parse_rational("-3/9")) == "-1/3");
    CHECK(parse_rational("7") == Rational(7));
    CHECK_THROWS_AS(parse_rational("1/0"), domain_error);
    CHECK_THROWS_AS(parse_rational("abc"), domain_error);
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(4, 7) == 0);
}

TEST_CASE("ring ops: examples") {
    CHECK((x() + y()) * (x() - y()) == x().pow(2) - y().pow(2));
    CHECK((t() + c(1)).pow(2) == t().pow(2) + Rational(2) * t() + c(1));
    Rng rng(7);
    MultiPoly p = random_poly(rng, {"x", "y"}, 3, 5);
    CHECK(p + MultiPoly() == p);
    CHECK_THROWS_AS(x().pow(-2), domain_error);
}

TEST_CASE("ring axioms on randomized small instances") {
    Rng rng(42);
    std::vector<std::string> vars{"x", "y", "z"};
    for (int trial = 0; trial < 30; ++trial) {
        MultiPoly a = random_poly(rng, vars, 3, 4);
        MultiPoly b = random_poly(rng, vars, 3, 4);
        MultiPoly cc = random_poly(rng, vars, 3, 4);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + cc == a + (b + cc));
        CHECK((a * b) * cc == a * (b * cc));
        CHECK(a * (b + cc) == a * b + a * cc);
    }
}

TEST_CASE("eval: examples") {
    MultiPoly p = x().pow(2) + x() * y() + y().pow(2);
    CHECK(p.eval({Rational(1), Rational(1)}) == 3);
    CHECK(p.eval({Rational(2), Rational(0)}) == 4);
    CHECK_THROWS_AS(p.eval({Rational(1)}), domain_error);
    // sum of coefficients at the all-ones point
    Rng rng(11);
    MultiPoly q = random_poly(rng, {"x", "y", "z"}, 4, 8);
    Rational sum(0);
    for (const auto& [e, cf] : q.terms())
        sum += cf;
    CHECK(q.eval({Rational(1), Rational(1), Rational(1)}) == sum);
}

TEST_CASE("substitute: examples") {
    MultiPoly p = x().pow(2) + x() * y() + y().pow(2);
    CHECK(p.substitute("y", Rational(1)) == x().pow(2) + x() + c(1));
    MultiPoly q = MultiPoly::variable("k") + MultiPoly::variable("l") + c(2);
    CHECK(q.substitute("l", Rational(0)) == MultiPoly::variable("k") + c(2));
    CHECK_THROWS_AS(p.substitute("z", Rational(1)), domain_error);
    // substitution by a polynomial
    CHECK(p.substitute("y", x() + c(1)) ==
          Rational(3) * x().pow(2) + Rational(3) * x() + c(1));
}

TEST_CASE("substitute then eval equals extended eval") {
    Rng rng(99);
    std::vector<std::string> vars{"x", "y", "z"};
    for (int trial = 0; trial < 20; ++trial) {
        MultiPoly p = random_poly(rng, vars, 3, 6);
        Rational cv = make_rational(BigInt(rng.uniform(-5, 5)),
                                    BigInt(rng.uniform(1, 4)));
        MultiPoly sub = p.substitute("y", cv);
        Rational xs = make_rational(BigInt(rng.uniform(-5, 5)), BigInt(rng.uniform(1, 4)));
        Rational zs = make_rational(BigInt(rng.uniform(-5, 5)), BigInt(rng.uniform(1, 4)));
        CHECK(sub.eval({xs, zs}) == p.eval({xs, cv, zs}));
    }
}

TEST_CASE("exact_div: examples") {
    CHECK((x().pow(2) - y().pow(2)).exact_div(x() - y()) == x() + y());
    CHECK_THROWS_AS((x().pow(2) + c(1)).exact_div(x() - c(1)), divisibility_error);
    MultiPoly tm = t() - c(1);
    CHECK((tm.pow(2) * (t() + c(2))).exact_div(tm.pow(2)) == t() + c(2));
    CHECK_THROWS_AS(x().exact_div(MultiPoly()), domain_error);
}

TEST_CASE("exact_div: round-trip on random products") {
    Rng rng(1234);
    std::vector<std::string> vars{"x", "y", "z"};
    for (int trial = 0; trial < 25; ++trial) {
        MultiPoly p = random_poly(rng, vars, 4, 5);
        MultiPoly q = random_poly(rng, vars, 4, 5);
        if (q.is_zero())
            continue;
        CHECK((p * q).exact_div(q) == p);
    }
}

TEST_CASE("divisibility error carries the remainder") {
    try {
        (x().pow(2) + c(1)).exact_div(x() - c(1));
        FAIL("expected divisibility_error");
    } catch (const divisibility_error& e) {
        CHECK_FALSE(e.remainder.is_zero());
    }
}

TEST_CASE("as_univariate: examples and reconstruction") {
    MultiPoly p = MultiPoly::variable("k") * t().pow(2) +
                  MultiPoly::variable("l") * t() + c(3);
    auto by_t = p.as_univariate("t");
    REQUIRE(by_t.size() == 3);
    CHECK(by_t[0] == c(3));
    CHECK(by_t[1] == MultiPoly::variable("l"));
    CHECK(by_t[2] == MultiPoly::variable("k"));

    MultiPoly q = x().pow(2) + x() * y() + y().pow(2);
    auto by_x = q.as_univariate("x");
    REQUIRE(by_x.size() == 3);
    CHECK(by_x[0] == y().pow(2));
    CHECK(by_x[1] == y());
    CHECK(by_x[2] == MultiPoly(Rational(1)));

    auto by = c(5).embedded({"t"}).as_univariate("t");
    REQUIRE(by.size() == 1);
    CHECK(by[0] == c(5));

    // reconstruction is the identity
    Rng rng(5);
    for (int trial = 0; trial < 15; ++trial) {
        MultiPoly r = random_poly(rng, {"x", "y", "t"}, 4, 7);
        auto parts = r.as_univariate("t");
        MultiPoly back;
        for (std::size_t a = parts.size(); a-- > 0;)
            back = back * t() + parts[a];
        CHECK(back == r);
    }
}

TEST_CASE("unipoly: construction, degree, trim") {
    UniPoly z;
    CHECK(z.is_zero());
    CHECK(z.degree() == -1);
    UniPoly p("t", {Rational(1), Rational(0), Rational(0)});
    CHECK(p.degree() == 0);
    UniPoly q("t", {Rational(0), Rational(2)});
    CHECK(q.degree() == 1);
    CHECK(q.leading() == 2);
}

TEST_CASE("unipoly derivative and mirror: examples") {
    UniPoly p("t", {Rational(0), Rational(-1), Rational(0), Rational(1)}); // t^3 - t
    CHECK(p.derivative() == UniPoly("t", {Rational(-1), Rational(0), Rational(3)}));
    UniPoly q("t", {Rational(5), Rational(3), Rational(2)});
    CHECK(q.mirror() == UniPoly("t", {Rational(2), Rational(3), Rational(5)}));
    CHECK(UniPoly::constant("t", Rational(4)).derivative().is_zero());
    // zero constant term: strip first
    UniPoly r("t", {Rational(0), Rational(0), Rational(7), Rational(1)});
    CHECK_THROWS_AS(r.mirror(), domain_error);
    auto [m, k] = r.mirror_stripped();
    CHECK(k == 2);
    CHECK(m == UniPoly("t", {Rational(1), Rational(7)}));
}

TEST_CASE("unipoly divmod and gcd") {
    UniPoly a("t", {Rational(-2), Rational(0), Rational(1)}); // t^2-2
    UniPoly b("t", {Rational(-1), Rational(1)});              // t-1
    UniPoly q, r;
    UniPoly::divmod(a, b, q, r);
    CHECK(q * b + r == a);
    CHECK(r.degree() < b.degree());

    UniPoly p1 = b * b * UniPoly("t", {Rational(3), Rational(1)});
    UniPoly p2 = b * UniPoly("t", {Rational(5), Rational(1)});
    CHECK(gcd(p1, p2) == b);
}

TEST_CASE("squarefree decomposition") {
    UniPoly tm1("t", {Rational(-1), Rational(1)});
    UniPoly tp2("t", {Rational(2), Rational(1)});
    UniPoly p = tm1.pow(2) * tp2.pow(3);
    auto factors = squarefree_decomposition(p);
    REQUIRE(factors.size() == 3);
    CHECK(factors[0].degree() == 0); // multiplicity 1 part trivial
    CHECK(factors[1] == tm1);
    CHECK(factors[2] == tp2);
    CHECK(odd_multiplicity_part(p) == tp2);
    CHECK(squarefree_part(p) == tm1 * tp2);
}

TEST_CASE("polynomial JSON round-trip") {
    Rng rng(77);
    for (int trial = 0; trial < 10; ++trial) {
        MultiPoly p = random_poly(rng, {"x1", "x2", "x10"}, 4, 6);
        json j = poly_to_json(p);
        CHECK(poly_from_json(j) == p);
    }
    // rationals over the wire stay exact
    MultiPoly p{std::vector<std::string>{"t"}};
    p.add_term({1}, make_rational(BigInt(1), BigInt(3)));
    json j = poly_to_json(p);
    CHECK(j["terms"][0]["c"] == "1/3");
    CHECK(poly_from_json(j) == p);
}

TEST_CASE("polynomial JSON rejects duplicate variables") {
    json j;
    j["vars"] = {"x", "x"};
    j["terms"] = json::array({{{"e", {1, 0}}, {"c", "1"}}});
    CHECK_THROWS_AS(poly_from_json(j), domain_error);
}

TEST_CASE("partition JSON: lenient parse rejects unsorted") {
    json good = json::array({3, 1, 1});
    CHECK(partition_from_json(good) == Partition({3, 1, 1}));
    json bad = json::array({1, 3});
    CHECK_THROWS_AS(partition_from_json(bad), domain_error);
}

TEST_CASE("variable order is natural: x2 before x10") {
    MultiPoly p = MultiPoly::variable("x10") + MultiPoly::variable("x2");
    REQUIRE(p.vars().size() == 2);
    CHECK(p.vars()[0] == "x2");
    CHECK(p.vars()[1] == "x10");
}
