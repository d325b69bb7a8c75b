#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "horikawa/binary_form.hpp"
#include "horikawa/errors.hpp"
#include "horikawa/polynomial.hpp"
#include "horikawa/univariate.hpp"

#include <random>

using namespace horikawa;

namespace {

Polynomial P(const std::string& s, const std::vector<std::string>& v = {"x", "y", "z"}) { return Polynomial::parse(s, v); }

Polynomial random_poly(std::mt19937_64& rng, const std::vector<std::string>& v, int deg, int terms)
{
    std::uniform_int_distribution<int> e(0, deg), c(-9, 9);
    Polynomial f(v);
    for (int i = 0; i < terms; ++i) {
        Exponent x(v.size());
        for (auto& k : x) k = e(rng);
        f.add_term(x, c(rng));
    }
    return f;
}

} // namespace

TEST_CASE("rationals stay canonical")
{
    Rational a = make_rational(6, -4);
    CHECK(to_string(a) == "-3/2");
    CHECK(a.get_den() > 0);
    CHECK(parse_rational("10/4") == make_rational(5, 2));
    CHECK(to_string(make_rational(1, 3) + make_rational(2, 3)) == "1");
    CHECK(is_integer(make_rational(8, 4)));
}

TEST_CASE("basic arithmetic")
{
    CHECK(P("(x+y)*(x-y)") == P("x^2 - y^2"));
    CHECK(P("x*y + 3") * P("1") == P("x*y + 3"));
    CHECK(P("x + y").pow(3) == P("x^3 + 3*x^2*y + 3*x*y^2 + y^3"));
    CHECK(P("x - x").is_zero());
    CHECK(P("x^2/2 + 3/4*y").coeff({0, 1, 0}) == make_rational(3, 4));
    CHECK_THROWS_AS(P("x +* y"), ParseError);
    CHECK_THROWS_AS(P("x / y"), ParseError);
    CHECK_THROWS_AS(P("w", {"x", "y"}), VariableMismatch);
    CHECK_THROWS_AS(P("x", {"x"}) + P("y", {"y"}), VariableMismatch);
}

TEST_CASE("no zero coefficient is stored")
{
    Polynomial f = P("x^2 + y") + P("-x^2");
    for (const auto& [e, c] : f.terms()) {
        CHECK(c != 0);
        CHECK(e.size() == 3);
    }
    CHECK(f.size() == 1);
}

TEST_CASE("derivatives")
{
    CHECK(P("z^3 + y^7").derivative("z") == P("3*z^2"));
    CHECK(P("y*z^3 + y^5").derivative("y") == P("z^3 + 5*y^4"));
    CHECK(P("y^2").derivative("x").is_zero());
}

TEST_CASE("Tschirnhaus shift kills the z^4 term")
{
    const std::vector<std::string> v{"x", "y", "z"};
    Polynomial q2 = P("x^2 + 3*x*y - y^2");
    Polynomial F = P("z^5") + q2 * P("z^4") + P("x^4*z^3 + y^10");
    Polynomial shifted = F.substitute({{"z", P("z") - q2 * make_rational(1, 5)}});
    CHECK(shifted.coefficients_in(2)[4].is_zero());
    CHECK(shifted.coefficients_in(2)[5] == P("1"));
}

TEST_CASE("substitution is a ring map (property)")
{
    std::mt19937_64 rng(11);
    const std::vector<std::string> v{"x", "y", "z"};
    for (int i = 0; i < 20; ++i) {
        Polynomial f = random_poly(rng, v, 3, 4), g = random_poly(rng, v, 3, 4);
        std::map<std::string, Polynomial> m{{"x", random_poly(rng, v, 2, 3)}, {"z", random_poly(rng, v, 2, 2)}};
        CHECK((f * g).substitute(m) == f.substitute(m) * g.substitute(m));
        CHECK((f + g).substitute(m) == f.substitute(m) + g.substitute(m));
        std::vector<Rational> pt{make_rational(2), make_rational(-1, 3), make_rational(5, 2)};
        CHECK((f * g).evaluate(pt) == f.evaluate(pt) * g.evaluate(pt));
    }
}

TEST_CASE("resultants")
{
    const std::vector<std::string> v{"x", "a", "b"};
    CHECK(resultant(P("x - a", v), P("x - b", v), "x") == P("b - a", v));
    CHECK(resultant(P("x^2 - 2", {"x"}), P("x - 1", {"x"}), "x") == P("-1", {"x"}));
    Polynomial p = P("x^3 + a*x + b", v);
    CHECK(resultant(p, p, "x").is_zero());
    CHECK_THROWS_AS(resultant(P("a", v), p, "x"), DegreeZero);
}

TEST_CASE("resultant vanishes exactly at common roots (property)")
{
    // Res_x((x - r)g, (x - s)h) = 0 iff r = s or the cofactors share a root
    for (int r = -2; r <= 2; ++r)
        for (int s = -2; s <= 2; ++s) {
            Polynomial f = P("x - " + std::to_string(r), {"x"}) * P("x^2 + 1", {"x"});
            Polynomial g = P("x - " + std::to_string(s), {"x"}) * P("x + 7", {"x"});
            CHECK(resultant(f, g, "x").is_zero() == (r == s));
        }
}

TEST_CASE("binary form gcd")
{
    const std::vector<std::string> v{"x", "y"};
    CHECK(binary_gcd(P("x^2*y", v), P("x*y^2", v)) == P("x*y", v));
    CHECK(binary_gcd(P("x^2*(x^2 + y^2)", v), P("x^3*(x + y)", v)) == P("x^2", v));
    CHECK(binary_gcd(P("2*x*y + 4*y^2", v), Polynomial(v)) == normalize_form(P("x*y + 2*y^2", v)));
    CHECK(binary_gcd(Polynomial(v), Polynomial(v)).is_zero());
}

TEST_CASE("gcd divides both and is maximal (property)")
{
    const std::vector<std::string> v{"x", "y"};
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<int> c(-3, 3);
    for (int i = 0; i < 30; ++i) {
        auto lin = [&] { return P(std::to_string(c(rng)) + "*x + y", v); };
        Polynomial common = lin() * lin();
        Polynomial f = common * lin(), g = common * lin() * lin();
        Polynomial h = binary_gcd(f, g);
        CHECK_NOTHROW(exact_divide(f, h));
        CHECK_NOTHROW(exact_divide(g, h));
        CHECK(form_degree(h).value() >= 2);
        CHECK_NOTHROW(exact_divide(h, normalize_form(common)));
    }
}

TEST_CASE("univariate factoring")
{
    UPoly p({-2, 0, 1});  // x^2 - 2
    auto f = factor_over_q(p * p * UPoly({1, 1}));
    REQUIRE(f.size() == 2);
    int total = 0;
    for (const auto& [g, m] : f) total += g.degree() * m;
    CHECK(total == 5);
    CHECK(rational_roots(UPoly({6, -5, 1})) == std::vector<Rational>{2, 3});
    auto sq = squarefree_decomposition(UPoly({0, 0, 1, 1}));  // x^2 (x + 1)
    REQUIRE(sq.size() == 2);
    CHECK(gcd(UPoly({-1, 0, 1}), UPoly({1, 1})) == UPoly({1, 1}));
}

TEST_CASE("linear factors of binary forms")
{
    const std::vector<std::string> v{"x", "y"};
    auto fs = rational_linear_factors(P("x^3*y - x*y^3", v));
    int total = 0;
    for (const auto& f : fs) total += f.multiplicity;
    CHECK(fs.size() == 4);
    CHECK(total == 4);
    auto all = factor_form(P("x^2*(x^2 + y^2)", v));
    CHECK(all.size() == 2);
}
