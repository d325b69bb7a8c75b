#include <doctest.h>

#include "../oracles.hpp"

#include "horikawa/errors.hpp"
#include "horikawa/weights.hpp"

#include <random>
#include <set>

using namespace horikawa;

namespace {

UElement w12_example()
{
    return UElement::from_polynomial(Sigma::W12, Polynomial::parse("z^5 + x^5*y^5 + x^2*z^4 + x^10", xyz_vars()));
}

UElement random_u(Sigma s, std::mt19937_64& rng)
{
    std::uniform_int_distribution<int> c(-5, 5);
    std::map<Mon, Rational> k;
    for (const auto& m : v10_basis()) k[m] = c(rng);
    k[info(s).m2] = k[info(s).m1] = c(rng) == 0 ? 1 : 2;
    return UElement(s, k);
}

} // namespace

TEST_CASE("weights from the example")
{
    CHECK(weight(Sigma::W12, {0, 0, 5}) == 5);
    CHECK(weight(Sigma::W12, {10, 0, 0}) == -20);
    CHECK(weight(Sigma::E12, {3, 7, 0}) == 0);
    CHECK(info(Sigma::E13).m1 == Mon{3, 5, 1});
    CHECK(info(Sigma::E13).m2 == Mon{4, 0, 3});
}

TEST_CASE("(4,0,3) is weight zero on E, negative on Z and W")
{
    for (Sigma s : all_sigmas)
        CHECK(sign(s, {4, 0, 3}) == (info(s).family == 'E' ? 0 : -1));
}

TEST_CASE("sign partition agrees with the oracle (property)")
{
    for (const auto& r : oracle::kRows) {
        Sigma s = parse_sigma(r.name);
        auto pos = monomials_with_sign(s, 1), zero = monomials_with_sign(s, 0), neg = monomials_with_sign(s, -1);
        CHECK(pos.size() + zero.size() + neg.size() == 36);
        CHECK(zero == std::vector<Mon>{std::min(info(s).m1, info(s).m2), std::max(info(s).m1, info(s).m2)});
        for (const auto& m : pos) CHECK(oracle::sign(r, {m.a, m.b, m.c}) == 1);
        for (const auto& m : neg) CHECK(oracle::sign(r, {m.a, m.b, m.c}) == -1);
        CHECK(info(s).mu * r.p * r.q == (r.d - r.p) * (r.d - r.q));
    }
}

TEST_CASE("degree d monomial counts")
{
    for (const auto& r : oracle::kRows)
        CHECK(degree_d_monomial_count(parse_sigma(r.name)) == oracle::count_degree(r.p, r.q, r.d));
    CHECK(oracle::count_degree(3, 7, 21) == 17);
    CHECK(oracle::count_degree(2, 3, 11) == 16);
}

TEST_CASE("U_Sigma membership")
{
    CHECK_THROWS_AS(UElement::from_polynomial(Sigma::W12, Polynomial::parse("x^5*y^5 + 2*x^2*z^4", xyz_vars())), NotInU);
    CHECK_THROWS_AS(UElement::from_polynomial(Sigma::W12, Polynomial::parse("x^5*y^4", xyz_vars())), NotHomogeneous);
    CHECK(w12_example().is_regular());
    CHECK(!UElement(Sigma::W12, {{{0, 0, 5}, 1}}).is_regular());
}

TEST_CASE("projections")
{
    UElement u = w12_example();
    CHECK(pi_plus(u).polynomial() == Polynomial::parse("z^5", xyz_vars()));
    CHECK(pi_zero(u).polynomial() == Polynomial::parse("x^5*y^5 + x^2*z^4", xyz_vars()));
    CHECK(pi_minus(u).polynomial() == Polynomial::parse("x^10", xyz_vars()));
    UElement plus_only(Sigma::W12, {{{0, 0, 5}, 3}, {{0, 10, 0}, 1}});
    CHECK(pi_plus(plus_only) == plus_only);
    CHECK(pi_zero(plus_only).coefficients().empty());
    CHECK(pi_minus(plus_only).coefficients().empty());
}

TEST_CASE("projections are complementary and split/merge round trips (property)")
{
    std::mt19937_64 rng(3);
    for (Sigma s : all_sigmas)
        for (int i = 0; i < 10; ++i) {
            UElement u = random_u(s, rng);
            CHECK(add(add(pi_plus(u), pi_zero(u)), pi_minus(u)) == u);
            auto [head, tl] = split(u);
            CHECK(merge(head, tl) == u);
        }
    auto [h, t] = split(w12_example());
    UElement other(Sigma::W12, {{{5, 5, 0}, 2}, {{2, 0, 4}, 2}});
    CHECK_THROWS_AS(merge(h, other), NotInU);
}

TEST_CASE("C* action and the tail")
{
    UElement u = w12_example();
    CHECK(t_action(u) == Polynomial::parse("z^5 + x^5*y^5 + x^2*z^4 + t^20*x^10", txyz_vars()));
    CHECK(t_action(u).specialize({{"t", 1}}) == u.polynomial().with_vars(txyz_vars()));
    CHECK(t_action(u).specialize({{"t", 0}}) == add(pi_plus(u), pi_zero(u)).polynomial().with_vars(txyz_vars()));
    CHECK(tail(u) == Polynomial::parse("alpha^5 + beta^4 + t^20", tail_vars()));
}

TEST_CASE("tail is weighted homogeneous of degree d (property)")
{
    std::mt19937_64 rng(8);
    for (Sigma s : all_sigmas) {
        const auto& I = info(s);
        for (int i = 0; i < 5; ++i)
            CHECK(tail(random_u(s, rng)).is_weighted_homogeneous({1, I.p, I.q}, I.d));
    }
}

TEST_CASE("tail map is a bijection from C m1 + C m2 + U- onto degree d forms")
{
    for (Sigma s : all_sigmas) {
        const auto& I = info(s);
        std::set<Exponent> images;
        std::size_t sources = 0;
        auto image = [&](const Mon& m) {
            Polynomial t = theta(t_action(UElement(s, {{m, 1}})));
            REQUIRE(t.size() == 1);
            CHECK(t.is_weighted_homogeneous({1, I.p, I.q}, I.d));
            images.insert(t.leading().first);
            ++sources;
        };
        for (const auto& m : v10_basis())
            if (weight(s, m) < 0) image(m);
        // m1 and m2 separately: U ties them, the map on C m1 + C m2 does not
        for (const Mon& m : {I.m1, I.m2}) {
            Polynomial t = theta(Polynomial::term(txyz_vars(), {0, m.a, m.b, m.c}));
            images.insert(t.leading().first);
            ++sources;
        }
        CHECK(sources == images.size());
        CHECK(static_cast<int>(images.size()) == degree_d_monomial_count(s));
    }
}

TEST_CASE("genericity checklist")
{
    CHECK(sigma_generic_necessary(w12_example()).all());
    UElement no_z5 = UElement::from_polynomial(Sigma::W12, Polynomial::parse("x^5*y^5 + x^2*z^4 + x^10", xyz_vars()));
    CHECK(!sigma_generic_necessary(no_z5).z5_nonzero);
    UElement no_m1 = UElement::from_polynomial(Sigma::W12, Polynomial::parse("z^5 + x^10", xyz_vars()));
    CHECK(!sigma_generic_necessary(no_m1).regular);
}

TEST_CASE("DVR truncation")
{
    const auto& v = sxyz_vars();
    Polynomial f = Polynomial::parse("z^5 + 3*x^10", v);
    CHECK(dvr_truncate(f) == f);
    Polynomial g = Polynomial::parse("z^5 + (s^2 + s^3)*x^10", v);
    CHECK(dvr_truncate(g) == Polynomial::parse("z^5 + s^2*x^10", v));
    CHECK_THROWS_AS(dvr_witness(Sigma::W12, g), NotSigmaGeneric);
    Polynomial su = t_action(w12_example(), "s").with_vars(v);
    CHECK(dvr_truncate(su) == su);
    CHECK(dvr_witness(Sigma::W12, su) == w12_example());
}
