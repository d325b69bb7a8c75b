#include <doctest.h>

#include "../oracles.hpp"

#include "horikawa/errors.hpp"
#include "horikawa/json_io.hpp"
#include "horikawa/pipeline.hpp"
#include "horikawa/verify.hpp"

#include <random>

using namespace horikawa;
using oracle::frac;

namespace {

UElement w12_example()
{
    return UElement::from_polynomial(Sigma::W12, Polynomial::parse("z^5 + x^5*y^5 + x^2*z^4 + x^10", xyz_vars()));
}

} // namespace

TEST_CASE("Z invariants")
{
    CHECK(z_invariants(Sigma::E12).k_squared == frac(19, 21));
    CHECK(z_invariants(Sigma::E13).k_squared == frac(4, 5));
    ZDatum w13 = z_invariants(Sigma::W13);
    CHECK(w13.k_squared == frac(1, 3));
    CHECK(w13.chi_top == 23);
    CHECK(w13.h1_o == 0);
    CHECK(w13.h2_o == 1);
    CHECK(w13.h11 == std::optional<int>(19));
    CHECK(!z_invariants(Sigma::E14).h11.has_value());
}

TEST_CASE("K^2 closed form equals the toric computation (property)")
{
    for (Sigma s : all_sigmas) CHECK(k_squared_closed_form(s) == k_squared_toric(s));
}

TEST_CASE("Y data")
{
    YDatum e12 = y_datum(Sigma::E12, reference_u(Sigma::E12));
    CHECK(e12.degree == 42);
    CHECK(e12.ambient_weights == std::array<int, 4>{1, 6, 14, 21});
    CHECK(e12.chi_top == 15);
    YDatum w12 = y_datum(Sigma::W12, w12_example());
    CHECK(w12.ambient_weights == std::array<int, 4>{1, 4, 5, 10});
    CHECK(w12.equation == Polynomial::parse("w^2 - alpha^5 - beta^4 - t^20", w12.equation.vars()));
    YDatum w13 = y_datum(Sigma::W13, reference_u(Sigma::W13));
    CHECK(w13.degree == 16);
    CHECK(w13.ambient_weights == std::array<int, 4>{1, 3, 4, 8});
}

TEST_CASE("gluing data")
{
    CHECK(gluing(Sigma::E12, reference_u(Sigma::E12)).points == std::vector<std::string>{"[0:1:-1]"});
    CHECK(gluing(Sigma::W12, w12_example()).points == std::vector<std::string>{"[0:-1:1]"});
    CHECK(gluing(Sigma::Z12, reference_u(Sigma::Z12)).points.size() == 3);
    CHECK(gluing(Sigma::E13, reference_u(Sigma::E13)).branch_on_g);
    CHECK(!gluing(Sigma::W12, w12_example()).branch_on_g);
}

TEST_CASE("branch curve cohomology")
{
    BranchCohomology e12 = branch_curve_cohomology(Sigma::E12);
    CHECK(e12.chi == -18);
    CHECK(e12.rk_h1 == 20);
    BranchCohomology z11 = branch_curve_cohomology(Sigma::Z11);
    CHECK(z11.branches == 2);
    CHECK(z11.delta == 6);
    for (const auto& r : oracle::kRows) {
        BranchCohomology b = branch_curve_cohomology(parse_sigma(r.name));
        CHECK(b.genus_smooth == 16);
        CHECK(b.chi == r.mu - 30);
        CHECK(2 * b.delta == r.mu + b.branches - 1);
    }
}

TEST_CASE("boundary dimensions")
{
    BoundaryDims e12 = boundary_dimension(Sigma::E12);
    CHECK(e12.y_side == 10);
    CHECK(e12.z_side == 17);
    CHECK(e12.total == 27);
    BoundaryDims z11 = boundary_dimension(Sigma::Z11);
    CHECK(z11.y_side == 9);
    CHECK(z11.z_side == 18);
    for (const auto& r : oracle::kRows) {
        BoundaryDims b = boundary_dimension(parse_sigma(r.name));
        CHECK(b.y_side == r.mu - 2);
        CHECK(b.z_side == 29 - r.mu);
        // the Y side is the degree d monomials less the automorphisms
        CHECK(b.y_side == oracle::count_degree(r.p, r.q, r.d) - 2 - (b.aut_dim - 1));
    }
}

TEST_CASE("Gamma ideals")
{
    GammaIdeal e12 = gamma_ideal(Sigma::E12);
    CHECK(e12.dimension == 2);
    CHECK(e12.killed == std::vector<std::string>{"c", "e", "f", "g"});
    CHECK(gamma_substitution_check(e12));
    GammaIdeal z11 = gamma_ideal(Sigma::Z11);
    CHECK(z11.dimension == 3);
    CHECK(z11.radical.size() == 3);
    // every generator vanishes once c = e = f = g = 0
    std::map<std::string, Rational> kill{{"c", 0}, {"e", 0}, {"f", 0}, {"g", 0}};
    for (Sigma s : all_sigmas)
        for (const auto& g : gamma_ideal(s).generators) CHECK(g.specialize(kill).is_zero());
    CHECK(gamma_random_check(z11, 40, 17));
}

TEST_CASE("Hodge bookkeeping")
{
    CHECK(hodge_summary({1, 1}, {3, 4}).monodromy_finite);
    CHECK(hodge_summary({1, 1}, {3, 4}).transcendental_rank == 7);
    CHECK(!hodge_summary({1, 0}, {3, 0}).monodromy_finite);
}

TEST_CASE("replace on the example")
{
    StableSurfaceDatum d = replace(Sigma::W12, w12_example());
    CHECK(d.total_chi == 37);
    CHECK(d.y.chi_top + d.z.chi_top - 2 == 37);
    Json j = to_json(d);
    CHECK(j["totalChi"] == 37);
    CHECK(j["boundaryDim"] == 27);
    UElement no_m1 = UElement::from_polynomial(Sigma::W12, Polynomial::parse("z^5 + x^10", xyz_vars()));
    CHECK_THROWS_AS(replace(Sigma::W12, no_m1), NotRegular);
    CHECK_THROWS_AS(replace(Sigma::E12, w12_example()), Error);
}

TEST_CASE("replace total chi is 37 for random regular u (property)")
{
    std::mt19937_64 rng(21);
    std::uniform_int_distribution<int> c(-4, 4);
    for (Sigma s : all_sigmas) {
        std::map<Mon, Rational> k{{{0, 0, 5}, 1}};
        for (const auto& m : v10_basis())
            if (weight(s, m) < 0) k[m] = c(rng);
        k[info(s).m1] = k[info(s).m2] = 1;
        StableSurfaceDatum d = replace(s, UElement(s, k));
        CHECK(d.total_chi == 37);
        CHECK(d.y.equation.is_weighted_homogeneous(
            {1, d.y.ambient_weights[1], d.y.ambient_weights[2], d.y.ambient_weights[3]}, d.y.degree));
    }
}

TEST_CASE("DVR comparison")
{
    UElement u = w12_example();
    Polynomial su = t_action(u, "s").with_vars(sxyz_vars());
    DvrComparison same = dvr_compare(su, Sigma::W12);
    CHECK(same.identical);
    CHECK(same.witness == u);
    // a negative weight monomial pushed past its order is discarded
    Polynomial more = su + Polynomial::parse("s^21*x^10 + s^3*z^5", sxyz_vars());
    DvrComparison d = dvr_compare(more, Sigma::W12);
    CHECK(d.identical);
    CHECK(d.from_family == replace(Sigma::W12, u));
    // a zero weight coefficient perturbed at order s breaks the s*u shape
    Polynomial bad = su + Polynomial::parse("s*x^5*y^5", sxyz_vars());
    CHECK_THROWS_AS(dvr_compare(bad, Sigma::W12), NotSigmaGeneric);
}

TEST_CASE("DVR robustness on random perturbations (property)")
{
    std::mt19937_64 rng(77);
    for (Sigma s : all_sigmas) {
        UElement u = generic_u(s);
        for (int i = 0; i < 5; ++i) {
            DvrComparison d = dvr_compare(dvr_perturbation(u, rng), s);
            CHECK(d.identical);
            CHECK(d.witness == u);
        }
    }
}
