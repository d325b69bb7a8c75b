#include <doctest.h>

#include "../oracles.hpp"

#include "horikawa/errors.hpp"
#include "horikawa/sextic.hpp"
#include "horikawa/verify.hpp"

using namespace horikawa;

namespace {

Polynomial plane(const std::string& s) { return Polynomial::parse(s, plane_vars()); }

const std::vector<Sigma> kZW{Sigma::Z11, Sigma::Z12, Sigma::Z13, Sigma::W12, Sigma::W13};

// multiplicities of the x1 = 0 slice, by repeated division by small linear forms
std::vector<int> slice_partition(const Polynomial& F)
{
    const std::vector<std::string> v{"x0", "x2"};
    Polynomial bin(v);
    for (const auto& [e, c] : F.specialize({{"x1", 0}}).terms()) bin.add_term({e[0], e[2]}, c);
    std::vector<Polynomial> cands{Polynomial::parse("x0", v), Polynomial::parse("x2", v)};
    for (int k = -3; k <= 3; ++k)
        if (k) cands.push_back(Polynomial::parse("x0 + " + std::to_string(k) + "*x2", v));
    std::vector<int> out;
    int left = 6;
    for (const auto& l : cands) {
        int m = 0;
        while (true) {
            try {
                bin = exact_divide(bin, l);
                ++m;
            } catch (const std::exception&) {
                break;
            }
        }
        if (m) out.push_back(m);
        left -= m;
    }
    for (; left > 0; --left) out.push_back(1);  // whatever is left is assumed squarefree
    std::sort(out.rbegin(), out.rend());
    return out;
}

} // namespace

TEST_CASE("mu transform")
{
    CHECK(mu_transform(Sigma::Z11, {5, 5, 0}) == plane("x0^5*x1"));
    CHECK(mu_transform(Sigma::Z11, {3, 1, 3}) == plane("x0^3*x2^3"));
    CHECK_THROWS_AS(mu_transform(Sigma::Z11, {4, 0, 3}), NotTransformable);
    CHECK_THROWS_AS(mu_transform(Sigma::E12, {3, 7, 0}), Error);
    for (Sigma s : kZW)
        for (const auto& m : v10_basis()) {
            if (weight(s, m) < 0 || (m.b - m.a) % 2 != 0) continue;
            Polynomial t = mu_transform(s, m);
            CHECK(inverse_mu_transform(t.leading().first) == m);
        }
}

TEST_CASE("sample sextics")
{
    CHECK(sample_sextic(Sigma::Z11).form == plane("x1*(x0^5 + x1^5 + x2^5) + x2^3*x0^3"));
    CHECK(sample_sextic(Sigma::W13).form == plane("x1*(x1^5 + x0^4*x2 + x2^5) + x0^2*x2^4"));
    for (Sigma s : kZW) {
        SexticModel C = sample_sextic(s);
        CHECK(C.form.is_weighted_homogeneous({1, 1, 1}, 6));
        CHECK(sextic_shape_ok(C));
        // the preimage maps back onto the model
        CHECK(sextic_model(s, sextic_preimage(C)).form == C.form);
    }
}

TEST_CASE("weight zero images carry equal coefficients (property)")
{
    for (Sigma s : kZW) {
        SexticModel C = sextic_model(s, generic_u(s));
        const auto& I = info(s);
        Rational c1 = C.form.coeff(mu_transform(s, I.m1).leading().first);
        Rational c2 = C.form.coeff(mu_transform(s, I.m2).leading().first);
        CHECK(c1 != 0);
        CHECK(c1 == c2);
    }
}

TEST_CASE("line incidence")
{
    LineIncidence w12 = line_incidence(sample_sextic(Sigma::W12));
    CHECK(w12.partition == std::vector<int>{4, 2});
    LineIncidence z12 = line_incidence(sample_sextic(Sigma::Z12));
    CHECK(z12.partition == std::vector<int>{3, 2, 1});
    LineIncidence generic = line_incidence({Sigma::Z11, plane("x0^6 - 3*x0^4*x2^2 + x0*x2^5 + x2^6 + x1^6")});
    CHECK(generic.partition == std::vector<int>{1, 1, 1, 1, 1, 1});
}

TEST_CASE("line incidence agrees with the slice oracle (property)")
{
    // the oracle, not the listed (3,2,1), is the reference for Z11 and Z13
    for (Sigma s : kZW) {
        SexticModel C = sample_sextic(s);
        CHECK(line_incidence(C).partition == slice_partition(C.form));
    }
    CHECK(slice_partition(sample_sextic(Sigma::Z11).form) == std::vector<int>{3, 3});
}

TEST_CASE("singular scans")
{
    CHECK(singular_scan(sample_sextic(Sigma::Z11).form).points.empty());
    CHECK(singular_scan(sample_sextic(Sigma::W12).form).points.empty());
    auto w13 = singular_scan(sample_sextic(Sigma::W13).form).points;
    REQUIRE(w13.size() == 1);
    CHECK(w13[0].point == "[1:0:0]");
    CHECK(w13[0].type.name() == "A1");
    auto z13 = singular_scan(sample_sextic(Sigma::Z13).form).points;
    REQUIRE(z13.size() == 1);
    CHECK(z13[0].type.name() == "A2");
    CHECK(oracle::a_type_at_origin(sample_sextic(Sigma::Z13).form.specialize({{"x0", 1}}), 1, 2) == 2);
    CHECK_THROWS_AS(singular_scan(plane("x0^2*x1^4")), NonIsolated);
}

TEST_CASE("singular scan finds planted nodes (property)")
{
    // a union of lines through general position points: the nodes are the pairwise meets
    Polynomial lines = plane("x0*x1*x2*(x0 + x1 + x2)");
    auto pts = singular_scan(lines).points;
    CHECK(pts.size() == 6);
    for (const auto& p : pts) CHECK(p.type.name() == "A1");
    // a conic tangent to a line: one A3
    auto tac = singular_scan(plane("(x1*x2 - x0^2)*x1")).points;
    REQUIRE(tac.size() == 1);
    CHECK(tac[0].type.name() == "A3");
}

TEST_CASE("moduli dimensions")
{
    CHECK(sextic_moduli_dimension(Sigma::Z11) == 18);
    CHECK(sextic_moduli_dimension(Sigma::Z12) == 17);
    CHECK(sextic_moduli_dimension(Sigma::Z13) == 16);
    CHECK(sextic_moduli_dimension(Sigma::W12) == 17);
    CHECK(sextic_moduli_dimension(Sigma::W13) == 16);
    CHECK(!has_sextic_model(Sigma::E14));
}
