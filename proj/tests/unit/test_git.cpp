#include <doctest.h>

#include "horikawa/errors.hpp"
#include "horikawa/git.hpp"
#include "horikawa/verify.hpp"
#include "horikawa/weights.hpp"

#include <random>

using namespace horikawa;

namespace {

Polynomial xy(const std::string& s) { return Polynomial::parse(s, xy_vars()); }
Polynomial xyz(const std::string& s) { return Polynomial::parse(s, xyz_vars()); }

// Independent check: some rational l = x - r y or l = y with l^k | q_{2k}.
// Roots of q_4 are the only candidates, so scanning them is enough when q_4 != 0.
bool oracle_unstable(const NormalForm& nf, const std::vector<Rational>& candidates)
{
    auto divisible = [&](const Polynomial& l) {
        for (int k = 2; k <= 5; ++k) {
            const Polynomial& q = nf.q(k);
            if (q.is_zero()) continue;
            try {
                exact_divide(q, l.pow(k));
            } catch (const std::exception&) {
                return false;
            }
        }
        return true;
    };
    if (divisible(xy("y"))) return true;
    for (const auto& r : candidates)
        if (divisible(xy("x") - xy("y") * r)) return true;
    return false;
}

} // namespace

TEST_CASE("normalisation")
{
    NormalForm nf = normalize_f10(xyz("z^5 + x^2*z^4 + y^4*z^3 + x^10"));
    CHECK(nf.f10().coefficients_in(2)[4].is_zero());
    CHECK(nf.f10().coefficients_in(2)[5] == xyz("1"));
    // the shift is z -> z - x^2/5
    CHECK(nf.f10().substitute({{"z", xyz("z + x^2/5")}}) == xyz("z^5 + x^2*z^4 + y^4*z^3 + x^10"));
    NormalForm already = normalize_f10(xyz("z^5 + x^4*z^3 + y^10"));
    CHECK(already.f10() == xyz("z^5 + x^4*z^3 + y^10"));
    NormalForm scaled = normalize_f10(xyz("2*z^5 + 2*y^10"));
    CHECK(scaled.q10 == xy("y^10"));
    CHECK_THROWS_AS(normalize_f10(xyz("x^10")), NotNormalizable);
    CHECK_THROWS_AS(normalize_f10(xyz("z^4")), NotHomogeneous);
    CHECK_THROWS_AS(make_normal_form(xy("x^3"), xy("0"), xy("0"), xy("0")), NotHomogeneous);
}

TEST_CASE("destabilized shape and Fermat")
{
    NormalForm d = make_normal_form(xy("x^2*(x^2 + y^2)"), xy("x^3*y^3"), xy("x^4*(x^4 + y^4)"), xy("x^5*y^5"));
    GitResult r = is_git_stable(d);
    CHECK(!r.stable);
    CHECK(r.witness == std::optional<std::string>("x"));
    CHECK(is_git_stable(fermat_form()).stable);
    NormalForm z = make_normal_form(xy("0"), xy("0"), xy("0"), xy("x^5*y^5"));
    GitResult rz = is_git_stable(z);
    CHECK(!rz.stable);
    REQUIRE(rz.witness.has_value());
    CHECK((*rz.witness == "x" || *rz.witness == "y"));
}

TEST_CASE("all-zero forms are destabilized by x")
{
    NormalForm z = make_normal_form(xy("0"), xy("0"), xy("0"), xy("0"));
    GitResult r = is_git_stable(z);
    CHECK(!r.stable);
    CHECK(r.witness == std::optional<std::string>("x"));
}

TEST_CASE("verdict agrees with a root-scanning oracle (property)")
{
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<int> c(-2, 2), pick(0, 3);
    for (int i = 0; i < 60; ++i) {
        Rational r = c(rng);
        Polynomial l = xy("x") - xy("y") * r;
        std::vector<Polynomial> q;
        for (int k = 2; k <= 5; ++k) {
            Polynomial f(xy_vars());
            int e = pick(rng) == 0 ? k - 1 : k;  // sometimes one short
            for (int j = 0; j <= k; ++j) f.add_term({j, k - j}, c(rng));
            if (f.is_zero()) f = xy("y").pow(k);
            q.push_back(l.pow(e) * f * xy("x + 5*y").pow(k - e));
        }
        NormalForm nf = make_normal_form(q[0], q[1], q[2], q[3]);
        CHECK(is_git_stable(nf).stable == !oracle_unstable(nf, {-2, -1, 0, 1, 2}));
    }
}

TEST_CASE("SL2 conjugation keeps the verdict (property)")
{
    std::mt19937_64 rng(4);
    NormalForm shape = destabilized_shape(rng);
    for (int i = 0; i < 20; ++i) {
        Sl2 g = random_sl2(rng);
        CHECK(g[0] * g[3] - g[1] * g[2] == 1);
        CHECK(is_git_stable(apply_sl2(fermat_form(), g)).stable);
        CHECK(!is_git_stable(apply_sl2(shape, g)).stable);
    }
}

TEST_CASE("stability from singularities")
{
    CHECK(stability_from_singularities({exceptional(Sigma::E12)}).verdict == SingularityVerdict::Stable);
    CHECK(stability_from_singularities({parse_local_type("A1"), parse_local_type("A2")}).verdict ==
          SingularityVerdict::Stable);
    CHECK(stability_from_singularities({parse_local_type("N16")}).verdict == SingularityVerdict::Inconclusive);
}
