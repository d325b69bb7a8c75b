#include "horikawa/git.hpp"
#include "horikawa/binary_form.hpp"
#include "horikawa/errors.hpp"
#include "horikawa/weights.hpp"

namespace horikawa {

const std::vector<std::string>& xy_vars()
{
    static const std::vector<std::string> v{"x", "y"};
    return v;
}

const Polynomial& NormalForm::q(int k) const
{
    switch (k) {
    case 2: return q4;
    case 3: return q6;
    case 4: return q8;
    case 5: return q10;
    }
    throw Error("q_{2k} needs 2 <= k <= 5");
}

Polynomial NormalForm::f10() const
{
    Polynomial z = Polynomial::var(xyz_vars(), "z");
    Polynomial f = z.pow(5);
    for (int k = 2; k <= 5; ++k) f += q(k).with_vars(xyz_vars()) * z.pow(5 - k);
    return f;
}

NormalForm make_normal_form(const Polynomial& q4, const Polynomial& q6, const Polynomial& q8, const Polynomial& q10)
{
    NormalForm nf{q4.with_vars(xy_vars()), q6.with_vars(xy_vars()), q8.with_vars(xy_vars()), q10.with_vars(xy_vars())};
    for (int k = 2; k <= 5; ++k) {
        const Polynomial& f = nf.q(k);
        if (!f.is_zero() && !f.is_weighted_homogeneous({1, 1}, 2 * k))
            throw NotHomogeneous("q" + std::to_string(2 * k) + " = " + f.str() + " is not a form of degree " +
                                 std::to_string(2 * k));
    }
    return nf;
}

NormalForm normalize_f10(const Polynomial& F)
{
    Polynomial f = F.with_vars(xyz_vars());
    if (!f.is_weighted_homogeneous({1, 1, 2}, 10))
        throw NotHomogeneous("'" + F.str() + "' is not of degree 10 with deg z = 2");
    Rational lead = f.coeff({0, 0, 5});
    if (lead == 0)
        throw NotNormalizable("coefficient of z^5 vanishes");
    f *= Rational(1) / lead;
    auto c = f.coefficients_in(2);
    if (c.size() > 4 && !c[4].is_zero()) {
        // Tschirnhaus shift kills the z^4 term
        Polynomial z = Polynomial::var(xyz_vars(), "z");
        f = f.substitute({{"z", z - c[4] * Rational(1, 5)}});
        c = f.coefficients_in(2);
    }
    c.resize(6, Polynomial(xyz_vars()));
    return make_normal_form(c[3], c[2], c[1], c[0]);
}

GitResult is_git_stable(const NormalForm& nf)
{
    GitResult r;
    Polynomial G(xy_vars());
    for (int k = 2; k <= 5; ++k) {
        // l | G_k iff l^k | q_{2k}
        Polynomial Gk(xy_vars());
        for (int j = 0; j < k; ++j)
            for (const auto& d : partials_of_order(nf.q(k), j)) Gk = binary_gcd(Gk, d);
        r.chain_degrees.push_back(form_degree(Gk));
        G = binary_gcd(G, Gk);
    }
    if (G.is_zero()) {
        // every q_{2k} vanishes
        r.stable = false;
        r.witness = "x";
        return r;
    }
    if (G.degree() == 0) {
        r.stable = true;
        return r;
    }
    r.stable = false;
    auto lin = rational_linear_factors(G);
    if (!lin.empty())
        r.witness = lin.front().form.str();
    else
        r.certificate = normalize_form(G).str();
    return r;
}

SingularityStability stability_from_singularities(const std::vector<LocalType>& types)
{
    for (const auto& t : types) {
        if (t.kind == LocalKind::Unknown)
            return {SingularityVerdict::Inconclusive, "unclassified singularity"};
        int mu = *milnor_of(t);
        int m = modality(t);
        if (mu > 14 || m > 1)
            return {SingularityVerdict::Inconclusive,
                    t.name() + " has mu = " + std::to_string(mu) + ", modality " + std::to_string(m)};
        if (!is_log_canonical(t) && t.kind != LocalKind::Exceptional)
            return {SingularityVerdict::Inconclusive, t.name() + " is neither log canonical nor exceptional unimodal"};
    }
    return {SingularityVerdict::Stable, "isolated log canonical or exceptional unimodal singularities only"};
}

} // namespace horikawa
