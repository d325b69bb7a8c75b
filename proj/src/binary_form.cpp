#include "horikawa/binary_form.hpp"
#include "horikawa/errors.hpp"

namespace horikawa {

namespace {

void require_binary(const Polynomial& f)
{
    if (!is_binary_form(f))
        throw NotHomogeneous("expected a binary form, got '" + f.str() + "'");
}

// power of the second variable dividing f
int second_valuation(const Polynomial& f) { return f.min_degree_in(1); }

} // namespace

bool is_binary_form(const Polynomial& f)
{
    if (f.nvars() != 2)
        return false;
    return f.is_zero() || f.is_weighted_homogeneous({1, 1}, f.degree());
}

std::optional<int> form_degree(const Polynomial& f)
{
    require_binary(f);
    if (f.is_zero())
        return std::nullopt;
    return f.degree();
}

Polynomial normalize_form(const Polynomial& f)
{
    require_binary(f);
    if (f.is_zero())
        return f;
    return f * (1 / f.leading().second);
}

UPoly dehomogenize(const Polynomial& f)
{
    require_binary(f);
    std::vector<Rational> c(std::max(f.degree_in(0), 0) + 1, Rational(0));
    for (const auto& [e, k] : f.terms()) c[e[0]] += k;
    return UPoly(std::move(c));
}

Polynomial homogenize(const UPoly& u, int degree, const std::vector<std::string>& vars)
{
    if (u.degree() > degree)
        throw Error("homogenize: degree too small");
    Polynomial p(vars);
    for (int i = 0; i <= u.degree(); ++i) p.add_term({i, degree - i}, u[i]);
    return p;
}

Polynomial binary_gcd(const Polynomial& f, const Polynomial& g)
{
    require_binary(f);
    require_binary(g);
    if (f.vars() != g.vars())
        throw VariableMismatch("binary forms in different rings");
    if (f.is_zero())
        return normalize_form(g);
    if (g.is_zero())
        return normalize_form(f);
    int k = std::min(second_valuation(f), second_valuation(g));
    UPoly h = gcd(dehomogenize(f), dehomogenize(g));
    return homogenize(h, h.degree() + k, f.vars());
}

std::vector<Polynomial> partials_of_order(const Polynomial& f, int k)
{
    std::vector<Polynomial> out;
    for (int i = 0; i <= k; ++i) {
        Polynomial d = f;
        for (int a = 0; a < i; ++a) d = d.derivative(std::size_t{0});
        for (int b = 0; b < k - i; ++b) d = d.derivative(std::size_t{1});
        out.push_back(d);
    }
    return out;
}

std::vector<LinearFactor> rational_linear_factors(const Polynomial& f)
{
    require_binary(f);
    std::vector<LinearFactor> out;
    if (f.is_zero())
        return out;
    int k = second_valuation(f);
    if (k > 0)
        out.push_back({Polynomial::var(f.vars(), f.vars()[1]), k});
    for (const auto& [g, m] : squarefree_decomposition(dehomogenize(f)))
        for (const auto& r : rational_roots(g)) out.push_back({homogenize(UPoly({-r, Rational(1)}), 1, f.vars()), m});
    return out;
}

std::vector<FormFactor> factor_form(const Polynomial& f)
{
    require_binary(f);
    std::vector<FormFactor> out;
    if (f.is_zero())
        return out;
    int k = second_valuation(f);
    if (k > 0)
        out.push_back({Polynomial::var(f.vars(), f.vars()[1]), k});
    for (const auto& [g, m] : factor_over_q(dehomogenize(f)))
        out.push_back({homogenize(g, g.degree(), f.vars()), m});
    return out;
}

} // namespace horikawa
