#include "horikawa/weights.hpp"
#include "horikawa/errors.hpp"

namespace horikawa {

const std::vector<Mon>& v10_basis()
{
    static const std::vector<Mon> basis = [] {
        std::vector<Mon> v;
        for (int a = 0; a <= 10; ++a)
            for (int b = 0; a + b <= 10; ++b)
                if ((10 - a - b) % 2 == 0) v.push_back({a, b, (10 - a - b) / 2});
        return v;
    }();
    return basis;
}

bool in_v10(const Mon& m) { return m.a >= 0 && m.b >= 0 && m.c >= 0 && m.a + m.b + 2 * m.c == 10; }

const std::vector<std::string>& xyz_vars()
{
    static const std::vector<std::string> v{"x", "y", "z"};
    return v;
}
const std::vector<std::string>& txyz_vars()
{
    static const std::vector<std::string> v{"t", "x", "y", "z"};
    return v;
}
const std::vector<std::string>& sxyz_vars()
{
    static const std::vector<std::string> v{"s", "x", "y", "z"};
    return v;
}
const std::vector<std::string>& tail_vars()
{
    static const std::vector<std::string> v{"t", "alpha", "beta"};
    return v;
}

int weight(Sigma s, const Mon& m)
{
    const auto& I = info(s);
    return I.p * m.b + I.q * m.c - I.d;
}

int sign(Sigma s, const Mon& m)
{
    int w = weight(s, m);
    return (w > 0) - (w < 0);
}

std::vector<Mon> monomials_with_sign(Sigma s, int sgn)
{
    std::vector<Mon> out;
    for (const auto& m : v10_basis())
        if (sign(s, m) == sgn) out.push_back(m);
    return out;
}

int degree_d_monomial_count(Sigma s)
{
    const auto& I = info(s);
    int n = 0;
    for (int j = 0; I.p * j <= I.d; ++j)
        for (int k = 0; I.p * j + I.q * k <= I.d; ++k) ++n; // i is forced
    return n;
}

UElement::UElement(Sigma s, std::map<Mon, Rational> coeffs) : sigma_(s)
{
    for (auto& [m, c] : coeffs) {
        if (!in_v10(m))
            throw NotHomogeneous("monomial " + m.str() + " is not in V10");
        if (c != 0) coeffs_.emplace(m, c);
    }
    const auto& I = info(s);
    if (coeff(I.m1) != coeff(I.m2))
        throw NotInU("coefficients of " + I.m1.str() + " and " + I.m2.str() + " differ, not in U_" + I.name);
}

UElement UElement::from_polynomial(Sigma s, const Polynomial& f)
{
    Polynomial g = f.with_vars(xyz_vars());
    if (!g.is_weighted_homogeneous({1, 1, 2}, 10))
        throw NotHomogeneous("'" + f.str() + "' is not weighted homogeneous of degree 10 (deg z = 2)");
    std::map<Mon, Rational> c;
    for (const auto& [e, k] : g.terms()) c[{e[0], e[1], e[2]}] = k;
    return UElement(s, std::move(c));
}

Rational UElement::coeff(const Mon& m) const
{
    auto it = coeffs_.find(m);
    return it == coeffs_.end() ? Rational(0) : it->second;
}

bool UElement::is_regular() const { return coeff(info(sigma_).m1) != 0; }

Polynomial UElement::polynomial() const
{
    Polynomial p(xyz_vars());
    for (const auto& [m, c] : coeffs_) p.add_term(m.exponent(), c);
    return p;
}

namespace {

UElement filter(const UElement& u, int sgn)
{
    std::map<Mon, Rational> c;
    for (const auto& [m, k] : u.coefficients())
        if (sign(u.sigma(), m) == sgn) c.emplace(m, k);
    return UElement(u.sigma(), std::move(c));
}

} // namespace

UElement pi_plus(const UElement& u) { return filter(u, 1); }
UElement pi_zero(const UElement& u) { return filter(u, 0); }
UElement pi_minus(const UElement& u) { return filter(u, -1); }

UElement add(const UElement& u, const UElement& v)
{
    if (u.sigma() != v.sigma())
        throw VariableMismatch("adding elements of different U_Sigma");
    std::map<Mon, Rational> c = u.coefficients();
    for (const auto& [m, k] : v.coefficients()) c[m] += k;
    return UElement(u.sigma(), std::move(c));
}

std::pair<UElement, UElement> split(const UElement& u)
{
    UElement zero = pi_zero(u);
    return {add(pi_plus(u), zero), add(zero, pi_minus(u))};
}

UElement merge(const UElement& head, const UElement& tail_part)
{
    if (head.sigma() != tail_part.sigma())
        throw VariableMismatch("merging elements of different U_Sigma");
    if (!pi_minus(head).coefficients().empty() || !pi_plus(tail_part).coefficients().empty())
        throw NotInU("head must lie in U+ + U0 and tail in U0 + U-");
    if (pi_zero(head) != pi_zero(tail_part))
        throw NotInU("weight-zero parts of head and tail differ");
    return add(pi_plus(head), tail_part);
}

GenericChecklist sigma_generic_necessary(const UElement& u)
{
    const auto& I = info(u.sigma());
    GenericChecklist r;
    r.z5_nonzero = u.coeff({0, 0, 5}) != 0;
    r.regular = u.is_regular();
    r.pair_equal_nonzero = u.coeff(I.m1) == u.coeff(I.m2) && u.coeff(I.m1) != 0;
    return r;
}

Polynomial t_action(const UElement& u, const std::string& t, int scale)
{
    std::vector<std::string> vars{t, "x", "y", "z"};
    Polynomial p(vars);
    for (const auto& [m, c] : u.coefficients()) {
        int w = weight(u.sigma(), m);
        p.add_term({w < 0 ? -w * scale : 0, m.a, m.b, m.c}, c);
    }
    return p;
}

Polynomial theta(const Polynomial& f)
{
    if (f.nvars() != 4)
        throw VariableMismatch("theta expects a polynomial in (t, x, y, z)");
    Polynomial r(tail_vars());
    for (const auto& [e, c] : f.terms()) r.add_term({e[0], e[2], e[3]}, c);
    return r;
}

Polynomial tail(const UElement& u)
{
    Polynomial r = theta(t_action(add(pi_zero(u), pi_minus(u))));
    const auto& I = info(u.sigma());
    if (!r.is_weighted_homogeneous({1, I.p, I.q}, I.d))
        throw Error("tail is not weighted homogeneous"); // cannot happen for valid input
    return r;
}

Polynomial dvr_truncate(const Polynomial& f)
{
    Polynomial g = f.with_vars(sxyz_vars());
    std::map<Mon, std::pair<int, Rational>> lowest;
    for (const auto& [e, c] : g.terms()) {
        Mon m{e[1], e[2], e[3]};
        auto it = lowest.find(m);
        if (it == lowest.end() || e[0] < it->second.first) lowest[m] = {e[0], c};
    }
    Polynomial r(sxyz_vars());
    for (const auto& [m, sc] : lowest) r.add_term({sc.first, m.a, m.b, m.c}, sc.second);
    return r;
}

UElement dvr_witness(Sigma s, const Polynomial& f)
{
    const auto& I = info(s);
    Polynomial g = f.with_vars(sxyz_vars());
    for (const auto& [e, c] : g.terms())
        if (!in_v10({e[1], e[2], e[3]}))
            throw NotHomogeneous("'" + f.str() + "' is not V10-valued");

    // f must lie in U_Sigma tensor O: the m1 and m2 series agree
    auto series = [&](const Mon& m) {
        std::map<int, Rational> out;
        for (const auto& [e, c] : g.terms())
            if (Mon{e[1], e[2], e[3]} == m) out[e[0]] = c;
        return out;
    };
    if (series(I.m1) != series(I.m2))
        throw NotSigmaGeneric("coefficient series of " + I.m1.str() + " and " + I.m2.str() + " differ");

    std::map<Mon, Rational> u;
    for (const auto& [e, c] : dvr_truncate(g).terms()) {
        Mon m{e[1], e[2], e[3]};
        int w = weight(s, m);
        int expected = w < 0 ? -w : 0;
        if (e[0] != expected)
            throw NotSigmaGeneric("truncation has s^" + std::to_string(e[0]) + "*" + m.str() + ", expected order " +
                                  std::to_string(expected));
        u[m] = c;
    }
    UElement w(s, std::move(u));
    if (!w.is_regular())
        throw NotSigmaGeneric("truncation witness is not regular (coefficient of " + I.m1.str() + " vanishes)");
    return w;
}

} // namespace horikawa
