#include "horikawa/sextic.hpp"
#include "horikawa/binary_form.hpp"
#include "horikawa/errors.hpp"
#include "horikawa/univariate.hpp"

#include <algorithm>

namespace horikawa {

namespace {

const std::vector<std::string>& x0x2() { static const std::vector<std::string> v{"x0", "x2"}; return v; }

void require_model(Sigma s)
{
    if (!has_sextic_model(s))
        throw NotTransformable(name(s) + " has no plane sextic model (E series)");
}

std::string label(const Rational& a, const Rational& b, const Rational& c)
{
    return "[" + to_string(a) + ":" + to_string(b) + ":" + to_string(c) + "]";
}

// Polynomials in one variable over K = Q[x]/(phi), phi irreducible.
struct NumberField {
    UPoly phi;
    UPoly reduce(const UPoly& a) const { return a % phi; }
    UPoly inverse(const UPoly& a) const
    {
        UPoly s, t;
        xgcd(a, phi, s, t);
        return reduce(s);
    }
};
using KPoly = std::vector<UPoly>;

void trim(KPoly& a)
{
    while (!a.empty() && a.back().is_zero()) a.pop_back();
}

KPoly to_kpoly(const NumberField& K, const Polynomial& g)
{
    // g in (x0, x2); x0 is the field generator
    KPoly r;
    for (const auto& c : g.coefficients_in(1)) r.push_back(K.reduce(to_upoly(c, 0)));
    trim(r);
    return r;
}

KPoly krem(const NumberField& K, KPoly a, const KPoly& b)
{
    UPoly inv = K.inverse(b.back());
    while (a.size() >= b.size()) {
        UPoly k = K.reduce(a.back() * inv);
        std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] = K.reduce(a[shift + i] - k * b[i]);
        trim(a);
        if (a.empty()) break;
    }
    return a;
}

KPoly kgcd(const NumberField& K, KPoly a, KPoly b)
{
    while (!b.empty()) {
        KPoly r = krem(K, a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

UPoly univariate_gcd(const std::vector<UPoly>& ps)
{
    UPoly g;
    for (const auto& p : ps) g = gcd(g, p);
    return g;
}

// Chart x_k = 1 around the point, in local coordinates (u, v).
Polynomial local_germ(const Polynomial& f, const std::vector<Rational>& P)
{
    std::size_t k = P[1] != 0 ? 1 : (P[2] != 0 ? 2 : 0);
    std::vector<std::string> loc{"u", "v"};
    std::map<std::string, Polynomial> images;
    const char* local[] = {"u", "v"};
    int next = 0;
    for (std::size_t i = 0; i < 3; ++i) {
        if (i == k)
            images[plane_vars()[i]] = Polynomial(loc, Rational(1));
        else
            images[plane_vars()[i]] = Polynomial::var(loc, local[next++]) + Polynomial(loc, P[i] / P[k]);
    }
    return f.substitute(images);
}

} // namespace

const std::vector<std::string>& plane_vars()
{
    static const std::vector<std::string> v{"x0", "x1", "x2"};
    return v;
}

bool has_sextic_model(Sigma s) { return info(s).family != 'E'; }

Polynomial mu_transform(Sigma s, const Mon& m)
{
    require_model(s);
    if (!in_v10(m))
        throw NotTransformable(m.str() + " is not in V10");
    if (weight(s, m) < 0)
        throw NotTransformable(m.str() + " has negative weight for " + name(s));
    if ((m.b - m.a) % 2 != 0)
        throw NotTransformable(m.str() + ": b - a is odd");
    int e = (m.b - m.a) / 2 + 1;
    if (e < 0)
        throw NotTransformable(m.str() + " maps to x0^" + std::to_string(m.a) + "*x1^" + std::to_string(e) + "*x2^" +
                               std::to_string(m.c));
    return Polynomial::term(plane_vars(), {m.a, e, m.c});
}

Mon inverse_mu_transform(const Exponent& e)
{
    Mon m{e[0], e[0] + 2 * (e[1] - 1), e[2]};
    if (m.b < 0 || !in_v10(m))
        throw NotTransformable("x0^" + std::to_string(e[0]) + "*x1^" + std::to_string(e[1]) + "*x2^" +
                               std::to_string(e[2]) + " is not the image of a V10 monomial");
    return m;
}

SexticModel sextic_model(Sigma s, const UElement& u)
{
    require_model(s);
    if (!u.is_regular())
        throw NotRegular("u is not regular: the coefficient of " + info(s).m1.str() + " vanishes");
    Polynomial H(plane_vars());
    for (const auto& [m, c] : u.coefficients()) {
        if (weight(s, m) < 0) continue;
        Polynomial t = mu_transform(s, m);
        if (t.degree() != 6)
            throw NotTransformable(m.str() + " does not map to a sextic monomial");
        H += t * c;
    }
    return {s, H};
}

SexticModel sample_sextic(Sigma s)
{
    require_model(s);
    const char* text = "";
    switch (s) {
    case Sigma::Z11: text = "x1*(x0^5 + x1^5 + x2^5) + x2^3*x0^3"; break;
    case Sigma::Z12: text = "x1*(x2*(x0^4 + x1^4 + x2^4) + x1*(x0^4 + x1^4)) + x0^2*x2^3*(x0 + x2)"; break;
    case Sigma::Z13:
        text = "x1*(x2^2*(x0^3 + x1^3 + x2^3) + x1*x2*(x0^3 + x1^3) + x1*(x0^4 + x1^4)) + x0^2*x2^3*(x0 + x1)";
        break;
    case Sigma::W12: text = "x1*(x0^5 + x1^5 + x2^5) + x2^4*x0^2"; break;
    case Sigma::W13: text = "x1*(x1^5 + x0^4*x2 + x2^5) + x0^2*x2^4"; break;
    default: break;
    }
    return {s, Polynomial::parse(text, plane_vars())};
}

UElement sextic_preimage(const SexticModel& C)
{
    std::map<Mon, Rational> c;
    for (const auto& [e, k] : C.form.with_vars(plane_vars()).terms()) {
        Mon m = inverse_mu_transform(e);
        if (weight(C.sigma, m) < 0)
            throw NotTransformable(m.str() + " has negative weight for " + name(C.sigma));
        c[m] = k;
    }
    return UElement(C.sigma, std::move(c));
}

bool sextic_shape_ok(const SexticModel& C)
{
    const auto& I = info(C.sigma);
    Polynomial f = C.form.with_vars(plane_vars());
    if (f.degree() != 6 || !f.is_weighted_homogeneous({1, 1, 1}, 6))
        return false;
    Rational c1 = f.coeff(mu_transform(C.sigma, I.m1).leading().first);
    Rational c2 = f.coeff(mu_transform(C.sigma, I.m2).leading().first);
    if (c1 == 0 || c1 != c2)
        return false;
    // allowed x1-free monomials
    std::vector<Exponent> allowed = I.family == 'Z' ? std::vector<Exponent>{{3, 0, 3}, {2, 0, 4}}
                                                    : std::vector<Exponent>{{2, 0, 4}};
    for (const auto& [e, k] : f.terms())
        if (e[1] == 0 && std::find(allowed.begin(), allowed.end(), e) == allowed.end())
            return false;
    return true;
}

LineIncidence line_incidence(const SexticModel& C)
{
    Polynomial r = C.form.with_vars(plane_vars()).specialize({{"x1", 0}}).with_vars(x0x2());
    if (r.is_zero())
        throw Error("the line V(x1) lies on the curve");
    LineIncidence L;
    for (const auto& [form, mult] : factor_form(r)) {
        int deg = form.degree();
        for (int i = 0; i < deg; ++i) L.partition.push_back(mult);
        IncidencePoint p;
        p.multiplicity = mult;
        p.degree = deg;
        if (deg == 1) {
            Rational a = form.coeff({1, 0}), b = form.coeff({0, 1});
            p.point = a == 0 ? "[1:0:0]" : label(-b / a, 0, 1);
        } else {
            p.point = "conjugate points: " + form.str() + " = 0, x1 = 0";
        }
        L.points.push_back(p);
    }
    std::sort(L.partition.rbegin(), L.partition.rend());
    std::sort(L.points.begin(), L.points.end(), [](const IncidencePoint& a, const IncidencePoint& b) {
        return a.multiplicity != b.multiplicity ? a.multiplicity > b.multiplicity : a.point < b.point;
    });
    return L;
}

namespace {

// Res in x2, with the usual power rule when one side is free of x2
Polynomial res_x2(const Polynomial& f, const Polynomial& g)
{
    int i = f.var_index("x2");
    if (!f.is_zero() && !g.is_zero()) {
        if (f.degree_in(i) == 0) return f.pow(g.degree_in(i));
        if (g.degree_in(i) == 0) return g.pow(f.degree_in(i));
    }
    return resultant(f, g, "x2");
}

} // namespace

SingularScan singular_scan(const Polynomial& form)
{
    Polynomial f = form.with_vars(plane_vars());
    if (f.is_zero() || !f.is_weighted_homogeneous({1, 1, 1}, f.degree()))
        throw NotHomogeneous("singular_scan needs a nonzero ternary form");
    std::vector<Polynomial> d{f.derivative(0), f.derivative(1), f.derivative(2)};
    SingularScan S;
    std::vector<std::vector<Rational>> pts;
    auto cluster = [&](const std::string& text) { S.points.push_back({text, LocalType{}}); };

    // chart x1 = 1
    {
        auto aff = [&](const Polynomial& p) { return p.specialize({{"x1", 1}}).with_vars(x0x2()); };
        Polynomial g = aff(f), g0 = aff(d[0]), g2 = aff(d[2]);
        UPoly r1 = to_upoly(res_x2(g, g0), 0), r2 = to_upoly(res_x2(g, g2), 0);
        if (r1.is_zero() && r2.is_zero())
            throw NonIsolated("both resultants vanish identically on the chart x1 = 1");
        UPoly R = gcd(r1, r2);
        if (R.degree() == 0) {
            S.certificates.push_back("x1 = 1: gcd of Res_x2(F, F_x0) and Res_x2(F, F_x2) is constant");
        } else {
            for (const auto& [phi, m] : factor_over_q(R)) {
                if (phi.degree() == 1) {
                    Rational r = -phi[0] / phi[1];
                    auto at = [&](const Polynomial& p) { return to_upoly(p.specialize({{"x0", r}}), 1); };
                    UPoly D = univariate_gcd({at(g), at(g0), at(g2)});
                    if (D.is_zero())
                        throw NonIsolated("the line x0 = " + to_string(r) + " is singular");
                    for (const auto& [psi, k] : factor_over_q(D)) {
                        if (psi.degree() == 1)
                            pts.push_back({r, 1, -psi[0] / psi[1]});
                        else
                            cluster("conjugate points: x1 = 1, x0 = " + to_string(r) + ", " + psi.str("x2") + " = 0");
                    }
                } else {
                    NumberField K{phi};
                    KPoly D = kgcd(K, kgcd(K, to_kpoly(K, g), to_kpoly(K, g0)), to_kpoly(K, g2));
                    if (D.size() >= 2)
                        cluster("conjugate points: x1 = 1, " + phi.str("x0") + " = 0");
                    else
                        S.certificates.push_back("x1 = 1: no singular point over " + phi.str("x0") + " = 0");
                }
            }
        }
    }
    // the line x1 = 0, chart x2 = 1
    {
        auto at = [&](const Polynomial& p) {
            return to_upoly(p.specialize({{"x1", 0}, {"x2", 1}}), 0);
        };
        UPoly D = univariate_gcd({at(f), at(d[0]), at(d[1]), at(d[2])});
        if (D.is_zero())
            throw NonIsolated("the line x1 = 0 is singular");
        if (D.degree() == 0)
            S.certificates.push_back("x1 = 0, x2 = 1: gcd of F and its partials is constant");
        for (const auto& [psi, k] : D.degree() > 0 ? factor_over_q(D) : std::vector<std::pair<UPoly, int>>{}) {
            if (psi.degree() == 1)
                pts.push_back({-psi[0] / psi[1], 0, 1});
            else
                cluster("conjugate points: x1 = 0, x2 = 1, " + psi.str("x0") + " = 0");
        }
    }
    // the remaining point
    {
        std::vector<Rational> P{1, 0, 0};
        bool sing = f.evaluate(P) == 0;
        for (const auto& p : d) sing = sing && p.evaluate(P) == 0;
        if (sing)
            pts.push_back(P);
        else
            S.certificates.push_back("[1:0:0] is not singular");
    }
    for (const auto& P : pts) S.points.push_back({label(P[0], P[1], P[2]), classify_local(local_germ(f, P))});
    return S;
}

int sextic_moduli_dimension(Sigma s)
{
    require_model(s);
    int monomials = static_cast<int>(monomials_with_sign(s, 1).size()) + 2;
    // projectivised coefficients, the line, two points on it, minus dim PGL3
    return (monomials - 1) + 2 + 1 + 1 - 8;
}

} // namespace horikawa
