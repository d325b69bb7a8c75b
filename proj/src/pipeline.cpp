#include "horikawa/pipeline.hpp"
#include "horikawa/errors.hpp"
#include "horikawa/univariate.hpp"

#include <algorithm>
#include <random>
#include <set>

namespace horikawa {

namespace {

// IF00 list numbers of the K3 components, E12 ... W13
constexpr int kIf00[8] = {88, 70, 53, 71, 51, 35, 41, 30};

const std::vector<std::string>& y_vars()
{
    static const std::vector<std::string> v{"t", "alpha", "beta", "w"};
    return v;
}

std::vector<std::string> radical_killed(Sigma s)
{
    switch (info(s).family) {
    case 'E': return {"c", "e", "f", "g"};
    default: return {"c", "e", "f"};
    }
}

std::vector<std::string> radical_text(Sigma s)
{
    if (info(s).family == 'E') return {"c", "e", "f", "a*g"};
    if (s == Sigma::Z11 || s == Sigma::W12) return {"c", "e", "a*f"};
    return {"c", "e", "f"};
}

int gamma_dimension(Sigma s) { return 7 - static_cast<int>(radical_killed(s).size()) - 1; }

Polynomial normalized(const Polynomial& p)
{
    return p * (Rational(1) / p.leading().second);
}

// Number of branch points of w^2 = F on G = P(p, q) for d even, F the t-free
// part of the tail. With sigma = alpha^q / beta^p, F / M^2 = sigma^n h(sigma)
// for a monomial M of degree d/2.
int cover_branch_points(Sigma s, const Polynomial& F)
{
    const auto& I = info(s);
    int a = -1, b = -1;
    for (const auto& [e, c] : F.terms()) {
        a = a < 0 ? e[1] : std::min(a, e[1]);
        b = b < 0 ? e[2] : std::min(b, e[2]);
    }
    std::vector<Rational> hc;
    for (const auto& [e, c] : F.terms()) {
        std::size_t idx = static_cast<std::size_t>((e[1] - a) / I.q);
        if (hc.size() <= idx) hc.resize(idx + 1, Rational(0));
        hc[idx] = c;
    }
    UPoly h(hc);
    int half = I.d / 2, i = 0;
    while ((half - I.p * i) % I.q != 0) ++i;
    int n = (a - 2 * i) / I.q;
    int count = 0;
    for (const auto& [f, m] : squarefree_decomposition(h))
        if (m % 2 == 1) count += f.degree();
    if (n % 2 != 0) ++count;                      // sigma = 0
    if ((n + h.degree()) % 2 != 0) ++count;       // sigma = infinity
    return count;
}

Polynomial xyz_part(const UElement& u) { return u.polynomial(); }

} // namespace

Rational k_squared_closed_form(Sigma s)
{
    const auto& I = info(s);
    int k = 2 * I.p + 2 * I.q - (I.d % 2 == 0 ? 2 : 1) - I.d;
    Rational r = Rational(1) - Rational(k * k, 2 * I.p * I.q);
    r.canonicalize();
    return r;
}

Rational k_squared_toric(Sigma s)
{
    const auto& I = info(s);
    ToricSurface Z = blown_up_surface(s);
    DivisorClass E = ray_divisor(Z, "E");
    Rational ecoef = -I.d + (I.d % 2 == 1 ? 1 : 0);
    DivisorClass B = Rational(10) * ray_divisor(Z, "Dx") + ecoef * E;
    DivisorClass D = canonical_divisor(Z) + Rational(1, 2) * B;
    return 2 * intersect(Z, D, D);
}

YDatum y_datum_from_tail(Sigma s, const Polynomial& T)
{
    const auto& I = info(s);
    Polynomial tail_poly = T.with_vars(tail_vars());
    if (!tail_poly.is_weighted_homogeneous({1, I.p, I.q}, I.d))
        throw NotHomogeneous("tail is not of degree " + std::to_string(I.d) + " for weights (1," +
                             std::to_string(I.p) + "," + std::to_string(I.q) + ")");
    YDatum y;
    Polynomial t = tail_poly.with_vars(y_vars());
    if (I.d % 2 == 0) {
        y.ambient_weights = {1, I.p, I.q, I.d / 2};
        y.degree = I.d;
    } else {
        y.ambient_weights = {1, 2 * I.p, 2 * I.q, I.d};
        y.degree = 2 * I.d;
        Polynomial tt = Polynomial::var(y_vars(), "t");
        t = t.substitute({{"t", tt * tt}});
    }
    y.equation = Polynomial::var(y_vars(), "w").pow(2) - t;
    y.chi_top = I.mu + 3;
    y.if00_number = kIf00[index_of(s)];
    if (s == Sigma::E12) y.ade_configuration = "A1+A2+A6";
    y.exceptional_curves = 21 - I.mu;
    return y;
}

YDatum y_datum(Sigma s, const UElement& u)
{
    if (u.sigma() != s)
        throw VariableMismatch("u belongs to U_" + name(u.sigma()) + ", not U_" + name(s));
    if (!u.is_regular())
        throw NotRegular("u is not regular: the coefficient of " + info(s).m1.str() + " vanishes");
    return y_datum_from_tail(s, tail(u));
}

ZDatum z_invariants(Sigma s)
{
    const auto& I = info(s);
    ZDatum z;
    z.k_squared = k_squared_closed_form(s);
    z.h1_o = 0;
    z.h2_o = 1;
    z.chi_top = 36 - I.mu;
    if (I.family != 'E') z.h11 = 32 - I.mu;
    z.quotient_singularities = quotient_singularities(blown_up_surface(s));
    z.branch = Polynomial(xyz_vars());
    return z;
}

GluingDatum gluing_from_tail(Sigma s, const Polynomial& T)
{
    const auto& I = info(s);
    Polynomial F = T.with_vars(tail_vars());
    GluingDatum g;
    g.points = points_on_g(s, F);
    g.branch_on_g = I.d % 2 == 1;
    if (g.branch_on_g) {
        // G itself is a branch curve, so the gluing curve is G
        g.rational = true;
        return g;
    }
    Polynomial free(tail_vars());
    for (const auto& [e, c] : F.terms())
        if (e[0] == 0) free.add_term(e, c);
    g.cover_branch_points = cover_branch_points(s, free);
    g.rational = g.cover_branch_points == 2;
    return g;
}

GluingDatum gluing(Sigma s, const UElement& u)
{
    if (!u.is_regular())
        throw NotRegular("u is not regular: the coefficient of " + info(s).m1.str() + " vanishes");
    return gluing_from_tail(s, tail(u));
}

BoundaryDims boundary_dimension(Sigma s)
{
    const auto& I = info(s);
    BoundaryDims b;
    b.degree_d_monomials = degree_d_monomial_count(s);
    b.aut_dim = aut_dimension(I.p, I.q);
    b.positive_monomials = static_cast<int>(monomials_with_sign(s, 1).size());
    b.gamma_dim = gamma_dimension(s);
    // degree-d forms with one linear condition, projectivised, modulo Aut
    b.y_side = (b.degree_d_monomials - 1 - 1) - (b.aut_dim - 1);
    // P(U+ + U0) has dimension |pos|; the Gamma orbits are cut out
    b.z_side = b.positive_monomials - b.gamma_dim;
    b.total = b.y_side + b.z_side;
    return b;
}

namespace {

StableSurfaceDatum assemble(Sigma s, const Polynomial& tail_poly, const Polynomial& branch)
{
    StableSurfaceDatum r;
    r.sigma = s;
    r.y = y_datum_from_tail(s, tail_poly);
    r.z = z_invariants(s);
    r.z.branch = branch.with_vars(xyz_vars());
    r.gluing = gluing_from_tail(s, tail_poly);
    r.total_chi = r.y.chi_top + r.z.chi_top - 2;
    r.boundary = boundary_dimension(s);
    return r;
}

} // namespace

UElement reference_u(Sigma s)
{
    const auto& I = info(s);
    return UElement(s, {{{0, 0, 5}, 1}, {I.m1, 1}, {I.m2, 1}, {{10, 0, 0}, 1}});
}

StableSurfaceDatum replace(Sigma s, const UElement& u)
{
    if (u.sigma() != s)
        throw VariableMismatch("u belongs to U_" + name(u.sigma()) + ", not U_" + name(s));
    if (!u.is_regular())
        throw NotRegular("u is not regular: the coefficient of " + info(s).m1.str() + " vanishes");
    return assemble(s, tail(u), xyz_part(add(pi_plus(u), pi_zero(u))));
}

BranchCohomology branch_curve_cohomology(Sigma s)
{
    const auto& I = info(s);
    BranchCohomology b;
    // d(d - w0 - w1 - w2) / (2 w0 w1 w2) + 1 for d = 10 on P(1,1,2)
    b.genus_smooth = Rational(10 * (10 - 4), 2 * 2) + 1;
    b.genus_smooth.canonicalize();
    UElement u(s, {{I.m1, 1}, {I.m2, 1}});
    b.branches = static_cast<int>(points_on_g(s, tail(u)).size());
    b.delta = Rational(I.mu + b.branches - 1, 2);
    b.delta.canonicalize();
    Rational rk = 2 * (b.genus_smooth - b.delta) + b.branches - 1;
    if (!is_integer(rk))
        throw Error("non-integral first Betti number");
    b.rk_h1 = static_cast<int>(rk.get_num().get_si());
    b.chi = 2 - b.rk_h1;
    return b;
}

const std::vector<std::string>& gamma_vars()
{
    static const std::vector<std::string> v{"a", "b", "c", "d", "e", "f", "g"};
    return v;
}

GammaIdeal gamma_ideal(Sigma s)
{
    GammaIdeal G;
    G.sigma = s;
    std::vector<std::string> ring = gamma_vars();
    for (const auto& v : xyz_vars()) ring.push_back(v);
    auto V = [&](const char* n) { return Polynomial::var(ring, n); };
    std::map<std::string, Polynomial> images{
        {"x", V("a") * V("x") + V("b") * V("y")},
        {"y", V("c") * V("x") + V("d") * V("y")},
        {"z", V("z") + V("e") * V("x").pow(2) + V("f") * V("x") * V("y") + V("g") * V("y").pow(2)}};

    std::set<std::vector<std::pair<Exponent, std::string>>> seen;
    for (const auto& m : v10_basis()) {
        if (weight(s, m) < 0) continue;
        Polynomial img = Polynomial::term(xyz_vars(), m.exponent()).substitute(images);
        std::map<Mon, Polynomial> coeffs;
        for (const auto& [e, c] : img.terms()) {
            Mon target{e[7], e[8], e[9]};
            if (weight(s, target) >= 0) continue;
            Exponent ge(e.begin(), e.begin() + 7);
            auto it = coeffs.try_emplace(target, Polynomial(gamma_vars())).first;
            it->second.add_term(ge, c);
        }
        for (auto& [target, poly] : coeffs) {
            if (poly.is_zero()) continue;
            Polynomial n = normalized(poly);
            std::vector<std::pair<Exponent, std::string>> key;
            for (const auto& [e, c] : n.terms()) key.push_back({e, to_string(c)});
            if (seen.insert(key).second) G.generators.push_back(n);
        }
    }
    for (const auto& r : radical_text(s)) G.radical.push_back(Polynomial::parse(r, gamma_vars()));
    G.killed = radical_killed(s);
    G.dimension = gamma_dimension(s);
    return G;
}

bool gamma_substitution_check(const GammaIdeal& G)
{
    std::map<std::string, Rational> zero;
    for (const auto& v : G.killed) zero[v] = 0;
    return std::all_of(G.generators.begin(), G.generators.end(),
                       [&](const Polynomial& g) { return g.specialize(zero).is_zero(); });
}

bool gamma_random_check(const GammaIdeal& G, int points, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> val(-7, 7), nonzero(1, 7), coin(0, 1);
    const auto& vars = gamma_vars();
    for (int k = 0; k < points; ++k) {
        std::map<std::string, Rational> pt;
        for (const auto& v : vars) pt[v] = val(rng);
        for (const char* v : {"a", "d"}) pt[v] = nonzero(rng) * (coin(rng) ? 1 : -1);
        // a nonempty subset of the killed variables is switched on, the rest vanish
        std::vector<bool> on(G.killed.size());
        bool any = false;
        while (!any)
            for (std::size_t i = 0; i < on.size(); ++i) any = (on[i] = coin(rng)) || any;
        for (std::size_t i = 0; i < on.size(); ++i)
            pt[G.killed[i]] = on[i] ? Rational(nonzero(rng) * (coin(rng) ? 1 : -1)) : Rational(0);
        std::vector<Rational> x;
        for (const auto& v : vars) x.push_back(pt[v]);
        bool hit = std::any_of(G.generators.begin(), G.generators.end(),
                               [&](const Polynomial& g) { return g.evaluate(x) != 0; });
        if (!hit) return false;
    }
    return true;
}

HodgeSummary hodge_summary(const std::vector<int>& geometric_genera, const std::vector<int>& transcendental_ranks)
{
    HodgeSummary h;
    int pg = 0;
    for (int g : geometric_genera) pg += g;
    h.monodromy_finite = pg == 2;
    for (int r : transcendental_ranks) h.transcendental_rank += r;
    return h;
}

DvrComparison dvr_compare(const Polynomial& f, Sigma s)
{
    const auto& I = info(s);
    UElement u = dvr_witness(s, f);
    Polynomial g = f.with_vars(sxyz_vars());

    // weight <= 0 part with s as the C* parameter, lowest weighted degree
    Polynomial low({"t", "x", "y", "z"});
    Polynomial high(xyz_vars());
    for (const auto& [e, c] : g.terms()) {
        Mon m{e[1], e[2], e[3]};
        int w = weight(s, m);
        if (w <= 0) low.add_term(e, c);
        if (w >= 0 && e[0] == 0) high.add_term({e[1], e[2], e[3]}, c);
    }
    Polynomial th = theta(low);
    Polynomial family_tail = th.weighted_part({1, I.p, I.q}, th.min_weighted_degree({1, I.p, I.q}));

    DvrComparison r{u, replace(s, u), assemble(s, family_tail, high), false};
    r.identical = r.from_witness == r.from_family;
    return r;
}

} // namespace horikawa
