#include "horikawa/toric.hpp"
#include "horikawa/errors.hpp"
#include "horikawa/univariate.hpp"
#include "horikawa/weights.hpp"

#include <algorithm>
#include <numeric>
#include <optional>

namespace horikawa {

namespace {

long det2(const Ray& u, const Ray& v) { return static_cast<long>(u.first) * v.second - static_cast<long>(u.second) * v.first; }

int mod(int a, int r) { return ((a % r) + r) % r; }

std::optional<Rational> nth_root(const Rational& x, int n)
{
    if (x == 0)
        return Rational(0);
    if (x < 0 && n % 2 == 0)
        return std::nullopt;
    Integer num = abs(x.get_num()), den = x.get_den(), rn, rd;
    if (!mpz_root(rn.get_mpz_t(), num.get_mpz_t(), n) || !mpz_root(rd.get_mpz_t(), den.get_mpz_t(), n))
        return std::nullopt;
    Rational r(x < 0 ? Integer(-rn) : rn, rd);
    r.canonicalize();
    return r;
}

Rational rpow(const Rational& x, int e)
{
    Rational r = 1;
    for (int i = 0; i < std::abs(e); ++i) r *= x;
    return e < 0 ? Rational(1 / r) : r;
}

std::string point_label(const Rational& a, const Rational& b)
{
    return "[0:" + to_string(a) + ":" + to_string(b) + "]";
}

// A rational representative [0:alpha:beta] with alpha^q / beta^p = sigma.
std::string representative(int p, int q, const Rational& sigma)
{
    if (auto beta = nth_root(1 / sigma, p))
        return point_label(1, *beta);
    if (auto alpha = nth_root(sigma, q))
        return point_label(*alpha, 1);
    // u*q - v*p = 1 always has a solution because gcd(p, q) = 1
    for (int u = 1; u <= p; ++u)
        if ((u * q - 1) % p == 0)
            return point_label(rpow(sigma, u), rpow(sigma, (u * q - 1) / p));
    throw Error("no rational representative");
}

} // namespace

QuotientSingularity make_quotient(std::string point, int r, int s)
{
    if (r <= 0)
        throw Error("quotient order must be positive");
    return {std::move(point), r, mod(s, r)};
}

std::string QuotientSingularity::notation() const
{
    if (smooth())
        return "smooth";
    return "1/" + std::to_string(r) + "(1," + std::to_string(s) + ")";
}

std::size_t ToricSurface::index(const std::string& label) const
{
    for (std::size_t i = 0; i < labels.size(); ++i)
        if (labels[i] == label) return i;
    throw UnknownName("no divisor '" + label + "' on " + name);
}

ToricSurface weighted_projective_plane(int a, int b)
{
    if (a < 1 || b < a || std::gcd(a, b) != 1)
        throw Error("P(1,a,b) needs 1 <= a <= b with gcd(a,b) = 1");
    ToricSurface S;
    S.name = "P(1," + std::to_string(a) + "," + std::to_string(b) + ")";
    S.rays = {{-a, -b}, {1, 0}, {0, 1}};
    S.labels = {"Dx", "Dy", "Dz"};
    Rational A(a), B(b);
    Rational xx = 1 / (A * B), xy = 1 / B, xz = 1 / A, yy = A / B, yz = 1, zz = B / A;
    S.pairing = {{xx, xy, xz}, {xy, yy, yz}, {xz, yz, zz}};
    S.singularities = {make_quotient("[0:1:0]", a, b), make_quotient("[0:0:1]", b, a)};
    return S;
}

ToricSurface blown_up_surface(Sigma s)
{
    const auto& I = info(s);
    ToricSurface S;
    S.name = std::string("Z_") + I.name;
    S.rays = {{1, 0}, {I.p, I.q}, {0, 1}, {-1, -2}};
    S.labels = {"Dy", "E", "Dz", "Dx"};
    // coordinates in the basis (Dx, E)
    std::vector<std::pair<Rational, Rational>> basis = {
        {1, -I.p}, {0, 1}, {2, -I.q}, {1, 0}};
    Rational xx(1, 2), ee = Rational(-1) / (I.p * I.q);
    S.pairing.assign(4, std::vector<Rational>(4));
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            S.pairing[i][j] = basis[i].first * basis[j].first * xx + basis[i].second * basis[j].second * ee;
    S.singularities = {make_quotient("e_p", I.p, -I.q), make_quotient("e_q", I.q, -I.p)};
    return S;
}

std::vector<std::vector<Rational>> fan_pairing(const std::vector<Ray>& rays)
{
    std::size_t n = rays.size();
    if (n < 3)
        throw Error("a complete fan needs at least three rays");
    // exact angular sort
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    auto half = [](const Ray& v) { return v.second < 0 || (v.second == 0 && v.first < 0); };
    std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
        const Ray &u = rays[i], &v = rays[j];
        if (half(u) != half(v)) return !half(u);
        return det2(u, v) > 0;
    });
    std::vector<std::vector<Rational>> M(n, std::vector<Rational>(n, Rational(0)));
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t prev = order[(k + n - 1) % n], cur = order[k], next = order[(k + 1) % n];
        long a = det2(rays[prev], rays[cur]), b = det2(rays[cur], rays[next]), c = det2(rays[prev], rays[next]);
        if (a <= 0 || b <= 0)
            throw Error("rays do not form a complete fan");
        M[cur][next] = M[next][cur] = Rational(1, b);
        M[cur][cur] = Rational(-c) / (a * b);
        M[cur][cur].canonicalize();
    }
    return M;
}

DivisorClass make_divisor(const ToricSurface& S, std::vector<Rational> coeffs)
{
    if (coeffs.size() != S.rays.size())
        throw SurfaceMismatch("divisor has " + std::to_string(coeffs.size()) + " coefficients, " + S.name + " has " +
                              std::to_string(S.rays.size()) + " rays");
    return {S.name, std::move(coeffs)};
}

DivisorClass ray_divisor(const ToricSurface& S, const std::string& label)
{
    std::vector<Rational> c(S.rays.size(), Rational(0));
    c[S.index(label)] = 1;
    return {S.name, c};
}

DivisorClass canonical_divisor(const ToricSurface& S)
{
    return {S.name, std::vector<Rational>(S.rays.size(), Rational(-1))};
}

DivisorClass operator+(const DivisorClass& a, const DivisorClass& b)
{
    if (a.surface != b.surface || a.coeffs.size() != b.coeffs.size())
        throw SurfaceMismatch("divisors on different surfaces");
    DivisorClass r = a;
    for (std::size_t i = 0; i < r.coeffs.size(); ++i) r.coeffs[i] += b.coeffs[i];
    return r;
}

DivisorClass operator*(const Rational& k, const DivisorClass& a)
{
    DivisorClass r = a;
    for (auto& c : r.coeffs) c *= k;
    return r;
}

Rational intersect(const ToricSurface& S, const DivisorClass& a, const DivisorClass& b)
{
    for (const auto* D : {&a, &b})
        if (D->surface != S.name || D->coeffs.size() != S.rays.size())
            throw SurfaceMismatch("divisor class does not belong to " + S.name);
    Rational s = 0;
    for (std::size_t i = 0; i < a.coeffs.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs.size(); ++j) s += a.coeffs[i] * b.coeffs[j] * S.pairing[i][j];
    return s;
}

const std::vector<QuotientSingularity>& quotient_singularities(const ToricSurface& S) { return S.singularities; }

std::vector<QuotientSingularity> singular_points(const ToricSurface& S)
{
    std::vector<QuotientSingularity> out;
    for (const auto& q : S.singularities)
        if (!q.smooth()) out.push_back(q);
    return out;
}

AmpleCheck ample_check(const ToricSurface& S, const DivisorClass& D)
{
    AmpleCheck r;
    r.ample = true;
    for (const auto& label : S.labels) {
        Rational k = intersect(S, D, ray_divisor(S, label));
        r.ample = r.ample && k > 0;
        r.degrees.push_back(k);
    }
    return r;
}

int aut_dimension(int a, int b)
{
    if (a < 1 || b < a || std::gcd(a, b) != 1)
        throw Error("P(1,a,b) needs 1 <= a <= b with gcd(a,b) = 1");
    if (a == 1)
        return b == 1 ? 8 : 5 + b;
    return 4 + b / a;
}

bool log_canonical_toric(const std::vector<Rational>& coeffs)
{
    for (const auto& c : coeffs)
        if (c <= 0 || c > 1) return false;
    return true;
}

ZAmpleness z_ampleness(Sigma s)
{
    const auto& I = info(s);
    ToricSurface Z = blown_up_surface(s);
    DivisorClass E = ray_divisor(Z, "E");
    DivisorClass branch = Rational(10) * ray_divisor(Z, "Dx") + Rational(-I.d) * E;
    ZAmpleness r;
    r.divisor = canonical_divisor(Z) + E + Rational(1, 2) * branch;
    r.with_dx = intersect(Z, r.divisor, ray_divisor(Z, "Dx"));
    r.with_dy = intersect(Z, r.divisor, ray_divisor(Z, "Dy"));
    r.with_dz = intersect(Z, r.divisor, ray_divisor(Z, "Dz"));
    r.with_e = intersect(Z, r.divisor, E);
    r.ample = r.with_dx > 0 && r.with_dy > 0 && r.with_dz > 0 && r.with_e > 0;
    return r;
}

std::vector<std::string> points_on_g(Sigma s, const Polynomial& F)
{
    const auto& I = info(s);
    Polynomial f = F.with_vars(tail_vars());
    std::vector<std::pair<int, int>> exps;
    std::vector<Rational> cs;
    for (const auto& [e, c] : f.terms())
        if (e[0] == 0) {
            exps.push_back({e[1], e[2]});
            cs.push_back(c);
        }
    if (exps.empty())
        throw NonIsolated("G is contained in the curve");
    int a = exps[0].first, b = exps[0].second;
    for (const auto& [i, j] : exps) {
        a = std::min(a, i);
        b = std::min(b, j);
    }
    std::vector<std::string> pts;
    if (b > 0) pts.push_back("[0:1:0]");
    if (a > 0) pts.push_back("[0:0:1]");

    // The cofactor is a polynomial in sigma = alpha^q / beta^p.
    std::vector<Rational> sc;
    for (std::size_t k = 0; k < exps.size(); ++k) {
        int i = exps[k].first - a;
        if (i % I.q != 0 || (exps[k].second - b) % I.p != 0)
            throw NotHomogeneous("restriction to G is not weighted homogeneous");
        std::size_t idx = static_cast<std::size_t>(i / I.q);
        if (sc.size() <= idx) sc.resize(idx + 1, Rational(0));
        sc[idx] = cs[k];
    }
    UPoly g(sc);
    for (const auto& [h, m] : squarefree_decomposition(g)) {
        UPoly rest = h;
        for (const auto& r : rational_roots(h)) {
            pts.push_back(representative(I.p, I.q, r));
            rest = rest / UPoly({-r, Rational(1)});
        }
        if (rest.degree() > 0)
            pts.push_back("conjugate points: " + rest.str("sigma") + " = 0");
    }
    return pts;
}

TailAmpleness tail_ample_constant(Sigma s)
{
    const auto& I = info(s);
    UElement u(s, {{I.m1, 1}, {I.m2, 1}});
    TailAmpleness r;
    r.point_count = static_cast<int>(points_on_g(s, tail(u)).size());
    r.c = I.p * I.q * r.point_count;
    r.margin = Rational(r.c, 2) - I.p - I.q;
    r.margin.canonicalize();
    r.ample = r.margin > 0;
    r.degree_pairing = Rational(I.d, I.p * I.q);
    r.degree_pairing.canonicalize();
    r.degree_margin = Rational(I.d, 2) - I.p - I.q;
    r.degree_margin.canonicalize();
    return r;
}

} // namespace horikawa
