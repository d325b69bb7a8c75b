#include "horikawa/univariate.hpp"
#include "horikawa/errors.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace horikawa {

UPoly::UPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

UPoly UPoly::monomial(int degree, const Rational& c)
{
    if (c == 0)
        return UPoly();
    std::vector<Rational> v(degree + 1, Rational(0));
    v[degree] = c;
    return UPoly(std::move(v));
}

void UPoly::trim()
{
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const Rational& UPoly::lc() const
{
    if (c_.empty())
        throw Error("leading coefficient of zero polynomial");
    return c_.back();
}

Rational UPoly::operator[](int i) const
{
    return i >= 0 && i < static_cast<int>(c_.size()) ? c_[i] : Rational(0);
}

UPoly UPoly::operator+(const UPoly& o) const
{
    std::vector<Rational> v(std::max(c_.size(), o.c_.size()), Rational(0));
    for (std::size_t i = 0; i < c_.size(); ++i) v[i] += c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) v[i] += o.c_[i];
    return UPoly(std::move(v));
}

UPoly UPoly::operator-(const UPoly& o) const { return *this + (-o); }

UPoly UPoly::operator*(const UPoly& o) const
{
    if (is_zero() || o.is_zero())
        return UPoly();
    std::vector<Rational> v(c_.size() + o.c_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < c_.size(); ++i)
        for (std::size_t j = 0; j < o.c_.size(); ++j) v[i + j] += c_[i] * o.c_[j];
    return UPoly(std::move(v));
}

UPoly UPoly::operator*(const Rational& k) const
{
    std::vector<Rational> v = c_;
    for (auto& x : v) x *= k;
    return UPoly(std::move(v));
}

UPoly UPoly::derivative() const
{
    if (c_.size() <= 1)
        return UPoly();
    std::vector<Rational> v(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) v[i - 1] = c_[i] * static_cast<long>(i);
    return UPoly(std::move(v));
}

UPoly UPoly::monic() const
{
    if (is_zero())
        return *this;
    return *this * (1 / lc());
}

Rational UPoly::eval(const Rational& x) const
{
    Rational s = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) s = s * x + *it;
    return s;
}

UPoly UPoly::compose_shift(const Rational& a) const
{
    // Horner in the shifted variable
    UPoly r;
    UPoly lin({a, Rational(1)});
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * lin + UPoly::constant(*it);
    return r;
}

std::string UPoly::str(const std::string& var) const
{
    return from_upoly(*this, {var}, 0).str();
}

void divmod(const UPoly& a, const UPoly& b, UPoly& q, UPoly& r)
{
    if (b.is_zero())
        throw DivisionByZero("polynomial division by zero");
    std::vector<Rational> rem = a.coeffs();
    int db = b.degree();
    int dq = a.degree() - db;
    if (dq < 0) {
        q = UPoly();
        r = a;
        return;
    }
    std::vector<Rational> quo(dq + 1, Rational(0));
    Rational inv = 1 / b.lc();
    for (int k = dq; k >= 0; --k) {
        Rational c = rem[k + db] * inv;
        quo[k] = c;
        if (c == 0) continue;
        for (int j = 0; j <= db; ++j) rem[k + j] -= c * b[j];
    }
    rem.resize(db);
    q = UPoly(std::move(quo));
    r = UPoly(std::move(rem));
}

UPoly operator%(const UPoly& a, const UPoly& b)
{
    UPoly q, r;
    divmod(a, b, q, r);
    return r;
}

UPoly operator/(const UPoly& a, const UPoly& b)
{
    UPoly q, r;
    divmod(a, b, q, r);
    if (!r.is_zero())
        throw Error("inexact univariate division");
    return q;
}

UPoly gcd(const UPoly& a, const UPoly& b)
{
    UPoly x = a, y = b;
    while (!y.is_zero()) {
        UPoly r = x % y;
        x = std::move(y);
        y = std::move(r);
    }
    return x.monic();
}

UPoly xgcd(const UPoly& a, const UPoly& b, UPoly& s, UPoly& t)
{
    UPoly r0 = a, r1 = b, s0 = UPoly::constant(1), s1, t0, t1 = UPoly::constant(1);
    while (!r1.is_zero()) {
        UPoly q, r;
        divmod(r0, r1, q, r);
        UPoly s2 = s0 - q * s1, t2 = t0 - q * t1;
        r0 = std::move(r1); r1 = std::move(r);
        s0 = std::move(s1); s1 = std::move(s2);
        t0 = std::move(t1); t1 = std::move(t2);
    }
    if (r0.is_zero()) {
        s = UPoly();
        t = UPoly();
        return r0;
    }
    Rational k = 1 / r0.lc();
    s = s0 * k;
    t = t0 * k;
    return r0 * k;
}

std::vector<std::pair<UPoly, int>> squarefree_decomposition(const UPoly& p)
{
    std::vector<std::pair<UPoly, int>> out;
    if (p.degree() <= 0)
        return out;
    UPoly f = p.monic();
    UPoly fp = f.derivative();
    UPoly a = gcd(f, fp);
    UPoly b = f / a;
    UPoly c = fp / a;
    UPoly d = c - b.derivative();
    for (int i = 1; b.degree() > 0; ++i) {
        UPoly g = gcd(b, d);
        if (g.degree() > 0)
            out.emplace_back(g, i);
        b = b / g;
        c = d / g;
        d = c - b.derivative();
    }
    return out;
}

namespace {

// integer coefficients with content 1 and positive leading coefficient
std::vector<Integer> primitive_integer(const UPoly& p)
{
    Integer l = 1;
    for (const auto& c : p.coeffs()) l = lcm(l, c.get_den());
    std::vector<Integer> v;
    Integer g = 0;
    for (const auto& c : p.coeffs()) {
        Rational s = c * l;
        v.push_back(s.get_num());
        g = gcd(g, s.get_num());
    }
    if (g != 0)
        for (auto& x : v) x /= g;
    if (!v.empty() && v.back() < 0)
        for (auto& x : v) x = -x;
    return v;
}

std::vector<Integer> prime_factors(Integer n)
{
    std::vector<Integer> primes;
    n = abs(n);
    for (unsigned long d = 2; d <= 1000000UL && Integer(d) * d <= n; ++d) {
        if (n % d == 0) {
            primes.emplace_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) {
        if (n < Integer("1000000000000") || mpz_probab_prime_p(n.get_mpz_t(), 40) > 0)
            primes.push_back(n);
        else
            throw Error("integer " + n.get_str() + " too large to factor by trial division");
    }
    return primes;
}

std::vector<Integer> divisors(const Integer& n)
{
    Integer m = abs(n);
    std::vector<Integer> ds{1};
    for (const auto& p : prime_factors(m)) {
        std::vector<Integer> next;
        Integer pk = 1;
        while (m % p == 0) {
            m /= p;
            pk *= p;
            for (const auto& d : ds) next.push_back(d * pk);
        }
        ds.insert(ds.end(), next.begin(), next.end());
    }
    std::sort(ds.begin(), ds.end());
    return ds;
}

UPoly from_integers(const std::vector<Integer>& v)
{
    std::vector<Rational> c;
    for (const auto& x : v) c.emplace_back(x);
    return UPoly(std::move(c));
}

UPoly interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys)
{
    UPoly r;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        UPoly basis = UPoly::constant(1);
        Rational denom = 1;
        for (std::size_t j = 0; j < xs.size(); ++j) {
            if (j == i) continue;
            basis = basis * UPoly({-xs[j], Rational(1)});
            denom *= xs[i] - xs[j];
        }
        r = r + basis * (ys[i] / denom);
    }
    return r;
}

// Kronecker search for a factor of exact degree k of a primitive integer polynomial.
bool kronecker_factor(const UPoly& p, int k, UPoly& factor)
{
    struct Sample { Rational x; Integer value; std::size_t ndiv; };
    std::vector<Sample> samples;
    for (int x = -12; x <= 12; ++x) {
        Rational v = p.eval(Rational(x));
        if (v == 0)
            return false; // caller strips rational roots first
        samples.push_back({Rational(x), v.get_num(), divisors(v.get_num()).size()});
    }
    std::sort(samples.begin(), samples.end(),
              [](const Sample& a, const Sample& b) { return a.ndiv < b.ndiv; });
    samples.resize(k + 1);

    std::vector<std::vector<Integer>> choices;
    double combos = 1;
    for (std::size_t i = 0; i < samples.size(); ++i) {
        std::vector<Integer> ds;
        for (const auto& d : divisors(samples[i].value)) {
            ds.push_back(d);
            if (i > 0) ds.push_back(-d); // fix the overall sign on the first sample
        }
        combos *= static_cast<double>(ds.size());
        choices.push_back(std::move(ds));
    }
    if (combos > 5e6)
        throw Error("Kronecker factor search too large");

    std::vector<Rational> xs, ys(k + 1);
    for (const auto& s : samples) xs.push_back(s.x);
    std::function<bool(std::size_t)> rec = [&](std::size_t i) -> bool {
        if (i == choices.size()) {
            UPoly g = interpolate(xs, ys);
            if (g.degree() != k)
                return false;
            for (const auto& c : g.coeffs())
                if (!is_integer(c)) return false;
            if ((p % g).is_zero()) {
                factor = g.monic();
                return true;
            }
            return false;
        }
        for (const auto& d : choices[i]) {
            ys[i] = Rational(d);
            if (rec(i + 1)) return true;
        }
        return false;
    };
    return rec(0);
}

void split_irreducible(const UPoly& f, std::vector<UPoly>& out)
{
    if (f.degree() <= 3) {
        out.push_back(f.monic());
        return;
    }
    UPoly prim = from_integers(primitive_integer(f));
    for (int k = 2; k <= f.degree() / 2; ++k) {
        UPoly g;
        if (kronecker_factor(prim, k, g)) {
            split_irreducible(g, out);
            split_irreducible(f / g, out);
            return;
        }
    }
    out.push_back(f.monic());
}

} // namespace

std::vector<Rational> rational_roots(const UPoly& p)
{
    std::vector<Rational> roots;
    if (p.degree() <= 0)
        return roots;
    UPoly sf = p / gcd(p, p.derivative());
    std::vector<Integer> v = primitive_integer(sf);
    std::size_t low = 0;
    while (low < v.size() && v[low] == 0) ++low;
    if (low > 0)
        roots.emplace_back(0);
    v.erase(v.begin(), v.begin() + static_cast<long>(low));
    if (v.size() > 1) {
        UPoly q = from_integers(v);
        for (const auto& s : divisors(v.back()))
            for (const auto& r : divisors(v.front())) {
                if (gcd(r, s) != 1) continue;
                for (int sign : {1, -1}) {
                    Rational cand(r * sign, s);
                    cand.canonicalize();
                    if (q.eval(cand) == 0) roots.push_back(cand);
                }
            }
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

std::vector<std::pair<UPoly, int>> factor_over_q(const UPoly& p)
{
    std::vector<std::pair<UPoly, int>> out;
    for (const auto& [f, m] : squarefree_decomposition(p)) {
        UPoly rest = f;
        for (const auto& r : rational_roots(f)) {
            UPoly lin({-r, Rational(1)});
            out.emplace_back(lin, m);
            rest = rest / lin;
        }
        if (rest.degree() > 0) {
            std::vector<UPoly> irr;
            split_irreducible(rest, irr);
            for (auto& g : irr) out.emplace_back(g, m);
        }
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.first.degree() != b.first.degree()) return a.first.degree() < b.first.degree();
        if (a.second != b.second) return a.second > b.second;
        return a.first.coeffs() < b.first.coeffs();
    });
    return out;
}

UPoly to_upoly(const Polynomial& p, std::size_t var)
{
    std::vector<Rational> c(std::max(p.degree_in(var), 0) + 1, Rational(0));
    for (const auto& [e, k] : p.terms()) {
        for (std::size_t i = 0; i < e.size(); ++i)
            if (i != var && e[i] != 0)
                throw VariableMismatch("polynomial is not univariate in '" + p.vars()[var] + "'");
        c[e[var]] = k;
    }
    return UPoly(std::move(c));
}

Polynomial from_upoly(const UPoly& u, const std::vector<std::string>& vars, std::size_t var)
{
    Polynomial p(vars);
    for (int i = 0; i <= u.degree(); ++i) {
        Exponent e(vars.size(), 0);
        e[var] = i;
        p.add_term(e, u[i]);
    }
    return p;
}

} // namespace horikawa
