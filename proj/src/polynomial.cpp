#include "horikawa/polynomial.hpp"
#include "horikawa/errors.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

namespace horikawa {

bool GrlexGreater::operator()(const Exponent& a, const Exponent& b) const
{
    int da = 0, db = 0;
    for (int e : a) da += e;
    for (int e : b) db += e;
    if (da != db)
        return da > db;
    return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

int weighted_degree(const Exponent& e, const std::vector<int>& weights)
{
    int s = 0;
    for (std::size_t i = 0; i < e.size(); ++i)
        s += e[i] * weights.at(i);
    return s;
}

Polynomial::Polynomial(std::vector<std::string> vars) : vars_(std::move(vars)) {}

Polynomial::Polynomial(std::vector<std::string> vars, const Rational& c) : vars_(std::move(vars))
{
    if (c != 0)
        terms_[Exponent(vars_.size(), 0)] = c;
}

Polynomial Polynomial::var(const std::vector<std::string>& vars, const std::string& name)
{
    Polynomial p(vars);
    int i = p.var_index(name);
    if (i < 0)
        throw VariableMismatch("variable '" + name + "' not in ring");
    Exponent e(vars.size(), 0);
    e[i] = 1;
    p.terms_[e] = 1;
    return p;
}

Polynomial Polynomial::term(const std::vector<std::string>& vars, Exponent e, const Rational& c)
{
    if (e.size() != vars.size())
        throw VariableMismatch("exponent length does not match ring");
    Polynomial p(vars);
    p.add_term(e, c);
    return p;
}

int Polynomial::var_index(const std::string& name) const
{
    auto it = std::find(vars_.begin(), vars_.end(), name);
    return it == vars_.end() ? -1 : static_cast<int>(it - vars_.begin());
}

bool Polynomial::is_constant() const
{
    return terms_.empty() || (terms_.size() == 1 && degree() == 0);
}

int Polynomial::degree() const
{
    if (terms_.empty())
        return -1;
    int d = 0;
    for (int e : terms_.begin()->first) d += e;
    return d;
}

int Polynomial::degree_in(std::size_t i) const
{
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, e[i]);
    return d;
}

int Polynomial::min_degree_in(std::size_t i) const
{
    if (terms_.empty())
        return -1;
    int d = terms_.begin()->first[i];
    for (const auto& [e, c] : terms_) d = std::min(d, e[i]);
    return d;
}

Rational Polynomial::coeff(const Exponent& e) const
{
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

Rational Polynomial::constant_term() const { return coeff(Exponent(vars_.size(), 0)); }

const std::pair<const Exponent, Rational>& Polynomial::leading() const
{
    if (terms_.empty())
        throw Error("leading term of zero polynomial");
    return *terms_.begin();
}

void Polynomial::add_term(const Exponent& e, const Rational& c)
{
    if (e.size() != vars_.size())
        throw VariableMismatch("exponent of length " + std::to_string(e.size()) + " in a ring with " +
                               std::to_string(vars_.size()) + " variables");
    if (c == 0)
        return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (inserted) {
        it->second.canonicalize();
    } else {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

void Polynomial::require_same_ring(const Polynomial& o) const
{
    if (vars_ != o.vars_)
        throw VariableMismatch("polynomials live in different rings");
}

Polynomial& Polynomial::operator+=(const Polynomial& o)
{
    require_same_ring(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o)
{
    require_same_ring(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& o)
{
    *this = *this * o;
    return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c)
{
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, v] : terms_) v *= c;
    return *this;
}

Polynomial Polynomial::operator-() const
{
    Polynomial r = *this;
    for (auto& [e, v] : r.terms_) v = -v;
    return r;
}

Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }

Polynomial operator*(const Polynomial& a, const Polynomial& b)
{
    if (a.vars() != b.vars())
        throw VariableMismatch("polynomials live in different rings");
    Polynomial r(a.vars());
    Exponent e(a.nvars());
    for (const auto& [ea, ca] : a.terms())
        for (const auto& [eb, cb] : b.terms()) {
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    return r;
}

Polynomial Polynomial::pow(unsigned n) const
{
    Polynomial result(vars_, 1);
    Polynomial base = *this;
    while (n) {
        if (n & 1u) result = result * base;
        n >>= 1u;
        if (n) base = base * base;
    }
    return result;
}

Polynomial Polynomial::derivative(std::size_t i) const
{
    Polynomial r(vars_);
    for (const auto& [e, c] : terms_) {
        if (e[i] == 0) continue;
        Exponent f = e;
        f[i] -= 1;
        r.add_term(f, c * e[i]);
    }
    return r;
}

Polynomial Polynomial::derivative(const std::string& name) const
{
    int i = var_index(name);
    if (i < 0)
        return Polynomial(vars_);
    return derivative(static_cast<std::size_t>(i));
}

Polynomial Polynomial::substitute(const std::map<std::string, Polynomial>& images) const
{
    if (images.empty())
        return *this;
    const std::vector<std::string>& target = images.begin()->second.vars();
    for (const auto& [name, img] : images)
        if (img.vars() != target)
            throw VariableMismatch("substitution images live in different rings");

    std::vector<Polynomial> image(vars_.size());
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        auto it = images.find(vars_[i]);
        image[i] = it != images.end() ? it->second : Polynomial::var(target, vars_[i]);
    }
    // powers are cached per variable since the same ones recur across terms
    std::vector<std::vector<Polynomial>> powers(vars_.size());
    auto power = [&](std::size_t i, int k) -> const Polynomial& {
        auto& cache = powers[i];
        if (cache.empty()) cache.push_back(Polynomial(target, 1));
        while (static_cast<int>(cache.size()) <= k) cache.push_back(cache.back() * image[i]);
        return cache[k];
    };
    Polynomial r(target);
    for (const auto& [e, c] : terms_) {
        Polynomial t(target, c);
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] > 0) t = t * power(i, e[i]);
        r += t;
    }
    return r;
}

Polynomial Polynomial::specialize(const std::map<std::string, Rational>& values) const
{
    std::vector<int> idx;
    std::vector<Rational> val;
    for (const auto& [name, v] : values) {
        int i = var_index(name);
        if (i < 0)
            throw VariableMismatch("variable '" + name + "' not in ring");
        idx.push_back(i);
        val.push_back(v);
    }
    Polynomial r(vars_);
    for (const auto& [e, c] : terms_) {
        Exponent f = e;
        Rational k = c;
        for (std::size_t j = 0; j < idx.size(); ++j) {
            Rational pw = 1;
            for (int t = 0; t < e[idx[j]]; ++t) pw *= val[j];
            k *= pw;
            f[idx[j]] = 0;
        }
        r.add_term(f, k);
    }
    return r;
}

Rational Polynomial::evaluate(const std::vector<Rational>& point) const
{
    if (point.size() != vars_.size())
        throw VariableMismatch("evaluation point has wrong length");
    Rational s = 0;
    for (const auto& [e, c] : terms_) {
        Rational t = c;
        for (std::size_t i = 0; i < e.size(); ++i)
            for (int k = 0; k < e[i]; ++k) t *= point[i];
        s += t;
    }
    return s;
}

Polynomial Polynomial::with_vars(const std::vector<std::string>& vars) const
{
    std::vector<int> where(vars_.size());
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        auto it = std::find(vars.begin(), vars.end(), vars_[i]);
        where[i] = it == vars.end() ? -1 : static_cast<int>(it - vars.begin());
    }
    Polynomial r(vars);
    for (const auto& [e, c] : terms_) {
        Exponent f(vars.size(), 0);
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (where[i] < 0)
                throw VariableMismatch("variable '" + vars_[i] + "' missing from target ring");
            f[where[i]] += e[i];
        }
        r.add_term(f, c);
    }
    return r;
}

std::vector<Polynomial> Polynomial::coefficients_in(std::size_t i) const
{
    std::vector<Polynomial> out(std::max(degree_in(i), 0) + 1, Polynomial(vars_));
    for (const auto& [e, c] : terms_) {
        Exponent f = e;
        f[i] = 0;
        out[e[i]].add_term(f, c);
    }
    return out;
}

bool Polynomial::is_weighted_homogeneous(const std::vector<int>& weights, int degree) const
{
    for (const auto& [e, c] : terms_)
        if (weighted_degree(e, weights) != degree)
            return false;
    return true;
}

int Polynomial::min_weighted_degree(const std::vector<int>& weights) const
{
    if (terms_.empty())
        throw Error("weighted degree of zero polynomial");
    int m = weighted_degree(terms_.begin()->first, weights);
    for (const auto& [e, c] : terms_) m = std::min(m, weighted_degree(e, weights));
    return m;
}

Polynomial Polynomial::weighted_part(const std::vector<int>& weights, int degree) const
{
    Polynomial r(vars_);
    for (const auto& [e, c] : terms_)
        if (weighted_degree(e, weights) == degree)
            r.terms_.emplace(e, c);
    return r;
}

std::string Polynomial::str() const
{
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        std::string mono;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += vars_[i];
            if (e[i] > 1) mono += "^" + std::to_string(e[i]);
        }
        Rational a = abs(c);
        if (first)
            os << (c < 0 ? "-" : "");
        else
            os << (c < 0 ? " - " : " + ");
        first = false;
        if (mono.empty())
            os << to_string(a);
        else if (a == 1)
            os << mono;
        else
            os << to_string(a) << "*" << mono;
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.str(); }

// --- parser -----------------------------------------------------------------

namespace {

struct Parser {
    const std::string& s;
    std::size_t pos = 0;
    std::vector<std::string> vars;

    void skip()
    {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eat(char ch)
    {
        skip();
        if (pos < s.size() && s[pos] == ch) {
            ++pos;
            return true;
        }
        return false;
    }
    [[noreturn]] void fail(const std::string& what) const
    {
        throw ParseError(what + " at position " + std::to_string(pos) + " in '" + s + "'");
    }

    Polynomial expr()
    {
        Polynomial acc = product();
        for (;;) {
            if (eat('+')) acc += product();
            else if (eat('-')) acc -= product();
            else return acc;
        }
    }
    Polynomial product()
    {
        Polynomial acc = unary();
        for (;;) {
            if (eat('*')) {
                acc = acc * unary();
            } else if (eat('/')) {
                Polynomial d = unary();
                if (!d.is_constant() || d.is_zero())
                    fail("division by a non-constant or zero");
                Rational inv = 1 / d.constant_term();
                acc *= inv;
            } else {
                return acc;
            }
        }
    }
    Polynomial unary()
    {
        if (eat('-')) return -unary();
        if (eat('+')) return unary();
        return power();
    }
    Polynomial power()
    {
        Polynomial base = atom();
        if (eat('^')) {
            skip();
            std::size_t start = pos;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
            if (start == pos)
                fail("expected exponent");
            base = base.pow(static_cast<unsigned>(std::stoul(s.substr(start, pos - start))));
        }
        return base;
    }
    Polynomial atom()
    {
        skip();
        if (pos >= s.size())
            fail("unexpected end of input");
        char ch = s[pos];
        if (ch == '(') {
            ++pos;
            Polynomial inner = expr();
            if (!eat(')'))
                fail("expected ')'");
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(ch))) {
            std::size_t start = pos;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
            return Polynomial(vars, Rational(Integer(s.substr(start, pos - start))));
        }
        if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
            std::size_t start = pos;
            while (pos < s.size() && (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_')) ++pos;
            std::string name = s.substr(start, pos - start);
            if (std::find(vars.begin(), vars.end(), name) == vars.end())
                throw VariableMismatch("unknown variable '" + name + "'");
            return Polynomial::var(vars, name);
        }
        fail(std::string("unexpected character '") + ch + "'");
    }
};

std::vector<std::string> scan_identifiers(const std::string& s)
{
    std::set<std::string> names;
    for (std::size_t i = 0; i < s.size();) {
        unsigned char ch = static_cast<unsigned char>(s[i]);
        if (std::isalpha(ch) || ch == '_') {
            std::size_t j = i;
            while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_')) ++j;
            names.insert(s.substr(i, j - i));
            i = j;
        } else {
            ++i;
        }
    }
    return {names.begin(), names.end()};
}

} // namespace

Polynomial Polynomial::parse(const std::string& text, const std::vector<std::string>& vars)
{
    Parser p{text};
    p.vars = vars.empty() ? scan_identifiers(text) : vars;
    Polynomial r = p.expr();
    p.skip();
    if (p.pos != text.size())
        p.fail("trailing input");
    return r;
}

// --- division and resultants -----------------------------------------------

Polynomial exact_divide(const Polynomial& a, const Polynomial& b)
{
    if (a.vars() != b.vars())
        throw VariableMismatch("polynomials live in different rings");
    if (b.is_zero())
        throw DivisionByZero("division by zero polynomial");
    if (b.is_constant())
        return a * (1 / b.constant_term());
    Polynomial q(a.vars()), r = a;
    const auto& [eb, cb] = b.leading();
    while (!r.is_zero()) {
        const auto& [er, cr] = r.leading();
        Exponent e(er.size());
        for (std::size_t i = 0; i < e.size(); ++i) {
            e[i] = er[i] - eb[i];
            if (e[i] < 0)
                throw Error("exact_divide: divisor does not divide dividend");
        }
        Polynomial t = Polynomial::term(a.vars(), e, cr / cb);
        q += t;
        r -= t * b;
    }
    return q;
}

namespace {

Polynomial sylvester_resultant(const Polynomial& f, const Polynomial& g, int vi)
{
    const auto& ring = f.vars();
    int m = f.degree_in(vi), n = g.degree_in(vi);
    auto fc = f.coefficients_in(vi), gc = g.coefficients_in(vi);
    int N = m + n;
    std::vector<std::vector<Polynomial>> M(N, std::vector<Polynomial>(N, Polynomial(ring)));
    for (int i = 0; i < n; ++i)
        for (int k = 0; k <= m; ++k) M[i][i + k] = fc[m - k];
    for (int i = 0; i < m; ++i)
        for (int k = 0; k <= n; ++k) M[n + i][i + k] = gc[n - k];

    // Bareiss elimination
    Polynomial prev(ring, 1);
    bool negate = false;
    for (int k = 0; k < N - 1; ++k) {
        if (M[k][k].is_zero()) {
            int r = k + 1;
            while (r < N && M[r][k].is_zero()) ++r;
            if (r == N)
                return Polynomial(ring);
            std::swap(M[k], M[r]);
            negate = !negate;
        }
        for (int i = k + 1; i < N; ++i) {
            for (int j = k + 1; j < N; ++j)
                M[i][j] = exact_divide(M[i][j] * M[k][k] - M[i][k] * M[k][j], prev);
            M[i][k] = Polynomial(ring);
        }
        prev = M[k][k];
    }
    Polynomial det = M[N - 1][N - 1];
    return negate ? -det : det;
}

} // namespace

Polynomial resultant(const Polynomial& f, const Polynomial& g, const std::string& v)
{
    if (f.vars() != g.vars())
        throw VariableMismatch("polynomials live in different rings");
    int vi = f.var_index(v);
    if (vi < 0)
        throw VariableMismatch("variable '" + v + "' not in ring");
    const auto& ring = f.vars();
    if (f.is_zero() || g.is_zero())
        return Polynomial(ring);
    int m = f.degree_in(vi), n = g.degree_in(vi);
    if (m == 0 || n == 0)
        throw DegreeZero("resultant: degree 0 in " + v);
    // Res(f, g) = prod of f over the roots of g, i.e. Sylvester(g, f)
    return sylvester_resultant(g, f, vi);
}

} // namespace horikawa
