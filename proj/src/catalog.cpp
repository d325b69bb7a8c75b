#include "horikawa/catalog.hpp"
#include "horikawa/errors.hpp"

#include <algorithm>
#include <array>
#include <numeric>

namespace horikawa {

namespace {

struct Model {
    Sigma sigma;
    std::pair<int, int> lead1, lead2, mod;  // exponents of (y, z)
};

// principal part lead1 + lead2, modulus monomial mod
const std::array<Model, 8> models{{
    {Sigma::E12, {0, 3}, {7, 0}, {5, 1}},
    {Sigma::E13, {0, 3}, {5, 1}, {8, 0}},
    {Sigma::E14, {0, 3}, {8, 0}, {6, 1}},
    {Sigma::Z11, {1, 3}, {5, 0}, {4, 1}},
    {Sigma::Z12, {1, 3}, {4, 1}, {3, 2}},
    {Sigma::Z13, {1, 3}, {6, 0}, {5, 1}},
    {Sigma::W12, {0, 4}, {5, 0}, {3, 2}},
    {Sigma::W13, {0, 4}, {4, 1}, {6, 0}},
}};

const Model& model(Sigma s) { return models[index_of(s)]; }

int column(int i, int j)
{
    int d = i + j;
    return d * (d + 1) / 2 + j;
}

// dim C[y,z] / (J + m^N) with J = (fy, fz)
int jacobian_colength(const Polynomial& fy, const Polynomial& fz, int N)
{
    using Row = std::map<int, Rational>;
    std::map<int, Row> pivots;
    int rank = 0;
    for (const Polynomial* g : {&fy, &fz}) {
        for (int d = 0; d < N; ++d) {
            for (int j = 0; j <= d; ++j) {
                int i = d - j;
                Row r;
                for (const auto& [e, c] : g->terms()) {
                    int ey = e[0] + i, ez = e[1] + j;
                    if (ey + ez < N) r[column(ey, ez)] += c;
                }
                for (auto it = r.begin(); it != r.end();)
                    it = it->second == 0 ? r.erase(it) : std::next(it);
                while (!r.empty()) {
                    auto [c0, v0] = *r.begin();
                    auto pv = pivots.find(c0);
                    if (pv == pivots.end()) {
                        pivots.emplace(c0, std::move(r));
                        ++rank;
                        break;
                    }
                    Rational k = v0 / pv->second.at(c0);
                    for (const auto& [cc, pvv] : pv->second) {
                        Rational& slot = r[cc];
                        slot -= k * pvv;
                        if (slot == 0) r.erase(cc);
                    }
                }
            }
        }
    }
    return N * (N + 1) / 2 - rank;
}

bool matches_weighted(const Polynomial& f, std::vector<int> w, int degree, int expected_mu, int mu)
{
    if (mu != expected_mu || f.min_weighted_degree(w) != degree)
        return false;
    try {
        return milnor_number(f.weighted_part(w, degree)) == expected_mu;
    } catch (const NonIsolated&) {
        return false;
    }
}

Polynomial swap_vars(const Polynomial& f)
{
    Polynomial g(f.vars());
    for (const auto& [e, c] : f.terms()) g.add_term({e[1], e[0]}, c);
    return g;
}

std::optional<Rational> read_modulus(const Polynomial& f, const Model& m)
{
    Exponent l1{m.lead1.first, m.lead1.second}, l2{m.lead2.first, m.lead2.second}, md{m.mod.first, m.mod.second};
    if (f.coeff(l1) != 1 || f.coeff(l2) != 1)
        return std::nullopt;
    std::size_t expected = 2 + (f.coeff(md) != 0 ? 1 : 0);
    if (f.size() != expected)
        return std::nullopt;
    return f.coeff(md);
}

} // namespace

std::string LocalType::name() const
{
    switch (kind) {
    case LocalKind::Smooth: return "A0";
    case LocalKind::A: return "A" + std::to_string(k);
    case LocalKind::D: return "D" + std::to_string(k);
    case LocalKind::E6: return "E6";
    case LocalKind::E7: return "E7";
    case LocalKind::E8: return "E8";
    case LocalKind::Etilde7: return "Etilde7";
    case LocalKind::Etilde8: return "Etilde8";
    case LocalKind::Exceptional: return horikawa::name(sigma);
    case LocalKind::N16: return "N16";
    case LocalKind::Unknown: return "unknown";
    }
    return "unknown";
}

bool LocalType::same_type(const LocalType& o) const
{
    if (kind != o.kind)
        return false;
    if (kind == LocalKind::A || kind == LocalKind::D)
        return k == o.k;
    if (kind == LocalKind::Exceptional)
        return sigma == o.sigma;
    return true;
}

LocalType exceptional(Sigma s)
{
    LocalType t;
    t.kind = LocalKind::Exceptional;
    t.sigma = s;
    return t;
}

LocalType parse_local_type(std::string_view text)
{
    std::string s(text);
    LocalType t;
    auto indexed = [&](LocalKind kind, int min_k) {
        std::string digits = s.substr(1);
        if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
            return false;
        t.kind = kind;
        t.k = std::stoi(digits);
        if (t.k < min_k)
            throw UnknownName("bad index in '" + s + "'");
        if (kind == LocalKind::A && t.k == 0) t.kind = LocalKind::Smooth;
        return true;
    };
    if (s == "smooth") { t.kind = LocalKind::Smooth; return t; }
    if (s == "E6") { t.kind = LocalKind::E6; return t; }
    if (s == "E7") { t.kind = LocalKind::E7; return t; }
    if (s == "E8") { t.kind = LocalKind::E8; return t; }
    if (s == "Etilde7" || s == "E~7" || s == "\xE1\xBA\xBC" "7") { t.kind = LocalKind::Etilde7; return t; }
    if (s == "Etilde8" || s == "E~8" || s == "\xE1\xBA\xBC" "8") { t.kind = LocalKind::Etilde8; return t; }
    if (s == "N16") { t.kind = LocalKind::N16; return t; }
    for (Sigma sg : all_sigmas)
        if (s == name(sg)) return exceptional(sg);
    if (!s.empty() && s[0] == 'A' && indexed(LocalKind::A, 0)) return t;
    if (!s.empty() && s[0] == 'D' && indexed(LocalKind::D, 4)) return t;
    throw UnknownName("unknown singularity type '" + s + "'");
}

int milnor_number(const Polynomial& f)
{
    if (f.nvars() != 2)
        throw VariableMismatch("milnor_number expects a polynomial in two variables");
    Polynomial fy = f.derivative(std::size_t{0}), fz = f.derivative(std::size_t{1});
    if (fy.constant_term() != 0 || fz.constant_term() != 0)
        return 0;
    // Equal colengths at N and N+1 force m^N inside J by Nakayama, so the value is final.
    int bound = 2 * std::max(f.degree(), 4) + 8;
    for (int N = 2; N <= bound; N *= 2) {
        int a = jacobian_colength(fy, fz, N);
        if (a == jacobian_colength(fy, fz, N + 1))
            return a;
    }
    throw NonIsolated("singularity at the origin is not isolated: '" + f.str() + "'");
}

LocalType classify_local(const Polynomial& f)
{
    if (f.nvars() != 2)
        throw VariableMismatch("classify_local expects a polynomial in two variables");
    if (f.constant_term() != 0)
        throw Error("germ does not vanish at the origin");
    LocalType t;
    if (f.coeff({1, 0}) != 0 || f.coeff({0, 1}) != 0) {
        t.kind = LocalKind::Smooth;
        return t;
    }
    Rational a = f.coeff({2, 0}), b = f.coeff({1, 1}), c = f.coeff({0, 2});
    bool quadratic = a != 0 || b != 0 || c != 0;
    if (quadratic && b * b - 4 * a * c != 0) {
        t.kind = LocalKind::A;
        t.k = 1;
        return t;
    }
    int mu = milnor_number(f);
    if (quadratic) {
        // corank one germs are A_mu
        t.kind = LocalKind::A;
        t.k = mu;
        return t;
    }
    Polynomial g = swap_vars(f);
    for (const Polynomial* h : std::array<const Polynomial*, 2>{&f, &g}) {
        if (matches_weighted(*h, {1, 1}, 4, 9, mu)) { t.kind = LocalKind::Etilde7; return t; }
        if (matches_weighted(*h, {2, 1}, 6, 10, mu)) { t.kind = LocalKind::Etilde8; return t; }
        if (matches_weighted(*h, {1, 1}, 5, 16, mu)) { t.kind = LocalKind::N16; return t; }
        for (Sigma s : all_sigmas) {
            const auto& I = info(s);
            if (matches_weighted(*h, {I.p, I.q}, I.d, I.mu, mu)) {
                t = exceptional(s);
                t.modulus = read_modulus(*h, model(s));
                return t;
            }
        }
    }
    return t;
}

std::optional<int> milnor_of(const LocalType& t)
{
    switch (t.kind) {
    case LocalKind::Smooth: return 0;
    case LocalKind::A:
    case LocalKind::D: return t.k;
    case LocalKind::E6: return 6;
    case LocalKind::E7: return 7;
    case LocalKind::E8: return 8;
    case LocalKind::Etilde7: return 9;
    case LocalKind::Etilde8: return 10;
    case LocalKind::Exceptional: return info(t.sigma).mu;
    case LocalKind::N16: return 16;
    case LocalKind::Unknown: return std::nullopt;
    }
    return std::nullopt;
}

int modality(const LocalType& t)
{
    switch (t.kind) {
    case LocalKind::Smooth:
    case LocalKind::A:
    case LocalKind::D:
    case LocalKind::E6:
    case LocalKind::E7:
    case LocalKind::E8: return 0;
    case LocalKind::Etilde7:
    case LocalKind::Etilde8:
    case LocalKind::Exceptional: return 1;
    case LocalKind::N16: return 2;
    case LocalKind::Unknown: break;
    }
    throw UnknownName("modality of an unknown singularity type");
}

bool is_log_canonical(const LocalType& t)
{
    switch (t.kind) {
    case LocalKind::Smooth:
    case LocalKind::A:
    case LocalKind::D:
    case LocalKind::E6:
    case LocalKind::E7:
    case LocalKind::E8:
    case LocalKind::Etilde7:
    case LocalKind::Etilde8: return true;
    default: return false;
    }
}

Polynomial local_model(Sigma s, const Rational& a)
{
    const Model& m = model(s);
    Polynomial f({"y", "z"});
    f.add_term({m.lead1.first, m.lead1.second}, 1);
    f.add_term({m.lead2.first, m.lead2.second}, 1);
    f.add_term({m.mod.first, m.mod.second}, a);
    return f;
}

std::string normal_form_text(Sigma s)
{
    const Model& m = model(s);
    auto mono = [](std::pair<int, int> e) {
        std::string out;
        auto put = [&](const char* v, int k) {
            if (k == 0) return;
            if (!out.empty()) out += "*";
            out += v;
            if (k > 1) out += "^" + std::to_string(k);
        };
        put("y", e.first);
        put("z", e.second);
        return out;
    };
    return mono(m.lead1) + " + " + mono(m.lead2) + " + a*" + mono(m.mod);
}

int branch_count(Sigma s)
{
    const Model& m = model(s);
    int a = std::min(m.lead1.first, m.lead2.first), b = std::min(m.lead1.second, m.lead2.second);
    // what is left is y^i + z^j with i or j possibly zero on one side
    int i = std::max(m.lead1.first, m.lead2.first) - a;
    int j = std::max(m.lead1.second, m.lead2.second) - b;
    return (a > 0) + (b > 0) + std::gcd(i, j);
}

const std::vector<std::string>& adjacency_nodes()
{
    static const std::vector<std::string> nodes{"Etilde8", "E12", "E13", "E14", "Etilde7",
                                                "Z11",     "Z12", "Z13", "W12", "W13"};
    return nodes;
}

const std::vector<std::pair<std::string, std::string>>& adjacency_edges()
{
    static const std::vector<std::pair<std::string, std::string>> edges{
        {"Etilde8", "E12"}, {"E12", "E13"}, {"E13", "E14"}, {"Etilde7", "Z11"}, {"Z11", "Z12"},
        {"Z12", "Z13"},     {"Z11", "W12"}, {"Z12", "W13"}, {"W12", "W13"}};
    return edges;
}

Adjacency adjacency(const std::string& node)
{
    const auto& nodes = adjacency_nodes();
    if (std::find(nodes.begin(), nodes.end(), node) == nodes.end())
        throw UnknownName("'" + node + "' is not in the adjacency diagram");
    Adjacency a;
    for (const auto& [from, to] : adjacency_edges()) {
        if (from == node) a.degenerates_to.push_back(to);
        if (to == node) a.deforms_to.push_back(from);
    }
    return a;
}

CatalogRecord catalog_record(Sigma s)
{
    const auto& I = info(s);
    return {I.name, I.p, I.q, I.d, I.mu, 1, normal_form_text(s), adjacency(I.name)};
}

} // namespace horikawa
