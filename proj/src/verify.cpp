#include "horikawa/verify.hpp"
#include "horikawa/errors.hpp"
#include "horikawa/sextic.hpp"
#include "horikawa/tables.hpp"

namespace horikawa {

namespace {

int small(std::mt19937_64& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

Polynomial random_form(std::mt19937_64& rng, int degree)
{
    Polynomial f(xy_vars());
    for (int i = 0; i <= degree; ++i) f.add_term({i, degree - i}, small(rng, -5, 5));
    return f;
}

} // namespace

Sl2 random_sl2(std::mt19937_64& rng)
{
    // product of elementary matrices, so the determinant is exactly 1
    Sl2 g{1, 0, 0, 1};
    for (int step = 0; step < 3; ++step) {
        Rational k(small(rng, -3, 3), small(rng, 1, 3));
        k.canonicalize();
        if (step % 2 == 0)
            g = {g[0] + k * g[2], g[1] + k * g[3], g[2], g[3]};
        else
            g = {g[0], g[1], g[2] + k * g[0], g[3] + k * g[1]};
    }
    return g;
}

NormalForm apply_sl2(const NormalForm& nf, const Sl2& g)
{
    Polynomial x = Polynomial::var(xy_vars(), "x"), y = Polynomial::var(xy_vars(), "y");
    std::map<std::string, Polynomial> images{{"x", x * g[0] + y * g[1]}, {"y", x * g[2] + y * g[3]}};
    return make_normal_form(nf.q4.substitute(images), nf.q6.substitute(images), nf.q8.substitute(images),
                            nf.q10.substitute(images));
}

NormalForm destabilized_shape(std::mt19937_64& rng)
{
    Polynomial x = Polynomial::var(xy_vars(), "x");
    std::vector<Polynomial> q;
    for (int k = 2; k <= 5; ++k) q.push_back(x.pow(k) * random_form(rng, k));
    return make_normal_form(q[0], q[1], q[2], q[3]);
}

NormalForm fermat_form()
{
    auto f = [](int n) { return Polynomial::parse("x^" + std::to_string(n) + " + y^" + std::to_string(n), xy_vars()); };
    return make_normal_form(f(4), f(6), f(8), f(10));
}

UElement generic_u(Sigma s)
{
    const auto& I = info(s);
    std::map<Mon, Rational> c;
    if (has_sextic_model(s)) {
        c = sextic_preimage(sample_sextic(s)).coefficients();
    } else {
        c = {{{0, 0, 5}, 1}, {I.m1, 1}, {I.m2, 1}, {{0, 10, 0}, 1}};
    }
    c[{10, 0, 0}] = 1;
    return UElement(s, c);
}

Polynomial dvr_perturbation(const UElement& u, std::mt19937_64& rng)
{
    Sigma s = u.sigma();
    const auto& I = info(s);
    Polynomial f = t_action(u, "s").with_vars(sxyz_vars());
    Rational tied = 0;
    int tied_order = 0;
    for (const auto& [m, c] : u.coefficients()) {
        if (small(rng, 0, 1) == 0) continue;
        int w = weight(s, m);
        int order = (w < 0 ? -w : 0) + small(rng, 1, 4);
        Rational k(small(rng, -6, 6), small(rng, 1, 4));
        k.canonicalize();
        if (m == I.m1 || m == I.m2) {
            // one perturbation shared by both weight-zero monomials
            if (tied == 0) {
                tied = k;
                tied_order = order;
            }
            continue;
        }
        f.add_term({order, m.a, m.b, m.c}, k);
    }
    if (tied != 0) {
        f.add_term({tied_order, I.m1.a, I.m1.b, I.m1.c}, tied);
        f.add_term({tied_order, I.m2.a, I.m2.b, I.m2.c}, tied);
    }
    return f;
}

std::vector<CheckResult> verify_tables()
{
    std::vector<CheckResult> out;
    for (const auto& id : table_ids()) {
        TableReport r = compute_table(id);
        std::string detail;
        for (const auto& m : r.mismatches) detail += (detail.empty() ? "" : "; ") + m;
        out.push_back({"table " + id, r.ok(), detail});
    }
    return out;
}

std::vector<CheckResult> verify_gamma(int points, std::uint64_t seed)
{
    std::vector<CheckResult> out;
    for (Sigma s : all_sigmas) {
        GammaIdeal G = gamma_ideal(s);
        bool sub = gamma_substitution_check(G);
        bool rnd = gamma_random_check(G, points, seed + static_cast<std::uint64_t>(index_of(s)));
        out.push_back({"gamma " + name(s), sub && rnd,
                       std::to_string(G.generators.size()) + " generators, substitution " + (sub ? "ok" : "FAILED") +
                           ", random " + (rnd ? "ok" : "FAILED")});
    }
    return out;
}

std::vector<CheckResult> verify_git(int conjugates, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    std::vector<CheckResult> out;
    NormalForm fermat = fermat_form();
    out.push_back({"git fermat stable", is_git_stable(fermat).stable, ""});
    int bad = 0;
    for (int i = 0; i < 10; ++i) {
        GitResult r = is_git_stable(destabilized_shape(rng));
        if (r.stable || r.witness != std::optional<std::string>("x")) ++bad;
    }
    out.push_back({"git destabilized shapes", bad == 0, std::to_string(bad) + " of 10 wrong"});
    NormalForm shape = destabilized_shape(rng);
    bad = 0;
    for (int i = 0; i < conjugates; ++i) {
        Sl2 g = random_sl2(rng);
        if (is_git_stable(apply_sl2(fermat, g)).stable != true) ++bad;
        if (is_git_stable(apply_sl2(shape, g)).stable != false) ++bad;
    }
    out.push_back({"git sl2 invariance", bad == 0, std::to_string(bad) + " verdict changes"});
    return out;
}

std::vector<CheckResult> verify_dvr(int perturbations, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    std::vector<CheckResult> out;
    for (Sigma s : all_sigmas) {
        UElement u = generic_u(s);
        int bad = 0;
        std::string first;
        for (int i = 0; i < perturbations; ++i) {
            Polynomial f = dvr_perturbation(u, rng);
            try {
                DvrComparison c = dvr_compare(f, s);
                if (!c.identical || !(c.witness == u)) ++bad;
            } catch (const Error& e) {
                ++bad;
                if (first.empty()) first = e.what();
            }
        }
        out.push_back({"dvr " + name(s), bad == 0, std::to_string(bad) + " failures" + (first.empty() ? "" : ": " + first)});
    }
    return out;
}

std::vector<CheckResult> verify_all(std::uint64_t seed)
{
    std::vector<CheckResult> out = verify_tables();
    for (auto part : {verify_gamma(100, seed), verify_git(50, seed), verify_dvr(20, seed)})
        out.insert(out.end(), part.begin(), part.end());
    for (Sigma s : all_sigmas)
        out.push_back({"ksq toric " + name(s), k_squared_toric(s) == k_squared_closed_form(s),
                       to_string(k_squared_toric(s)) + " vs " + to_string(k_squared_closed_form(s))});
    return out;
}

} // namespace horikawa
