#pragma once
// Small independent re-derivations used as test oracles. None of this calls
// into the library beyond polynomial plumbing.
#include "horikawa/polynomial.hpp"

#include <array>
#include <map>
#include <string>
#include <vector>

namespace oracle {

using horikawa::Polynomial;
using horikawa::Rational;

struct Row {
    const char* name;
    int p, q, d, mu;
    std::array<int, 3> m1, m2;
};

// the Sigma table, typed in by hand
inline const std::array<Row, 8> kRows{{
    {"E12", 3, 7, 21, 12, {3, 7, 0}, {4, 0, 3}},
    {"E13", 2, 5, 15, 13, {3, 5, 1}, {4, 0, 3}},
    {"E14", 3, 8, 24, 14, {2, 8, 0}, {4, 0, 3}},
    {"Z11", 3, 4, 15, 11, {5, 5, 0}, {3, 1, 3}},
    {"Z12", 2, 3, 11, 12, {4, 4, 1}, {3, 1, 3}},
    {"Z13", 3, 5, 18, 13, {4, 6, 0}, {3, 1, 3}},
    {"W12", 4, 5, 20, 12, {5, 5, 0}, {2, 0, 4}},
    {"W13", 3, 4, 16, 13, {4, 4, 1}, {2, 0, 4}},
}};

inline std::vector<std::array<int, 3>> v10()
{
    std::vector<std::array<int, 3>> out;
    for (int c = 0; c <= 5; ++c)
        for (int b = 0; b + 2 * c <= 10; ++b) out.push_back({10 - b - 2 * c, b, c});
    return out;
}

inline int sign(const Row& r, const std::array<int, 3>& m)
{
    int w = r.p * m[1] + r.q * m[2] - r.d;
    return (w > 0) - (w < 0);
}

inline int count_degree(int p, int q, int d)
{
    int n = 0;
    for (int j = 0; p * j <= d; ++j)
        for (int k = 0; p * j + q * k <= d; ++k) ++n;
    return n;
}

inline Rational frac(long a, long b)
{
    Rational r(a, b);
    r.canonicalize();
    return r;
}

inline int rank(std::vector<std::vector<Rational>> m)
{
    int r = 0;
    std::size_t cols = m.empty() ? 0 : m[0].size();
    for (std::size_t c = 0; c < cols && r < static_cast<int>(m.size()); ++c) {
        std::size_t piv = r;
        while (piv < m.size() && m[piv][c] == 0) ++piv;
        if (piv == m.size()) continue;
        std::swap(m[piv], m[r]);
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i == static_cast<std::size_t>(r) || m[i][c] == 0) continue;
            Rational k = m[i][c] / m[r][c];
            for (std::size_t j = c; j < cols; ++j) m[i][j] -= k * m[r][j];
        }
        ++r;
    }
    return r;
}

// dim Q[y,z]/(f_y, f_z) for f weighted homogeneous (y, z weights wy, wz, degree d),
// summed graded piece by graded piece up past the socle degree.
inline int graded_milnor(const Polynomial& f, int wy, int wz, int d)
{
    const auto& V = f.vars();
    Polynomial fy = f.derivative(0), fz = f.derivative(1);
    int top = 2 * (d - wy - wz) + wy * wz;
    int total = 0;
    for (int k = 0; k <= top; ++k) {
        std::vector<std::array<int, 2>> mons;
        for (int i = 0; wy * i <= k; ++i)
            if ((k - wy * i) % wz == 0) mons.push_back({i, (k - wy * i) / wz});
        if (mons.empty()) continue;
        std::map<std::array<int, 2>, std::size_t> col;
        for (std::size_t i = 0; i < mons.size(); ++i) col[mons[i]] = i;
        std::vector<std::vector<Rational>> rows;
        for (const auto& [g, w] : {std::pair{fy, d - wy}, std::pair{fz, d - wz}}) {
            int rest = k - w;
            if (rest < 0 || g.is_zero()) continue;
            for (int i = 0; wy * i <= rest; ++i) {
                if ((rest - wy * i) % wz) continue;
                Polynomial h = g * Polynomial::term(V, {i, (rest - wy * i) / wz});
                std::vector<Rational> row(mons.size(), 0);
                for (const auto& [e, c] : h.terms()) row[col.at({e[0], e[1]})] = c;
                rows.push_back(row);
            }
        }
        int quotient = static_cast<int>(mons.size()) - rank(rows);
        if (k > 2 * (d - wy - wz) && quotient != 0) return -1;  // not finite
        total += quotient;
    }
    return total;
}

// A1 or A2 at the origin of g(u, v) (variables at indices iu, iv of g's ring).
inline int a_type_at_origin(const Polynomial& g, std::size_t iu, std::size_t iv)
{
    std::vector<Rational> zero(g.nvars(), 0);
    if (g.evaluate(zero) != 0 || g.derivative(iu).evaluate(zero) != 0 || g.derivative(iv).evaluate(zero) != 0)
        return -1;
    Rational a = g.derivative(iu).derivative(iu).evaluate(zero);
    Rational b = g.derivative(iu).derivative(iv).evaluate(zero);
    Rational c = g.derivative(iv).derivative(iv).evaluate(zero);
    if (a * c - b * b != 0) return 1;
    if (a == 0 && b == 0 && c == 0) return -1;
    // kernel direction of the Hessian, then the cubic along it
    std::vector<Rational> v = zero;
    if (a != 0 || b != 0) {
        v[iu] = -b;
        v[iv] = a;
    } else {
        v[iu] = c;
        v[iv] = -b;
    }
    std::vector<int> w(g.nvars(), 0);
    w[iu] = w[iv] = 1;
    return g.weighted_part(w, 3).evaluate(v) != 0 ? 2 : -1;
}

} // namespace oracle
