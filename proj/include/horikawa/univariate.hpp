#pragma once

#include "horikawa/polynomial.hpp"

#include <string>
#include <utility>
#include <vector>

namespace horikawa {

// Dense univariate polynomial over Q, coefficients stored low degree first.
class UPoly {
public:
    UPoly() = default;
    explicit UPoly(std::vector<Rational> coeffs);
    static UPoly monomial(int degree, const Rational& c = 1);
    static UPoly constant(const Rational& c) { return monomial(0, c); }

    int degree() const { return static_cast<int>(c_.size()) - 1; } // -1 for zero
    bool is_zero() const { return c_.empty(); }
    const Rational& lc() const;
    Rational operator[](int i) const;
    const std::vector<Rational>& coeffs() const { return c_; }

    UPoly operator+(const UPoly& o) const;
    UPoly operator-(const UPoly& o) const;
    UPoly operator*(const UPoly& o) const;
    UPoly operator*(const Rational& k) const;
    UPoly operator-() const { return *this * Rational(-1); }
    bool operator==(const UPoly& o) const { return c_ == o.c_; }

    UPoly derivative() const;
    UPoly monic() const;
    Rational eval(const Rational& x) const;
    UPoly compose_shift(const Rational& a) const; // p(x + a)
    std::string str(const std::string& var = "x") const;

private:
    void trim();
    std::vector<Rational> c_;
};

void divmod(const UPoly& a, const UPoly& b, UPoly& q, UPoly& r);
UPoly operator%(const UPoly& a, const UPoly& b);
UPoly operator/(const UPoly& a, const UPoly& b); // exact quotient, throws on remainder

// Monic gcd; gcd(0, 0) = 0.
UPoly gcd(const UPoly& a, const UPoly& b);
// s*a + t*b = g with g monic
UPoly xgcd(const UPoly& a, const UPoly& b, UPoly& s, UPoly& t);

// Yun's algorithm: monic squarefree factors with their multiplicities.
std::vector<std::pair<UPoly, int>> squarefree_decomposition(const UPoly& p);

// Distinct rational roots, ascending.
std::vector<Rational> rational_roots(const UPoly& p);

// Irreducible monic factors over Q with multiplicities; the constant is dropped.
// Nonlinear factors are found with Kronecker's method, which is fine for the
// small degrees that show up on lines and binary forms.
std::vector<std::pair<UPoly, int>> factor_over_q(const UPoly& p);

UPoly to_upoly(const Polynomial& p, std::size_t var);
Polynomial from_upoly(const UPoly& u, const std::vector<std::string>& vars, std::size_t var);

} // namespace horikawa
