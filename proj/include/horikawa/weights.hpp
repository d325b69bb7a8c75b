#pragma once

#include "horikawa/polynomial.hpp"
#include "horikawa/sigma.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace horikawa {

// V10: forms x^a y^b z^c with a + b + 2c = 10 (deg z = 2), 36 monomials.
const std::vector<Mon>& v10_basis();
bool in_v10(const Mon& m);

const std::vector<std::string>& xyz_vars();   // x, y, z
const std::vector<std::string>& txyz_vars();  // t, x, y, z
const std::vector<std::string>& sxyz_vars();  // s, x, y, z
const std::vector<std::string>& tail_vars();  // t, alpha, beta

// wt(x^a y^b z^c) = p*b + q*c - d
int weight(Sigma s, const Mon& m);
int sign(Sigma s, const Mon& m);
std::vector<Mon> monomials_with_sign(Sigma s, int sgn);

// Number of monomials t^i alpha^j beta^k with i + p*j + q*k = d.
int degree_d_monomial_count(Sigma s);

// Element of U_Sigma: a V10 form whose m1 and m2 coefficients agree.
class UElement {
public:
    UElement(Sigma s, std::map<Mon, Rational> coeffs);
    static UElement from_polynomial(Sigma s, const Polynomial& f);

    Sigma sigma() const { return sigma_; }
    const std::map<Mon, Rational>& coefficients() const& { return coeffs_; }
    std::map<Mon, Rational> coefficients() && { return std::move(coeffs_); }
    Rational coeff(const Mon& m) const;
    bool is_regular() const; // coefficient of m1 nonzero
    Polynomial polynomial() const;

    bool operator==(const UElement& o) const { return sigma_ == o.sigma_ && coeffs_ == o.coeffs_; }

private:
    Sigma sigma_;
    std::map<Mon, Rational> coeffs_;
};

UElement pi_plus(const UElement& u);
UElement pi_zero(const UElement& u);
UElement pi_minus(const UElement& u);
UElement add(const UElement& u, const UElement& v);

// (pi_+ + pi_0, pi_0 + pi_-) and back; merge needs matching pi_0 parts.
std::pair<UElement, UElement> split(const UElement& u);
UElement merge(const UElement& head, const UElement& tail_part);

// Necessary conditions for Sigma-genericity that can be read off the coefficients.
struct GenericChecklist {
    bool z5_nonzero = false;
    bool regular = false;
    bool pair_equal_nonzero = false;
    bool all() const { return z5_nonzero && regular && pair_equal_nonzero; }
};
GenericChecklist sigma_generic_necessary(const UElement& u);

// t * u: negative-weight monomials pick up t^(-wt * scale). scale = 2 gives the
// t -> t^2 variant used when d is odd.
Polynomial t_action(const UElement& u, const std::string& t = "t", int scale = 1);

// x -> 1, y -> alpha, z -> beta on a polynomial in (t, x, y, z).
Polynomial theta(const Polynomial& f);

// theta((pi_0 + pi_-)(t * u)); weighted homogeneous of degree d for weights (1, p, q).
Polynomial tail(const UElement& u);

// Lowest-order term in s of each monomial coefficient; f lives in (s, x, y, z).
Polynomial dvr_truncate(const Polynomial& f);

// The regular u with tau(f) = s * u, or NotSigmaGeneric.
UElement dvr_witness(Sigma s, const Polynomial& f);

} // namespace horikawa
