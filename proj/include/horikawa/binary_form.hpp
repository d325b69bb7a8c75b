#pragma once

#include "horikawa/polynomial.hpp"
#include "horikawa/univariate.hpp"

#include <optional>
#include <vector>

namespace horikawa {

// Homogeneous forms in two variables. "Monic" means the lex leading
// coefficient (largest power of the first variable) is 1.

bool is_binary_form(const Polynomial& f);

// Degree of a nonzero binary form; nullopt for the zero form.
std::optional<int> form_degree(const Polynomial& f);

Polynomial normalize_form(const Polynomial& f);

// gcd of binary forms. The zero form is divisible by everything, so it acts as
// the identity; gcd(0, 0) = 0.
Polynomial binary_gcd(const Polynomial& f, const Polynomial& g);

// All partial derivatives of order exactly k.
std::vector<Polynomial> partials_of_order(const Polynomial& f, int k);

struct LinearFactor {
    Polynomial form;  // monic linear form
    int multiplicity;
};

// Linear factors with rational coefficients.
std::vector<LinearFactor> rational_linear_factors(const Polynomial& f);

struct FormFactor {
    Polynomial form;  // monic irreducible over Q
    int multiplicity;
};

// Complete factorisation over Q.
std::vector<FormFactor> factor_form(const Polynomial& f);

// Dehomogenise at the second variable = 1, as a univariate in the first.
UPoly dehomogenize(const Polynomial& f);
Polynomial homogenize(const UPoly& u, int degree, const std::vector<std::string>& vars);

} // namespace horikawa
