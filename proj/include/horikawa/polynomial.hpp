#pragma once

#include "horikawa/rational.hpp"

#include <map>
#include <ostream>
#include <string>
#include <vector>

namespace horikawa {

using Exponent = std::vector<int>;

// Orders exponents so that the graded-lex largest comes first.
struct GrlexGreater {
    bool operator()(const Exponent& a, const Exponent& b) const;
};

// Sparse multivariate polynomial over Q with an explicit, ordered variable list.
// Arithmetic between polynomials requires identical variable lists; use
// with_vars() to move a polynomial into a larger ring first.
class Polynomial {
public:
    using TermMap = std::map<Exponent, Rational, GrlexGreater>;

    Polynomial() = default;
    explicit Polynomial(std::vector<std::string> vars);
    Polynomial(std::vector<std::string> vars, const Rational& c);

    static Polynomial var(const std::vector<std::string>& vars, const std::string& name);
    static Polynomial term(const std::vector<std::string>& vars, Exponent e, const Rational& c = 1);

    // Text format: "3/2*x^2*y - z^5". Parentheses, +, -, *, ^ and division by a
    // nonzero constant are accepted. With an empty variable list the identifiers
    // found in the text become the variables, sorted alphabetically.
    static Polynomial parse(const std::string& text, const std::vector<std::string>& vars = {});

    const std::vector<std::string>& vars() const { return vars_; }
    std::size_t nvars() const { return vars_.size(); }
    int var_index(const std::string& name) const; // -1 when absent
    const TermMap& terms() const& { return terms_; }
    TermMap terms() && { return std::move(terms_); }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    std::size_t size() const { return terms_.size(); }
    int degree() const;                        // total degree, -1 for zero
    int degree_in(std::size_t i) const;        // -1 for zero
    int min_degree_in(std::size_t i) const;    // -1 for zero
    Rational coeff(const Exponent& e) const;
    Rational constant_term() const;
    const std::pair<const Exponent, Rational>& leading() const;

    void add_term(const Exponent& e, const Rational& c);

    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial& operator*=(const Polynomial& o);
    Polynomial& operator*=(const Rational& c);
    Polynomial operator-() const;
    Polynomial pow(unsigned n) const;

    Polynomial derivative(std::size_t i) const;
    Polynomial derivative(const std::string& name) const;

    // Simultaneous substitution. Every image must live in the same ring; that
    // ring is the result's ring. Unmapped variables map to themselves, so the
    // target ring has to contain them.
    Polynomial substitute(const std::map<std::string, Polynomial>& images) const;

    // Specialise some variables to constants, keeping the ring.
    Polynomial specialize(const std::map<std::string, Rational>& values) const;
    Rational evaluate(const std::vector<Rational>& point) const;

    // Same polynomial in another variable list. Throws if a used variable is missing.
    Polynomial with_vars(const std::vector<std::string>& vars) const;

    // Coefficients as a polynomial in variable i, index = power. Entries keep the ring.
    std::vector<Polynomial> coefficients_in(std::size_t i) const;

    bool is_weighted_homogeneous(const std::vector<int>& weights, int degree) const;
    int min_weighted_degree(const std::vector<int>& weights) const; // throws on zero
    Polynomial weighted_part(const std::vector<int>& weights, int degree) const;

    std::string str() const;

    bool operator==(const Polynomial& o) const { return vars_ == o.vars_ && terms_ == o.terms_; }
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

private:
    void require_same_ring(const Polynomial& o) const;

    std::vector<std::string> vars_;
    TermMap terms_;
};

Polynomial operator+(Polynomial a, const Polynomial& b);
Polynomial operator-(Polynomial a, const Polynomial& b);
Polynomial operator*(const Polynomial& a, const Polynomial& b);
Polynomial operator*(Polynomial a, const Rational& c);
Polynomial operator*(const Rational& c, Polynomial a);
std::ostream& operator<<(std::ostream& os, const Polynomial& p);

int weighted_degree(const Exponent& e, const std::vector<int>& weights);

// a / b when b divides a exactly; throws otherwise.
Polynomial exact_divide(const Polynomial& a, const Polynomial& b);

// Resultant with respect to the named variable, via a fraction-free Sylvester
// determinant. The result lives in the same ring and is free of that variable.
Polynomial resultant(const Polynomial& f, const Polynomial& g, const std::string& v);

} // namespace horikawa
