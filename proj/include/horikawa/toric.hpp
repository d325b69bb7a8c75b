#pragma once

#include "horikawa/polynomial.hpp"
#include "horikawa/sigma.hpp"

#include <string>
#include <utility>
#include <vector>

namespace horikawa {

using Ray = std::pair<int, int>;

// Cyclic quotient singularity 1/r(1,s), s reduced into [0, r).
struct QuotientSingularity {
    std::string point;
    int r = 1;
    int s = 0;
    bool smooth() const { return r == 1; }
    std::string notation() const;
    bool operator==(const QuotientSingularity&) const = default;
};

QuotientSingularity make_quotient(std::string point, int r, int s);

// A complete toric surface given by its rays; torus-invariant divisors are
// labelled and paired by an explicit intersection matrix.
struct ToricSurface {
    std::string name;
    std::vector<Ray> rays;
    std::vector<std::string> labels;
    std::vector<std::vector<Rational>> pairing;
    std::vector<QuotientSingularity> singularities;

    std::size_t index(const std::string& label) const;
};

struct DivisorClass {
    std::string surface;
    std::vector<Rational> coeffs;  // ray order
};

// P(1,a,b), divisors Dx, Dy, Dz; pairing from the closed-form table.
ToricSurface weighted_projective_plane(int a, int b);

// Z: weighted blow-up of P(1,1,2) at [1:0:0] with weights (p, q) on (y, z).
// Rays (1,0), (p,q), (0,1), (-1,-2) carry Dy, E, Dz, Dx; pairing from
// Dx^2 = 1/2, Dx.E = 0, E^2 = -1/pq, Dy = Dx - pE, Dz = 2Dx - qE.
ToricSurface blown_up_surface(Sigma s);

// Generic complete-fan pairing, used to cross-check the closed forms.
std::vector<std::vector<Rational>> fan_pairing(const std::vector<Ray>& rays);

DivisorClass make_divisor(const ToricSurface& S, std::vector<Rational> coeffs);
DivisorClass ray_divisor(const ToricSurface& S, const std::string& label);
DivisorClass canonical_divisor(const ToricSurface& S);
DivisorClass operator+(const DivisorClass& a, const DivisorClass& b);
DivisorClass operator*(const Rational& k, const DivisorClass& a);
Rational intersect(const ToricSurface& S, const DivisorClass& a, const DivisorClass& b);

const std::vector<QuotientSingularity>& quotient_singularities(const ToricSurface& S);
std::vector<QuotientSingularity> singular_points(const ToricSurface& S);

struct AmpleCheck {
    std::vector<Rational> degrees;  // D . C for every boundary curve, ray order
    bool ample = false;
};
AmpleCheck ample_check(const ToricSurface& S, const DivisorClass& D);

// dim Aut P(1,a,b), 1 <= a <= b coprime
int aut_dimension(int a, int b);

// every coefficient in (0, 1]
bool log_canonical_toric(const std::vector<Rational>& coeffs);

// K_Z + E + B'|_Z / 2 against Dx, Dy, Dz, E
struct ZAmpleness {
    DivisorClass divisor;
    Rational with_dx, with_dy, with_dz, with_e;
    bool ample = false;
};
ZAmpleness z_ampleness(Sigma s);

// Points of V(F) on G = V(t) in P(1,p,q), F weighted homogeneous in (alpha, beta)
// (t-free terms of a tail polynomial are used). Irrational points are reported
// as one label per conjugate cluster.
std::vector<std::string> points_on_g(Sigma s, const Polynomial& F);

struct TailAmpleness {
    int point_count = 0;       // |V(theta(m1 + m2)) on G|
    int c = 0;                 // p*q*point_count
    Rational margin;           // c/2 - p - q
    bool ample = false;
    Rational degree_pairing;   // B'|_Y . G from the degree alone, d/(pq)
    Rational degree_margin;    // d/2 - p - q
};
TailAmpleness tail_ample_constant(Sigma s);

} // namespace horikawa
