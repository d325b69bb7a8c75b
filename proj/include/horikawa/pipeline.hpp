#pragma once

#include "horikawa/polynomial.hpp"
#include "horikawa/sigma.hpp"
#include "horikawa/toric.hpp"
#include "horikawa/weights.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace horikawa {

// K3 side: w^2 = tail in P(1,p,q,d/2) (d even) or P(1,2p,2q,d) with t -> t^2 (d odd).
struct YDatum {
    std::array<int, 4> ambient_weights{};
    int degree = 0;
    Polynomial equation;              // in (t, alpha, beta, w)
    int chi_top = 0;                  // mu + 3
    int if00_number = 0;
    std::optional<std::string> ade_configuration;
    int exceptional_curves = 0;       // 21 - mu, from chi_top of a K3
    bool operator==(const YDatum&) const = default;
};

struct ZDatum {
    Rational k_squared;
    int h1_o = 0, h2_o = 0;
    int chi_top = 0;                  // 36 - mu
    std::optional<int> h11;           // 32 - mu, Z and W families
    std::vector<QuotientSingularity> quotient_singularities;
    Polynomial branch;                // (pi_+ + pi_0)(u), in (x, y, z)
    bool operator==(const ZDatum&) const = default;
};

struct GluingDatum {
    std::vector<std::string> points;  // V(theta(pi_0 u)) on G
    bool branch_on_g = false;         // d odd
    int cover_branch_points = 0;      // of the double cover of G when d is even
    bool rational = false;            // the gluing curve is P^1
    bool operator==(const GluingDatum&) const = default;
};

struct BoundaryDims {
    int y_side = 0, z_side = 0, total = 0;
    int degree_d_monomials = 0, aut_dim = 0, positive_monomials = 0, gamma_dim = 0;
    bool operator==(const BoundaryDims&) const = default;
};

struct StableSurfaceDatum {
    Sigma sigma = Sigma::E12;
    YDatum y;
    ZDatum z;
    GluingDatum gluing;
    int total_chi = 0;
    BoundaryDims boundary;
    bool operator==(const StableSurfaceDatum&) const = default;
};

// z^5 + m1 + m2 + x^10: regular, with every weight class present except U+ \ {z^5}.
UElement reference_u(Sigma s);

// Full replacement for a regular u in U_Sigma.
StableSurfaceDatum replace(Sigma s, const UElement& u);

YDatum y_datum(Sigma s, const UElement& u);
YDatum y_datum_from_tail(Sigma s, const Polynomial& tail);
ZDatum z_invariants(Sigma s);
Rational k_squared_closed_form(Sigma s);
Rational k_squared_toric(Sigma s);
GluingDatum gluing(Sigma s, const UElement& u);
GluingDatum gluing_from_tail(Sigma s, const Polynomial& tail);

struct BranchCohomology {
    Rational genus_smooth;   // arithmetic genus of a degree-10 curve on P(1,1,2)
    int branches = 0;        // |preimage of xi| in the normalisation
    Rational delta;
    int rk_h1 = 0;
    int chi = 0;
};
BranchCohomology branch_curve_cohomology(Sigma s);

BoundaryDims boundary_dimension(Sigma s);

// Generators of the ideal cutting out Gamma_Sigma inside the substitutions
// x -> ax+by, y -> cx+dy, z -> z+ex^2+fxy+gy^2.
struct GammaIdeal {
    Sigma sigma = Sigma::E12;
    std::vector<Polynomial> generators;   // in (a, b, c, d, e, f, g)
    std::vector<Polynomial> radical;      // claimed radical
    std::vector<std::string> killed;      // variables the radical kills on the chart a, d != 0
    int dimension = 0;                    // 7 - |killed| - 1
};
const std::vector<std::string>& gamma_vars();
GammaIdeal gamma_ideal(Sigma s);
bool gamma_substitution_check(const GammaIdeal& G);
// Random points with a, d != 0 violating the radical; true when every one makes
// some generator nonzero.
bool gamma_random_check(const GammaIdeal& G, int points, std::uint64_t seed);

struct HodgeSummary {
    bool monodromy_finite = false;
    int transcendental_rank = 0;
};
HodgeSummary hodge_summary(const std::vector<int>& geometric_genera, const std::vector<int>& transcendental_ranks);

struct DvrComparison {
    UElement witness;
    StableSurfaceDatum from_witness;
    StableSurfaceDatum from_family;
    bool identical = false;
};
// f in (s, x, y, z); NotSigmaGeneric if tau(f) is not s * u for a regular u.
DvrComparison dvr_compare(const Polynomial& f, Sigma s);

} // namespace horikawa
