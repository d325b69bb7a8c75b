#pragma once

#include "horikawa/catalog.hpp"
#include "horikawa/polynomial.hpp"
#include "horikawa/sigma.hpp"
#include "horikawa/weights.hpp"

#include <string>
#include <vector>

namespace horikawa {

const std::vector<std::string>& plane_vars(); // x0, x1, x2

bool has_sextic_model(Sigma s); // Z and W families only

// x^a y^b z^c -> x0^a x1^((b-a)/2 + 1) x2^c
Polynomial mu_transform(Sigma s, const Mon& m);
Mon inverse_mu_transform(const Exponent& e);

struct SexticModel {
    Sigma sigma = Sigma::Z11;
    Polynomial form;  // degree 6 in (x0, x1, x2); the line is V(x1)
};

// Image of (pi_+ + pi_0)(u), times x1.
SexticModel sextic_model(Sigma s, const UElement& u);
// The specialisations F_Sigma used for the singularity checks.
SexticModel sample_sextic(Sigma s);
// u in U_Sigma whose non-negative part maps onto the model.
UElement sextic_preimage(const SexticModel& C);

// The x1-free part is x0^2 x2^3 (c0 x0 + c2 x2) for Z types and c0 x0^2 x2^4 for
// W types, and the two weight-zero images carry the same nonzero coefficient.
bool sextic_shape_ok(const SexticModel& C);

struct IncidencePoint {
    std::string point;   // rational point, or "conjugate points: ..." for an irrational factor
    int multiplicity = 0;
    int degree = 1;      // number of geometric points in the cluster
};
struct LineIncidence {
    std::vector<int> partition;  // descending
    std::vector<IncidencePoint> points;
};
LineIncidence line_incidence(const SexticModel& C);

struct SingularPoint {
    std::string point;
    LocalType type;
};
struct SingularScan {
    std::vector<SingularPoint> points;
    std::vector<std::string> certificates;  // why the remaining charts are smooth
};
// NonIsolated when the singular locus has positive dimension.
SingularScan singular_scan(const Polynomial& form);

int sextic_moduli_dimension(Sigma s);

} // namespace horikawa
