#pragma once

#include "horikawa/catalog.hpp"
#include "horikawa/polynomial.hpp"

#include <optional>
#include <string>
#include <vector>

namespace horikawa {

// w^2 = z^5 + q4 z^3 + q6 z^2 + q8 z + q10, forms in (x, y).
struct NormalForm {
    Polynomial q4, q6, q8, q10;
    const Polynomial& q(int k) const; // q_{2k}, k = 2..5
    Polynomial f10() const;           // back to a form in (x, y, z)
};

const std::vector<std::string>& xy_vars();

// Scale z^5 to 1, then z -> z - q2/5. NotNormalizable on a zero z^5 coefficient.
NormalForm normalize_f10(const Polynomial& F);
NormalForm make_normal_form(const Polynomial& q4, const Polynomial& q6, const Polynomial& q8, const Polynomial& q10);

struct GitResult {
    bool stable = false;
    std::optional<std::string> witness;          // rational linear form l with l^k | q_{2k}
    std::optional<std::string> certificate;      // common gcd when no rational witness exists
    std::vector<std::optional<int>> chain_degrees; // deg G_2 .. deg G_5, nullopt for the zero form
};

// Non-stable iff some linear form l has l^k | q_{2k} for k = 2..5.
GitResult is_git_stable(const NormalForm& nf);

enum class SingularityVerdict { Stable, Inconclusive };
struct SingularityStability {
    SingularityVerdict verdict = SingularityVerdict::Inconclusive;
    std::string reason;
};
SingularityStability stability_from_singularities(const std::vector<LocalType>& types);

} // namespace horikawa
