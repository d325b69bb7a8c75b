#pragma once

#include "horikawa/git.hpp"
#include "horikawa/pipeline.hpp"

#include <array>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace horikawa {

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

using Sl2 = std::array<Rational, 4>; // a b c d, ad - bc = 1

Sl2 random_sl2(std::mt19937_64& rng);
NormalForm apply_sl2(const NormalForm& nf, const Sl2& g);
NormalForm destabilized_shape(std::mt19937_64& rng); // q_{2k} = x^k h_k
NormalForm fermat_form();

// Fixed Sigma-generic element used for the robustness checks: the sample sextic
// preimage for Z/W, z^5 + m1 + m2 + y^10 otherwise, plus x^10.
UElement generic_u(Sigma s);
// s * u plus random higher-order terms on the support of u; m1 and m2 stay tied.
Polynomial dvr_perturbation(const UElement& u, std::mt19937_64& rng);

std::vector<CheckResult> verify_tables();
std::vector<CheckResult> verify_gamma(int points, std::uint64_t seed);
std::vector<CheckResult> verify_git(int conjugates, std::uint64_t seed);
std::vector<CheckResult> verify_dvr(int perturbations, std::uint64_t seed);
std::vector<CheckResult> verify_all(std::uint64_t seed);

} // namespace horikawa
