#pragma once

#include "horikawa/polynomial.hpp"

#include <array>
#include <compare>
#include <string>
#include <string_view>

namespace horikawa {

// x^a y^b z^c
struct Mon {
    int a = 0, b = 0, c = 0;
    auto operator<=>(const Mon&) const = default;
    Exponent exponent() const { return {a, b, c}; }
    std::string str() const;
};

enum class Sigma { E12, E13, E14, Z11, Z12, Z13, W12, W13 };

inline constexpr std::array<Sigma, 8> all_sigmas{Sigma::E12, Sigma::E13, Sigma::E14, Sigma::Z11,
                                                 Sigma::Z12, Sigma::Z13, Sigma::W12, Sigma::W13};

struct SigmaInfo {
    Sigma sigma;
    const char* name;
    char family;  // 'E', 'Z' or 'W'
    int p, q, d, mu;
    Mon m1, m2;   // the two weight-zero monomials of V10
};

const SigmaInfo& info(Sigma s);
std::string name(Sigma s);
Sigma parse_sigma(std::string_view text);
int index_of(Sigma s);

} // namespace horikawa
