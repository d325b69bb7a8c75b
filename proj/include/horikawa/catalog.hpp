#pragma once

#include "horikawa/polynomial.hpp"
#include "horikawa/sigma.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace horikawa {

enum class LocalKind { Smooth, A, D, E6, E7, E8, Etilde7, Etilde8, Exceptional, N16, Unknown };

// Analytic type of a plane curve germ at the origin.
struct LocalType {
    LocalKind kind = LocalKind::Unknown;
    int k = 0;                        // index for A_k and D_k
    Sigma sigma = Sigma::E12;         // for Exceptional
    std::optional<Rational> modulus;  // only when the input is already in normal form

    std::string name() const;
    bool same_type(const LocalType& o) const;
};

LocalType parse_local_type(std::string_view text);
LocalType exceptional(Sigma s);

// dim of the local Jacobian algebra at the origin of f (two variables).
// 0 at a smooth point; NonIsolated when the singularity is not isolated.
int milnor_number(const Polynomial& f);

// A_k (corank one), E~7, E~8, N16 and the eight exceptional unimodal types by
// their weighted initial forms, up to swapping the variables. Anything else is
// reported as Unknown.
LocalType classify_local(const Polynomial& f);

std::optional<int> milnor_of(const LocalType& t);
int modality(const LocalType& t);
bool is_log_canonical(const LocalType& t);

// Normal form z^3 + y^7 + a*y^5*z and so on, in variables (y, z).
Polynomial local_model(Sigma s, const Rational& a);
std::string normal_form_text(Sigma s);

// Number of branches of the principal part of the normal form.
int branch_count(Sigma s);

// Arrows A <- B mean a germ of type A degenerates to one of type B.
struct Adjacency {
    std::vector<std::string> degenerates_to;
    std::vector<std::string> deforms_to;
};
const std::vector<std::string>& adjacency_nodes();
const std::vector<std::pair<std::string, std::string>>& adjacency_edges();
Adjacency adjacency(const std::string& node);

struct CatalogRecord {
    std::string name;
    int p, q, d, mu, modality;
    std::string normal_form;
    Adjacency adjacency;
};
CatalogRecord catalog_record(Sigma s);

} // namespace horikawa
