#include "horikawa/json_io.hpp"

namespace horikawa {

Json to_json(const Rational& x)
{
    Rational r = x;
    r.canonicalize();
    Json j;
    j["num"] = Json::parse(r.get_num().get_str());
    j["den"] = Json::parse(r.get_den().get_str());
    return j;
}

Json to_json(const Polynomial& p) { return p.str(); }

Json to_json(const UElement& u)
{
    return {{"sigma", name(u.sigma())}, {"polynomial", u.polynomial().str()}, {"regular", u.is_regular()}};
}

Json to_json(const QuotientSingularity& q)
{
    return {{"point", q.point}, {"r", q.r}, {"s", q.s}, {"notation", q.notation()}};
}

Json to_json(const LocalType& t)
{
    Json j{{"name", t.name()}};
    if (auto mu = milnor_of(t)) j["mu"] = *mu;
    if (t.modulus) j["modulus"] = to_json(*t.modulus);
    return j;
}

Json to_json(const YDatum& y)
{
    Json j;
    j["ambientWeights"] = y.ambient_weights;
    j["degree"] = y.degree;
    j["equation"] = y.equation.str();
    j["chiTop"] = y.chi_top;
    j["if00Number"] = y.if00_number;
    j["adeConfiguration"] = y.ade_configuration ? Json(*y.ade_configuration) : Json(nullptr);
    j["exceptionalCurves"] = y.exceptional_curves;
    return j;
}

Json to_json(const ZDatum& z)
{
    Json j;
    j["kSquared"] = to_json(z.k_squared);
    j["h1O"] = z.h1_o;
    j["h2O"] = z.h2_o;
    j["chiTop"] = z.chi_top;
    j["h11"] = z.h11 ? Json(*z.h11) : Json(nullptr);
    j["quotientSingularities"] = Json::array();
    for (const auto& q : z.quotient_singularities) j["quotientSingularities"].push_back(to_json(q));
    j["branch"] = z.branch.str();
    return j;
}

Json to_json(const GluingDatum& g)
{
    Json j;
    j["points"] = g.points;
    j["branchOnG"] = g.branch_on_g;
    j["coverBranchPoints"] = g.cover_branch_points;
    j["rational"] = g.rational;
    return j;
}

Json to_json(const BoundaryDims& b)
{
    Json j;
    j["ySide"] = b.y_side;
    j["zSide"] = b.z_side;
    j["total"] = b.total;
    j["degreeDMonomials"] = b.degree_d_monomials;
    j["autDim"] = b.aut_dim;
    j["positiveMonomials"] = b.positive_monomials;
    j["gammaDim"] = b.gamma_dim;
    return j;
}

Json to_json(const StableSurfaceDatum& s)
{
    Json j;
    j["sigma"] = name(s.sigma);
    j["y"] = to_json(s.y);
    j["z"] = to_json(s.z);
    j["gluing"] = to_json(s.gluing);
    j["totalChi"] = s.total_chi;
    j["boundaryDim"] = s.boundary.total;
    j["ySideModuli"] = s.boundary.y_side;
    j["zSideModuli"] = s.boundary.z_side;
    return j;
}

Json to_json(const BranchCohomology& b)
{
    Json j;
    j["genusSmooth"] = to_json(b.genus_smooth);
    j["branches"] = b.branches;
    j["delta"] = to_json(b.delta);
    j["rkH1"] = b.rk_h1;
    j["chiB0"] = b.chi;
    return j;
}

Json to_json(const GammaIdeal& g)
{
    Json j;
    j["sigma"] = name(g.sigma);
    j["generators"] = Json::array();
    for (const auto& p : g.generators) j["generators"].push_back(p.str());
    j["claimedRadical"] = Json::array();
    for (const auto& p : g.radical) j["claimedRadical"].push_back(p.str());
    j["killed"] = g.killed;
    j["dimGamma"] = g.dimension;
    return j;
}

Json to_json(const HodgeSummary& h)
{
    return {{"monodromyFinite", h.monodromy_finite}, {"transcRankTotal", h.transcendental_rank}};
}

Json to_json(const DvrComparison& d)
{
    Json j;
    j["witness"] = to_json(d.witness);
    j["identical"] = d.identical;
    j["datum"] = to_json(d.from_witness);
    return j;
}

Json to_json(const NormalForm& nf)
{
    return {{"q4", nf.q4.str()}, {"q6", nf.q6.str()}, {"q8", nf.q8.str()}, {"q10", nf.q10.str()}};
}

Json to_json(const GitResult& r)
{
    Json j;
    j["stable"] = r.stable;
    if (r.witness) j["witness"] = *r.witness;
    if (r.certificate) j["certificate"] = *r.certificate;
    j["gcdChainDegrees"] = Json::array();
    for (const auto& d : r.chain_degrees) j["gcdChainDegrees"].push_back(d ? Json(*d) : Json(nullptr));
    return j;
}

Json to_json(const SingularityStability& s)
{
    return {{"verdict", s.verdict == SingularityVerdict::Stable ? "stable" : "inconclusive"}, {"reason", s.reason}};
}

Json to_json(const SexticModel& m)
{
    return {{"sigma", name(m.sigma)}, {"form", m.form.str()}, {"line", "x1"}};
}

Json to_json(const LineIncidence& l)
{
    Json j;
    j["partition"] = l.partition;
    j["points"] = Json::array();
    for (const auto& p : l.points)
        j["points"].push_back({{"point", p.point}, {"multiplicity", p.multiplicity}, {"degree", p.degree}});
    return j;
}

Json to_json(const SingularScan& s)
{
    Json j;
    j["points"] = Json::array();
    for (const auto& p : s.points) j["points"].push_back({{"point", p.point}, {"type", to_json(p.type)}});
    j["certificates"] = s.certificates;
    return j;
}

Json to_json(const CatalogRecord& c)
{
    Json j;
    j["name"] = c.name;
    j["p"] = c.p;
    j["q"] = c.q;
    j["d"] = c.d;
    j["mu"] = c.mu;
    j["modality"] = c.modality;
    j["normalForm"] = c.normal_form;
    j["degeneratesTo"] = c.adjacency.degenerates_to;
    j["deformsTo"] = c.adjacency.deforms_to;
    return j;
}

Json to_json(const ZAmpleness& z)
{
    Json j;
    j["withDx"] = to_json(z.with_dx);
    j["withDy"] = to_json(z.with_dy);
    j["withDz"] = to_json(z.with_dz);
    j["withE"] = to_json(z.with_e);
    j["ample"] = z.ample;
    return j;
}

Json to_json(const TailAmpleness& t)
{
    Json j;
    j["pointCount"] = t.point_count;
    j["c"] = t.c;
    j["margin"] = to_json(t.margin);
    j["ample"] = t.ample;
    j["degreePairing"] = to_json(t.degree_pairing);
    j["degreeMargin"] = to_json(t.degree_margin);
    return j;
}

Json to_json(const GenericChecklist& c)
{
    return {{"z5Nonzero", c.z5_nonzero}, {"regular", c.regular}, {"pairEqualNonzero", c.pair_equal_nonzero},
            {"pass", c.all()}};
}

} // namespace horikawa
