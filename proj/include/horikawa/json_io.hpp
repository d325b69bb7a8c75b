#pragma once

#include "horikawa/catalog.hpp"
#include "horikawa/git.hpp"
#include "horikawa/pipeline.hpp"
#include "horikawa/sextic.hpp"
#include "horikawa/toric.hpp"

#include <json.hpp>

namespace horikawa {

// insertion-ordered so that output is byte-stable
using Json = nlohmann::ordered_json;

Json to_json(const Rational& r);  // {"num": .., "den": ..}
Json to_json(const Polynomial& p);
Json to_json(const UElement& u);
Json to_json(const QuotientSingularity& q);
Json to_json(const LocalType& t);
Json to_json(const YDatum& y);
Json to_json(const ZDatum& z);
Json to_json(const GluingDatum& g);
Json to_json(const BoundaryDims& b);
Json to_json(const StableSurfaceDatum& s);
Json to_json(const BranchCohomology& b);
Json to_json(const GammaIdeal& g);
Json to_json(const HodgeSummary& h);
Json to_json(const DvrComparison& d);
Json to_json(const NormalForm& nf);
Json to_json(const GitResult& r);
Json to_json(const SingularityStability& s);
Json to_json(const SexticModel& m);
Json to_json(const LineIncidence& l);
Json to_json(const SingularScan& s);
Json to_json(const CatalogRecord& c);
Json to_json(const ZAmpleness& z);
Json to_json(const TailAmpleness& t);
Json to_json(const GenericChecklist& c);

} // namespace horikawa
