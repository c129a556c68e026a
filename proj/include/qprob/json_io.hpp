#pragma once

#include <json.hpp>

#include "qprob/assessment.hpp"
#include "qprob/decompose.hpp"
#include "qprob/disk.hpp"
#include "qprob/quotient.hpp"
#include "qprob/repsolve.hpp"

namespace qprob {

// Ordered JSON keeps object keys in insertion order, which is what makes
// reports byte-identical across runs.
using Json = nlohmann::ordered_json;

// Algebra: {"atoms": ["a1","a2",...]}
Json algebra_to_json(const Algebra& algebra);
Algebra algebra_from_json(const Json& j);

// Event: list of atom labels in atom order.
Json event_to_json(const Event& event);
Event event_from_json(const Algebra& algebra, const Json& j);

// Assessment: {"algebra": ..., "levels": [[event,...],...]} lowest first.
Json assessment_to_json(const Assessment& a);
Assessment assessment_from_json(const Json& j);

// SignedMeasure: {"weights": {"a1": "3/4", ...}}.  Reading accepts an
// optional "algebra" member; without it the atoms are the weight keys in
// file order.  Weight values may be "p/q" strings or plain JSON integers.
Json measure_to_json(const SignedMeasure& mu);
SignedMeasure measure_from_json(const Json& j);

Json rational_to_json(const Rat& value);
Rat rational_from_json(const Json& j);

Json rep_result_to_json(const RepresentationResult& result);

Json sign_profile_to_json(const SignProfile& profile);
Json hahn_pair_to_json(const HahnPair& pair);
Json hahn_report_to_json(const HahnReport& report);
Json jordan_to_json(const JordanPair& jp);
Json bayes_rep_to_json(const BayesianRep& rep);
Json bayes_report_to_json(const BayesianReport& report);

Json separability_to_json(const ViolationList<SeparabilityViolation>& v);
Json monotonicity_to_json(const ViolationList<MonotonicityViolation>& v);

// QuotientAlgebra: classes (lists of events) plus one level per class.
Json quotient_to_json(const QuotientAlgebra& q);

// PolarGrid: {"ring_bounds_sq": ["0","1/4","1"], "n_sectors": 4}
Json grid_to_json(const PolarGrid& grid);
PolarGrid grid_from_json(const Json& j);

// Region: [[ring,sector],...]; SweptRegion: {"base": region, "angle": "p/q"}.
Json region_to_json(const Region& r);
Region region_from_json(const PolarGrid& grid, const Json& j);
Json swept_to_json(const SweptRegion& s);

// Wrapper around nlohmann parsing that converts failures to ParseError.
Json parse_json_text(const std::string& text, const std::string& origin);
Json load_json_file(const std::string& path);

}  // namespace qprob
