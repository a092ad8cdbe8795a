#pragma once

#include <nlohmann/json.hpp>

#include "outvcd/bounds.hpp"
#include "outvcd/generators.hpp"
#include "outvcd/homology.hpp"
#include "outvcd/ideal_edges.hpp"
#include "outvcd/morse.hpp"
#include "outvcd/psigma.hpp"

namespace outvcd {

using Json = nlohmann::json;  // std::map objects: keys come out sorted

Json to_json(const ValidationReport& v, const DefiningGraph& g);
Json to_json(const VcdReport& r);
Json to_json(const GeneratorSet& gs);
Json to_json(const IdealEdgeComplex& c);
Json to_json(const HomologyResult& h);
Json to_json(const MorseCertificate& m);

/// {"a2": 1, "b3": -1, "c3": 0}; absent keys are zero. Throws
/// std::invalid_argument for keys outside the spec.
ExponentVector exponent_vector_from_json(const PsigmaSpec& spec, const Json& j);
Json to_json(const PsigmaSpec& spec, const ExponentVector& v);

}  // namespace outvcd
