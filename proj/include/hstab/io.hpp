#pragma once

#include <json.hpp>

#include "hstab/forms.hpp"
#include "hstab/kcomplex.hpp"
#include "hstab/scomplex.hpp"
#include "hstab/specseq.hpp"

namespace hstab {

using Json = nlohmann::json;

// Integers round-trip as JSON numbers inside the 53-bit safe range and as
// decimal strings outside it.
Json int_to_json(const Int& v);
Int int_from_json(const Json& j);

Json vec_to_json(const IVec& v);
IVec vec_from_json(const Json& j);
Json matrix_to_json(const IMat& m);
IMat matrix_from_json(const Json& j);

Json module_to_json(const QuadraticModule& M);
QuadraticModule module_from_json(const Json& j);

Json morphism_to_json(const ModuleMorphism& f);
ModuleMorphism morphism_from_json(const Json& j);

Json complex_to_json(const SimplicialComplex& K);
SimplicialComplex complex_from_json(const Json& j);

Json map_to_json(const SimplicialMap& f);
SimplicialMap map_from_json(const Json& j);

Json augss_to_json(const AugmentedSemiSimplicialSet& X);
AugmentedSemiSimplicialSet augss_from_json(const Json& j);

Json profiles_to_json(const std::vector<HomologyProfile>& H);

Json ka_to_json(const KaTruncation& T);

// Canonical serialization: sorted keys, no whitespace. Equal documents
// serialize to identical bytes.
std::string canonical(const Json& j);

}  // namespace hstab
