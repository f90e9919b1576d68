#pragma once

#include <json.hpp>

#include "grskit/code.hpp"
#include "grskit/criteria.hpp"
#include "grskit/family.hpp"
#include "grskit/matrix.hpp"
#include "grskit/selfdual.hpp"

namespace grskit {

using json = nlohmann::json;

// Wire formats: fields as {"p","m","modulus"}, elements as coefficient
// lists (low to high), matrices as arrays of arrays of elements, codes as
// {"n","k","field","generator"}.

json field_to_json(const Field& f);
FieldPtr field_from_json(const json& j);

json element_to_json(const FieldElement& x);
FieldElement element_from_json(const FieldPtr& f, const json& j);

json element_list_to_json(const std::vector<FieldElement>& xs);
std::vector<FieldElement> element_list_from_json(const FieldPtr& f, const json& j);

json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const FieldPtr& f, const json& j);

json code_to_json(const LinearCode& c);

json profile_to_json(const DistanceProfile& p);

json verdict_to_json(const SelfDualVerdict& v);
json mds_result_to_json(const MdsResult& r);
json nmds_certificate_to_json(const NmdsCertificate& c);

/// Builds the code described by {"family","k","r","eta","points","factors"}
/// over the given field. Factors may be omitted (all ones).
LinearCode code_from_descriptor(const FieldPtr& f, const json& descriptor);

} // namespace grskit
