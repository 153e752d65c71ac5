#pragma once

#include <json.hpp>

#include "uea/comm_poly.hpp"
#include "uea/element.hpp"
#include "uea/hbm.hpp"
#include "uea/hopf.hpp"
#include "uea/ito.hpp"
#include "uea/span.hpp"

namespace uea {

using nlohmann::json;

// element schema:
//   {"d": int, "terms": [{"monomial": [[["e",i,j]|["h",i]|["c"], exp], ...],
//                         "coeff": ["re", "im"]}]}
// with rationals as strings and terms in graded-lex order
json element_to_json(const Element& e);
Element element_from_json(const json& j);

json tensor_to_json(const TensorElement& t);

json comm_to_json(const CommPoly& p);
CommPoly comm_from_json(const json& j);

json scalar_to_json(const Scalar& s);
Scalar scalar_from_json(const json& j);

json membership_to_json(const MembershipResult& r);
json closure_to_json(const ClosureReport& r);
json spectra_to_json(const SpectraReport& r);
json markov_diag_to_json(const MarkovDiagReport& r);
json factored_word_to_json(const FactoredWord& fw);

}  // namespace uea
