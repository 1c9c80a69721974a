#ifndef SOCENTER_JSON_IO_HPP
#define SOCENTER_JSON_IO_HPP

#include <json.hpp>

#include "socenter/center.hpp"
#include "socenter/gt.hpp"
#include "socenter/harish_chandra.hpp"

namespace socenter {

using json = nlohmann::ordered_json;

/// [[power, re_num, re_den, im_num, im_den], ...]; the four parts are decimal strings.
json to_json(const UPoly& p);
UPoly upoly_from_json(const json& j);

/// {"rank": n, "terms": [{"mono": [[j,i],...], "coeff": UPoly}, ...]}
json to_json(const Element& x);
/// Accepts unordered monomials; the result is in normal form.
Element element_from_json(const json& j);

/// {"vars": ["H","T1",...], "terms": [{"exps": [...], "coeff": UPoly}, ...]}
json to_json(const HPoly& p);
HPoly hpoly_from_json(const json& j);

json to_json(const gt::Report& r);
gt::Report report_from_json(const json& j);

/// {"ok": bool, "witness": [j,i] or null, "residual_terms": k}
json to_json(const CentralityReport& r);
json to_json(const IdentityReport& r);

}  // namespace socenter

#endif  // SOCENTER_JSON_IO_HPP
