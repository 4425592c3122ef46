#pragma once

#include "sextic/config.hpp"
#include "sextic/delpezzo.hpp"
#include "sextic/discriminants.hpp"
#include "sextic/linear_systems.hpp"
#include "sextic/tritangents.hpp"
#include "sextic/verify.hpp"

#include <json.hpp>

#include <string>

namespace sextic {

using Json = nlohmann::json;

/// {"field": "Q" | "Qi", "points": [[str, str, str] x 8]} with integer or
/// rational strings, "a+bi" for Gaussian coordinates.
Json config_to_json(const PointConfiguration& p);
PointConfiguration config_from_json(const Json& j);

/// {"e0,e1,...": coefficient string}. Parsing also accepts a polynomial string
/// in the ring's variable names.
Json form_to_json(const QMPoly& f);
QMPoly form_from_json(const Json& j, const RingPtr& ring);

/// {"u": form, "v": form, "w": form} over x, y, z.
Json basis_to_json(const SexticBasis<Rational>& b);
SexticBasis<Rational> basis_from_json(const Json& j);

/// Branch curve c(t, W) keyed by "i,j" for t^i W^j.
Json branch_to_json(const QMPoly& c);
QMPoly branch_from_json(const Json& j);

/// {"Q": form, "K": form} over x0..x3.
Json ambient_to_json(const AmbientPair& qk);
AmbientPair ambient_from_json(const Json& j);

/// "u0,u1,u2,u3" with rational entries.
AmbientPlane parse_plane(const std::string& text);
Json plane_to_json(const AmbientPlane& h);

/// "complex", "real" or "totallyReal".
std::string reality_name(const ClassVerdict& v);

Json census_to_json(const CensusReport& r);
std::string census_to_csv(const CensusReport& r);
std::string census_to_text(const CensusReport& r);

Json tritangency_to_json(const TritangencyResult& r);
Json disc_report_to_json(const DiscDegreeReport& r);

/// "count,frequency" rows for count = 0..120.
std::string histogram_csv(const SearchResult& r);
/// One bar per nonzero count, scaled to at most `width` characters.
std::string histogram_ascii(const SearchResult& r, int width = 50);
Json search_to_json(const SearchResult& r);

}  // namespace sextic
