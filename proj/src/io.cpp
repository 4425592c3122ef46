#include "sextic/io.hpp"

#include "sextic/errors.hpp"

#include <algorithm>
#include <sstream>

namespace sextic {

namespace {

std::string exponent_key(const Monomial& m, int nvars) {
  std::string s;
  for (int k = 0; k < nvars; ++k) s += (k ? "," : "") + std::to_string(m[k]);
  return s;
}

Monomial parse_key(const std::string& key, int nvars) {
  std::vector<int> e;
  std::stringstream ss(key);
  for (std::string part; std::getline(ss, part, ',');) {
    try {
      std::size_t used = 0;
      int v = std::stoi(part, &used);
      if (used != part.size() || v < 0) throw ParseError("");
      e.push_back(v);
    } catch (const std::exception&) {
      throw ParseError("bad exponent key '" + key + "'");
    }
  }
  if (static_cast<int>(e.size()) != nvars)
    throw ParseError("exponent key '" + key + "' needs " + std::to_string(nvars) + " entries");
  return Monomial::from_exponents(e);
}

const std::string& as_string(const Json& j, const char* what) {
  if (!j.is_string()) throw ParseError(std::string(what) + " must be a string");
  return j.get_ref<const std::string&>();
}

}  // namespace

Json config_to_json(const PointConfiguration& p) {
  Json pts = Json::array();
  for (const auto& pt : p.points()) pts.push_back({pt[0].str(), pt[1].str(), pt[2].str()});
  return {{"field", p.field() == FieldTag::Q ? "Q" : "Qi"}, {"points", pts}};
}

PointConfiguration config_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("configuration must be a JSON object");
  if (!j.contains("points")) throw ParseError("configuration needs \"points\"");
  const auto& pts = j.at("points");
  if (!pts.is_array() || pts.size() != 8) throw ParseError("configuration needs exactly 8 points");
  std::array<PointQi, 8> out;
  bool complex = false;
  for (std::size_t i = 0; i < 8; ++i) {
    if (!pts[i].is_array() || pts[i].size() != 3) throw ParseError("point " + std::to_string(i + 1) + " needs 3 coordinates");
    for (std::size_t k = 0; k < 3; ++k) {
      const auto& c = pts[i][k];
      out[i][k] = c.is_number_integer() ? Gaussian(Rational(c.get<long>())) : Gaussian::parse(as_string(c, "coordinate"));
      complex = complex || !out[i][k].is_real();
    }
  }
  FieldTag field = complex ? FieldTag::Qi : FieldTag::Q;
  if (j.contains("field")) {
    const auto& f = as_string(j.at("field"), "field");
    if (f == "Q") field = FieldTag::Q;
    else if (f == "Qi") field = FieldTag::Qi;
    else throw ParseError("field must be \"Q\" or \"Qi\"");
  }
  return PointConfiguration::make(field, out);
}

Json form_to_json(const QMPoly& f) {
  Json j = Json::object();
  const int n = f.ring()->nvars();
  for (const auto& tm : f.terms()) j[exponent_key(tm.m, n)] = tm.c.str();
  return j;
}

QMPoly form_from_json(const Json& j, const RingPtr& ring) {
  if (j.is_string()) return parse_mpoly(j.get_ref<const std::string&>(), ring);
  if (!j.is_object()) throw ParseError("polynomial must be a string or an exponent map");
  std::vector<Term<Rational>> terms;
  for (const auto& [key, value] : j.items()) {
    Rational c = value.is_number_integer() ? Rational(value.get<long>()) : Rational::parse(as_string(value, "coefficient"));
    terms.push_back({parse_key(key, ring->nvars()), c});
  }
  return QMPoly::from_terms(ring, std::move(terms));
}

Json basis_to_json(const SexticBasis<Rational>& b) {
  return {{"u", form_to_json(b.u)}, {"v", form_to_json(b.v)}, {"w", form_to_json(b.w)}};
}

SexticBasis<Rational> basis_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("u") || !j.contains("v") || !j.contains("w"))
    throw ParseError("basis needs \"u\", \"v\" and \"w\"");
  SexticBasis<Rational> b{form_from_json(j.at("u"), plane_ring()), form_from_json(j.at("v"), plane_ring()),
                          form_from_json(j.at("w"), plane_ring())};
  auto homogeneous = [](const QMPoly& f, int d) {
    return std::all_of(f.terms().begin(), f.terms().end(), [&](const auto& t) { return t.m.degree() == d; }) &&
           !f.is_zero_poly();
  };
  if (!homogeneous(b.u, 3) || !homogeneous(b.v, 3) || !homogeneous(b.w, 6))
    throw ParseError("basis needs two ternary cubics u, v and a ternary sextic w");
  return b;
}

Json branch_to_json(const QMPoly& c) { return form_to_json(c); }

QMPoly branch_from_json(const Json& j) { return form_from_json(j, chart_ring()); }

Json ambient_to_json(const AmbientPair& qk) { return {{"Q", form_to_json(qk.Q)}, {"K", form_to_json(qk.K)}}; }

AmbientPair ambient_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("Q") || !j.contains("K")) throw ParseError("(Q, K) needs \"Q\" and \"K\"");
  AmbientPair qk{form_from_json(j.at("Q"), ambient_ring()), form_from_json(j.at("K"), ambient_ring())};
  for (const auto& t : qk.Q.terms())
    if (t.m.degree() != 2) throw ParseError("Q must be a quadratic form");
  for (const auto& t : qk.K.terms())
    if (t.m.degree() != 3) throw ParseError("K must be a cubic form");
  if (qk.Q.is_zero_poly() || qk.K.is_zero_poly()) throw ParseError("Q and K must be nonzero");
  return qk;
}

AmbientPlane parse_plane(const std::string& text) {
  AmbientPlane h;
  std::stringstream ss(text);
  std::size_t k = 0;
  for (std::string part; std::getline(ss, part, ',');) {
    if (k == 4) throw ParseError("plane needs exactly 4 coordinates");
    h.u[k++] = Rational::parse(part);
  }
  if (k != 4) throw ParseError("plane needs exactly 4 coordinates");
  if (std::all_of(h.u.begin(), h.u.end(), [](const Rational& r) { return r.is_zero(); }))
    throw DegenerateInput("plane coordinates are all zero");
  return h;
}

Json plane_to_json(const AmbientPlane& h) {
  Json j = Json::array();
  for (const auto& c : h.u) j.push_back(c.str());
  return j;
}

std::string reality_name(const ClassVerdict& v) {
  if (!v.real) return "complex";
  return v.real_contacts == 3 ? "totallyReal" : "real";
}

Json census_to_json(const CensusReport& r) {
  Json classes = Json::array();
  for (const auto& v : r.classes) {
    Json idx = Json::array();
    for (int i : v.cls.indices) idx.push_back(i + 1);
    Json c = {{"kind", v.cls.kind_name()}, {"indices", idx}, {"label", v.cls.label()},
              {"reality", reality_name(v)}, {"realContacts", v.real_contacts}};
    if (v.plane) c["plane"] = plane_to_json(*v.plane);
    if (v.degenerate_contact) c["degenerateContact"] = true;
    classes.push_back(std::move(c));
  }
  return {{"s", r.s}, {"real", r.n_real}, {"totallyReal", r.n_totally_real}, {"classes", classes}};
}

std::string census_to_csv(const CensusReport& r) {
  std::ostringstream os;
  os << "label,kind,reality,realContacts,plane\n";
  for (const auto& v : r.classes) {
    os << v.cls.label() << ',' << v.cls.kind_name() << ',' << reality_name(v) << ',' << v.real_contacts << ',';
    if (v.plane) os << '"' << v.plane->str() << '"';
    os << '\n';
  }
  return os.str();
}

std::string census_to_text(const CensusReport& r) {
  std::ostringstream os;
  os << "s=" << r.s << " real=" << r.n_real << " totallyReal=" << r.n_totally_real << '\n';
  for (const auto& v : r.classes) {
    os << "  " << v.cls.label() << ' ' << reality_name(v);
    if (v.real) os << " contacts=" << v.real_contacts;
    if (v.plane) os << " plane=" << v.plane->str();
    os << '\n';
  }
  return os.str();
}

Json tritangency_to_json(const TritangencyResult& r) {
  Json j = {{"status", r.str()}};
  if (r.status == TritangencyStatus::Tritangent) j["realContacts"] = r.real_contacts;
  if (r.spec) {
    j["projection"] = {{"solve", r.spec->solve_var}, {"eliminate", r.spec->eliminate_var}};
    if (r.spec->shear[0] != 0 || r.spec->shear[1] != 0) j["projection"]["shear"] = r.spec->shear;
  }
  return j;
}

Json disc_report_to_json(const DiscDegreeReport& r) {
  Json removed = Json::array();
  for (const auto& f : r.removed) removed.push_back({{"reason", f.reason}, {"degree", f.degree}});
  return {{"class", r.cls.label()}, {"degree", r.degree}, {"removedFactors", removed},
          {"samplesUsed", r.samples_used}, {"excluded", r.exclusion.size()}, {"rawDegree", r.raw_degree},
          {"runtimeMs", static_cast<long long>(r.runtime_ms)}};
}

std::string histogram_csv(const SearchResult& r) {
  std::ostringstream os;
  os << "count,frequency\n";
  for (std::size_t k = 0; k < r.histogram.size(); ++k) os << k << ',' << r.histogram[k] << '\n';
  return os.str();
}

std::string histogram_ascii(const SearchResult& r, int width) {
  const int top = *std::max_element(r.histogram.begin(), r.histogram.end());
  std::ostringstream os;
  for (std::size_t k = 0; k < r.histogram.size(); ++k) {
    if (r.histogram[k] == 0) continue;
    const int bar = std::max(1, r.histogram[k] * width / std::max(top, 1));
    std::string label = std::to_string(k);
    os << std::string(4 - std::min<std::size_t>(label.size(), 4), ' ') << label << " | " << std::string(static_cast<std::size_t>(bar), '#')
       << ' ' << r.histogram[k] << '\n';
  }
  return os.str();
}

Json search_to_json(const SearchResult& r) {
  Json samples = Json::array();
  for (const auto& s : r.samples)
    samples.push_back({{"index", s.index}, {"real", s.n_real}, {"totallyReal", s.n_totally_real},
                       {"config", config_to_json(s.config)}});
  Json hist = Json::object();
  for (std::size_t k = 0; k < r.histogram.size(); ++k)
    if (r.histogram[k]) hist[std::to_string(k)] = r.histogram[k];
  return {{"samples", samples}, {"rejected", r.rejected}, {"rejections", r.rejection_log}, {"histogram", hist}};
}

}  // namespace sextic
