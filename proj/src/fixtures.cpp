#include "sextic/fixtures.hpp"

#include "sextic/errors.hpp"

namespace sextic {

const std::vector<Fixture>& fixtures() {
  static const std::vector<Fixture> all = [] {
    std::vector<Fixture> v;
    v.push_back({"ex-2.3", "eight rational points with 120 totally real tritangents", FixtureKind::Config,
                 Json::parse(R"json({"field": "Q", "points": [["1", "0", "0"], ["0", "1", "0"], ["0", "0", "1"], ["1", "1", "1"], ["10", "11", "1"], ["27", "2", "17"], ["-19", "11", "-12"], ["-15", "-19", "20"]]})json"), 120, 120});
    v.push_back({"ex-2.3-basis", "printed cubics u, v, sextic w and branch curve c of the 120-tritangent example", FixtureKind::Basis,
                 Json::parse(R"json({"basis": {"u": "7151648400xy^2-434820164119x^2z+354394201544xyz-38806821565y^2z+692107405715xz^2-580026269975yz^2", "v": "14303296800x^2y-782195108453x^2z+613370275528xyz-49450554755y^2z+1245021817105xz^2-1041049726225yz^2", "w": "175674063641748261863073581969689280x^4yz+11115515429554564750686439346701440x^3y^2z-445819563363162103552629662552521920x^2y^3z+264167833624792096768707005238371200xy^4z-20036962656454818365487885637968107x^4z^2-294913066878605444782558855953184976x^3yz^2-44062271090476792370117994521819642x^2y^2z^2+755657199632193956412295956477085200xy^3z^2-416363969347671237983809688854251675y^4z^2+32905512814926710254817331888615230x^3z^3+28993156637165570509985808089578930x^2yz^3+40808451826702177753226924348677890xy^2z^3-78682528595564243828185219353313650y^3z^3-1745283730188673093290045100489475x^2z^4-5237850029165498581303629066909850xyz^4-2460237915794525755410066318259875y^2z^4"}, "c": "22070179871476654215734436981460373192064947078797748209t^6+5585831392725719195345163470516310362705889042844010328t^5+14175569812724447393500233789877848531491265t^4W-447718078603500717216424896040737869157828321607704039864t^4-86567655386571901223236593151698362962027440t^3W+57114529769698357624742306475t^2W^2+474302309016648096934423520799618219755274954155075926592t^3+192856342071229007723481356183461213738057680t^2W-194302706043604453258752959400tW^2-26371599148125W^3+2341397816853864817617847981162945070584483528261510775184t^2-183528856281941126263893376861009344326329920tW+164969244105921949388612135400W^2-5390258693970772695117811943833419754488807920338145746560t+61550499069700173478724063089387654812308400W+3193966974265623365398753846860968247266969720956505401600", "printedPlane": {"class": "T28(6,7)", "plane": ["-2613400142391424482367340", "277165925195542929496239488", "-153208173277626716984179949", "345059077005"]}})json"), std::nullopt, std::nullopt});
    v.push_back({"ex-2.4", "eight rational points with 84 totally real tritangents", FixtureKind::Config,
                 Json::parse(R"json({"field": "Q", "points": [["-12", "9", "11"], ["7", "-5", "-7"], ["1", "3", "3"], ["2", "2", "-1"], ["-2", "2", "1"], ["1", "3", "1"], ["3", "3", "2"], ["8", "-8", "-7"]]})json"), 120, 84});
    v.push_back({"ex-3.3a", "four conjugate pairs, no totally real tritangent", FixtureKind::Config,
                 Json::parse(R"json({"field": "Qi", "points": [["i", "1-i", "0"], ["-i", "1+i", "0"], ["2-i", "-3-i", "3+i"], ["2+i", "-3+i", "3-i"], ["2-i", "1-i", "-2-i"], ["2+i", "1+i", "-2+i"], ["4i", "-i", "4"], ["-4i", "i", "4"]]})json"), 8, 0});
    v.push_back({"ex-3.3b", "four conjugate pairs, all eight real tritangents totally real", FixtureKind::Config,
                 Json::parse(R"json({"field": "Qi", "points": [["i", "0", "1"], ["-i", "0", "1"], ["1-3i", "-3+2i", "1"], ["1+3i", "-3-2i", "1"], ["0", "2+3i", "-3-2i"], ["0", "2-3i", "-3+2i"], ["4i", "-3+4i", "1+i"], ["-4i", "-3-4i", "1-i"]]})json"), 8, 8});
    v.push_back({"ex-3.4", "three conjugate pairs and two real points, one totally real tritangent", FixtureKind::Config,
                 Json::parse(R"json({"field": "Qi", "points": [["1", "-2i", "2i"], ["1", "2i", "-2i"], ["1", "3+2i", "-3i"], ["1", "3-2i", "3i"], ["1+2i", "4+2i", "-4+i"], ["1-2i", "4-2i", "-4-i"], ["1", "0", "-1"], ["0", "4", "1"]]})json"), 16, 1});
    v.push_back({"ex-3.5", "two conjugate pairs and four real points, 32 of 32 totally real", FixtureKind::Config,
                 Json::parse(R"json({"field": "Qi", "points": [["-204813760-55982740i", "452442430+319792532i", "1"], ["-204813760+55982740i", "452442430-319792532i", "1"], ["252002303-508295920i", "418802957+255990940i", "1"], ["252002303+508295920i", "418802957-255990940i", "1"], ["420794066", "346448315", "1"], ["64527687", "183049780", "1"], ["410335352", "364471450", "-1"], ["210806629", "146613813", "-1"]]})json"), 32, 32});
    v.push_back({"ex-4.2", "(Q, K) of the 120-tritangent example and its two planes with a zero coordinate", FixtureKind::AmbientPair,
                 Json::parse(R"json({"c": "22070179871476654215734436981460373192064947078797748209t^6+5585831392725719195345163470516310362705889042844010328t^5+14175569812724447393500233789877848531491265t^4W-447718078603500717216424896040737869157828321607704039864t^4-86567655386571901223236593151698362962027440t^3W+57114529769698357624742306475t^2W^2+474302309016648096934423520799618219755274954155075926592t^3+192856342071229007723481356183461213738057680t^2W-194302706043604453258752959400tW^2-26371599148125W^3+2341397816853864817617847981162945070584483528261510775184t^2-183528856281941126263893376861009344326329920tW+164969244105921949388612135400W^2-5390258693970772695117811943833419754488807920338145746560t+61550499069700173478724063089387654812308400W+3193966974265623365398753846860968247266969720956505401600", "planes": [["666727858907928630542805134887161895157", "-371406861222752391050720128495402169926", "0", "-13148859997292971155483015"], ["0", "7984878906436628716387308745543788472", "-4446108899575055719305582305633616071", "10689705055237706452395"]]})json"), std::nullopt, std::nullopt});
    return v;
  }();
  return all;
}

const Fixture& find_fixture(const std::string& name) {
  for (const auto& f : fixtures())
    if (f.name == name) return f;
  throw ParseError("unknown example '" + name + "'");
}

Json fixture_input(const Fixture& f) {
  switch (f.kind) {
    case FixtureKind::Config: return f.data;
    case FixtureKind::Basis: return f.data.at("basis");
    case FixtureKind::AmbientPair: return ambient_to_json(to_ambient(branch_from_json(f.data.at("c"))));
  }
  return f.data;
}

}  // namespace sextic
