#include "sextic/delpezzo.hpp"
#include "sextic/discriminants.hpp"
#include "sextic/errors.hpp"
#include "sextic/fixtures.hpp"
#include "sextic/io.hpp"
#include "sextic/tritangents.hpp"
#include "sextic/verify.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace sextic;

namespace {

enum ExitCode { kOk = 0, kInternal = 1, kDegenerate = 2, kGenericity = 3, kResource = 4, kMismatch = 5 };

struct Global {
  int jobs = 1;
  std::string format = "text";
};

Json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw ParseError("'" + path + "' is not valid JSON: " + e.what());
  }
}

void require_valid(const PointConfiguration& p) {
  auto rep = validate_configuration(p);
  if (!rep.ok) throw DegenerateConfiguration("invalid configuration: " + rep.condition + " (" + rep.detail + ")");
}

void print_json(const Json& j) { std::cout << j.dump(2) << '\n'; }

int default_jobs() {
  if (const char* env = std::getenv("SEXTIC_JOBS")) {
    int n = std::atoi(env);
    if (n > 0) return n;
  }
  return 1;
}

// ---------------------------------------------------------------- census

struct CensusArgs {
  std::string config, basis;
  bool planes = false;
  bool no_cross_check = false;
};

int run_census(const Global& g, const CensusArgs& a) {
  auto p = config_from_json(read_json(a.config));
  require_valid(p);
  CensusOptions o;
  o.planes = a.planes;
  o.cross_check = !a.no_cross_check;
  o.jobs = g.jobs;
  if (!a.basis.empty()) o.basis = basis_from_json(read_json(a.basis));
  auto r = census(p, o);
  if (g.format == "json") print_json(census_to_json(r));
  else if (g.format == "csv") std::cout << census_to_csv(r);
  else std::cout << census_to_text(r);
  return kOk;
}

// ---------------------------------------------------------------- branch-curve

struct BranchArgs {
  std::string config, basis, method = "groebner";
  int colon_power = 3;
  bool check_bases = false;
  bool qk = false;
};

int run_branch(const Global& g, const BranchArgs& a) {
  SexticBasis<Rational> b;
  if (!a.basis.empty()) {
    b = basis_from_json(read_json(a.basis));
  } else {
    auto p = config_from_json(read_json(a.config));
    require_valid(p);
    b = integral_basis(real_sextic_basis(p));
  }
  BranchStats stats;
  BranchCurve bc;
  if (a.method == "linear") {
    bc = branch_curve_linear(b.u, b.v, b.w, &stats);
  } else {
    BranchOptions opts;
    opts.colon_power = a.colon_power;
    opts.check_bases = a.check_bases;
    bc = branch_curve(b.u, b.v, b.w, opts, &stats);
  }
  if (a.qk) {
    auto qk = to_ambient(bc.c);
    if (g.format == "json") print_json(ambient_to_json(qk));
    else std::cout << "Q = " << qk.Q.str() << "\nK = " << qk.K.str() << '\n';
    return kOk;
  }
  if (g.format == "json") {
    Json j = {{"c", branch_to_json(bc.c)}, {"method", bc.method}, {"primes", stats.primes},
              {"certified", stats.certified}};
    if (stats.bases_checked) j["basesOk"] = stats.bases_ok;
    print_json(j);
  } else {
    std::cout << bc.c.str() << '\n';
  }
  return kOk;
}

// ---------------------------------------------------------------- verify

struct VerifyArgs {
  std::string qk, plane;
};

int run_verify(const Global& g, const VerifyArgs& a) {
  auto qk = ambient_from_json(read_json(a.qk));
  auto h = parse_plane(a.plane);
  auto r = verify_tritangent(qk.Q, qk.K, h);
  if (g.format == "json") print_json(tritangency_to_json(r));
  else std::cout << r.str() << '\n';
  return kOk;
}

// ---------------------------------------------------------------- search

struct SearchArgs {
  int s = 5, count = 10, height = 20;
  std::uint64_t seed = 1;
  std::string hist;
};

int run_search(const Global& g, const SearchArgs& a) {
  if (a.s < 1 || a.s > 5) throw DegenerateInput("--s must lie in 1..5");
  auto r = search({a.s, a.height}, a.count, a.seed, g.jobs);
  if (!a.hist.empty()) {
    std::ofstream out(a.hist);
    if (!out) throw ParseError("cannot write '" + a.hist + "'");
    out << histogram_csv(r);
  }
  if (g.format == "json") {
    print_json(search_to_json(r));
  } else if (g.format == "csv") {
    std::cout << histogram_csv(r);
  } else {
    int real_mismatch = 0;
    for (const auto& s : r.samples) real_mismatch += s.n_real != expected_real_count(a.s);
    std::cout << "samples=" << r.samples.size() << " rejected=" << r.rejected << " realCountViolations=" << real_mismatch
              << '\n'
              << histogram_ascii(r);
    for (const auto& s : r.samples)
      if (a.s == 5 && s.n_totally_real < 84)
        std::cout << "FINDING: sample " << s.index << " has " << s.n_totally_real
                  << " totally real tritangents, below the known range [84,120]\n";
  }
  return kOk;
}

// ---------------------------------------------------------------- disc-degree

struct DiscArgs {
  std::string type = "56-2", role = "distinguished";
  std::uint64_t prime = 1000003;
  int bound = 600, samples = 700, held_out = 20;
};

int run_disc(const Global& g, const DiscArgs& a) {
  DiscDegreeOptions o;
  o.kind = parse_class_kind(a.type);
  o.role = parse_moving_role(a.role);
  o.p = a.prime;
  o.degree_bound = a.bound;
  o.samples = a.samples;
  o.held_out = a.held_out;
  o.jobs = g.jobs;
  auto r = disc_degree(o);
  Json j = disc_report_to_json(r);
  j["expected"] = expected_disc_degree(o.kind, o.role);
  if (g.format == "json") {
    print_json(j);
  } else {
    std::cout << "class=" << r.cls.label() << " role=" << a.role << " degree=" << r.degree
              << " expected=" << j["expected"].get<int>() << " samples=" << r.samples_used << '\n';
    for (const auto& f : r.removed) std::cout << "  removed " << f.degree << ": " << f.reason << '\n';
  }
  return kOk;
}

// ---------------------------------------------------------------- examples

int run_example(const Global& g, const std::string& name) {
  const auto& f = find_fixture(name);
  bool ok = true;
  switch (f.kind) {
    case FixtureKind::Config: {
      auto p = config_from_json(f.data);
      require_valid(p);
      CensusOptions o;
      o.jobs = g.jobs;
      auto r = census(p, o);
      if (g.format == "json") print_json(census_to_json(r));
      else std::cout << "real=" << r.n_real << " totallyReal=" << r.n_totally_real << '\n';
      ok = r.n_real == f.expected_real && r.n_totally_real == f.expected_totally_real;
      break;
    }
    case FixtureKind::Basis: {
      auto b = basis_from_json(f.data.at("basis"));
      auto printed = branch_from_json(f.data.at("c"));
      auto bc = branch_curve(b.u, b.v, b.w);
      const bool same_c = bc.c == monic_t6(printed);
      auto p = config_from_json(find_fixture("ex-2.3").data);
      CensusOptions o;
      o.planes = true;
      o.jobs = g.jobs;
      o.basis = b;
      o.branch = bc.c;
      auto r = census(p, o);
      const auto& cls_label = f.data.at("printedPlane").at("class").get<std::string>();
      AmbientPlane h;
      for (std::size_t k = 0; k < 4; ++k) h.u[k] = Rational::parse(f.data.at("printedPlane").at("plane")[k].get<std::string>());
      bool plane_ok = false;
      for (const auto& v : r.classes)
        if (v.cls.label() == cls_label && v.plane) plane_ok = v.plane->proportional_to(h);
      if (g.format == "json") {
        print_json({{"branchCurveMatches", same_c}, {"printedPlaneMatches", plane_ok}, {"class", cls_label},
                    {"real", r.n_real}, {"totallyReal", r.n_totally_real}});
      } else {
        std::cout << "branchCurveMatches=" << (same_c ? "yes" : "no") << " printedPlane=" << cls_label << ":"
                  << (plane_ok ? "yes" : "no") << " real=" << r.n_real << " totallyReal=" << r.n_totally_real << '\n';
      }
      ok = same_c && plane_ok;
      break;
    }
    case FixtureKind::AmbientPair: {
      auto qk = to_ambient(branch_from_json(f.data.at("c")));
      Json out = Json::array();
      for (const auto& pl : f.data.at("planes")) {
        AmbientPlane h;
        for (std::size_t k = 0; k < 4; ++k) h.u[k] = Rational::parse(pl[k].get<std::string>());
        auto v = verify_tritangent(qk.Q, qk.K, h);
        ok = ok && v.status == TritangencyStatus::Tritangent && v.real_contacts == 3;
        if (g.format == "json") out.push_back({{"plane", plane_to_json(h)}, {"result", tritangency_to_json(v)}});
        else std::cout << h.str() << ' ' << v.str() << '\n';
      }
      if (g.format == "json") print_json(out);
      break;
    }
  }
  if (!ok) {
    std::cerr << "example " << name << " does not reproduce its expected result\n";
    return kMismatch;
  }
  return kOk;
}

int run_examples_list(const Global& g) {
  if (g.format == "json") {
    Json j = Json::array();
    for (const auto& f : fixtures()) j.push_back({{"name", f.name}, {"title", f.title}});
    print_json(j);
  } else {
    for (const auto& f : fixtures()) std::cout << f.name << "  " << f.title << '\n';
  }
  return kOk;
}

int run_examples_show(const std::string& name) {
  print_json(fixture_input(find_fixture(name)));
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Tritangents of genus-4 space sextics from eight points in the plane"};
  app.require_subcommand(1);
  Global g;
  g.jobs = default_jobs();
  app.add_option("--jobs,-j", g.jobs, "worker threads (default $SEXTIC_JOBS or 1)")->check(CLI::PositiveNumber);
  app.add_option("--format,-f", g.format, "output format")->check(CLI::IsMember({"json", "csv", "text"}));

  CensusArgs ca;
  auto* census_cmd = app.add_subcommand("census", "classify the 120 tritangents of a configuration");
  census_cmd->add_option("--config", ca.config, "configuration JSON")->required();
  census_cmd->add_flag("--planes", ca.planes, "compute the exact tritangent planes");
  census_cmd->add_flag("--no-cross-check", ca.no_cross_check, "skip the branch-curve check of each plane");
  census_cmd->add_option("--basis", ca.basis, "basis JSON {u, v, w} to express the planes in");

  BranchArgs ba;
  auto* branch_cmd = app.add_subcommand("branch-curve", "the branch curve c(t, W)");
  auto* bc_config = branch_cmd->add_option("--config", ba.config, "configuration JSON");
  auto* bc_basis = branch_cmd->add_option("--basis", ba.basis, "basis JSON {u, v, w}");
  bc_config->excludes(bc_basis);
  branch_cmd->add_option("--method", ba.method, "groebner or linear")->check(CLI::IsMember({"groebner", "linear"}));
  branch_cmd->add_option("--colon-power", ba.colon_power, "exponent of the colon by <u,v>")->check(CLI::Range(1, 8));
  branch_cmd->add_flag("--check-bases", ba.check_bases, "post-hoc S-pair check of every Groebner basis");
  branch_cmd->add_flag("--qk", ba.qk, "print the canonical pair (Q, K) instead of c");

  VerifyArgs va;
  auto* verify_cmd = app.add_subcommand("verify", "decide whether a plane is tritangent to Q = K = 0");
  verify_cmd->add_option("--qk", va.qk, "JSON {Q, K}")->required();
  verify_cmd->add_option("--plane", va.plane, "\"u0,u1,u2,u3\"")->required();

  SearchArgs sa;
  auto* search_cmd = app.add_subcommand("search", "census of random configurations with s ovals");
  search_cmd->add_option("--s", sa.s, "number of ovals 1..5")->check(CLI::Range(1, 5));
  search_cmd->add_option("--count", sa.count, "number of samples")->check(CLI::NonNegativeNumber);
  search_cmd->add_option("--seed", sa.seed, "generator seed");
  search_cmd->add_option("--height", sa.height, "coordinate bound")->check(CLI::PositiveNumber);
  search_cmd->add_option("--hist", sa.hist, "write the histogram CSV here");

  DiscArgs da;
  auto* disc_cmd = app.add_subcommand("disc-degree", "degree of a tritangent discriminant component in one point");
  disc_cmd->add_option("--type", da.type, "8, 28, 56 or 56-2")->check(CLI::IsMember({"8", "28", "56", "56-2"}));
  disc_cmd->add_option("--moving-role", da.role, "distinguished or other")
      ->check(CLI::IsMember({"distinguished", "other"}));
  disc_cmd->add_option("--prime", da.prime, "field size");
  disc_cmd->add_option("--bound", da.bound, "total degree bound for the interpolant");
  disc_cmd->add_option("--samples", da.samples, "interpolation points")->check(CLI::PositiveNumber);
  disc_cmd->add_option("--held-out", da.held_out, "held-out check points")->check(CLI::PositiveNumber);

  std::string example_name;
  auto* examples_cmd = app.add_subcommand("examples", "bundled example data");
  examples_cmd->require_subcommand(1);
  auto* ex_list = examples_cmd->add_subcommand("list", "list the examples");
  auto* ex_run = examples_cmd->add_subcommand("run", "run an example and compare with its expected result");
  ex_run->add_option("name", example_name)->required();
  auto* ex_show = examples_cmd->add_subcommand("show", "print the input JSON of an example");
  ex_show->add_option("name", example_name)->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*census_cmd) return run_census(g, ca);
    if (*branch_cmd) {
      if (ba.config.empty() == ba.basis.empty()) throw DegenerateInput("branch-curve needs --config or --basis");
      return run_branch(g, ba);
    }
    if (*verify_cmd) return run_verify(g, va);
    if (*search_cmd) return run_search(g, sa);
    if (*disc_cmd) return run_disc(g, da);
    if (*ex_list) return run_examples_list(g);
    if (*ex_run) return run_example(g, example_name);
    if (*ex_show) return run_examples_show(example_name);
  } catch (const DegenerateConfiguration& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kDegenerate;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kDegenerate;
  } catch (const DegenerateInput& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kDegenerate;
  } catch (const NotConjStable& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kDegenerate;
  } catch (const GenericityFailure& e) {
    std::cerr << "genericity failure: " << e.what() << '\n';
    return kGenericity;
  } catch (const InterpolationUnstable& e) {
    std::cerr << "genericity failure: " << e.what() << '\n';
    return kGenericity;
  } catch (const ResourceLimit& e) {
    std::cerr << "resource limit: " << e.what() << '\n';
    return kResource;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kInternal;
  }
  return kInternal;
}
