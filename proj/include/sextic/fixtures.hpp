#pragma once

#include "sextic/io.hpp"

#include <optional>
#include <string>
#include <vector>

namespace sextic {

enum class FixtureKind {
  Config,       // {"field", "points"}
  Basis,        // {"basis": {u, v, w}, "c": branch curve, "printedPlane": {...}}
  AmbientPair,  // {"c": branch curve, "planes": [[4 strings], ...]}
};

struct Fixture {
  std::string name;
  std::string title;
  FixtureKind kind = FixtureKind::Config;
  Json data;
  std::optional<int> expected_real;
  std::optional<int> expected_totally_real;
};

/// The bundled example data, in a fixed order.
const std::vector<Fixture>& fixtures();
/// Throws ParseError for an unknown name.
const Fixture& find_fixture(const std::string& name);

/// The input a command accepts: configuration JSON, basis JSON or (Q, K) JSON.
Json fixture_input(const Fixture& f);

}  // namespace sextic
