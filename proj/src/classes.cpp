#include "sextic/classes.hpp"

#include "sextic/modular.hpp"

#include <algorithm>

namespace sextic {

std::string TritangentClass::kind_name() const {
  switch (kind) {
    case ClassKind::T8: return "8";
    case ClassKind::T28: return "28";
    case ClassKind::T56: return "56";
    case ClassKind::T56_2: return "56-2";
  }
  return "?";
}

std::string TritangentClass::label() const {
  std::string s = "T" + (kind == ClassKind::T56_2 ? std::string("56_2") : kind_name()) + "(";
  for (std::size_t k = 0; k < indices.size(); ++k) s += (k ? "," : "") + std::to_string(indices[k] + 1);
  return s + ")";
}

ClassKind parse_class_kind(const std::string& s) {
  if (s == "8" || s == "T8") return ClassKind::T8;
  if (s == "28" || s == "T28") return ClassKind::T28;
  if (s == "56" || s == "T56") return ClassKind::T56;
  if (s == "56-2" || s == "56/2" || s == "56_2" || s == "T56_2") return ClassKind::T56_2;
  throw ParseError("unknown class kind '" + s + "'");
}

const std::vector<TritangentClass>& all_classes() {
  static const std::vector<TritangentClass> classes = [] {
    std::vector<TritangentClass> out;
    auto add = [&](ClassKind k, std::vector<int> idx) {
      out.push_back({k, std::move(idx), static_cast<int>(out.size())});
    };
    for (int i = 0; i < 8; ++i) add(ClassKind::T8, {i});
    for (int i = 0; i < 8; ++i)
      for (int j = i + 1; j < 8; ++j) add(ClassKind::T28, {i, j});
    for (int i = 0; i < 8; ++i)
      for (int j = i + 1; j < 8; ++j)
        for (int k = j + 1; k < 8; ++k) add(ClassKind::T56, {i, j, k});
    for (int i = 0; i < 8; ++i)
      for (int j = i + 1; j < 8; ++j) add(ClassKind::T56_2, {i, j});
    return out;
  }();
  return classes;
}

const TritangentClass& find_class(ClassKind kind, std::vector<int> indices) {
  std::sort(indices.begin(), indices.end());
  for (const auto& c : all_classes())
    if (c.kind == kind && c.indices == indices) return c;
  throw ParseError("no such tritangent class");
}

bool classify_class_reality(const PointConfiguration& p, const TritangentClass& cls) {
  for (int i : cls.indices) {
    int j = p.involution()[static_cast<std::size_t>(i)];
    if (std::find(cls.indices.begin(), cls.indices.end(), j) == cls.indices.end()) return false;
  }
  return true;
}

std::vector<int> class_base_points(const TritangentClass& cls) {
  std::vector<int> out;
  switch (cls.kind) {
    case ClassKind::T8: break;
    case ClassKind::T28: out = cls.indices; break;
    case ClassKind::T56:
    case ClassKind::T56_2:
      for (int i = 0; i < 8; ++i)
        if (std::find(cls.indices.begin(), cls.indices.end(), i) == cls.indices.end()) out.push_back(i);
      break;
  }
  return out;
}

std::pair<MultiplicityAssignment, MultiplicityAssignment> class_systems(const TritangentClass& cls) {
  MultiplicityAssignment a, b;
  auto at = [](MultiplicityAssignment& m, int i) -> int& { return m.mults[static_cast<std::size_t>(i)]; };
  switch (cls.kind) {
    case ClassKind::T8:
      a = uniform_assignment(6, 2);
      at(a, cls.indices[0]) = 3;
      b = a;
      break;
    case ClassKind::T28:
      a = MultiplicityAssignment{1, {}};
      at(a, cls.indices[0]) = at(a, cls.indices[1]) = 1;
      b = uniform_assignment(5, 2);
      at(b, cls.indices[0]) = at(b, cls.indices[1]) = 1;
      break;
    case ClassKind::T56:
      a = uniform_assignment(2, 1);
      b = uniform_assignment(4, 1);
      for (int i : cls.indices) {
        at(a, i) = 0;
        at(b, i) = 2;
      }
      break;
    case ClassKind::T56_2:
      a = uniform_assignment(3, 1);
      at(a, cls.indices[0]) = 2;
      at(a, cls.indices[1]) = 0;
      b = uniform_assignment(3, 1);
      at(b, cls.indices[0]) = 0;
      at(b, cls.indices[1]) = 2;
      break;
  }
  return {a, b};
}

bool is_swapped_pair(const PointConfiguration& p, const TritangentClass& cls) {
  return cls.kind == ClassKind::T56_2 && p.involution()[static_cast<std::size_t>(cls.indices[0])] == cls.indices[1];
}

namespace {

bool conj_stable(const PointConfiguration& p, const MultiplicityAssignment& ma) {
  for (std::size_t i = 0; i < 8; ++i)
    if (ma.mults[i] != ma.mults[static_cast<std::size_t>(p.involution()[i])]) return false;
  return true;
}

}  // namespace

std::vector<QMPoly> real_system(const PointConfiguration& p, const MultiplicityAssignment& ma) {
  if (p.field() == FieldTag::Q) return linear_system_basis(rational_points(p), ma);
  if (!conj_stable(p, ma)) throw NotConjStable("multiplicities of " + ma.str() + " are not conjugation-stable");
  return real_basis(linear_system_basis(gaussian_points(p), ma), ma.degree);
}

SexticBasis<Rational> real_sextic_basis(const PointConfiguration& p) {
  auto pencil = real_system(p, uniform_assignment(3, 1));
  auto doubles = real_system(p, uniform_assignment(6, 2));
  return {pencil[0], pencil[1], complement_of_squares(doubles, pencil[0], pencil[1])};
}

SexticBasis<Rational> integral_basis(const SexticBasis<Rational>& b) {
  return {primitive_integer(b.u), primitive_integer(b.v), primitive_integer(b.w)};
}

ExceptionalPair<Rational> real_exceptional_pair(const PointConfiguration& p, const TritangentClass& cls) {
  if (p.field() == FieldTag::Q) return exceptional_pair(rational_points(p), cls);
  if (!classify_class_reality(p, cls) || is_swapped_pair(p, cls))
    throw NotConjStable(cls.label() + " has no real curve pair");
  auto [m1, m2] = class_systems(cls);
  ExceptionalPair<Rational> out;
  out.base_points = class_base_points(cls);
  out.c1 = real_system(p, m1).front();
  if (cls.kind == ClassKind::T8) {
    out.tangent_cone = true;
    out.c2 = QMPoly(plane_ring());
    return out;
  }
  out.c2 = real_system(p, m2).front();
  if (cls.kind == ClassKind::T56_2) {
    auto gp = gaussian_points(p);
    const auto& pi = gp[static_cast<std::size_t>(cls.indices[0])];
    const auto& pj = gp[static_cast<std::size_t>(cls.indices[1])];
    if (to_gaussian_form(out.c1).eval(std::vector<Gaussian>(pj.begin(), pj.end())).is_zero() ||
        to_gaussian_form(out.c2).eval(std::vector<Gaussian>(pi.begin(), pi.end())).is_zero())
      throw NonGenericVanishing("type 56-2 cubic vanishes at its excluded point for " + cls.label());
  }
  return out;
}

}  // namespace sextic
