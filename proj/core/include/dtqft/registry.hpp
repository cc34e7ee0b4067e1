#pragma once

#include <filesystem>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "dtqft/bimodule.hpp"
#include "dtqft/frobenius.hpp"

namespace dtqft {

/// Any failure while loading a workspace.
class WorkspaceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Lookup failure for a name that is not registered.
class UnknownName : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Named workspace entries over one field. Names are
/// unique per kind; each bimodule's algebras are registered too.
class Registry {
 public:
  explicit Registry(Field field = Field::rationals()) : field_(field) {}

  Field field() const { return field_; }

  void add_algebra(AlgebraPtr a);
  void add_bimodule(BimodulePtr m);
  void add_morphism(std::string name, TwoMorphism phi);
  /// Diagram files listed by the manifest, in manifest order.
  void add_diagram_path(std::filesystem::path p) { diagrams_.push_back(std::move(p)); }

  AlgebraPtr algebra(std::string_view name) const;
  BimodulePtr bimodule(std::string_view name) const;
  const TwoMorphism& morphism(std::string_view name) const;
  bool has_algebra(std::string_view name) const { return algebras_.count(std::string(name)) > 0; }
  bool has_bimodule(std::string_view name) const { return bimodules_.count(std::string(name)) > 0; }
  bool has_morphism(std::string_view name) const { return morphisms_.count(std::string(name)) > 0; }

  const std::map<std::string, AlgebraPtr>& algebras() const { return algebras_; }
  const std::map<std::string, BimodulePtr>& bimodules() const { return bimodules_; }
  const std::map<std::string, TwoMorphism>& morphisms() const { return morphisms_; }
  const std::vector<std::filesystem::path>& diagrams() const { return diagrams_; }

  /// The registered one-dimensional algebra, if any (named "k" when bundled).
  AlgebraPtr ground() const;

 private:
  Field field_;
  std::map<std::string, AlgebraPtr> algebras_;
  std::map<std::string, BimodulePtr> bimodules_;
  std::map<std::string, TwoMorphism> morphisms_;
  std::vector<std::filesystem::path> diagrams_;
};

/// Parses "M:+,N:-" (letters separated by commas) or "1@A" for an empty word.
OneMorWord parse_word(const Registry& reg, std::string_view text);
/// Same syntax, read cyclically.
DefectCircle parse_circle(const Registry& reg, std::string_view text);

/// JSON readers for the individual file kinds. Scalars are "p/q" strings or integers.
FrobeniusAlgebra algebra_from_json(const nlohmann::json& j, Field field);
GroupTable group_from_json(const nlohmann::json& j);
Bimodule bimodule_from_json(const nlohmann::json& j, const Registry& reg);
TwoMorphism morphism_from_json(const nlohmann::json& j, const Registry& reg, std::string* name);

nlohmann::json algebra_to_json(const FrobeniusAlgebra& a);
nlohmann::json bimodule_to_json(const Bimodule& m);
nlohmann::json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const nlohmann::json& j, Field field);

/// Reads a manifest {"algebras": [...], "groups": [...], "bimodules": [...],
/// "morphisms": [...], "diagrams": [...]} with paths relative to the
/// manifest. Every entry is validated; any
/// failure throws WorkspaceError and no registry is returned.
Registry load_workspace(const std::filesystem::path& manifest, Field field);

}  // namespace dtqft
