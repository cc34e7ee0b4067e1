#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include "dtqft/registry.hpp"
#include "fixtures.hpp"

using namespace dtqft;
using namespace fixtures;
namespace fs = std::filesystem;

namespace {

class TempWorkspace {
 public:
  TempWorkspace() {
    dir_ = fs::temp_directory_path() / ("dtqft_ws_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) +
                                        "_" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  ~TempWorkspace() { fs::remove_all(dir_); }

  void write(const std::string& rel, const std::string& text) const {
    fs::create_directories((dir_ / rel).parent_path());
    std::ofstream(dir_ / rel) << text;
  }
  fs::path manifest() const { return dir_ / "workspace.json"; }

 private:
  fs::path dir_;
};

const char* k_json = R"({"name": "k", "dim": 1, "basis": ["1"], "mult": [1], "unit": [1], "form": [1]})";
const char* k2_json = R"({"name": "k2", "left_alg": "k", "right_alg": "k", "dim": 2,
  "left_action": [[[1, 0], [0, 1]]], "right_action": [[[1, 0], [0, 1]]]})";

}  // namespace

TEST(Workspace, BundledLoads) {
  const Registry& reg = bundled();
  for (const char* a : {"k", "M2", "qZ2", "qZ3", "qS3"}) EXPECT_TRUE(reg.has_algebra(a)) << a;
  EXPECT_EQ(reg.bimodules().size(), 12u);
  EXPECT_EQ(reg.morphisms().size(), 2u);
  EXPECT_EQ(reg.diagrams().size(), 3u);
  EXPECT_EQ(reg.ground()->name(), "k");
  EXPECT_EQ(reg.algebra("qS3")->dim(), 6u);
  EXPECT_THROW(reg.algebra("qS4"), UnknownName);
}

TEST(Workspace, EmptyManifestGivesEmptyRegistry) {
  TempWorkspace ws;
  ws.write("workspace.json", "{}");
  Registry reg = load_workspace(ws.manifest(), Q);
  EXPECT_TRUE(reg.algebras().empty());
  EXPECT_TRUE(reg.bimodules().empty());
}

TEST(Workspace, DanglingAlgebraNameIsRejected) {
  TempWorkspace ws;
  ws.write("k2.json", k2_json);
  ws.write("workspace.json", R"({"bimodules": ["k2.json"]})");
  EXPECT_THROW(load_workspace(ws.manifest(), Q), WorkspaceError);
}

TEST(Workspace, FailingValidationRejectsTheWholeWorkspace) {
  TempWorkspace ws;
  ws.write("k.json", k_json);
  ws.write("k2.json", k2_json);
  ws.write("bad.json", R"({"name": "bad", "source": "k2:+", "target": "k2:+", "matrix": [[1, 2]]})");
  ws.write("workspace.json", R"({"algebras": ["k.json"], "bimodules": ["k2.json"], "morphisms": ["bad.json"]})");
  EXPECT_THROW(load_workspace(ws.manifest(), Q), WorkspaceError);
  ws.write("workspace.json", R"({"algebras": ["k.json"], "bimodules": ["k2.json"]})");
  EXPECT_EQ(load_workspace(ws.manifest(), Q).bimodules().size(), 1u);
}

TEST(Workspace, MissingFileIsRejected) {
  TempWorkspace ws;
  ws.write("workspace.json", R"({"algebras": ["nope.json"]})");
  EXPECT_THROW(load_workspace(ws.manifest(), Q), WorkspaceError);
  EXPECT_THROW(load_workspace(ws.manifest().parent_path() / "absent.json", Q), WorkspaceError);
}

TEST(Workspace, PrimeFieldReducesEntries) {
  Registry reg = load_workspace(std::string(DTQFT_WORKSPACE_DIR) + "/workspace.json", Field::parse("fp:7"));
  EXPECT_EQ(reg.morphism("half_V2").matrix(0, 0).to_string(), "4");
}

TEST(Words, ParseAndPrint) {
  const Registry& reg = bundled();
  EXPECT_EQ(parse_word(reg, "V2:+,V2:-").to_string(), "V2:+,V2:-");
  EXPECT_EQ(parse_word(reg, "1@qS3").to_string(), "1@qS3");
  EXPECT_EQ(parse_word(reg, "kn3:-").size(), 1u);
}

TEST(Words, ParseErrors) {
  const Registry& reg = bundled();
  EXPECT_THROW(parse_word(reg, "nope:+"), UnknownName);
  EXPECT_THROW(parse_word(reg, "V2"), std::invalid_argument);
  EXPECT_THROW(parse_word(reg, "V2:+,V2:+"), std::invalid_argument);
  EXPECT_THROW(parse_word(reg, "1@nope"), UnknownName);
}

TEST(Words, Circles) {
  const Registry& reg = bundled();
  EXPECT_EQ(cyclic_coinvariants(parse_circle(reg, "V2:+,V2:-")).dim(), 1u);
  EXPECT_THROW(parse_circle(reg, "V2:+"), std::invalid_argument);
}

TEST(Json, BimoduleRoundTrip) {
  const Registry& reg = bundled();
  BimodulePtr v = reg.bimodule("V2");
  Bimodule back = bimodule_from_json(bimodule_to_json(*v), reg);
  EXPECT_EQ(back.dim(), v->dim());
  for (std::size_t i = 0; i < v->left_action().size(); ++i) EXPECT_EQ(back.left_action()[i], v->left_action()[i]);
}

TEST(Json, AlgebraRoundTrip) {
  const Registry& reg = bundled();
  FrobeniusAlgebra back = algebra_from_json(algebra_to_json(*reg.algebra("qS3")), Q);
  EXPECT_EQ(back.structure_constants(), reg.algebra("qS3")->structure_constants());
  EXPECT_EQ(back.form_values(), reg.algebra("qS3")->form_values());
}
