#include <filesystem>
#include <fstream>

#include <gtest/gtest.h>

#include "covmat/error.hpp"
#include "covmat/state_io.hpp"
#include "covmat/state_spec.hpp"
#include "covmat/states.hpp"

namespace covmat {
namespace {

TEST(StateSpec, RoundTripsThroughText) {
  for (const char* text :
       {"bennett3x3", "mes:3", "isotropic:2:0.3333333333333333", "basis:3:2", "maxmixed:4",
        "ghz:3:2", "ghz:4:3", "w:3", "random_pure:2x3:7", "random_separable:2x2x2:5:11",
        "file:/tmp/x.json", "product(mes:2,maxmixed:3)", "mix(0.25*bennett3x3,0.75*mes:3)",
        "mix(0.5*product(basis:2:0,basis:2:1),0.5*mes:2)"}) {
    const StateSpec s = parse_state_spec(text);
    EXPECT_EQ(to_string(s), text);
    EXPECT_EQ(parse_state_spec(to_string(s)), s);
  }
}

TEST(StateSpec, AcceptsShorthands) {
  EXPECT_EQ(to_string(parse_state_spec("ghz:3")), "ghz:3:2");
  EXPECT_EQ(to_string(parse_state_spec("product:mes:2,basis:2:0")), "product(mes:2,basis:2:0)");
  EXPECT_EQ(to_string(parse_state_spec("mix( 0.5*mes:2 , 0.5*maxmixed:4 )")), "mix(0.5*mes:2,0.5*maxmixed:4)");
}

TEST(StateSpec, RejectsMalformedInput) {
  for (const char* text : {"", "nope", "mes", "mes:x", "mes:3:4", "isotropic:3", "bennett3x3:1",
                           "product(mes:2", "mix(mes:2)", "random_pure:2y3:1", "mes:3 junk"}) {
    EXPECT_THROW(parse_state_spec(text), InvalidArgument) << text;
  }
}

TEST(StateSpec, BuildsStates) {
  EXPECT_EQ(build_state(parse_state_spec("bennett3x3")).matrix(), bennett_state().matrix());
  EXPECT_EQ(build_state(parse_state_spec("w:3")).matrix(), w_state(3).matrix());
  const DensityMatrix p = build_state(parse_state_spec("product(mes:2,maxmixed:3)"));
  EXPECT_EQ(p.dims(), (std::vector<int>{2, 2, 3}));
  const DensityMatrix m = build_state(parse_state_spec("mix(0.5*mes:2,0.5*isotropic:2:0)"));
  EXPECT_NEAR((m.matrix() - isotropic(2, 0.5).matrix()).norm(), 0.0, 1e-15);
  EXPECT_THROW(build_state(parse_state_spec("mix(0.5*mes:2,0.6*mes:2)")), InvalidArgument);
  EXPECT_THROW(build_state(parse_state_spec("mes:1")), InvalidArgument);
}

class StateFile : public ::testing::Test {
 protected:
  std::filesystem::path dir_ = std::filesystem::temp_directory_path() / "covmat_state_spec_test";
  void SetUp() override { std::filesystem::create_directories(dir_); }
  void TearDown() override { std::filesystem::remove_all(dir_); }
};

TEST_F(StateFile, RoundTripsExactly) {
  const DensityMatrix rho = random_pure({2, 3}, 42);
  const std::string path = (dir_ / "rho.json").string();
  save_state_file(path, rho);
  const DensityMatrix back = load_state_file(path);
  EXPECT_EQ(back.dims(), rho.dims());
  EXPECT_EQ(back.matrix(), rho.matrix());
  EXPECT_EQ(build_state(parse_state_spec("file:" + path)).matrix(), rho.matrix());
}

TEST_F(StateFile, RejectsInvalidContent) {
  EXPECT_THROW(state_from_json("{"), Error);
  EXPECT_THROW(state_from_json(R"({"dims":[2],"matrix":[[[1,0],[0,0]]]})"), DimensionMismatch);
  EXPECT_THROW(state_from_json(R"({"dims":[2],"matrix":[[[1,0],[0,0]],[[0,0],[1,0]]]})"),
               InvalidState);
  EXPECT_NO_THROW(state_from_json(R"({"dims":[2],"matrix":[[[0.5,0],[0,0]],[[0,0],[0.5,0]]]})"));
  EXPECT_THROW(load_state_file((dir_ / "missing.json").string()), Error);
}

}  // namespace
}  // namespace covmat
