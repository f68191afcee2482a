#include "support.hpp"

#include "ulab/config.hpp"
#include "ulab/hyper/hyperreal.hpp"
#include "ulab/hyper/scalar.hpp"

#include <fstream>

namespace {

using namespace ulab;

TEST(Config, Defaults) {
  const RunConfig c;
  EXPECT_EQ(c.truncation_order, 8);
  EXPECT_EQ(c.decimal_digits, 50U);
  EXPECT_EQ(c.characteristic_count, 2);
  EXPECT_NO_THROW(c.validate());
  EXPECT_EQ(c.coordinate_for(1), 3);
  EXPECT_EQ(c.quality_name(9), "inertial mass");
  EXPECT_EQ(c.quality_name(42), "a42");
  EXPECT_NE(c.frozen_tail_template.find("{i}"), std::string::npos);
}

TEST(Config, Invariants) {
  EXPECT_ERRC(RunConfig::from_json({{"truncation_order", 1}}), Errc::InvalidArgument);
  EXPECT_ERRC(RunConfig::from_json({{"decimal_digits", 19}}), Errc::InvalidArgument);
  EXPECT_ERRC(RunConfig::from_json({{"f", 0}}), Errc::InvalidArgument);
  EXPECT_ERRC(RunConfig::from_json({{"frozen_tail_template", "no slot"}}), Errc::InvalidArgument);
  EXPECT_ERRC(RunConfig::from_json({{"truncation_order", "eight"}}), Errc::ParseError);
}

TEST(Config, JsonRoundTrip) {
  const auto c = RunConfig::from_json({{"truncation_order", 5},
                                       {"decimal_digits", 30},
                                       {"f", 3},
                                       {"seed", 99},
                                       {"characteristic_coordinate", {{"1", 9}}},
                                       {"coordinate_quality", {{"9", "mass"}}}});
  EXPECT_EQ(c.coordinate_for(1), 9);
  EXPECT_EQ(c.coordinate_for(2), 4);
  EXPECT_EQ(c.quality_name(9), "mass");
  EXPECT_EQ(RunConfig::from_json(c.to_json()).to_json(), c.to_json());
}

TEST(Config, ApplySetsKernelDefaults) {
  const int order = hyper::default_order();
  const unsigned digits = hyper::decimal_digits();
  RunConfig c;
  c.truncation_order = 4;
  c.decimal_digits = 30;
  c.apply();
  EXPECT_EQ(hyper::default_order(), 4);
  EXPECT_EQ(hyper::decimal_digits(), 30U);
  hyper::set_default_order(order);
  hyper::set_decimal_digits(digits);
}

TEST(Config, LoadResolvesAlphabetBesideFile) {
  const auto dir = std::filesystem::temp_directory_path() / "ulab_config_test";
  std::filesystem::create_directories(dir);
  std::ofstream(dir / "c.json") << R"({"alphabet": "symbols.txt"})";
  const auto c = RunConfig::load(dir / "c.json");
  ASSERT_TRUE(c.alphabet_path.has_value());
  EXPECT_EQ(*c.alphabet_path, dir / "symbols.txt");
  EXPECT_ERRC(RunConfig::load(dir / "missing.json"), Errc::Io);
  std::ofstream(dir / "broken.json") << "{";
  EXPECT_ERRC(RunConfig::load(dir / "broken.json"), Errc::ParseError);
  std::filesystem::remove_all(dir);
}

}  // namespace
