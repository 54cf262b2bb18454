// Copyright 2026 The owf-lab Authors
// SPDX-License-Identifier: Apache-2.0

#include "owflab/report_json.hpp"

#include <gtest/gtest.h>

#include <random>

#include "oracle.hpp"

namespace owflab::report {
namespace {

TEST(ReportJson, PreimageDocumentFields) {
  const owf::OwfParams p{12, 6, false};
  const auto rep = analysis::preimage_search({Natural(42), 6}, p, Natural(1), Natural(100));
  const Json j = to_json(rep);
  EXPECT_EQ(j["schema"], "owf-lab/1");
  EXPECT_EQ(j["report"], "preimage");
  EXPECT_EQ(j["target"], "42");
  EXPECT_EQ(j["params"]["n"], 12);
  EXPECT_EQ(j["params"]["r"], 6);
  EXPECT_EQ(j["domain"]["lo"], "1");
  EXPECT_EQ(j["domain"]["hi"], "100");
  EXPECT_EQ(j["evaluations"], 100);
  EXPECT_EQ(j["preimages"].size(), rep.preimages.size());
}

TEST(ReportJson, CostProfileRows) {
  const Json j = to_json(analysis::cost_profile({2, 3}));
  EXPECT_EQ(j["report"], "cost_profile");
  EXPECT_TRUE(j["samples_per_r"].is_null());
  EXPECT_EQ(j["rng"], std::string(analysis::kRngAlgorithm));
  ASSERT_EQ(j["rows"].size(), 2u);
  EXPECT_EQ(j["rows"][0]["r"], 2);
  EXPECT_EQ(j["rows"][0]["branching_ops"], 2);
  EXPECT_EQ(j["rows"][0]["search_tries_mean"], 2.5);
  EXPECT_EQ(j["rows"][1]["path_count"], "8");
}

TEST(ReportJson, AvalancheCarriesSeedAndGenerator) {
  const Json j = to_json(analysis::avalanche({16, 8, false}, 50, 3));
  EXPECT_EQ(j["seed"], 3);
  EXPECT_EQ(j["samples"], 50);
  EXPECT_EQ(j["mode"], "single_bit");
  EXPECT_EQ(j["per_bit_flip_counts"].size(), 8u);
}

// Every Natural in a machine-mode document re-parses to the same value.
TEST(ReportJson, NaturalsRoundTripInBothBases) {
  std::mt19937_64 rng(17);
  const auto p = owf::OwfParams::paper512();
  for (int i = 0; i < 10; ++i) {
    const Natural x = testing::from_big(testing::random_big(rng, 512)) + Natural(1);
    const auto t = owf::trace(x, p);
    for (int base : {10, 16}) {
      const Json j = Json::parse(to_json(t, p, base).dump());
      EXPECT_EQ(Natural::from_text(j["input"].get<std::string>(), base), t.input);
      EXPECT_EQ(Natural::from_text(j["final"].get<std::string>(), base), t.final);
      EXPECT_EQ(Natural::from_text(j["digest"].get<std::string>(), base), t.digest);
      EXPECT_EQ(Natural::from_text(j["digest_hex"].get<std::string>(), 16), t.digest);
      EXPECT_EQ(j["digest_hex"].get<std::string>().size(), 64u);
    }
  }
}

}  // namespace
}  // namespace owflab::report
