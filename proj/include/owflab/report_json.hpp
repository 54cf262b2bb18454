// Copyright 2026 The owf-lab Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

// JSON documents for the "owf-lab/1" schema. Naturals are emitted as
// strings in the requested base (10 or 16) so they round-trip through
// Natural::from_text at any size.

#include <vector>

#include "json.hpp"
#include "owflab/analysis.hpp"
#include "owflab/composition.hpp"
#include "owflab/owf.hpp"
#include "owflab/trajectory.hpp"

namespace owflab::report {

using Json = nlohmann::ordered_json;

Json params_json(const owf::OwfParams& p);

Json to_json(const owf::OwfOutput& out, const Natural& x, const owf::OwfParams& p, int base = 10);
Json to_json(const owf::OwfTrace& t, const owf::OwfParams& p, int base = 10);
Json to_json(const trajectory::TrajectoryResult& t, const Natural& x, std::size_t r, int base = 10);
Json to_json(const composition::SearchReport& s, const Natural& x, std::size_t r, int base = 10);
Json oracle_json(const std::vector<composition::Composition>& found, const Natural& x, std::size_t r,
                 int base = 10);

Json to_json(const analysis::PreimageReport& rep, int base = 10);
Json to_json(const analysis::CensusReport& rep, int base = 10);
Json to_json(const analysis::AvalancheReport& rep);
Json to_json(const analysis::CostProfile& rep, int base = 10);

}  // namespace owflab::report
