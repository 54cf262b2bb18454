// Copyright 2026 The owf-lab Authors
// SPDX-License-Identifier: Apache-2.0

#include "owflab/report_json.hpp"

#include <string>

namespace owflab::report {

namespace {

Json header(std::string_view kind) {
  Json j;
  j["schema"] = std::string(analysis::kSchemaVersion);
  j["report"] = std::string(kind);
  return j;
}

std::string text(const Natural& v, int base) { return v.to_text(base); }

Json domain_json(const Natural& lo, const Natural& hi, int base) {
  return Json{{"lo", text(lo, base)}, {"hi", text(hi, base)}};
}

}  // namespace

Json params_json(const owf::OwfParams& p) {
  return Json{{"n", p.n}, {"r", p.r}, {"strict_width", p.strict_width}};
}

Json to_json(const owf::OwfOutput& out, const Natural& x, const owf::OwfParams& p, int base) {
  Json j = header("owf");
  j["params"] = params_json(p);
  j["input"] = text(x, base);
  j["digest"] = text(out.digest, base);
  j["digest_hex"] = out.to_hex();
  j["width"] = out.width;
  return j;
}

Json to_json(const owf::OwfTrace& t, const owf::OwfParams& p, int base) {
  Json j = header("trace");
  j["params"] = params_json(p);
  j["input"] = text(t.input, base);
  j["final"] = text(t.final, base);
  j["path"] = t.path.to_string();
  j["path_value"] = text(path_to_natural(t.path), base);
  j["folded_input"] = text(t.folded_input, base);
  j["folded_final"] = text(t.folded_final, base);
  j["digest"] = text(t.digest, base);
  j["digest_hex"] = owf::digest_hex(t.digest, p.r);
  return j;
}

Json to_json(const trajectory::TrajectoryResult& t, const Natural& x, std::size_t r, int base) {
  Json j = header("trajectory");
  j["input"] = text(x, base);
  j["r"] = r;
  j["final"] = text(t.final, base);
  j["path"] = t.path.to_string();
  j["path_value"] = text(path_to_natural(t.path), base);
  if (t.steps) {
    Json steps = Json::array();
    for (const auto& s : *t.steps) {
      steps.push_back({{"input", text(s.input, base)},
                       {"branch", std::string(1, branch_letter(s.branch))},
                       {"output", text(s.output, base)}});
    }
    j["steps"] = std::move(steps);
  }
  return j;
}

Json to_json(const composition::SearchReport& s, const Natural& x, std::size_t r, int base) {
  Json j = header("search");
  j["input"] = text(x, base);
  j["r"] = r;
  j["found"] = s.found.to_string();
  j["result"] = text(s.result, base);
  j["tries"] = s.tries;
  j["order"] = std::string(composition::order_name(s.order));
  return j;
}

Json oracle_json(const std::vector<composition::Composition>& found, const Natural& x, std::size_t r,
                 int base) {
  Json j = header("oracle");
  j["input"] = text(x, base);
  j["r"] = r;
  Json list = Json::array();
  for (const auto& c : found) list.push_back(c.to_string());
  j["integral_compositions"] = std::move(list);
  return j;
}

Json to_json(const analysis::PreimageReport& rep, int base) {
  Json j = header("preimage");
  j["target"] = text(rep.target, base);
  j["params"] = params_json(rep.params);
  j["domain"] = domain_json(rep.lo, rep.hi, base);
  Json list = Json::array();
  for (const auto& p : rep.preimages) list.push_back(text(p, base));
  j["preimages"] = std::move(list);
  j["evaluations"] = rep.evaluations;
  return j;
}

Json to_json(const analysis::CensusReport& rep, int base) {
  Json j = header("census");
  j["params"] = params_json(rep.params);
  j["domain"] = domain_json(rep.lo, rep.hi, base);
  Json hist = Json::array();
  for (const auto& [digest, count] : rep.histogram) {
    hist.push_back({{"digest", text(digest, base)}, {"count", count}});
  }
  j["histogram"] = std::move(hist);
  j["evaluations"] = rep.evaluations;
  return j;
}

Json to_json(const analysis::AvalancheReport& rep) {
  Json j = header("avalanche");
  j["params"] = params_json(rep.params);
  j["samples"] = rep.samples;
  j["seed"] = rep.seed;
  j["rng"] = std::string(analysis::kRngAlgorithm);
  j["mode"] = rep.mode == analysis::AvalancheMode::kControl ? "control" : "single_bit";
  j["mean_flip_ratio"] = rep.mean_flip_ratio;
  j["per_bit_flip_counts"] = rep.per_bit_flip_counts;
  return j;
}

Json to_json(const analysis::CostProfile& rep, int base) {
  Json j = header("cost_profile");
  if (rep.samples_per_r) {
    j["samples_per_r"] = *rep.samples_per_r;
  } else {
    j["samples_per_r"] = nullptr;  // full residue enumeration
  }
  j["seed"] = rep.seed;
  j["rng"] = std::string(analysis::kRngAlgorithm);
  j["order"] = std::string(composition::order_name(rep.order));
  Json rows = Json::array();
  for (const auto& row : rep.rows) {
    rows.push_back({{"r", row.r},
                    {"branching_ops", row.branching_ops},
                    {"search_tries_mean", row.search_tries_mean},
                    {"path_count", text(row.path_count, base)}});
  }
  j["rows"] = std::move(rows);
  return j;
}

}  // namespace owflab::report
