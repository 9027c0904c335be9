// Copyright 2026 The unistego Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "unistego/report.hpp"

#include <json.hpp>

namespace unistego {
namespace {

using nlohmann::json;

json seeds_json(const Seeds& s) {
  return {{"source", s.source}, {"hidden", s.hidden}, {"delta", s.delta}, {"padding", s.padding}};
}

json chi_json(const ChiSquareResult& c) {
  return {{"statistic", c.statistic},
          {"p_value", c.p_value},
          {"degrees_of_freedom", c.degrees_of_freedom},
          {"cells", c.cells}};
}

json distribution_json(const DistributionReport& r) {
  json j = {{"mode", r.mode},
            {"scheme", std::string(to_string(r.scheme))},
            {"n", r.n},
            {"model_digest", r.model_digest},
            {"max_abs_deviation", r.max_abs_deviation},
            {"probability_total", r.probability_total}};
  if (r.mode == "exact-rational") j["exactly_equal"] = r.exactly_equal;
  if (r.chi_square) j["chi_square"] = chi_json(*r.chi_square);
  if (r.sample_size) j["sample_size"] = r.sample_size;
  if (r.seeds) j["seeds"] = seeds_json(*r.seeds);
  return j;
}

json rate_json(const RateReport& r) {
  json j = {{"scheme", std::string(to_string(r.scheme))},
            {"n", r.n},
            {"model_digest", r.model_digest},
            {"empirical_rate", r.empirical_rate},
            {"std_error", r.std_error},
            {"bound",
             {{"value", r.bound.value},
              {"std_error", r.bound.std_error},
              {"method", r.bound.enumerated ? "enumeration" : "monte-carlo"},
              {"samples", r.bound.samples},
              {"seed", r.bound.seed}}},
            {"st2_formula", r.st2_formula},
            {"ceiling", r.ceiling},
            {"entropy", r.entropy},
            {"min_entropy", r.min_entropy},
            {"max_class_rate", r.max_class_rate},
            {"blocks_measured", r.blocks_measured},
            {"cover_symbols", r.cover_symbols},
            {"bits_embedded", r.bits_embedded}};
  if (r.seeds) j["seeds"] = seeds_json(*r.seeds);
  return j;
}

json trace_json(const BlockTrace& t) {
  json j = {{"class_size", t.class_size.str()},
            {"d", t.d},
            {"r", t.r.str()},
            {"tau", t.tau.str()},
            {"genuine_bits", t.genuine_bits},
            {"padding_bits", t.padding_bits}};
  if (t.forced) j["forced_delta"] = true;
  if (t.composition.total() != 0) {
    json counts = json::object();
    for (const auto& e : t.composition.entries()) counts[std::to_string(e.symbol)] = e.count;
    j["composition"] = std::move(counts);
  }
  return j;
}

}  // namespace

std::string render_report(const DistributionReport* distribution,
                          std::span<const RateReport> rates) {
  json j = json::object();
  if (distribution) j["distribution"] = distribution_json(*distribution);
  if (!rates.empty()) {
    json list = json::array();
    for (const auto& r : rates) list.push_back(rate_json(r));
    j["rates"] = std::move(list);
  }
  return j.dump(2) + "\n";
}

std::string render_embed_summary(const EmbedResult& result, std::size_t block_length,
                                 std::size_t cover_symbols, bool include_trace) {
  const std::size_t blocks = block_length ? cover_symbols / block_length : 0;
  json j = {{"cover_symbols", cover_symbols},
            {"block_length", block_length},
            {"blocks", blocks},
            {"bits_embedded", result.bits_embedded},
            {"padding_bits", result.padding_bits},
            {"bits_per_block",
             blocks ? static_cast<double>(result.bits_embedded) / static_cast<double>(blocks) : 0.0},
            {"bits_per_symbol", cover_symbols ? static_cast<double>(result.bits_embedded) /
                                                    static_cast<double>(cover_symbols)
                                              : 0.0}};
  if (include_trace) {
    json list = json::array();
    for (const auto& t : result.trace) list.push_back(trace_json(t));
    j["trace"] = std::move(list);
  }
  return j.dump(2) + "\n";
}

std::string render_extract_summary(const ExtractResult& result, bool include_trace) {
  json j = {{"bits", result.bits.size()}};
  if (include_trace) {
    json list = json::array();
    for (const auto& t : result.trace)
      list.push_back({{"d", t.d}, {"r", t.r.str()}, {"tau", t.tau.str()}});
    j["trace"] = std::move(list);
  }
  return j.dump(2) + "\n";
}

}  // namespace unistego
