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

#ifndef UNISTEGO_REPORT_HPP
#define UNISTEGO_REPORT_HPP

#include <span>
#include <string>

#include "unistego/analysis.hpp"
#include "unistego/codecs.hpp"

namespace unistego {

/// Canonical JSON for analysis results: keys sorted, fixed number formatting,
/// so identical runs produce byte-identical files.
std::string render_report(const DistributionReport* distribution,
                          std::span<const RateReport> rates);

/// JSON summary of an embedding; the block trace is included when non-empty.
std::string render_embed_summary(const EmbedResult& result, std::size_t block_length,
                                 std::size_t cover_symbols, bool include_trace);

std::string render_extract_summary(const ExtractResult& result, bool include_trace);

}  // namespace unistego

#endif  // UNISTEGO_REPORT_HPP
