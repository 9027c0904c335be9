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

#include "unistego_cli/cli.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iterator>
#include <optional>
#include <ostream>
#include <sstream>

#include "unistego/alphabet.hpp"
#include "unistego/analysis.hpp"
#include "unistego/bit_stream.hpp"
#include "unistego/codecs.hpp"
#include "unistego/errors.hpp"
#include "unistego/random.hpp"
#include "unistego/report.hpp"
#include "unistego/sources.hpp"

namespace unistego::cli {
namespace {

struct SessionConfig {
  std::string alphabet_path;
  std::string model_path;
  std::string preset;
  std::string scheme = "stn";
  std::size_t block_size = 3;
  std::string cover_path;
  std::string stego_path;
  std::string hidden_path;
  std::string out_path;
  std::string report_path;
  Seeds seeds;
  bool frame_length = false;
  bool bits_text = false;
  bool trace = false;
  std::optional<unsigned> force_delta;
  std::string mode = "exact";
  std::optional<std::uint64_t> samples;
  std::uint64_t rate_symbols = 100'000;
  std::uint64_t bound_samples = 100'000;
  std::vector<std::size_t> sweep;
};

[[noreturn]] void config_error(const std::string& what) {
  throw StegoError(ErrorKind::Config, what);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw StegoError(ErrorKind::Io, "cannot open " + path);
  std::string data{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  if (in.bad()) throw StegoError(ErrorKind::Io, "failed reading " + path);
  return data;
}

void write_file(const std::string& path, const std::string& data) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw StegoError(ErrorKind::Io, "cannot create " + path);
  out << data;
  out.close();
  if (!out) throw StegoError(ErrorKind::Io, "failed writing " + path);
}

// Newline-delimited tokens; blank lines and a trailing carriage return are ignored.
std::vector<SymbolId> read_symbols(const std::string& path, const Alphabet& alphabet) {
  std::istringstream in(read_file(path));
  std::vector<SymbolId> symbols;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    symbols.push_back(alphabet.index_of(line));
  }
  return symbols;
}

std::string symbols_text(std::span<const SymbolId> symbols, const Alphabet& alphabet) {
  std::string text;
  for (SymbolId s : symbols) {
    text += alphabet.token(s);
    text += '\n';
  }
  return text;
}

std::optional<SourceModel> load_model(const SessionConfig& c) {
  if (!c.model_path.empty() && !c.preset.empty()) config_error("give --model or --preset, not both");
  if (!c.model_path.empty()) return SourceModel::load(c.model_path);
  if (!c.preset.empty()) return SourceModel::preset(c.preset);
  return std::nullopt;
}

SourceModel require_model(const SessionConfig& c) {
  auto model = load_model(c);
  if (!model) config_error("a source model is required (--model or --preset)");
  return std::move(*model);
}

Alphabet session_alphabet(const SessionConfig& c) {
  if (!c.alphabet_path.empty()) return Alphabet::load(c.alphabet_path);
  if (auto model = load_model(c)) return model->alphabet();
  config_error("an alphabet is required (--alphabet, --model or --preset)");
}

Scheme session_scheme(const SessionConfig& c) {
  const Scheme scheme = parse_scheme(c.scheme);
  if (scheme == Scheme::stn && c.block_size < 2) config_error("--block-size must be at least 2");
  return scheme;
}

std::size_t effective_block_size(const SessionConfig& c, Scheme scheme) {
  return scheme == Scheme::st2 ? 2 : c.block_size;
}

void emit(const SessionConfig& c, const std::string& json, std::ostream& out) {
  if (!c.report_path.empty()) write_file(c.report_path, json);
  out << json;
}

void cmd_embed(const SessionConfig& c, std::ostream& out) {
  const Alphabet alphabet = session_alphabet(c);
  const Scheme scheme = session_scheme(c);
  if (scheme == Scheme::st2 && c.force_delta) config_error("--force-delta applies to the stn scheme only");

  const auto cover = read_symbols(c.cover_path, alphabet);
  Bits hidden;
  if (!c.hidden_path.empty()) {
    const std::string raw = read_file(c.hidden_path);
    hidden = c.bits_text ? parse_bit_text(raw)
                         : bytes_to_bits({reinterpret_cast<const std::uint8_t*>(raw.data()), raw.size()});
  }
  if (c.frame_length) hidden = frame_payload(bits_to_bytes(hidden));

  Rng delta(c.seeds.delta), padding(c.seeds.padding);
  EmbedOptions options;
  options.forced_delta = c.force_delta;
  const bool with_trace = c.trace || c.force_delta.has_value();
  options.trace = with_trace ? TraceLevel::full : TraceLevel::blocks;

  const std::size_t n = effective_block_size(c, scheme);
  const EmbedResult result = scheme == Scheme::st2
                                 ? st2_embed(cover, hidden, alphabet, padding, options)
                                 : stn_embed(cover, hidden, n, alphabet, delta, padding, options);
  write_file(c.out_path, symbols_text(result.stego, alphabet));
  emit(c, render_embed_summary(result, n, cover.size(), with_trace), out);
}

void cmd_extract(const SessionConfig& c, std::ostream& out) {
  const Alphabet alphabet = session_alphabet(c);
  const Scheme scheme = session_scheme(c);
  const std::string& input = c.stego_path.empty() ? c.cover_path : c.stego_path;
  if (input.empty()) config_error("--stego is required");
  const auto stego = read_symbols(input, alphabet);

  const TraceLevel level = c.trace ? TraceLevel::full : TraceLevel::blocks;
  ExtractResult result = scheme == Scheme::st2
                             ? st2_extract(stego, alphabet, level)
                             : stn_extract(stego, effective_block_size(c, scheme), alphabet, level);
  std::string payload;
  if (c.frame_length) {
    auto bytes = unframe_payload(result.bits);
    if (!bytes) config_error("stego stream does not hold a complete framed payload");
    payload.assign(bytes->begin(), bytes->end());
  } else if (c.bits_text) {
    payload = to_bit_text(result.bits);
  } else {
    const auto bytes = bits_to_bytes(result.bits);
    payload.assign(bytes.begin(), bytes.end());
  }
  write_file(c.out_path, payload);
  emit(c, render_extract_summary(result, c.trace), out);
}

void cmd_generate(const SessionConfig& c, std::ostream& out) {
  const SourceModel model = require_model(c);
  const std::uint64_t count = c.samples.value_or(10'000);
  Rng rng(c.seeds.source);
  const auto cover = draw_cover(model, count, rng);
  write_file(c.out_path, symbols_text(cover, model.alphabet()));
  if (!c.alphabet_path.empty()) {
    std::ofstream a(c.alphabet_path, std::ios::binary | std::ios::trunc);
    if (!a) throw StegoError(ErrorKind::Io, "cannot create " + c.alphabet_path);
    model.alphabet().save(a);
  }
  std::ostringstream json;
  json << "{\n  \"model_digest\": \"" << model.digest() << "\",\n  \"seed_source\": "
       << c.seeds.source << ",\n  \"symbols\": " << count << "\n}\n";
  out << json.str();
}

void cmd_analyze(const SessionConfig& c, std::ostream& out) {
  const SourceModel model = require_model(c);
  const Scheme scheme = session_scheme(c);
  const std::size_t n = effective_block_size(c, scheme);

  std::optional<DistributionReport> distribution;
  std::vector<RateReport> rates;
  if (c.mode == "exact") {
    distribution = exact_report(model, n, scheme);
    rates.push_back(measure_rate(model, scheme, n, c.rate_symbols, c.seeds, c.bound_samples));
  } else if (c.mode == "empirical") {
    distribution = empirical_report(model, n, scheme, c.samples.value_or(100'000), c.seeds);
    rates.push_back(measure_rate(model, scheme, n, c.rate_symbols, c.seeds, c.bound_samples));
  } else if (c.mode == "rates") {
    std::vector<std::size_t> sweep = c.sweep.empty() ? std::vector<std::size_t>{n} : c.sweep;
    if (scheme == Scheme::st2) sweep = {2};
    for (std::size_t len : sweep) {
      if (len < 2) config_error("--sweep block sizes must be at least 2");
      rates.push_back(
          measure_rate(model, scheme, len, c.samples.value_or(1'000'000), c.seeds, c.bound_samples));
    }
  } else {
    config_error("--mode must be exact, empirical or rates");
  }
  emit(c, render_report(distribution ? &*distribution : nullptr, rates), out);
}

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Io:
      return kExitIo;
    case ErrorKind::UnknownSymbol:
      return kExitUnknownSymbol;
    default:
      return kExitConfig;
  }
}

void add_source_options(CLI::App& cmd, SessionConfig& c) {
  cmd.add_option("--model", c.model_path, "Source model file, one 'token probability' per line");
  cmd.add_option("--preset", c.preset, "Built-in model: uniform:K, two-point:P or zipf:S:K");
}

void add_codec_options(CLI::App& cmd, SessionConfig& c) {
  cmd.add_option("--alphabet", c.alphabet_path, "Alphabet file, one token per line");
  add_source_options(cmd, c);
  cmd.add_option("--scheme", c.scheme, "st2 or stn")->capture_default_str();
  cmd.add_option("--block-size", c.block_size, "Block length n of the stn scheme")
      ->capture_default_str();
  cmd.add_flag("--frame-length", c.frame_length, "Prefix the payload with its byte length");
  cmd.add_flag("--bits-text", c.bits_text, "Payload files hold '0'/'1' text instead of bytes");
  cmd.add_flag("--trace", c.trace, "Include the per-block trace in the summary");
  cmd.add_option("--report", c.report_path, "Also write the JSON summary to this file");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  SessionConfig c;
  CLI::App app{"Steganography over i.i.d. symbol streams by permutation classes", "unistego"};
  app.require_subcommand(1);

  auto* embed = app.add_subcommand("embed", "Hide a payload in a cover stream");
  add_codec_options(*embed, c);
  embed->add_option("--cover", c.cover_path, "Cover file")->required();
  embed->add_option("--hidden", c.hidden_path, "Payload file (raw bytes, MSB first)");
  embed->add_option("--out", c.out_path, "Stego output file")->required();
  embed->add_option("--seed-delta", c.seeds.delta, "Seed of the payload-length draws")
      ->capture_default_str();
  embed->add_option("--seed-padding", c.seeds.padding, "Seed of the padding bits")
      ->capture_default_str();
  embed->add_option("--force-delta", c.force_delta,
                    "Test hook: embed exactly this many bits per block (recorded in the trace)");

  auto* extract = app.add_subcommand("extract", "Recover the payload from a stego stream");
  add_codec_options(*extract, c);
  extract->add_option("--stego", c.stego_path, "Stego file");
  extract->add_option("--cover", c.cover_path, "Alias of --stego");
  extract->add_option("--out", c.out_path, "Payload output file")->required();

  auto* generate = app.add_subcommand("generate", "Draw a cover stream from a source model");
  add_source_options(*generate, c);
  generate->add_option("--samples", c.samples, "Number of symbols [10000]");
  generate->add_option("--seed-source", c.seeds.source, "Seed of the cover draws")
      ->capture_default_str();
  generate->add_option("--out", c.out_path, "Cover output file")->required();
  generate->add_option("--alphabet", c.alphabet_path, "Also write the model's alphabet here");

  auto* analyze = app.add_subcommand("analyze", "Check output law and hiding rates");
  add_source_options(*analyze, c);
  analyze->add_option("--scheme", c.scheme, "st2 or stn")->capture_default_str();
  analyze->add_option("--block-size", c.block_size, "Block length n")->capture_default_str();
  analyze->add_option("--mode", c.mode, "exact, empirical or rates")->capture_default_str();
  analyze->add_option("--samples", c.samples,
                      "Blocks (empirical) or cover symbols (rates) [100000 / 1000000]");
  analyze->add_option("--rate-symbols", c.rate_symbols, "Cover symbols of the rate run")
      ->capture_default_str();
  analyze->add_option("--bound-samples", c.bound_samples, "Monte-Carlo samples of the bound")
      ->capture_default_str();
  analyze->add_option("--sweep", c.sweep, "Block sizes of a rates sweep")->delimiter(',');
  analyze->add_option("--seed-source", c.seeds.source)->capture_default_str();
  analyze->add_option("--seed-hidden", c.seeds.hidden)->capture_default_str();
  analyze->add_option("--seed-delta", c.seeds.delta)->capture_default_str();
  analyze->add_option("--seed-padding", c.seeds.padding)->capture_default_str();
  analyze->add_option("--report", c.report_path, "Also write the JSON report to this file");

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitConfig;
  }

  try {
    if (embed->parsed()) cmd_embed(c, out);
    else if (extract->parsed()) cmd_extract(c, out);
    else if (generate->parsed()) cmd_generate(c, out);
    else cmd_analyze(c, out);
  } catch (const StegoError& e) {
    err << "error: " << e.what() << '\n';
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitConfig;
  }
  return kExitOk;
}

}  // namespace unistego::cli
