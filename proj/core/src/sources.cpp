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

#include "unistego/sources.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>

#include <openssl/evp.h>

#include "unistego/errors.hpp"

namespace unistego {
namespace {

[[noreturn]] void invalid(const std::string& what) {
  throw StegoError(ErrorKind::InvalidModel, what);
}

template <class P>
std::vector<std::string> tokens_of(const std::vector<std::pair<std::string, P>>& entries) {
  std::vector<std::string> tokens;
  tokens.reserve(entries.size());
  for (const auto& [t, p] : entries) tokens.push_back(t);
  return tokens;
}

// Reorders entry probabilities into the alphabet's canonical order.
template <class P>
std::vector<P> in_canonical_order(const Alphabet& alphabet,
                                  const std::vector<std::pair<std::string, P>>& entries) {
  std::vector<P> out(alphabet.size());
  for (const auto& [t, p] : entries) out[alphabet.index_of(t)] = p;
  return out;
}

// Exact decimal text when the denominator is 2^a 5^b, otherwise 17 digits.
std::string format_probability(double p, const Rational* exact) {
  if (exact) {
    BigInt den = boost::multiprecision::denominator(*exact);
    BigInt num = boost::multiprecision::numerator(*exact);
    unsigned twos = 0, fives = 0;
    while (den % 2 == 0) den /= 2, ++twos;
    while (den % 5 == 0) den /= 5, ++fives;
    if (den == 1) {
      const unsigned k = std::max(twos, fives);
      BigInt scaled = num * boost::multiprecision::pow(BigInt(10), k) /
                      boost::multiprecision::denominator(*exact);
      std::string digits = scaled.str();
      if (k == 0) return digits;
      if (digits.size() <= k) digits.insert(0, k - digits.size() + 1, '0');
      digits.insert(digits.size() - k, ".");
      return digits;
    }
  }
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", p);
  return buf;
}

}  // namespace

Rational parse_decimal(std::string_view text) {
  std::size_t i = 0;
  bool negative = false;
  if (i < text.size() && (text[i] == '+' || text[i] == '-')) negative = text[i++] == '-';
  BigInt mantissa = 0;
  long scale = 0;
  bool any_digit = false;
  for (; i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])); ++i) {
    mantissa = mantissa * 10 + (text[i] - '0');
    any_digit = true;
  }
  if (i < text.size() && text[i] == '.') {
    for (++i; i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])); ++i) {
      mantissa = mantissa * 10 + (text[i] - '0');
      --scale;
      any_digit = true;
    }
  }
  if (!any_digit) invalid("not a decimal number: '" + std::string(text) + "'");
  if (i < text.size() && (text[i] == 'e' || text[i] == 'E')) {
    ++i;
    long exponent = 0;
    if (i < text.size() && text[i] == '+') ++i;
    auto [end, ec] = std::from_chars(text.data() + i, text.data() + text.size(), exponent);
    if (ec != std::errc() || end == text.data() + i)
      invalid("bad exponent in '" + std::string(text) + "'");
    i = static_cast<std::size_t>(end - text.data());
    scale += exponent;
  }
  if (i != text.size()) invalid("trailing characters in '" + std::string(text) + "'");
  if (std::labs(scale) > 4096) invalid("exponent out of range in '" + std::string(text) + "'");
  if (negative) mantissa = -mantissa;
  const BigInt power = boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(std::labs(scale)));
  return scale >= 0 ? Rational(mantissa * power) : Rational(mantissa, power);
}

SourceModel::SourceModel(Alphabet alphabet, std::vector<double> probs,
                         std::optional<std::vector<Rational>> exact)
    : alphabet_(std::move(alphabet)), probs_(std::move(probs)), exact_(std::move(exact)) {
  if (alphabet_.size() < 2) invalid("a source model needs at least two symbols");
  double total = 0.0;
  for (double p : probs_) {
    if (!(p > 0.0) || !std::isfinite(p)) invalid("probabilities must be strictly positive");
    total += p;
  }
  if (std::abs(total - 1.0) > 1e-12) invalid("probabilities do not sum to 1");
  cumulative_.resize(probs_.size());
  std::partial_sum(probs_.begin(), probs_.end(), cumulative_.begin());
}

SourceModel::SourceModel(std::vector<std::pair<std::string, Rational>> entries)
    : SourceModel([&] {
        Alphabet alphabet(tokens_of(entries));
        auto exact = in_canonical_order(alphabet, entries);
        Rational total = 0;
        for (const auto& p : exact) {
          if (p <= 0) invalid("probabilities must be strictly positive");
          total += p;
        }
        if (total != 1) invalid("exact probabilities must sum to exactly 1");
        std::vector<double> probs;
        for (const auto& p : exact) probs.push_back(p.convert_to<double>());
        return SourceModel(std::move(alphabet), std::move(probs), std::move(exact));
      }()) {}

SourceModel::SourceModel(std::vector<std::pair<std::string, double>> entries)
    : SourceModel([&] {
        Alphabet alphabet(tokens_of(entries));
        auto probs = in_canonical_order(alphabet, entries);
        return SourceModel(std::move(alphabet), std::move(probs), std::nullopt);
      }()) {}

SourceModel SourceModel::uniform(std::size_t k) {
  std::vector<std::pair<std::string, Rational>> entries;
  for (auto& t : generated_tokens(k)) entries.emplace_back(std::move(t), Rational(1, k));
  return SourceModel(std::move(entries));
}

SourceModel SourceModel::two_point(const Rational& p) {
  return SourceModel(std::vector<std::pair<std::string, Rational>>{{"a", p}, {"b", 1 - p}});
}

SourceModel SourceModel::zipf(double s, std::size_t k) {
  std::vector<double> weights(k);
  double total = 0.0;
  for (std::size_t i = 0; i < k; ++i) total += weights[i] = std::pow(static_cast<double>(i + 1), -s);
  std::vector<std::pair<std::string, double>> entries;
  auto tokens = generated_tokens(k);
  for (std::size_t i = 0; i < k; ++i) entries.emplace_back(std::move(tokens[i]), weights[i] / total);
  return SourceModel(std::move(entries));
}

SourceModel SourceModel::preset(std::string_view text) {
  std::vector<std::string> parts;
  std::string part;
  std::istringstream in{std::string(text)};
  while (std::getline(in, part, ':')) parts.push_back(part);
  auto to_size = [&](const std::string& s) {
    std::size_t v = 0;
    auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || end != s.data() + s.size()) invalid("bad count '" + s + "' in preset");
    return v;
  };
  if (parts.size() == 2 && parts[0] == "uniform") return uniform(to_size(parts[1]));
  if (parts.size() == 2 && parts[0] == "two-point") return two_point(parse_decimal(parts[1]));
  if (parts.size() == 3 && parts[0] == "zipf")
    return zipf(parse_decimal(parts[1]).convert_to<double>(), to_size(parts[2]));
  invalid("unknown model preset '" + std::string(text) + "'");
}

SourceModel SourceModel::parse(std::istream& in) {
  std::vector<std::pair<std::string, Rational>> entries;
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream fields(line);
    std::string token, prob, extra;
    if (!(fields >> token)) continue;
    if (!(fields >> prob) || (fields >> extra)) invalid("model line must be 'token probability'");
    entries.emplace_back(std::move(token), parse_decimal(prob));
  }
  if (in.bad()) throw StegoError(ErrorKind::Io, "failed reading model");
  Rational total = 0;
  for (const auto& e : entries) total += e.second;
  if (total == 1) return SourceModel(std::move(entries));
  std::vector<std::pair<std::string, double>> approx;
  for (auto& [t, p] : entries) approx.emplace_back(std::move(t), p.convert_to<double>());
  return SourceModel(std::move(approx));
}

SourceModel SourceModel::load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw StegoError(ErrorKind::Io, "cannot open model file " + path.string());
  return parse(in);
}

void SourceModel::save(std::ostream& out) const {
  for (SymbolId s = 0; s < alphabet_.size(); ++s) {
    out << alphabet_.token(s) << ' '
        << format_probability(probs_[s], exact_ ? &(*exact_)[s] : nullptr) << '\n';
  }
}

std::span<const Rational> SourceModel::exact_probabilities() const {
  if (!exact_) invalid("model has no exact probabilities");
  return *exact_;
}

std::string SourceModel::digest() const {
  std::ostringstream text;
  save(text);
  const std::string s = text.str();
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(s.data(), s.size(), md, &len, EVP_sha256(), nullptr) != 1)
    throw StegoError(ErrorKind::Io, "SHA-256 digest failed");
  static constexpr char hex[] = "0123456789abcdef";
  std::string out;
  for (unsigned i = 0; i < len; ++i) {
    out.push_back(hex[md[i] >> 4]);
    out.push_back(hex[md[i] & 15]);
  }
  return out;
}

std::vector<SymbolId> draw_cover(const SourceModel& model, std::size_t count, Rng& rng) {
  std::vector<SymbolId> out;
  out.reserve(count);
  const auto& cum = model.cumulative_;
  for (std::size_t i = 0; i < count; ++i) {
    const double u = rng.unit();
    auto it = std::upper_bound(cum.begin(), cum.end(), u);
    // Rounding can leave the last cumulative sum a hair below 1.
    if (it == cum.end()) --it;
    out.push_back(static_cast<SymbolId>(it - cum.begin()));
  }
  return out;
}

Bits draw_hidden_bits(std::size_t count, Rng& rng) {
  Bits bits;
  bits.reserve(count);
  for (std::size_t i = 0; i < count; ++i) bits.push_back(rng.bit() ? 1 : 0);
  return bits;
}

}  // namespace unistego
