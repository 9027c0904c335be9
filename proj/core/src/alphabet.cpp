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

#include "unistego/alphabet.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>

#include "unistego/errors.hpp"

namespace unistego {

Alphabet::Alphabet(std::vector<std::string> tokens) : tokens_(std::move(tokens)) {
  for (const auto& t : tokens_) {
    if (t.empty()) throw StegoError(ErrorKind::InvalidAlphabet, "empty symbol token");
    if (t.find('\n') != std::string::npos)
      throw StegoError(ErrorKind::InvalidAlphabet, "symbol token contains a newline");
  }
  // std::string's operator< compares as unsigned bytes (char_traits<char>).
  std::sort(tokens_.begin(), tokens_.end());
  auto dup = std::adjacent_find(tokens_.begin(), tokens_.end());
  if (dup != tokens_.end())
    throw StegoError(ErrorKind::DuplicateSymbol, "duplicate symbol token '" + *dup + "'");
  index_.reserve(tokens_.size());
  for (std::size_t i = 0; i < tokens_.size(); ++i)
    index_.emplace(tokens_[i], static_cast<SymbolId>(i));
}

Alphabet Alphabet::parse(std::istream& in) {
  std::vector<std::string> tokens;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty()) tokens.push_back(std::move(line));
  }
  if (in.bad()) throw StegoError(ErrorKind::Io, "failed reading alphabet");
  return Alphabet(std::move(tokens));
}

Alphabet Alphabet::load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw StegoError(ErrorKind::Io, "cannot open alphabet file " + path.string());
  return parse(in);
}

void Alphabet::save(std::ostream& out) const {
  for (const auto& t : tokens_) out << t << '\n';
}

bool Alphabet::contains(std::string_view token) const {
  return index_.find(token) != index_.end();
}

SymbolId Alphabet::index_of(std::string_view token) const {
  auto it = index_.find(token);
  if (it == index_.end())
    throw StegoError(ErrorKind::UnknownSymbol,
                     "symbol '" + std::string(token) + "' is not in the alphabet");
  return it->second;
}

std::strong_ordering Alphabet::compare(std::string_view x, std::string_view y) const {
  return index_of(x) <=> index_of(y);
}

std::vector<SymbolId> Alphabet::encode(std::span<const std::string> tokens) const {
  std::vector<SymbolId> ids;
  ids.reserve(tokens.size());
  for (const auto& t : tokens) ids.push_back(index_of(t));
  return ids;
}

std::vector<std::string> Alphabet::decode(std::span<const SymbolId> ids) const {
  std::vector<std::string> out;
  out.reserve(ids.size());
  for (SymbolId id : ids) {
    if (id >= tokens_.size())
      throw StegoError(ErrorKind::UnknownSymbol, "symbol id out of alphabet range");
    out.push_back(tokens_[id]);
  }
  return out;
}

std::strong_ordering compare_symbols(const Alphabet& alphabet, std::string_view x,
                                     std::string_view y) {
  return alphabet.compare(x, y);
}

Composition::Composition(std::span<const std::uint32_t> counts)
    : alphabet_size_(counts.size()) {
  for (std::size_t a = 0; a < counts.size(); ++a) {
    if (counts[a] == 0) continue;
    entries_.push_back({static_cast<SymbolId>(a), counts[a]});
    total_ += counts[a];
  }
}

void Composition::assign(std::span<const SymbolId> block, std::size_t alphabet_size) {
  entries_.clear();
  alphabet_size_ = alphabet_size;
  total_ = block.size();
  for (SymbolId s : block) {
    if (s >= alphabet_size)
      throw StegoError(ErrorKind::UnknownSymbol, "symbol id out of alphabet range");
    auto it = std::lower_bound(entries_.begin(), entries_.end(), s,
                               [](const Entry& e, SymbolId v) { return e.symbol < v; });
    if (it != entries_.end() && it->symbol == s)
      ++it->count;
    else
      entries_.insert(it, Entry{s, 1});
  }
}

std::uint32_t Composition::count(SymbolId symbol) const noexcept {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), symbol,
                             [](const Entry& e, SymbolId v) { return e.symbol < v; });
  return it != entries_.end() && it->symbol == symbol ? it->count : 0;
}

std::vector<std::uint32_t> Composition::dense() const {
  std::vector<std::uint32_t> counts(alphabet_size_, 0);
  for (const auto& e : entries_) counts[e.symbol] = e.count;
  return counts;
}

Composition composition_of(std::span<const std::string> block, const Alphabet& alphabet) {
  const auto ids = alphabet.encode(block);
  return composition_of(std::span<const SymbolId>(ids), alphabet);
}

Composition composition_of(std::span<const SymbolId> block, const Alphabet& alphabet) {
  Composition comp;
  comp.assign(block, alphabet.size());
  return comp;
}

std::vector<std::string> generated_tokens(std::size_t k) {
  std::vector<std::string> out;
  out.reserve(k);
  if (k <= 26) {
    for (std::size_t i = 0; i < k; ++i) out.emplace_back(1, static_cast<char>('a' + i));
    return out;
  }
  const std::size_t width = std::to_string(k - 1).size();
  for (std::size_t i = 0; i < k; ++i) {
    std::string digits = std::to_string(i);
    out.push_back("s" + std::string(width - digits.size(), '0') + digits);
  }
  return out;
}

}  // namespace unistego
