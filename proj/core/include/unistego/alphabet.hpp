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

#ifndef UNISTEGO_ALPHABET_HPP
#define UNISTEGO_ALPHABET_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace unistego {

/// Position of a token in the canonical order of its alphabet.  Comparing two
/// ids is the same as comparing the underlying tokens byte-lexicographically.
using SymbolId = std::uint32_t;

/// A block is a short run of symbols; the codecs transform blocks in place.
using Block = std::vector<SymbolId>;

/// Finite, canonically ordered set of opaque byte-string tokens shared by the
/// sender and the receiver.
class Alphabet {
 public:
  /// Sorts tokens byte-lexicographically.  Throws DuplicateSymbol on repeated
  /// tokens and InvalidAlphabet on empty tokens or tokens containing '\n'.
  explicit Alphabet(std::vector<std::string> tokens);

  /// One token per line; order in the file is irrelevant, blank lines skipped.
  static Alphabet parse(std::istream& in);
  static Alphabet load(const std::filesystem::path& path);
  void save(std::ostream& out) const;

  std::size_t size() const noexcept { return tokens_.size(); }
  const std::string& token(SymbolId id) const { return tokens_.at(id); }
  const std::vector<std::string>& tokens() const noexcept { return tokens_; }

  bool contains(std::string_view token) const;
  /// Throws UnknownSymbol if the token is not a member.
  SymbolId index_of(std::string_view token) const;

  /// Total order on member tokens; throws UnknownSymbol for non-members.
  std::strong_ordering compare(std::string_view x, std::string_view y) const;

  std::vector<SymbolId> encode(std::span<const std::string> tokens) const;
  std::vector<std::string> decode(std::span<const SymbolId> ids) const;

 private:
  struct TransparentHash {
    using is_transparent = void;
    std::size_t operator()(std::string_view s) const noexcept {
      return std::hash<std::string_view>{}(s);
    }
  };

  std::vector<std::string> tokens_;
  std::unordered_map<std::string, SymbolId, TransparentHash, std::equal_to<>> index_;
};

/// Free-function form of Alphabet::compare.
std::strong_ordering compare_symbols(const Alphabet& alphabet, std::string_view x,
                                     std::string_view y);

/// Letter counts of a block.  Only symbols that occur are stored, sorted by
/// id, so the cost of building one depends on the block length and not on
/// the alphabet size.
class Composition {
 public:
  struct Entry {
    SymbolId symbol;
    std::uint32_t count;
    friend bool operator==(const Entry&, const Entry&) = default;
  };

  Composition() = default;
  /// Dense form: counts[a] for every a in an alphabet of counts.size() symbols.
  explicit Composition(std::span<const std::uint32_t> counts);

  /// Rebuilds this composition from a block, reusing storage.
  void assign(std::span<const SymbolId> block, std::size_t alphabet_size);

  std::uint32_t count(SymbolId symbol) const noexcept;
  std::size_t total() const noexcept { return total_; }
  std::size_t alphabet_size() const noexcept { return alphabet_size_; }
  std::span<const Entry> entries() const noexcept { return entries_; }
  std::vector<std::uint32_t> dense() const;

  friend bool operator==(const Composition&, const Composition&) = default;

 private:
  std::vector<Entry> entries_;
  std::size_t total_ = 0;
  std::size_t alphabet_size_ = 0;
};

/// Counts of each alphabet member in a tokenized block; throws UnknownSymbol.
Composition composition_of(std::span<const std::string> block, const Alphabet& alphabet);
/// Same for a block already mapped to ids; ids >= alphabet size are unknown.
Composition composition_of(std::span<const SymbolId> block, const Alphabet& alphabet);

/// Canonical tokens for generated alphabets: "a".."z" for up to 26 symbols,
/// otherwise zero-padded "s000".. so that byte order matches numeric order.
std::vector<std::string> generated_tokens(std::size_t k);

}  // namespace unistego

#endif  // UNISTEGO_ALPHABET_HPP
