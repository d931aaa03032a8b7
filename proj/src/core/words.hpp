#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace wkpc {

using SymbolId = std::uint32_t;

/// A finite word over an alphabet, stored as symbol ids. The empty vector is
/// the empty word.
using Word = std::vector<SymbolId>;
using WordView = std::span<const SymbolId>;

/// Finite alphabet. Symbol ids follow declaration order; names are unique.
class Alphabet {
public:
    /// Adds a symbol, returning its id; returns the existing id if the name
    /// was already declared.
    SymbolId intern(std::string_view name);

    std::optional<SymbolId> find(std::string_view name) const;
    const std::string& name(SymbolId id) const { return names_.at(id); }
    std::size_t size() const { return names_.size(); }

    /// Splits `text` into declared symbols, longest declared name first.
    /// Returns std::nullopt if some position cannot be matched; the failing
    /// byte offset is stored in *error_offset when given.
    std::optional<Word> parse_word(std::string_view text,
                                   std::size_t* error_offset = nullptr) const;

    /// Concatenation of symbol names; empty string for the empty word.
    std::string format_word(WordView word) const;

    bool operator==(const Alphabet& other) const { return names_ == other.names_; }

private:
    std::vector<std::string> names_;
    std::unordered_map<std::string, SymbolId> index_;
};

/// The relation pairing each upper-strand symbol with its allowed lower-strand
/// symbols. May be non-injective (several lower symbols per upper symbol) and
/// partial (none at all).
class ComplementarityRelation {
public:
    void add(SymbolId upper, SymbolId lower);
    bool contains(SymbolId upper, SymbolId lower) const;

    /// All lower symbols paired with `upper`, sorted by id. Empty when the
    /// symbol has no complement.
    std::span<const SymbolId> complements_of(SymbolId upper) const;

    std::size_t pair_count() const;

    /// All pairs, sorted by (upper, lower).
    std::vector<std::pair<SymbolId, SymbolId>> pairs() const;

    bool operator==(const ComplementarityRelation& other) const {
        return by_upper_ == other.by_upper_;
    }

private:
    std::vector<std::vector<SymbolId>> by_upper_;  // indexed by upper symbol id
};

/// True iff v = u x for some word x.
bool is_prefix(WordView u, WordView v);

/// True iff one of the two words is a prefix of the other.
bool prefix_comparable(WordView u, WordView v);

/// True iff the two strands have equal length and every aligned symbol pair
/// is in the relation.
bool is_valid_double_strand(const ComplementarityRelation& rel, WordView upper,
                            WordView lower);

}  // namespace wkpc
