#include "core/words.hpp"

#include <algorithm>

namespace wkpc {

SymbolId Alphabet::intern(std::string_view name) {
    auto it = index_.find(std::string(name));
    if (it != index_.end()) return it->second;
    const SymbolId id = static_cast<SymbolId>(names_.size());
    names_.emplace_back(name);
    index_.emplace(names_.back(), id);
    return id;
}

std::optional<SymbolId> Alphabet::find(std::string_view name) const {
    auto it = index_.find(std::string(name));
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

std::optional<Word> Alphabet::parse_word(std::string_view text,
                                         std::size_t* error_offset) const {
    Word out;
    std::size_t pos = 0;
    while (pos < text.size()) {
        // Longest declared name wins; with single-character symbols this is a
        // plain character-by-character scan.
        std::size_t best_len = 0;
        SymbolId best_id = 0;
        for (SymbolId id = 0; id < names_.size(); ++id) {
            const std::string& n = names_[id];
            if (n.size() > best_len && text.substr(pos, n.size()) == n) {
                best_len = n.size();
                best_id = id;
            }
        }
        if (best_len == 0) {
            if (error_offset) *error_offset = pos;
            return std::nullopt;
        }
        out.push_back(best_id);
        pos += best_len;
    }
    return out;
}

std::string Alphabet::format_word(WordView word) const {
    std::string out;
    for (SymbolId id : word) out += name(id);
    return out;
}

void ComplementarityRelation::add(SymbolId upper, SymbolId lower) {
    if (by_upper_.size() <= upper) by_upper_.resize(upper + 1);
    auto& lows = by_upper_[upper];
    auto it = std::lower_bound(lows.begin(), lows.end(), lower);
    if (it == lows.end() || *it != lower) lows.insert(it, lower);
}

bool ComplementarityRelation::contains(SymbolId upper, SymbolId lower) const {
    if (upper >= by_upper_.size()) return false;
    const auto& lows = by_upper_[upper];
    return std::binary_search(lows.begin(), lows.end(), lower);
}

std::span<const SymbolId> ComplementarityRelation::complements_of(SymbolId upper) const {
    if (upper >= by_upper_.size()) return {};
    return by_upper_[upper];
}

std::size_t ComplementarityRelation::pair_count() const {
    std::size_t n = 0;
    for (const auto& lows : by_upper_) n += lows.size();
    return n;
}

std::vector<std::pair<SymbolId, SymbolId>> ComplementarityRelation::pairs() const {
    std::vector<std::pair<SymbolId, SymbolId>> out;
    for (SymbolId u = 0; u < by_upper_.size(); ++u)
        for (SymbolId l : by_upper_[u]) out.emplace_back(u, l);
    return out;
}

bool is_prefix(WordView u, WordView v) {
    if (u.size() > v.size()) return false;
    return std::equal(u.begin(), u.end(), v.begin());
}

bool prefix_comparable(WordView u, WordView v) {
    return is_prefix(u, v) || is_prefix(v, u);
}

bool is_valid_double_strand(const ComplementarityRelation& rel, WordView upper,
                            WordView lower) {
    if (upper.size() != lower.size()) return false;
    for (std::size_t j = 0; j < upper.size(); ++j)
        if (!rel.contains(upper[j], lower[j])) return false;
    return true;
}

}  // namespace wkpc
