#pragma once

// Test-only membership oracle for single Watson-Crick automata, written
// directly from the acceptance definition and kept independent of the engine:
// enumerate every complementary lower strand explicitly, then enumerate
// derivations by depth-first search over (state, upper pos, lower pos).

#include <set>
#include <tuple>
#include <vector>

#include "core/system.hpp"

namespace wkpc::test {

inline bool naive_derivation_exists(const Automaton& comp, const Word& upper,
                                    const Word& lower) {
    using Key = std::tuple<StateId, std::size_t, std::size_t>;
    std::set<Key> seen;
    std::vector<Key> stack{{comp.initial, 0, 0}};
    while (!stack.empty()) {
        const auto [state, u, l] = stack.back();
        stack.pop_back();
        if (!seen.insert({state, u, l}).second) continue;
        if (u == upper.size() && l == lower.size() && comp.is_final(state)) return true;
        for (const Transition& t : comp.transitions) {
            if (t.from != state) continue;
            if (u + t.upper_read.size() > upper.size()) continue;
            if (l + t.lower_read.size() > lower.size()) continue;
            bool match = true;
            for (std::size_t k = 0; k < t.upper_read.size() && match; ++k)
                match = upper[u + k] == t.upper_read[k];
            for (std::size_t k = 0; k < t.lower_read.size() && match; ++k)
                match = lower[l + k] == t.lower_read[k];
            if (match)
                stack.push_back({t.to, u + t.upper_read.size(), l + t.lower_read.size()});
        }
    }
    return false;
}

/// True iff some complementary lower strand admits an accepting derivation.
inline bool naive_wk_accepts(const System& sys, const Word& upper) {
    const Automaton& comp = sys.components.front();
    Word lower(upper.size());
    // Depth-first enumeration of complete complementary strands.
    std::vector<std::size_t> pick(upper.size(), 0);
    for (std::size_t j = 0; j < upper.size(); ++j)
        if (sys.relation.complements_of(upper[j]).empty()) return false;
    for (;;) {
        for (std::size_t j = 0; j < upper.size(); ++j)
            lower[j] = sys.relation.complements_of(upper[j])[pick[j]];
        if (naive_derivation_exists(comp, upper, lower)) return true;
        std::size_t j = upper.size();
        bool done = upper.empty();
        while (j > 0) {
            --j;
            if (++pick[j] < sys.relation.complements_of(upper[j]).size()) break;
            pick[j] = 0;
            if (j == 0) done = true;
        }
        if (done) return false;
    }
}

}  // namespace wkpc::test
