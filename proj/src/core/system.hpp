#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "core/words.hpp"

namespace wkpc {

using StateId = std::uint32_t;

/// Interned state names, shared by every component of a system. Components
/// may overlap in the states they use; identity is by name.
class StateTable {
public:
    StateId intern(std::string_view name);
    std::optional<StateId> find(std::string_view name) const;
    const std::string& name(StateId id) const { return names_.at(id); }
    std::size_t size() const { return names_.size(); }

private:
    std::vector<std::string> names_;
    std::unordered_map<std::string, StateId> index_;
};

/// One transition rule: in state `from`, read `upper_read` on the upper strand
/// and `lower_read` on the lower strand (either may be empty), go to `to`.
struct Transition {
    StateId from{};
    Word upper_read;
    Word lower_read;
    StateId to{};

    friend bool operator==(const Transition&, const Transition&) = default;
};

/// A single Watson-Crick finite automaton, used standalone (degree-1 system)
/// or as one component of a communicating system. The alphabet and the
/// complementarity relation live on the owning System; they are shared by
/// every component.
class Automaton {
public:
    StateId initial{};
    std::vector<StateId> states;       // declaration order
    std::vector<StateId> finals;       // subset of states, declaration order
    std::vector<Transition> transitions;  // declaration order

    /// Registers a state if not already listed; keeps first-appearance order.
    void add_state(StateId s);
    bool has_state(StateId s) const;
    bool is_final(StateId s) const;

    /// Indices (declaration order) of transitions leaving `state`.
    std::span<const std::uint32_t> transitions_from(StateId state) const;

    /// Transitions leaving `state` whose upper read is a prefix of
    /// `upper_remaining` and whose lower read is a prefix of
    /// `lower_remaining`. A transition with two empty reads is always
    /// applicable, even with both remainders empty.
    std::vector<std::uint32_t> applicable_indices(StateId state, WordView upper_remaining,
                                                  WordView lower_remaining) const;
    std::vector<Transition> applicable_transitions(StateId state, WordView upper_remaining,
                                                   WordView lower_remaining) const;

    /// Rebuilds the from-state index. Call after the transition list changes.
    void reindex();

private:
    std::unordered_map<StateId, std::vector<std::uint32_t>> by_from_;
};

/// A parallel communicating Watson-Crick automata system: n components over a
/// shared alphabet and complementarity relation, plus the query-state map.
/// Query states are identified by name; entering one requests the current
/// state of the mapped component.
class System {
public:
    Alphabet alphabet;
    ComplementarityRelation relation;
    StateTable state_names;
    std::vector<Automaton> components;

    void add_query(StateId state, std::uint32_t component_index);
    bool is_query(StateId state) const;
    /// Component (0-based) a query state reads from.
    std::optional<std::uint32_t> query_target(StateId state) const;
    /// Query map entries sorted by state name.
    std::vector<std::pair<StateId, std::uint32_t>> query_entries() const;

    std::size_t degree() const { return components.size(); }

    /// Rebuilds component transition indices.
    void reindex();

    /// Checks the structural invariants (initial and finals are members,
    /// transition endpoints are members, read symbols are in the alphabet,
    /// query states appear in some component, query targets in range).
    /// Returns one message per violation; empty means valid.
    std::vector<std::string> validate() const;

private:
    std::unordered_map<StateId, std::uint32_t> query_targets_;
};

}  // namespace wkpc
