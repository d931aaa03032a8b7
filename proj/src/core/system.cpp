#include "core/system.hpp"

#include <algorithm>

namespace wkpc {

StateId StateTable::intern(std::string_view name) {
    auto it = index_.find(std::string(name));
    if (it != index_.end()) return it->second;
    const StateId id = static_cast<StateId>(names_.size());
    names_.emplace_back(name);
    index_.emplace(names_.back(), id);
    return id;
}

std::optional<StateId> StateTable::find(std::string_view name) const {
    auto it = index_.find(std::string(name));
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

void Automaton::add_state(StateId s) {
    if (!has_state(s)) states.push_back(s);
}

bool Automaton::has_state(StateId s) const {
    return std::find(states.begin(), states.end(), s) != states.end();
}

bool Automaton::is_final(StateId s) const {
    return std::find(finals.begin(), finals.end(), s) != finals.end();
}

std::span<const std::uint32_t> Automaton::transitions_from(StateId state) const {
    auto it = by_from_.find(state);
    if (it == by_from_.end()) return {};
    return it->second;
}

std::vector<std::uint32_t> Automaton::applicable_indices(StateId state,
                                                         WordView upper_remaining,
                                                         WordView lower_remaining) const {
    std::vector<std::uint32_t> out;
    for (std::uint32_t idx : transitions_from(state)) {
        const Transition& t = transitions[idx];
        if (is_prefix(t.upper_read, upper_remaining) &&
            is_prefix(t.lower_read, lower_remaining))
            out.push_back(idx);
    }
    return out;
}

std::vector<Transition> Automaton::applicable_transitions(StateId state,
                                                          WordView upper_remaining,
                                                          WordView lower_remaining) const {
    std::vector<Transition> out;
    for (std::uint32_t idx : applicable_indices(state, upper_remaining, lower_remaining))
        out.push_back(transitions[idx]);
    return out;
}

void Automaton::reindex() {
    by_from_.clear();
    for (std::uint32_t i = 0; i < transitions.size(); ++i)
        by_from_[transitions[i].from].push_back(i);
}

void System::add_query(StateId state, std::uint32_t component_index) {
    query_targets_[state] = component_index;
}

bool System::is_query(StateId state) const {
    return query_targets_.count(state) != 0;
}

std::optional<std::uint32_t> System::query_target(StateId state) const {
    auto it = query_targets_.find(state);
    if (it == query_targets_.end()) return std::nullopt;
    return it->second;
}

std::vector<std::pair<StateId, std::uint32_t>> System::query_entries() const {
    std::vector<std::pair<StateId, std::uint32_t>> out(query_targets_.begin(),
                                                       query_targets_.end());
    std::sort(out.begin(), out.end(), [&](const auto& a, const auto& b) {
        return state_names.name(a.first) < state_names.name(b.first);
    });
    return out;
}

void System::reindex() {
    for (auto& comp : components) comp.reindex();
}

std::vector<std::string> System::validate() const {
    std::vector<std::string> errors;
    auto sname = [&](StateId s) { return state_names.name(s); };

    if (components.empty()) errors.push_back("at least one component required");

    for (std::size_t i = 0; i < components.size(); ++i) {
        const Automaton& comp = components[i];
        const std::string where = "component " + std::to_string(i + 1);
        if (!comp.has_state(comp.initial))
            errors.push_back(where + ": initial state '" + sname(comp.initial) +
                             "' not in state set");
        for (StateId f : comp.finals)
            if (!comp.has_state(f))
                errors.push_back(where + ": final state '" + sname(f) +
                                 "' not in state set");
        for (const Transition& t : comp.transitions) {
            if (!comp.has_state(t.from))
                errors.push_back(where + ": transition from undeclared state '" +
                                 sname(t.from) + "'");
            if (!comp.has_state(t.to))
                errors.push_back(where + ": transition to undeclared state '" +
                                 sname(t.to) + "'");
            for (SymbolId s : t.upper_read)
                if (s >= alphabet.size())
                    errors.push_back(where + ": transition reads unknown symbol");
            for (SymbolId s : t.lower_read)
                if (s >= alphabet.size())
                    errors.push_back(where + ": transition reads unknown symbol");
        }
    }

    for (const auto& [state, target] : query_targets_) {
        if (target >= components.size())
            errors.push_back("query state '" + sname(state) + "' targets component " +
                             std::to_string(target + 1) + " but the system has " +
                             std::to_string(components.size()) + " component(s)");
        bool member = false;
        for (const auto& comp : components) member = member || comp.has_state(state);
        if (!member)
            errors.push_back("query state '" + sname(state) +
                             "' does not appear in any component's state set");
    }
    return errors;
}

}  // namespace wkpc
