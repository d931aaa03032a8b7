#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "core/system.hpp"

namespace wkpc {

/// Budget and policy knobs for a membership search. The committed lower
/// strand is bounded by the input length on its own; the configuration budget
/// guards against pathological blowup. `memoize` and `canonical_window` exist
/// so the memoization layer can be cross-checked against plain exploration.
struct SearchLimits {
    std::uint64_t max_configurations = 1'000'000;
    bool memoize = true;
    bool canonical_window = true;
    /// Drop configurations that a joint-state reachability analysis proves can
    /// never accept (some component can no longer consume its remaining
    /// strand, or no combination of final states is reachable). Sound: the
    /// analysis over-approximates the reachable behavior, so only genuinely
    /// dead branches are cut.
    bool prune_unproductive = true;
};

enum class Verdict { Accept, Reject, Limit };

const char* to_string(Verdict v);

struct ComponentCursor {
    StateId state{};
    std::uint32_t upper_pos = 0;
    std::uint32_t lower_pos = 0;

    friend bool operator==(const ComponentCursor&, const ComponentCursor&) = default;
};

/// A system configuration: per-component state and head positions into the
/// shared double strand, plus the lower-strand prefix committed so far. All
/// components read the same nondeterministically chosen lower strand, so one
/// committed prefix is shared; its length always equals the farthest lower
/// head.
struct Configuration {
    std::vector<ComponentCursor> cursors;
    Word committed_lower;

    friend bool operator==(const Configuration&, const Configuration&) = default;
};

/// One derivation step. A lockstep step records the transition chosen by each
/// component (indices into the component's transition list, declaration
/// order). A communication step records which components received a state and
/// which state they received; heads and the committed strand never move.
struct Step {
    enum class Kind { Rule1, Rule2 };

    Kind kind = Kind::Rule1;
    std::vector<std::uint32_t> chosen;                        // Rule1, one per component
    std::vector<std::pair<std::uint32_t, StateId>> received;  // Rule2 substitutions

    friend bool operator==(const Step&, const Step&) = default;
};

/// Replayable record of an accepting derivation.
struct RunTrace {
    Configuration initial;
    std::vector<Step> steps;
    Configuration final_config;
};

struct MembershipResult {
    Verdict verdict = Verdict::Reject;
    std::optional<Word> witness_lower;  // present iff Accept
    std::optional<RunTrace> trace;      // present iff Accept
    std::uint64_t configurations_explored = 0;
};

/// All components on their initial states, heads at zero, nothing committed.
Configuration initial_configuration(const System& sys);

/// True iff every component has consumed the whole double strand and sits in
/// one of its final states.
bool is_accepting(const System& sys, const Configuration& cfg, WordView upper);

/// Lockstep successors: one per consistent combination of applicable
/// transitions, where lower reads first match the committed strand and may
/// extend it with complementary symbols, identically for all components.
/// Precondition: no component is in a query state.
std::vector<Configuration> rule1_successors(const System& sys, const Configuration& cfg,
                                            WordView upper);

/// Communication successor: every component standing in a query state whose
/// target is not itself in a query state receives the target's state; heads
/// and the committed strand are unchanged. Precondition: at least one
/// component is in a query state.
Configuration rule2_successor(const System& sys, const Configuration& cfg);

/// Rule dispatch: the communication successor when a query state is present
/// (dropped when it equals `cfg`, as with mutual queries), the lockstep
/// successors otherwise.
std::vector<Configuration> successors(const System& sys, const Configuration& cfg,
                                      WordView upper);

/// Breadth-first membership search over lazily committed lower strands.
/// Deterministic: components in index order, transitions in declaration
/// order; the first accepting configuration found wins.
MembershipResult search(const System& sys, WordView upper, const SearchLimits& limits = {});

/// Independent oracle: enumerates every complete complementary lower strand,
/// then explores the configuration graph with the strand fixed. Verdicts must
/// match search(); used to cross-check the lazy engine.
MembershipResult brute_force_accepts(const System& sys, WordView upper,
                                     const SearchLimits& limits = {});

/// Membership for a single Watson-Crick automaton, i.e. a degree-1 system
/// with no query states. Throws std::invalid_argument on anything else.
MembershipResult wk_accepts(const System& sys, WordView upper,
                            const SearchLimits& limits = {});

struct TraceCheck {
    bool ok = false;
    /// Index of the first invalid step; npos when ok or when the failure is
    /// not tied to a step (initial/final mismatch).
    std::size_t failed_step = npos;
    std::string message;

    static constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();
};

/// Replays a trace step by step against the system's semantics: each lockstep
/// transition must be applicable with consistent strand commitments, each
/// communication step must match rule2_successor, and the final configuration
/// must be accepting.
TraceCheck validate_trace(const System& sys, WordView upper, const RunTrace& trace);

}  // namespace wkpc
