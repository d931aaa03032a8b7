#include "core/engine.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <unordered_set>

namespace wkpc {
namespace {

bool has_query_state(const System& sys, const Configuration& cfg) {
    for (const auto& cur : cfg.cursors)
        if (sys.is_query(cur.state)) return true;
    return false;
}

/// Applies one transition to one component cursor on top of the shared
/// strand. The lower read must agree with already committed symbols; the part
/// reaching past the frontier commits new symbols, each complementary to the
/// upper word at its position. Returns false when the transition does not fit
/// (head overrun, upper mismatch, strand mismatch, non-complementary commit).
bool apply_component_transition(const System& sys, WordView upper, const Transition& t,
                                ComponentCursor& cur, Word& strand) {
    const std::size_t ulen = t.upper_read.size();
    const std::size_t llen = t.lower_read.size();
    if (cur.upper_pos + ulen > upper.size()) return false;
    if (cur.lower_pos + llen > upper.size()) return false;
    for (std::size_t k = 0; k < ulen; ++k)
        if (upper[cur.upper_pos + k] != t.upper_read[k]) return false;
    for (std::size_t k = 0; k < llen; ++k) {
        const std::size_t p = cur.lower_pos + k;
        const SymbolId s = t.lower_read[k];
        if (p < strand.size()) {
            if (strand[p] != s) return false;
        } else {
            if (!sys.relation.contains(upper[p], s)) return false;
            strand.push_back(s);
        }
    }
    cur.state = t.to;
    cur.upper_pos += static_cast<std::uint32_t>(ulen);
    cur.lower_pos += static_cast<std::uint32_t>(llen);
    return true;
}

/// Applies a full lockstep tuple (one transition index per component) in
/// component index order, threading the shared strand through all of them.
std::optional<Configuration> apply_rule1_tuple(const System& sys, const Configuration& cfg,
                                               WordView upper,
                                               std::span<const std::uint32_t> tuple) {
    Configuration next = cfg;
    for (std::size_t i = 0; i < sys.components.size(); ++i) {
        const Transition& t = sys.components[i].transitions[tuple[i]];
        if (t.from != next.cursors[i].state) return std::nullopt;
        if (!apply_component_transition(sys, upper, t, next.cursors[i],
                                        next.committed_lower))
            return std::nullopt;
    }
    return next;
}

struct StepSuccessor {
    Step step;
    Configuration cfg;
};

Step make_rule2_step(const Configuration& before, const Configuration& after) {
    Step st;
    st.kind = Step::Kind::Rule2;
    for (std::size_t i = 0; i < before.cursors.size(); ++i)
        if (before.cursors[i].state != after.cursors[i].state)
            st.received.emplace_back(static_cast<std::uint32_t>(i),
                                     after.cursors[i].state);
    return st;
}

/// Deterministic successor enumeration with the step that produced each
/// configuration. Component 1 varies slowest; within a component, transitions
/// come in declaration order. Successors equal to the source are dropped.
std::vector<StepSuccessor> expand(const System& sys, const Configuration& cfg,
                                  WordView upper) {
    std::vector<StepSuccessor> out;
    if (has_query_state(sys, cfg)) {
        Configuration next = rule2_successor(sys, cfg);
        if (!(next == cfg)) out.push_back({make_rule2_step(cfg, next), std::move(next)});
        return out;
    }

    const std::size_t n = sys.components.size();
    if (n == 0) return out;
    std::vector<std::span<const std::uint32_t>> candidates(n);
    for (std::size_t i = 0; i < n; ++i) {
        candidates[i] = sys.components[i].transitions_from(cfg.cursors[i].state);
        if (candidates[i].empty()) return out;  // this branch is stuck
    }

    std::vector<std::uint32_t> tuple(n);
    std::vector<std::size_t> pick(n, 0);
    for (;;) {
        for (std::size_t i = 0; i < n; ++i) tuple[i] = candidates[i][pick[i]];
        if (auto next = apply_rule1_tuple(sys, cfg, upper, tuple)) {
            if (!(*next == cfg)) {
                Step st;
                st.kind = Step::Kind::Rule1;
                st.chosen = tuple;
                out.push_back({std::move(st), std::move(*next)});
            }
        }
        std::size_t i = n;
        while (i > 0) {
            --i;
            if (++pick[i] < candidates[i].size()) break;
            pick[i] = 0;
            if (i == 0) return out;
        }
    }
}

/// Memoization key. Committed symbols strictly before every lower head can
/// never be re-read, so only the window between the slowest and the fastest
/// lower head distinguishes future behavior.
std::string configuration_key(const Configuration& cfg, bool canonical_window) {
    std::string key;
    key.reserve(cfg.cursors.size() * 12 + cfg.committed_lower.size() * 4);
    auto put = [&key](std::uint32_t v) {
        key.push_back(static_cast<char>(v & 0xff));
        key.push_back(static_cast<char>((v >> 8) & 0xff));
        key.push_back(static_cast<char>((v >> 16) & 0xff));
        key.push_back(static_cast<char>((v >> 24) & 0xff));
    };
    std::uint32_t window_start = 0;
    if (canonical_window && !cfg.cursors.empty()) {
        window_start = cfg.cursors[0].lower_pos;
        for (const auto& cur : cfg.cursors)
            window_start = std::min(window_start, cur.lower_pos);
    }
    for (const auto& cur : cfg.cursors) {
        put(cur.state);
        put(cur.upper_pos);
        put(cur.lower_pos);
    }
    for (std::size_t p = window_start; p < cfg.committed_lower.size(); ++p)
        put(cfg.committed_lower[p]);
    return key;
}

/// Over-approximation of the system's behavior with head positions and strand
/// contents abstracted away: nodes are joint state tuples, edges are the
/// lockstep transition products (reads assumed applicable) and the exact
/// communication substitutions. Per component it bounds from above how much
/// upper/lower strand any continuation can still consume, and whether a joint
/// final tuple is reachable at all. A configuration whose remaining strand
/// exceeds those bounds, or whose phase cannot reach a final tuple, can never
/// accept and may be dropped from the search.
class PhaseAnalysis {
public:
    static constexpr std::uint64_t kUnbounded = std::numeric_limits<std::uint64_t>::max();

    PhaseAnalysis(const System& sys) : n_(sys.components.size()) {
        const std::size_t states = sys.state_names.size();
        if (n_ == 0 || states == 0) return;

        // Joint space size guard; pruning is an optimization, never required.
        std::size_t total = 1;
        for (std::size_t i = 0; i < n_; ++i) {
            if (total > kMaxNodes / states) return;
            total *= states;
        }
        stride_.assign(n_, 1);
        for (std::size_t i = 1; i < n_; ++i) stride_[i] = stride_[i - 1] * states;
        node_count_ = total;

        struct Edge {
            std::size_t to;
            // per component: upper/lower symbols consumed by this edge
            std::vector<std::pair<std::uint32_t, std::uint32_t>> consumed;
        };
        std::vector<std::vector<Edge>> edges(total);
        std::vector<std::vector<std::size_t>> reverse_edges(total);
        std::size_t edge_count = 0;

        std::vector<StateId> phase(n_);
        for (std::size_t node = 0; node < total; ++node) {
            std::size_t rest = node;
            for (std::size_t i = 0; i < n_; ++i) {
                phase[i] = static_cast<StateId>(rest % states);
                rest /= states;
            }

            bool any_query = false;
            for (StateId s : phase) any_query = any_query || sys.is_query(s);

            if (any_query) {
                std::vector<StateId> next = phase;
                for (std::size_t i = 0; i < n_; ++i) {
                    const auto target = sys.query_target(phase[i]);
                    if (!target || *target >= n_) continue;
                    const StateId provider = phase[*target];
                    if (sys.is_query(provider)) continue;
                    next[i] = provider;
                }
                Edge e;
                e.to = encode(next);
                e.consumed.assign(n_, {0, 0});
                reverse_edges[e.to].push_back(node);
                edges[node].push_back(std::move(e));
                ++edge_count;
                continue;
            }

            std::vector<std::span<const std::uint32_t>> cand(n_);
            bool stuck = false;
            std::size_t combos = 1;
            for (std::size_t i = 0; i < n_; ++i) {
                cand[i] = sys.components[i].transitions_from(phase[i]);
                if (cand[i].empty()) stuck = true;
                const std::size_t width = std::max<std::size_t>(cand[i].size(), 1);
                combos = combos > kMaxEdges / width ? kMaxEdges + 1 : combos * width;
            }
            if (stuck) continue;
            if (edge_count + combos > kMaxEdges) return;  // too big, stay disabled

            std::vector<std::size_t> pick(n_, 0);
            for (;;) {
                Edge e;
                e.consumed.resize(n_);
                std::vector<StateId> next(n_);
                for (std::size_t i = 0; i < n_; ++i) {
                    const Transition& t = sys.components[i].transitions[cand[i][pick[i]]];
                    next[i] = t.to;
                    e.consumed[i] = {static_cast<std::uint32_t>(t.upper_read.size()),
                                     static_cast<std::uint32_t>(t.lower_read.size())};
                }
                e.to = encode(next);
                reverse_edges[e.to].push_back(node);
                edges[node].push_back(std::move(e));
                ++edge_count;
                std::size_t i = n_;
                bool done = false;
                while (i > 0) {
                    --i;
                    if (++pick[i] < cand[i].size()) break;
                    pick[i] = 0;
                    if (i == 0) done = true;
                }
                if (done) break;
            }
        }

        // Which phases can reach a tuple of final states (heads ignored).
        can_reach_final_.assign(total, false);
        {
            std::vector<std::size_t> stack;
            for (std::size_t node = 0; node < total; ++node) {
                std::size_t rest = node;
                bool all_final = true;
                for (std::size_t i = 0; i < n_; ++i) {
                    all_final =
                        all_final && sys.components[i].is_final(static_cast<StateId>(rest % states));
                    rest /= states;
                }
                if (all_final) {
                    can_reach_final_[node] = true;
                    stack.push_back(node);
                }
            }
            while (!stack.empty()) {
                const std::size_t node = stack.back();
                stack.pop_back();
                for (std::size_t pred : reverse_edges[node]) {
                    if (can_reach_final_[pred]) continue;
                    can_reach_final_[pred] = true;
                    stack.push_back(pred);
                }
            }
        }

        // Tarjan SCC over the phase graph, then longest-path style bounds on
        // the condensation: a cycle that consumes anything makes the bound
        // unbounded for every phase that reaches it.
        std::vector<std::size_t> scc_of(total, kNoScc);
        {
            struct Frame {
                std::size_t node;
                std::size_t edge;
            };
            std::vector<std::size_t> index(total, kNoScc), low(total, 0);
            std::vector<bool> on_stack(total, false);
            std::vector<std::size_t> stack;
            std::size_t next_index = 0;
            std::size_t scc_count = 0;
            for (std::size_t root = 0; root < total; ++root) {
                if (index[root] != kNoScc) continue;
                std::vector<Frame> frames{{root, 0}};
                index[root] = low[root] = next_index++;
                stack.push_back(root);
                on_stack[root] = true;
                while (!frames.empty()) {
                    auto& [node, ei] = frames.back();
                    if (ei < edges[node].size()) {
                        const std::size_t to = edges[node][ei].to;
                        ++ei;
                        if (index[to] == kNoScc) {
                            index[to] = low[to] = next_index++;
                            stack.push_back(to);
                            on_stack[to] = true;
                            frames.push_back({to, 0});
                        } else if (on_stack[to]) {
                            low[node] = std::min(low[node], index[to]);
                        }
                    } else {
                        if (low[node] == index[node]) {
                            for (;;) {
                                const std::size_t w = stack.back();
                                stack.pop_back();
                                on_stack[w] = false;
                                scc_of[w] = scc_count;
                                if (w == node) break;
                            }
                            ++scc_count;
                        }
                        const std::size_t done = node;
                        frames.pop_back();
                        if (!frames.empty())
                            low[frames.back().node] =
                                std::min(low[frames.back().node], low[done]);
                    }
                }
            }
            scc_count_ = scc_count;
        }

        // Per component and per direction, the supremum of strand symbols any
        // path from each phase can still consume. A phase's bound is its
        // SCC's bound: inside an SCC every node reaches every other, so a
        // consuming internal edge makes the whole SCC unbounded, and
        // otherwise only edges leaving the SCC contribute. Tarjan emits SCCs
        // in reverse topological order, so ascending id is successors-first.
        max_upper_.assign(n_, {});
        max_lower_.assign(n_, {});
        std::vector<std::vector<std::pair<std::size_t, const Edge*>>> scc_edges(scc_count_);
        for (std::size_t node = 0; node < total; ++node)
            for (const Edge& e : edges[node])
                scc_edges[scc_of[node]].emplace_back(scc_of[e.to], &e);
        for (std::size_t i = 0; i < n_; ++i) {
            for (int dir = 0; dir < 2; ++dir) {
                std::vector<std::uint64_t> scc_bound(scc_count_, 0);
                for (std::size_t scc = 0; scc < scc_count_; ++scc) {
                    std::uint64_t best = 0;
                    for (const auto& [to_scc, e] : scc_edges[scc]) {
                        const std::uint32_t w =
                            dir == 0 ? e->consumed[i].first : e->consumed[i].second;
                        if (to_scc == scc) {
                            if (w > 0) best = kUnbounded;
                            continue;
                        }
                        const std::uint64_t via = scc_bound[to_scc] == kUnbounded
                                                      ? kUnbounded
                                                      : scc_bound[to_scc] + w;
                        best = std::max(best, via);
                        if (best == kUnbounded) break;
                    }
                    scc_bound[scc] = best;
                }
                std::vector<std::uint64_t> node_bound(total);
                for (std::size_t node = 0; node < total; ++node)
                    node_bound[node] = scc_bound[scc_of[node]];
                if (dir == 0)
                    max_upper_[i] = std::move(node_bound);
                else
                    max_lower_[i] = std::move(node_bound);
            }
        }
        enabled_ = true;
    }

    bool enabled() const { return enabled_; }

    /// True when the configuration provably cannot reach acceptance.
    bool dead(const Configuration& cfg, std::size_t upper_size) const {
        const std::size_t node = encode_cfg(cfg);
        if (!can_reach_final_[node]) return true;
        for (std::size_t i = 0; i < n_; ++i) {
            const std::uint64_t need_upper = upper_size - cfg.cursors[i].upper_pos;
            const std::uint64_t need_lower = upper_size - cfg.cursors[i].lower_pos;
            if (max_upper_[i][node] != kUnbounded && max_upper_[i][node] < need_upper)
                return true;
            if (max_lower_[i][node] != kUnbounded && max_lower_[i][node] < need_lower)
                return true;
        }
        return false;
    }

private:
    static constexpr std::size_t kMaxNodes = 250'000;
    static constexpr std::size_t kMaxEdges = 2'500'000;
    static constexpr std::size_t kNoScc = std::numeric_limits<std::size_t>::max();

    std::size_t encode(const std::vector<StateId>& phase) const {
        std::size_t node = 0;
        for (std::size_t i = 0; i < n_; ++i) node += phase[i] * stride_[i];
        return node;
    }

    std::size_t encode_cfg(const Configuration& cfg) const {
        std::size_t node = 0;
        for (std::size_t i = 0; i < n_; ++i) node += cfg.cursors[i].state * stride_[i];
        return node;
    }

    std::size_t n_ = 0;
    std::size_t node_count_ = 0;
    std::size_t scc_count_ = 0;
    bool enabled_ = false;
    std::vector<std::size_t> stride_;
    std::vector<bool> can_reach_final_;
    std::vector<std::vector<std::uint64_t>> max_upper_;  // [component][node]
    std::vector<std::vector<std::uint64_t>> max_lower_;
};

struct SearchNode {
    Configuration cfg;
    std::int64_t parent;
    Step step;
};

RunTrace rebuild_trace(const std::vector<SearchNode>& arena, std::size_t accept_index) {
    RunTrace trace;
    trace.final_config = arena[accept_index].cfg;
    std::vector<std::size_t> path;
    for (std::int64_t at = static_cast<std::int64_t>(accept_index); at >= 0;
         at = arena[static_cast<std::size_t>(at)].parent)
        path.push_back(static_cast<std::size_t>(at));
    trace.initial = arena[path.back()].cfg;
    for (auto it = path.rbegin(); it != path.rend(); ++it)
        if (*it != path.back()) trace.steps.push_back(arena[*it].step);
    return trace;
}

}  // namespace

const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::Accept: return "ACCEPT";
        case Verdict::Reject: return "REJECT";
        case Verdict::Limit: return "LIMIT";
    }
    return "?";
}

Configuration initial_configuration(const System& sys) {
    Configuration cfg;
    cfg.cursors.reserve(sys.components.size());
    for (const auto& comp : sys.components) cfg.cursors.push_back({comp.initial, 0, 0});
    return cfg;
}

bool is_accepting(const System& sys, const Configuration& cfg, WordView upper) {
    const auto end = static_cast<std::uint32_t>(upper.size());
    for (std::size_t i = 0; i < sys.components.size(); ++i) {
        const auto& cur = cfg.cursors[i];
        if (cur.upper_pos != end || cur.lower_pos != end) return false;
        if (!sys.components[i].is_final(cur.state)) return false;
    }
    return true;
}

std::vector<Configuration> rule1_successors(const System& sys, const Configuration& cfg,
                                            WordView upper) {
    if (has_query_state(sys, cfg))
        throw std::logic_error("rule1_successors: a component is in a query state");
    std::vector<Configuration> out;
    for (auto& s : expand(sys, cfg, upper)) {
        if (std::find(out.begin(), out.end(), s.cfg) == out.end())
            out.push_back(std::move(s.cfg));
    }
    return out;
}

Configuration rule2_successor(const System& sys, const Configuration& cfg) {
    if (!has_query_state(sys, cfg))
        throw std::logic_error("rule2_successor: no component is in a query state");
    Configuration next = cfg;
    for (std::size_t i = 0; i < cfg.cursors.size(); ++i) {
        const auto target = sys.query_target(cfg.cursors[i].state);
        if (!target || *target >= cfg.cursors.size()) continue;
        // Substitutions read the pre-step states; a queried component that is
        // itself querying leaves the asker unchanged.
        const StateId provider = cfg.cursors[*target].state;
        if (sys.is_query(provider)) continue;
        next.cursors[i].state = provider;
    }
    return next;
}

std::vector<Configuration> successors(const System& sys, const Configuration& cfg,
                                      WordView upper) {
    std::vector<Configuration> out;
    for (auto& s : expand(sys, cfg, upper)) out.push_back(std::move(s.cfg));
    return out;
}

MembershipResult search(const System& sys, WordView upper, const SearchLimits& limits) {
    MembershipResult res;
    std::vector<SearchNode> arena;
    arena.push_back({initial_configuration(sys), -1, {}});

    std::optional<PhaseAnalysis> phases;
    if (limits.prune_unproductive) {
        phases.emplace(sys);
        if (!phases->enabled()) phases.reset();
    }
    if (phases && phases->dead(arena[0].cfg, upper.size())) {
        res.verdict = Verdict::Reject;
        res.configurations_explored = 1;
        return res;
    }

    std::unordered_set<std::string> visited;
    if (limits.memoize)
        visited.insert(configuration_key(arena[0].cfg, limits.canonical_window));

    std::deque<std::size_t> queue;
    queue.push_back(0);

    while (!queue.empty()) {
        const std::size_t idx = queue.front();
        queue.pop_front();

        if (is_accepting(sys, arena[idx].cfg, upper)) {
            res.verdict = Verdict::Accept;
            res.witness_lower = arena[idx].cfg.committed_lower;
            res.trace = rebuild_trace(arena, idx);
            res.configurations_explored = arena.size();
            return res;
        }

        auto succs = expand(sys, arena[idx].cfg, upper);
        for (auto& s : succs) {
            if (phases && phases->dead(s.cfg, upper.size())) continue;
            if (limits.memoize) {
                std::string key = configuration_key(s.cfg, limits.canonical_window);
                if (!visited.insert(std::move(key)).second) continue;
            }
            if (arena.size() >= limits.max_configurations) {
                res.verdict = Verdict::Limit;
                res.configurations_explored = arena.size();
                return res;
            }
            arena.push_back({std::move(s.cfg), static_cast<std::int64_t>(idx),
                             std::move(s.step)});
            queue.push_back(arena.size() - 1);
        }
    }

    res.verdict = Verdict::Reject;
    res.configurations_explored = arena.size();
    return res;
}

namespace {

/// Fixed-strand exploration used by the brute-force oracle. Kept separate
/// from the lazy engine on purpose: transitions are filtered against the
/// complete strand, there is no commitment logic and no window key.
struct FixedStrandSearch {
    const System& sys;
    WordView upper;
    WordView strand;

    struct Node {
        std::vector<ComponentCursor> cursors;
        std::int64_t parent;
        Step step;
    };

    std::vector<Node> arena;

    bool accepting(const std::vector<ComponentCursor>& cursors) const {
        const auto end = static_cast<std::uint32_t>(upper.size());
        for (std::size_t i = 0; i < cursors.size(); ++i) {
            if (cursors[i].upper_pos != end || cursors[i].lower_pos != end) return false;
            if (!sys.components[i].is_final(cursors[i].state)) return false;
        }
        return true;
    }

    std::string key(const std::vector<ComponentCursor>& cursors) const {
        std::string k;
        for (const auto& cur : cursors) {
            k.append(reinterpret_cast<const char*>(&cur.state), sizeof cur.state);
            k.append(reinterpret_cast<const char*>(&cur.upper_pos), sizeof cur.upper_pos);
            k.append(reinterpret_cast<const char*>(&cur.lower_pos), sizeof cur.lower_pos);
        }
        return k;
    }

    /// Runs BFS for this strand. Returns the index of an accepting node, -1
    /// when the reachable set is exhausted, -2 when the budget ran out.
    std::int64_t run(std::uint64_t budget_left) {
        arena.clear();
        Node init;
        for (const auto& comp : sys.components) init.cursors.push_back({comp.initial, 0, 0});
        init.parent = -1;
        arena.push_back(std::move(init));

        std::unordered_set<std::string> visited;
        visited.insert(key(arena[0].cursors));
        std::deque<std::size_t> queue;
        queue.push_back(0);

        while (!queue.empty()) {
            const std::size_t idx = queue.front();
            queue.pop_front();
            if (accepting(arena[idx].cursors)) return static_cast<std::int64_t>(idx);

            const std::vector<ComponentCursor> cursors = arena[idx].cursors;
            bool any_query = false;
            for (const auto& cur : cursors) any_query = any_query || sys.is_query(cur.state);

            std::vector<std::pair<Step, std::vector<ComponentCursor>>> succs;
            if (any_query) {
                std::vector<ComponentCursor> next = cursors;
                Step st;
                st.kind = Step::Kind::Rule2;
                for (std::size_t i = 0; i < cursors.size(); ++i) {
                    const auto target = sys.query_target(cursors[i].state);
                    if (!target || *target >= cursors.size()) continue;
                    const StateId provider = cursors[*target].state;
                    if (sys.is_query(provider)) continue;
                    next[i].state = provider;
                    st.received.emplace_back(static_cast<std::uint32_t>(i), provider);
                }
                if (!(next == cursors)) succs.emplace_back(std::move(st), std::move(next));
            } else {
                const std::size_t n = cursors.size();
                std::vector<std::vector<std::uint32_t>> cand(n);
                bool stuck = false;
                for (std::size_t i = 0; i < n; ++i) {
                    cand[i] = sys.components[i].applicable_indices(
                        cursors[i].state, upper.subspan(cursors[i].upper_pos),
                        strand.subspan(cursors[i].lower_pos));
                    if (cand[i].empty()) stuck = true;
                }
                if (!stuck && n > 0) {
                    std::vector<std::size_t> pick(n, 0);
                    for (;;) {
                        std::vector<ComponentCursor> next = cursors;
                        Step st;
                        st.kind = Step::Kind::Rule1;
                        st.chosen.resize(n);
                        for (std::size_t i = 0; i < n; ++i) {
                            const std::uint32_t ti = cand[i][pick[i]];
                            st.chosen[i] = ti;
                            const Transition& t = sys.components[i].transitions[ti];
                            next[i].state = t.to;
                            next[i].upper_pos += static_cast<std::uint32_t>(t.upper_read.size());
                            next[i].lower_pos += static_cast<std::uint32_t>(t.lower_read.size());
                        }
                        if (!(next == cursors)) succs.emplace_back(std::move(st), std::move(next));
                        std::size_t i = n;
                        bool done = false;
                        while (i > 0) {
                            --i;
                            if (++pick[i] < cand[i].size()) break;
                            pick[i] = 0;
                            if (i == 0) done = true;
                        }
                        if (done) break;
                    }
                }
            }

            for (auto& [st, next] : succs) {
                if (!visited.insert(key(next)).second) continue;
                if (arena.size() >= budget_left) return -2;
                arena.push_back({std::move(next), static_cast<std::int64_t>(idx),
                                 std::move(st)});
                queue.push_back(arena.size() - 1);
            }
        }
        return -1;
    }

    std::vector<Step> steps_to(std::int64_t accept_index) const {
        std::vector<Step> steps;
        std::vector<std::size_t> path;
        for (std::int64_t at = accept_index; at >= 0;
             at = arena[static_cast<std::size_t>(at)].parent)
            path.push_back(static_cast<std::size_t>(at));
        for (auto it = path.rbegin(); it != path.rend(); ++it)
            if (*it != path.back()) steps.push_back(arena[*it].step);
        return steps;
    }
};

/// Replays recorded steps through the lazy commitment semantics, producing a
/// full trace whose committed strand grows exactly as the transitions read.
std::optional<RunTrace> trace_from_steps(const System& sys, WordView upper,
                                         const std::vector<Step>& steps) {
    RunTrace trace;
    trace.initial = initial_configuration(sys);
    Configuration cfg = trace.initial;
    for (const Step& st : steps) {
        if (st.kind == Step::Kind::Rule1) {
            auto next = apply_rule1_tuple(sys, cfg, upper, st.chosen);
            if (!next) return std::nullopt;
            cfg = std::move(*next);
        } else {
            cfg = rule2_successor(sys, cfg);
        }
        trace.steps.push_back(st);
    }
    trace.final_config = cfg;
    return trace;
}

}  // namespace

MembershipResult brute_force_accepts(const System& sys, WordView upper,
                                     const SearchLimits& limits) {
    MembershipResult res;
    std::uint64_t total = 0;

    std::vector<std::span<const SymbolId>> choices;
    choices.reserve(upper.size());
    for (SymbolId a : upper) {
        auto c = sys.relation.complements_of(a);
        if (c.empty()) {
            // No complementary strand exists at all.
            res.verdict = Verdict::Reject;
            return res;
        }
        choices.push_back(c);
    }

    Word strand(upper.size());
    std::vector<std::size_t> pick(upper.size(), 0);
    FixedStrandSearch fixed{sys, upper, strand, {}};

    for (;;) {
        for (std::size_t j = 0; j < upper.size(); ++j) strand[j] = choices[j][pick[j]];

        const std::uint64_t budget_left =
            limits.max_configurations > total ? limits.max_configurations - total : 0;
        const std::int64_t outcome = fixed.run(budget_left);
        total += fixed.arena.size();

        if (outcome == -2) {
            res.verdict = Verdict::Limit;
            res.configurations_explored = total;
            return res;
        }
        if (outcome >= 0) {
            res.verdict = Verdict::Accept;
            res.witness_lower = strand;
            res.trace = trace_from_steps(sys, upper, fixed.steps_to(outcome));
            if (!res.trace)
                throw std::logic_error("brute force found a run its replay rejects");
            res.configurations_explored = total;
            return res;
        }

        // Next strand, rightmost position fastest.
        std::size_t j = upper.size();
        bool done = upper.empty();
        while (j > 0) {
            --j;
            if (++pick[j] < choices[j].size()) break;
            pick[j] = 0;
            if (j == 0) done = true;
        }
        if (done) break;
    }

    res.verdict = Verdict::Reject;
    res.configurations_explored = total;
    return res;
}

MembershipResult wk_accepts(const System& sys, WordView upper, const SearchLimits& limits) {
    if (sys.degree() != 1 || !sys.query_entries().empty())
        throw std::invalid_argument(
            "wk_accepts requires a single-component system without query states");
    return search(sys, upper, limits);
}

TraceCheck validate_trace(const System& sys, WordView upper, const RunTrace& trace) {
    TraceCheck check;
    Configuration cfg = initial_configuration(sys);
    if (!(trace.initial == cfg)) {
        check.message = "initial configuration does not match the system";
        return check;
    }

    for (std::size_t k = 0; k < trace.steps.size(); ++k) {
        const Step& st = trace.steps[k];
        auto fail = [&](const std::string& msg) {
            check.failed_step = k;
            check.message = "step " + std::to_string(k + 1) + ": " + msg;
            return check;
        };

        if (st.kind == Step::Kind::Rule1) {
            if (has_query_state(sys, cfg))
                return fail("lockstep step while a component is in a query state");
            if (st.chosen.size() != sys.components.size())
                return fail("wrong number of chosen transitions");
            for (std::size_t i = 0; i < st.chosen.size(); ++i)
                if (st.chosen[i] >= sys.components[i].transitions.size())
                    return fail("component " + std::to_string(i + 1) +
                                ": transition index out of range");
            auto next = apply_rule1_tuple(sys, cfg, upper, st.chosen);
            if (!next) {
                for (std::size_t i = 0; i < st.chosen.size(); ++i) {
                    const Transition& t = sys.components[i].transitions[st.chosen[i]];
                    if (t.from != cfg.cursors[i].state)
                        return fail("component " + std::to_string(i + 1) +
                                    ": transition leaves a different state");
                }
                return fail("transition tuple not applicable (head overrun, upper "
                            "mismatch, or inconsistent strand commitment)");
            }
            cfg = std::move(*next);
        } else {
            if (!has_query_state(sys, cfg))
                return fail("communication step without any query state");
            Configuration next = rule2_successor(sys, cfg);
            for (const auto& [i, s] : st.received) {
                if (i >= cfg.cursors.size())
                    return fail("substitution names component " + std::to_string(i + 1) +
                                " which does not exist");
                if (next.cursors[i].state != s)
                    return fail("component " + std::to_string(i + 1) +
                                " received a different state than recorded");
            }
            // All changes must be recorded.
            for (std::size_t i = 0; i < cfg.cursors.size(); ++i) {
                if (next.cursors[i].state == cfg.cursors[i].state) continue;
                bool listed = false;
                for (const auto& [j, s] : st.received)
                    listed = listed || (j == i && s == next.cursors[i].state);
                if (!listed)
                    return fail("component " + std::to_string(i + 1) +
                                " changed state but the substitution is not recorded");
            }
            cfg = std::move(next);
        }
    }

    if (!(trace.final_config == cfg)) {
        check.message = "final configuration does not match the replayed run";
        return check;
    }
    if (!is_accepting(sys, cfg, upper)) {
        check.message = "final configuration is not accepting";
        return check;
    }
    check.ok = true;
    check.message = "ok";
    return check;
}

}  // namespace wkpc
