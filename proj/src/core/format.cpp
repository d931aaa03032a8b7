#include "core/format.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <vector>

namespace wkpc {
namespace {

std::vector<std::string> tokenize(std::string_view line) {
    if (const auto hash = line.find('#'); hash != std::string_view::npos)
        line = line.substr(0, hash);
    std::vector<std::string> tokens;
    std::size_t pos = 0;
    while (pos < line.size()) {
        while (pos < line.size() && std::isspace(static_cast<unsigned char>(line[pos]))) ++pos;
        std::size_t end = pos;
        while (end < line.size() && !std::isspace(static_cast<unsigned char>(line[end]))) ++end;
        if (end > pos) tokens.emplace_back(line.substr(pos, end - pos));
        pos = end;
    }
    return tokens;
}

std::optional<std::uint64_t> parse_uint(std::string_view token) {
    std::uint64_t value = 0;
    const auto* first = token.data();
    const auto* last = token.data() + token.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last) return std::nullopt;
    return value;
}

struct LineReader {
    std::string_view text;
    std::size_t pos = 0;
    std::size_t line_no = 0;

    std::optional<std::string_view> next() {
        if (pos >= text.size()) return std::nullopt;
        const std::size_t nl = text.find('\n', pos);
        std::string_view line = text.substr(pos, nl == std::string_view::npos
                                                     ? std::string_view::npos
                                                     : nl - pos);
        pos = nl == std::string_view::npos ? text.size() : nl + 1;
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        return line;
    }
};

struct SystemParser {
    System sys;
    std::vector<bool> closed;                 // component has a `states` line
    std::vector<std::set<StateId>> declared;  // per component, when closed
    // State references awaiting the closure check: (line, component, state).
    std::vector<std::tuple<std::size_t, std::size_t, StateId>> references;
    std::vector<std::pair<std::size_t, std::string>> query_lines;  // line, state name

    [[noreturn]] static void fail(std::size_t line, const std::string& msg) {
        throw ParseError(line, msg);
    }

    SymbolId require_symbol(std::size_t line, const std::string& token) {
        if (const auto id = sys.alphabet.find(token)) return *id;
        fail(line, "unknown symbol '" + token + "'");
    }

    Word require_word(std::size_t line, const std::string& token) {
        if (token == "-") return {};
        std::size_t offset = 0;
        if (auto word = sys.alphabet.parse_word(token, &offset)) return *word;
        fail(line, "unknown symbol in '" + token + "' at offset " + std::to_string(offset));
    }

    std::size_t require_component_index(std::size_t line, const std::string& token) {
        const auto idx = parse_uint(token);
        if (!idx || *idx == 0) fail(line, "'" + token + "' is not a component index");
        if (*idx > sys.components.size())
            fail(line, "component " + token + " not declared yet");
        return static_cast<std::size_t>(*idx - 1);
    }

    StateId touch_state(std::size_t line, std::size_t comp, const std::string& name) {
        const StateId id = sys.state_names.intern(name);
        references.emplace_back(line, comp, id);
        if (!closed[comp]) sys.components[comp].add_state(id);
        return id;
    }

    void handle(std::size_t line, const std::vector<std::string>& tokens) {
        const std::string& head = tokens[0];
        if (head == "alphabet") {
            if (tokens.size() < 2) fail(line, "alphabet line needs at least one symbol");
            for (std::size_t k = 1; k < tokens.size(); ++k) {
                if (sys.alphabet.find(tokens[k]))
                    fail(line, "duplicate symbol '" + tokens[k] + "'");
                sys.alphabet.intern(tokens[k]);
            }
        } else if (head == "relation") {
            if (tokens.size() != 3) fail(line, "expected: relation <upper> <lower>");
            sys.relation.add(require_symbol(line, tokens[1]),
                             require_symbol(line, tokens[2]));
        } else if (head == "component") {
            if (tokens.size() < 5 || tokens[2] != "initial" || tokens[4] != "final")
                fail(line, "expected: component <n> initial <state> final [<state> ...]");
            const auto idx = parse_uint(tokens[1]);
            if (!idx || *idx == 0) fail(line, "'" + tokens[1] + "' is not a component index");
            if (*idx <= sys.components.size())
                fail(line, "duplicate initial: component " + tokens[1] +
                               " is already declared");
            if (*idx != sys.components.size() + 1)
                fail(line, "expected component " +
                               std::to_string(sys.components.size() + 1) + ", got " +
                               tokens[1]);
            sys.components.emplace_back();
            closed.push_back(false);
            declared.emplace_back();
            Automaton& comp = sys.components.back();
            comp.initial = touch_state(line, *idx - 1, tokens[3]);
            for (std::size_t k = 5; k < tokens.size(); ++k) {
                const StateId f = touch_state(line, *idx - 1, tokens[k]);
                if (!comp.is_final(f)) comp.finals.push_back(f);
            }
        } else if (head == "states") {
            if (tokens.size() < 3) fail(line, "expected: states <n> <state> ...");
            const std::size_t comp = require_component_index(line, tokens[1]);
            if (!closed[comp]) {
                // A states line replaces derivation: restart from the line's list.
                closed[comp] = true;
                sys.components[comp].states.clear();
            }
            for (std::size_t k = 2; k < tokens.size(); ++k) {
                const StateId id = sys.state_names.intern(tokens[k]);
                declared[comp].insert(id);
                sys.components[comp].add_state(id);
            }
        } else if (head == "query") {
            if (tokens.size() != 4 || tokens[2] != "->")
                fail(line, "expected: query <state> -> <component>");
            const auto idx = parse_uint(tokens[3]);
            if (!idx || *idx == 0)
                fail(line, "query state '" + tokens[1] + "' has no valid target component");
            const StateId state = sys.state_names.intern(tokens[1]);
            if (sys.is_query(state))
                fail(line, "duplicate query declaration for '" + tokens[1] + "'");
            sys.add_query(state, static_cast<std::uint32_t>(*idx - 1));
            query_lines.emplace_back(line, tokens[1]);
        } else if (head == "trans") {
            if (tokens.size() != 6)
                fail(line, "expected: trans <n> <from> <upper|-> <lower|-> <to>");
            const std::size_t comp = require_component_index(line, tokens[1]);
            Transition t;
            t.from = touch_state(line, comp, tokens[2]);
            t.upper_read = require_word(line, tokens[3]);
            t.lower_read = require_word(line, tokens[4]);
            t.to = touch_state(line, comp, tokens[5]);
            sys.components[comp].transitions.push_back(std::move(t));
        } else {
            fail(line, "unrecognized directive '" + head + "'");
        }
    }

    void finish() {
        if (sys.components.empty()) fail(0, "at least one component required");
        for (const auto& [line, comp, state] : references) {
            if (!closed[comp]) continue;
            if (!declared[comp].count(state))
                fail(line, "undeclared state '" + sys.state_names.name(state) +
                               "' in component " + std::to_string(comp + 1));
        }
        for (const auto& [line, name] : query_lines) {
            const StateId state = *sys.state_names.find(name);
            const auto target = sys.query_target(state);
            if (*target >= sys.components.size())
                fail(line, "query state '" + name + "' targets component " +
                               std::to_string(*target + 1) + " but only " +
                               std::to_string(sys.components.size()) + " are declared");
            bool member = false;
            for (const auto& comp : sys.components)
                member = member || comp.has_state(state);
            if (!member)
                fail(line, "query state '" + name +
                               "' does not appear in any component's state set");
        }
        sys.reindex();
    }
};

const std::string& state_name(const System& sys, StateId s) { return sys.state_names.name(s); }

std::string word_token(const System& sys, WordView w) {
    return w.empty() ? "-" : sys.alphabet.format_word(w);
}

}  // namespace

ParseError::ParseError(std::size_t line, std::string message)
    : std::runtime_error(line == 0 ? "file: " + message
                                   : "line " + std::to_string(line) + ": " + message),
      line_(line),
      message_(std::move(message)) {}

System parse_system(std::string_view text) {
    SystemParser parser;
    LineReader reader{text};
    while (auto line = reader.next()) {
        const auto tokens = tokenize(*line);
        if (tokens.empty()) continue;
        parser.handle(reader.line_no, tokens);
    }
    parser.finish();
    return parser.sys;
}

std::string serialize_system(const System& sys) {
    std::ostringstream out;
    std::vector<std::string> symbols;
    for (SymbolId id = 0; id < sys.alphabet.size(); ++id)
        symbols.push_back(sys.alphabet.name(id));
    out << "alphabet";
    for (const auto& s : symbols) out << ' ' << s;
    out << '\n';
    for (const auto& [u, l] : sys.relation.pairs())
        out << "relation " << sys.alphabet.name(u) << ' ' << sys.alphabet.name(l) << '\n';
    for (std::size_t i = 0; i < sys.components.size(); ++i) {
        const Automaton& comp = sys.components[i];
        out << "component " << (i + 1) << " initial " << state_name(sys, comp.initial)
            << " final";
        for (StateId f : comp.finals) out << ' ' << state_name(sys, f);
        out << '\n';
        out << "states " << (i + 1);
        for (StateId s : comp.states) out << ' ' << state_name(sys, s);
        out << '\n';
    }
    for (const auto& [state, target] : sys.query_entries())
        out << "query " << state_name(sys, state) << " -> " << (target + 1) << '\n';
    for (std::size_t i = 0; i < sys.components.size(); ++i) {
        for (const Transition& t : sys.components[i].transitions)
            out << "trans " << (i + 1) << ' ' << state_name(sys, t.from) << ' '
                << word_token(sys, t.upper_read) << ' ' << word_token(sys, t.lower_read)
                << ' ' << state_name(sys, t.to) << '\n';
    }
    return out.str();
}

std::string trace_to_text(const System& sys, WordView upper, const RunTrace& trace) {
    std::ostringstream out;
    out << "word " << word_token(sys, upper) << '\n';
    for (std::size_t i = 0; i < trace.initial.cursors.size(); ++i)
        out << "init " << (i + 1) << ' '
            << state_name(sys, trace.initial.cursors[i].state) << '\n';
    for (const Step& st : trace.steps) {
        if (st.kind == Step::Kind::Rule1) {
            out << "step rule1";
            for (std::size_t i = 0; i < st.chosen.size(); ++i) {
                const Transition& t = sys.components[i].transitions[st.chosen[i]];
                out << ' ' << (i + 1) << ' ' << state_name(sys, t.from) << ' '
                    << word_token(sys, t.upper_read) << ' '
                    << word_token(sys, t.lower_read) << ' ' << state_name(sys, t.to);
            }
            out << '\n';
        } else {
            out << "step rule2";
            for (const auto& [i, s] : st.received)
                out << ' ' << (i + 1) << ' ' << state_name(sys, s);
            out << '\n';
        }
    }
    for (std::size_t i = 0; i < trace.final_config.cursors.size(); ++i) {
        const auto& cur = trace.final_config.cursors[i];
        out << "final " << (i + 1) << ' ' << state_name(sys, cur.state) << ' '
            << cur.upper_pos << ' ' << cur.lower_pos << '\n';
    }
    out << "witness " << word_token(sys, trace.final_config.committed_lower) << '\n';
    return out.str();
}

TraceDocument trace_from_text(const System& sys, std::string_view text) {
    const std::size_t n = sys.components.size();
    TraceDocument doc;
    bool have_word = false, have_witness = false;
    std::vector<std::optional<StateId>> init_states(n);
    std::vector<std::optional<ComponentCursor>> final_cursors(n);
    Word witness;

    auto fail = [](std::size_t line, const std::string& msg) -> void {
        throw ParseError(line, msg);
    };
    auto require_word = [&](std::size_t line, const std::string& token) -> Word {
        if (token == "-") return {};
        std::size_t offset = 0;
        if (auto w = sys.alphabet.parse_word(token, &offset)) return *w;
        fail(line, "unknown symbol in '" + token + "'");
        return {};
    };
    auto require_state = [&](std::size_t line, const std::string& token) -> StateId {
        if (const auto id = sys.state_names.find(token)) return *id;
        fail(line, "unknown state '" + token + "'");
        return 0;
    };
    auto require_comp = [&](std::size_t line, const std::string& token) -> std::size_t {
        const auto idx = parse_uint(token);
        if (!idx || *idx == 0 || *idx > n)
            fail(line, "'" + token + "' is not a component index of this system");
        return static_cast<std::size_t>(*idx - 1);
    };

    LineReader reader{text};
    while (auto line = reader.next()) {
        const auto tokens = tokenize(*line);
        if (tokens.empty()) continue;
        const std::size_t at = reader.line_no;
        const std::string& head = tokens[0];
        if (head == "word") {
            if (tokens.size() != 2) fail(at, "expected: word <word|->");
            doc.word = require_word(at, tokens[1]);
            have_word = true;
        } else if (head == "init") {
            if (tokens.size() != 3) fail(at, "expected: init <component> <state>");
            init_states[require_comp(at, tokens[1])] = require_state(at, tokens[2]);
        } else if (head == "step") {
            if (tokens.size() < 2) fail(at, "expected: step rule1|rule2 ...");
            Step st;
            if (tokens[1] == "rule1") {
                st.kind = Step::Kind::Rule1;
                if (tokens.size() != 2 + 5 * n)
                    fail(at, "rule1 step must list all " + std::to_string(n) +
                                 " components");
                st.chosen.resize(n);
                for (std::size_t i = 0; i < n; ++i) {
                    const std::size_t base = 2 + 5 * i;
                    const std::size_t comp = require_comp(at, tokens[base]);
                    if (comp != i) fail(at, "rule1 components must appear in order");
                    Transition t;
                    t.from = require_state(at, tokens[base + 1]);
                    t.upper_read = require_word(at, tokens[base + 2]);
                    t.lower_read = require_word(at, tokens[base + 3]);
                    t.to = require_state(at, tokens[base + 4]);
                    const auto& list = sys.components[i].transitions;
                    const auto it = std::find(list.begin(), list.end(), t);
                    if (it == list.end())
                        fail(at, "component " + std::to_string(i + 1) +
                                     " has no such transition");
                    st.chosen[i] = static_cast<std::uint32_t>(it - list.begin());
                }
            } else if (tokens[1] == "rule2") {
                st.kind = Step::Kind::Rule2;
                if ((tokens.size() - 2) % 2 != 0)
                    fail(at, "rule2 step expects (component, state) pairs");
                for (std::size_t k = 2; k + 1 < tokens.size(); k += 2)
                    st.received.emplace_back(
                        static_cast<std::uint32_t>(require_comp(at, tokens[k])),
                        require_state(at, tokens[k + 1]));
            } else {
                fail(at, "unknown step kind '" + tokens[1] + "'");
            }
            doc.trace.steps.push_back(std::move(st));
        } else if (head == "final") {
            if (tokens.size() != 5)
                fail(at, "expected: final <component> <state> <upper_pos> <lower_pos>");
            const std::size_t comp = require_comp(at, tokens[1]);
            ComponentCursor cur;
            cur.state = require_state(at, tokens[2]);
            const auto u = parse_uint(tokens[3]);
            const auto l = parse_uint(tokens[4]);
            if (!u || !l) fail(at, "positions must be non-negative integers");
            cur.upper_pos = static_cast<std::uint32_t>(*u);
            cur.lower_pos = static_cast<std::uint32_t>(*l);
            final_cursors[comp] = cur;
        } else if (head == "witness") {
            if (tokens.size() != 2) fail(at, "expected: witness <word|->");
            witness = require_word(at, tokens[1]);
            have_witness = true;
        } else {
            fail(at, "unrecognized directive '" + head + "'");
        }
    }

    if (!have_word) fail(0, "missing 'word' line");
    if (!have_witness) fail(0, "missing 'witness' line");
    for (std::size_t i = 0; i < n; ++i) {
        if (!init_states[i])
            fail(0, "missing 'init' line for component " + std::to_string(i + 1));
        if (!final_cursors[i])
            fail(0, "missing 'final' line for component " + std::to_string(i + 1));
        doc.trace.initial.cursors.push_back({*init_states[i], 0, 0});
        doc.trace.final_config.cursors.push_back(*final_cursors[i]);
    }
    doc.trace.final_config.committed_lower = std::move(witness);
    return doc;
}

std::string report_to_text(const System& sys, const ScanReport& report) {
    std::ostringstream out;
    out << "# scan symbol=" << sys.alphabet.name(report.symbol)
        << " max=" << report.max_length;
    if (report.variant) out << " system=" << to_string(*report.variant);
    out << '\n';
    out << "# accepted:";
    for (std::uint32_t m : report.accepted_lengths()) out << ' ' << m;
    out << '\n';
    for (std::uint32_t m = 0; m < report.entries.size(); ++m) {
        const ScanEntry& e = report.entries[m];
        out << "m=" << m << " verdict=" << to_string(e.verdict) << " witness="
            << (e.witness && !e.witness->empty() ? sys.alphabet.format_word(*e.witness)
                                                 : "-")
            << " configs=" << e.configurations << '\n';
    }
    return out.str();
}

}  // namespace wkpc
