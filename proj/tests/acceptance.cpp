// Acceptance suite: one line per criterion, nonzero exit when any fails.

#include <algorithm>
#include <cstdio>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "core/engine.hpp"
#include "core/format.hpp"
#include "core/squares.hpp"
#include "core/verify.hpp"
#include "support/builders.hpp"
#include "support/random_systems.hpp"

using namespace wkpc;

namespace {

int failures = 0;

void report(int number, const char* title, bool pass, const std::string& detail = "") {
    std::printf("[%d] %-58s %s\n", number, title, pass ? "PASS" : "FAIL");
    if (!detail.empty()) std::printf("    %s\n", detail.c_str());
    if (!pass) ++failures;
}

std::string join(const std::vector<std::uint32_t>& xs) {
    std::string out;
    for (std::uint32_t x : xs) {
        if (!out.empty()) out += ' ';
        out += std::to_string(x);
    }
    return out.empty() ? "(none)" : out;
}

Word unary_a(const System& sys, std::size_t count) {
    return Word(count, *sys.alphabet.find("a"));
}

/// Replays a trace through the public step operations, returning every
/// configuration along the way; empty on any inconsistency.
std::vector<Configuration> replay(const System& sys, WordView upper,
                                  const RunTrace& trace) {
    std::vector<Configuration> configs{trace.initial};
    Configuration cfg = trace.initial;
    for (const Step& st : trace.steps) {
        if (st.kind == Step::Kind::Rule2) {
            cfg = rule2_successor(sys, cfg);
        } else {
            Configuration target = cfg;
            for (std::size_t i = 0; i < st.chosen.size(); ++i) {
                const Transition& t = sys.components[i].transitions[st.chosen[i]];
                target.cursors[i].state = t.to;
                target.cursors[i].upper_pos += static_cast<std::uint32_t>(t.upper_read.size());
                target.cursors[i].lower_pos += static_cast<std::uint32_t>(t.lower_read.size());
            }
            bool found = false;
            for (Configuration& s : rule1_successors(sys, cfg, upper)) {
                if (s.cursors == target.cursors) {
                    cfg = std::move(s);
                    found = true;
                    break;
                }
            }
            if (!found) return {};
        }
        configs.push_back(cfg);
    }
    return configs;
}

// --- criterion 1 + 2: the squares language, witnesses, traces --------------

ScanReport corrected_report;

void criterion_1_squares_scan() {
    const System sys = build_squares_system(SquaresVariant::Corrected);
    corrected_report = scan_unary(sys, *sys.alphabet.find("a"), 100);
    corrected_report.variant = SquaresVariant::Corrected;

    std::vector<std::uint32_t> expected;
    for (std::uint32_t m = 0; m <= 100; ++m)
        if (is_square_gt1(m)) expected.push_back(m);

    const auto accepted = corrected_report.accepted_lengths();
    const bool pass = accepted == expected && !corrected_report.any_limit();
    report(1, "corrected scan m<=100 accepts exactly the squares > 1", pass,
           "accepted: " + join(accepted));
}

void criterion_2_witness_fidelity() {
    const System sys = build_squares_system(SquaresVariant::Corrected);
    bool pass = true;
    std::string detail;
    for (std::uint32_t m = 0; m <= corrected_report.max_length; ++m) {
        const ScanEntry& e = corrected_report.entries[m];
        if (e.verdict != Verdict::Accept) continue;
        const auto n = witness_form_check(sys.alphabet, *e.witness);
        const bool form_ok = n && static_cast<std::uint64_t>(*n) * *n == m;
        const bool trace_ok = validate_trace(sys, unary_a(sys, m), *e.trace).ok;
        if (!form_ok || !trace_ok) {
            pass = false;
            detail = "first failure at m=" + std::to_string(m);
            break;
        }
    }
    report(2, "every accepted a^(n^2) has an n-block witness + valid trace", pass, detail);
}

// --- criterion 3: engine vs oracle ------------------------------------------

void criterion_3_engine_oracle_equivalence() {
    SearchLimits limits;
    limits.max_configurations = 2'000'000;

    bool pass = true;
    std::string detail;

    for (auto variant : {SquaresVariant::Corrected, SquaresVariant::AsPrinted}) {
        const System sys = build_squares_system(variant);
        for (std::size_t m = 0; m <= 12 && pass; ++m) {
            const auto lazy = search(sys, unary_a(sys, m), limits).verdict;
            const auto brute = brute_force_accepts(sys, unary_a(sys, m), limits).verdict;
            if (lazy != brute || lazy == Verdict::Limit) {
                pass = false;
                detail = std::string(to_string(variant)) + " a^" + std::to_string(m) +
                         ": lazy=" + to_string(lazy) + " brute=" + to_string(brute);
            }
        }
    }

    std::mt19937 rng(40961);
    for (int round = 0; round < 50 && pass; ++round) {
        const int degree = round % 2 == 0 ? 1 : 2;
        const System sys = test::random_system(rng, degree, 6, 8);
        for (std::size_t len = 0; len <= 6 && pass; ++len) {
            for (std::uint64_t bits = 0; bits < (1ull << len) && pass; ++bits) {
                Word upper;
                for (std::size_t j = 0; j < len; ++j)
                    upper.push_back((bits >> j) & 1 ? 1 : 0);
                const auto lazy = search(sys, upper, limits).verdict;
                const auto brute = brute_force_accepts(sys, upper, limits).verdict;
                if (lazy != brute || lazy == Verdict::Limit) {
                    pass = false;
                    detail = "random system #" + std::to_string(round) +
                             ", word length " + std::to_string(len) +
                             ": lazy=" + to_string(lazy) + " brute=" + to_string(brute);
                }
            }
        }
    }
    report(3, "lazy search == brute force (variants m<=12, 50 random systems)", pass,
           detail);
}

// --- criterion 4: semantics unit properties ---------------------------------

void criterion_4_semantics_properties() {
    bool pass = true;
    std::string detail;

    // Rule-2 immobility on every accepting trace of the criterion-1 scan.
    const System sys = build_squares_system(SquaresVariant::Corrected);
    for (std::uint32_t m = 0; m <= corrected_report.max_length && pass; ++m) {
        const ScanEntry& e = corrected_report.entries[m];
        if (e.verdict != Verdict::Accept) continue;
        const Word upper = unary_a(sys, m);
        const auto configs = replay(sys, upper, *e.trace);
        if (configs.empty()) {
            pass = false;
            detail = "trace replay failed at m=" + std::to_string(m);
            break;
        }
        for (std::size_t k = 0; k < e.trace->steps.size(); ++k) {
            if (e.trace->steps[k].kind != Step::Kind::Rule2) continue;
            const Configuration& before = configs[k];
            const Configuration& after = configs[k + 1];
            bool moved = before.committed_lower != after.committed_lower;
            for (std::size_t i = 0; i < before.cursors.size(); ++i)
                moved = moved || before.cursors[i].upper_pos != after.cursors[i].upper_pos ||
                        before.cursors[i].lower_pos != after.cursors[i].lower_pos;
            if (moved) {
                pass = false;
                detail = "communication step moved a head at m=" + std::to_string(m);
                break;
            }
        }
    }

    // Mutual queries make no progress and the branch rejects.
    if (pass) {
        const System mutual = test::make_system(
            {"a"}, {{"a", "a"}}, {{"K2", {}, {}}, {"K1", {}, {}}},
            {{"K1", 0}, {"K2", 1}});
        const MembershipResult r = search(mutual, Word{});
        if (r.verdict != Verdict::Reject || r.configurations_explored != 1) {
            pass = false;
            detail = "mutual query did not die in place";
        }
    }

    // Empty-input acceptance equals reaching an accepting configuration in
    // the closure of the initial one, computed here through the public step
    // operations.
    if (pass) {
        auto closure_accepts = [](const System& s) {
            std::vector<Configuration> frontier{initial_configuration(s)};
            std::vector<Configuration> seen = frontier;
            while (!frontier.empty()) {
                const Configuration cfg = frontier.back();
                frontier.pop_back();
                if (is_accepting(s, cfg, Word{})) return true;
                for (Configuration& nxt : successors(s, cfg, Word{})) {
                    if (std::find(seen.begin(), seen.end(), nxt) == seen.end()) {
                        seen.push_back(nxt);
                        frontier.push_back(nxt);
                    }
                }
            }
            return false;
        };
        std::mt19937 rng(77);
        std::vector<System> samples;
        samples.push_back(build_squares_system(SquaresVariant::Corrected));
        samples.push_back(test::make_system({"a"}, {{"a", "a"}}, {{"s", {"s"}, {}}}));
        for (int i = 0; i < 20; ++i) samples.push_back(test::random_system(rng, 2));
        for (const System& s : samples) {
            const bool direct = closure_accepts(s);
            const bool engine = search(s, Word{}).verdict == Verdict::Accept;
            if (direct != engine) {
                pass = false;
                detail = "empty-word verdict disagrees with the closure";
                break;
            }
        }
    }

    report(4, "rule-2 immobility, mutual-query rejection, empty-word closure", pass,
           detail);
}

// --- criterion 5: trace narrative checks ------------------------------------

void criterion_5_trace_narrative() {
    const System sys = build_squares_system(SquaresVariant::Corrected);
    const SymbolId c = *sys.alphabet.find("c");
    bool pass = true;
    std::string detail;

    for (std::uint32_t n = 2; n <= 4 && pass; ++n) {
        const std::uint32_t m = n * n;
        const ScanEntry& e = corrected_report.entries[m];
        if (e.verdict != Verdict::Accept) {
            pass = false;
            detail = "a^" + std::to_string(m) + " not accepted";
            break;
        }
        ComponentCursor a1{sys.components[0].initial, 0, 0};
        bool seen_first_c = false;
        std::size_t threes = 0, twos = 0, total = 0;
        for (const Step& st : e.trace->steps) {
            if (st.kind != Step::Kind::Rule1) continue;
            const Transition& t = sys.components[0].transitions[st.chosen[0]];
            a1.upper_pos += static_cast<std::uint32_t>(t.upper_read.size());
            a1.lower_pos += static_cast<std::uint32_t>(t.lower_read.size());
            if (!t.upper_read.empty()) {
                total += t.upper_read.size();
                if (t.upper_read.size() == 3) ++threes;
                if (t.upper_read.size() == 2) ++twos;
            }
            if (!seen_first_c &&
                std::find(t.lower_read.begin(), t.lower_read.end(), c) !=
                    t.lower_read.end()) {
                seen_first_c = true;
                if (a1.upper_pos != 0 || a1.lower_pos != n + 1) {
                    pass = false;
                    detail = "head lag wrong at n=" + std::to_string(n) + ": upper=" +
                             std::to_string(a1.upper_pos) + " lower=" +
                             std::to_string(a1.lower_pos);
                }
            }
        }
        if (pass && (!seen_first_c || threes != 1 || twos != n - 2 || total != m)) {
            pass = false;
            detail = "chunk accounting wrong at n=" + std::to_string(n);
        }
    }
    report(5, "head-lag and extra-a accounting hold for n = 2, 3, 4", pass, detail);
}

// --- criterion 6: errata report ----------------------------------------------

void criterion_6_errata() {
    const System printed = build_squares_system(SquaresVariant::AsPrinted);
    ScanReport rep = scan_unary(printed, *printed.alphabet.find("a"), 64);
    rep.variant = SquaresVariant::AsPrinted;

    const auto accepted = rep.accepted_lengths();
    std::vector<std::uint32_t> squares;
    for (std::uint32_t m = 0; m <= 64; ++m)
        if (is_square_gt1(m)) squares.push_back(m);

    std::vector<std::uint32_t> diff;  // symmetric difference
    std::set_symmetric_difference(accepted.begin(), accepted.end(), squares.begin(),
                                  squares.end(), std::back_inserter(diff));

    // The observed behavior documented in docs/errata.md: the verbatim table
    // accepts a^3 and a^7 (neither a square) and rejects every true square.
    const std::vector<std::uint32_t> documented_accepted{3, 7};
    const std::vector<std::uint32_t> documented_diff{3, 4, 7, 9, 16, 25, 36, 49, 64};

    const bool pass = !rep.any_limit() && accepted == documented_accepted &&
                      diff == documented_diff;
    report(6, "as-printed scan m<=64 matches the documented errata set", pass,
           "accepted: " + join(accepted) + " | diff vs squares: " + join(diff));
}

// --- criterion 7: parser robustness -----------------------------------------

void criterion_7_fuzz() {
    const std::string seed_text =
        serialize_system(build_squares_system(SquaresVariant::Corrected));
    std::mt19937 rng(1337);
    bool pass = true;
    std::string detail;

    auto mutate = [&](std::string text) {
        const int op = static_cast<int>(rng() % 6);
        if (text.empty()) return text;
        const std::size_t pos = rng() % text.size();
        switch (op) {
            case 0: text[pos] = static_cast<char>(rng() % 256); break;
            case 1: text.insert(pos, 1, static_cast<char>(rng() % 256)); break;
            case 2: text.erase(pos, 1 + rng() % 5); break;
            case 3: text = text.substr(0, pos); break;
            case 4: {  // duplicate a random line somewhere
                const std::size_t start = text.rfind('\n', pos);
                const std::size_t end = text.find('\n', pos);
                const std::string line = text.substr(
                    start == std::string::npos ? 0 : start + 1,
                    (end == std::string::npos ? text.size() : end) -
                        (start == std::string::npos ? 0 : start + 1));
                text.insert(rng() % text.size(), "\n" + line + "\n");
                break;
            }
            default: std::swap(text[pos], text[rng() % text.size()]); break;
        }
        return text;
    };

    int parsed_ok = 0, diagnosed = 0;
    for (int round = 0; round < 10000; ++round) {
        std::string text = seed_text;
        const int edits = 1 + static_cast<int>(rng() % 4);
        for (int e = 0; e < edits; ++e) text = mutate(std::move(text));
        try {
            (void)parse_system(text);
            ++parsed_ok;
        } catch (const ParseError& e) {
            ++diagnosed;
            if (e.message().empty()) {
                pass = false;
                detail = "empty diagnostic on round " + std::to_string(round);
                break;
            }
        } catch (const std::exception& e) {
            pass = false;
            detail = std::string("unexpected exception: ") + e.what();
            break;
        }
    }
    report(7, "10^4 fuzzed system files: no crash, line-numbered diagnostics", pass,
           detail.empty() ? "parsed=" + std::to_string(parsed_ok) +
                                " diagnosed=" + std::to_string(diagnosed)
                          : detail);
}

}  // namespace

int main() {
    criterion_1_squares_scan();
    criterion_2_witness_fidelity();
    criterion_3_engine_oracle_equivalence();
    criterion_4_semantics_properties();
    criterion_5_trace_narrative();
    criterion_6_errata();
    criterion_7_fuzz();
    if (failures) std::printf("%d criterion(s) failed\n", failures);
    return failures == 0 ? 0 : 1;
}
