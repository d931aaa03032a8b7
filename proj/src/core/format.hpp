#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include "core/engine.hpp"
#include "core/system.hpp"
#include "core/verify.hpp"

namespace wkpc {

/// Diagnostic for malformed input text. `line` is 1-based; 0 marks a
/// whole-file problem (e.g. no components at all).
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, std::string message);

    std::size_t line() const { return line_; }
    const std::string& message() const { return message_; }

private:
    std::size_t line_;
    std::string message_;
};

/// Parses the line-oriented system definition format:
///
///   alphabet a b c
///   relation a b
///   component 1 initial q0 final q4
///   states 1 q0 s2 K2 ...          (optional; closes the component's set)
///   query K1 -> 1
///   trans 1 q0 - b q0_l_b
///
/// '#' starts a comment, '-' denotes the empty word. Without a `states` line
/// a component's state set is derived from the states it mentions; with one,
/// every mentioned state must be declared. Throws ParseError with a line
/// number on any malformed or inconsistent input.
System parse_system(std::string_view text);

/// Canonical text form: components by index, states in first-appearance
/// order, transitions in declaration order, queries by name. Deterministic;
/// parse(serialize(sys)) is structurally equal to sys and serializes to the
/// same bytes.
std::string serialize_system(const System& sys);

/// A trace document as stored on disk: the word it was recorded for plus the
/// replayable trace.
struct TraceDocument {
    Word word;
    RunTrace trace;
};

std::string trace_to_text(const System& sys, WordView upper, const RunTrace& trace);

/// Parses a trace file against a system. Transitions are matched by their
/// full (from, upper, lower, to) shape. Throws ParseError when the text does
/// not describe a trace at all; semantic validity is validate_trace's job.
TraceDocument trace_from_text(const System& sys, std::string_view text);

/// One record per length: `m=<int> verdict=<...> witness=<word|-> configs=<int>`,
/// preceded by `#` summary comments.
std::string report_to_text(const System& sys, const ScanReport& report);

}  // namespace wkpc
