#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "core/engine.hpp"
#include "core/squares.hpp"
#include "core/system.hpp"

namespace wkpc {

/// True iff m = n^2 for some integer n > 1.
bool is_square_gt1(std::uint64_t m);

/// Returns n iff the word consists of exactly n alternating {b,c}-blocks,
/// each of length n, starting with b; empty otherwise (including the empty
/// word and words over other symbols).
std::optional<std::uint32_t> witness_form_check(const Alphabet& alphabet, WordView w);

struct ScanEntry {
    Verdict verdict = Verdict::Reject;
    std::optional<Word> witness;
    std::optional<RunTrace> trace;
    std::uint64_t configurations = 0;
};

/// Per-length membership results of scanning symbol^m for m = 0..max_length.
struct ScanReport {
    std::uint32_t max_length = 0;
    SymbolId symbol = 0;
    std::optional<SquaresVariant> variant;  // set when scanning a built-in
    std::vector<ScanEntry> entries;         // index m

    std::vector<std::uint32_t> accepted_lengths() const;
    bool any_limit() const;
};

/// Runs the membership search on symbol^m for every m up to max_length.
/// Resource-limit verdicts land in the report; the scan itself never aborts.
ScanReport scan_unary(const System& sys, SymbolId symbol, std::uint32_t max_length,
                      const SearchLimits& per_word = {});

struct CrossCheckResult {
    bool ok = false;
    std::vector<std::string> discrepancies;  // one line per offending length
};

/// Ties the scan back to the target language: the accepted set must equal
/// { m <= max_length : m is a square > 1 }, every witness must have the
/// n-blocks-of-n form with n^2 = m, and every accepting trace must replay.
CrossCheckResult cross_check(const System& sys, SymbolId symbol, std::uint32_t max_length,
                             const SearchLimits& per_word = {});

}  // namespace wkpc
