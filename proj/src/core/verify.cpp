#include "core/verify.hpp"

#include <cmath>

namespace wkpc {

bool is_square_gt1(std::uint64_t m) {
    if (m < 4) return false;
    const auto r = static_cast<std::uint64_t>(std::llround(std::sqrt(static_cast<double>(m))));
    for (std::uint64_t n = r > 1 ? r - 1 : 0; n <= r + 1; ++n)
        if (n > 1 && n * n == m) return true;
    return false;
}

std::optional<std::uint32_t> witness_form_check(const Alphabet& alphabet, WordView w) {
    if (w.empty()) return std::nullopt;
    const auto b = alphabet.find("b");
    const auto c = alphabet.find("c");
    if (!b || !c) return std::nullopt;
    for (SymbolId s : w)
        if (s != *b && s != *c) return std::nullopt;
    if (w[0] != *b) return std::nullopt;

    // Collect block lengths; they must all be equal and alternate, which the
    // boundary structure already guarantees once lengths match.
    std::vector<std::size_t> blocks;
    std::size_t run = 1;
    for (std::size_t j = 1; j < w.size(); ++j) {
        if (w[j] == w[j - 1]) {
            ++run;
        } else {
            blocks.push_back(run);
            run = 1;
        }
    }
    blocks.push_back(run);

    const std::size_t n = blocks.size();
    for (std::size_t len : blocks)
        if (len != n) return std::nullopt;
    return static_cast<std::uint32_t>(n);
}

std::vector<std::uint32_t> ScanReport::accepted_lengths() const {
    std::vector<std::uint32_t> out;
    for (std::uint32_t m = 0; m < entries.size(); ++m)
        if (entries[m].verdict == Verdict::Accept) out.push_back(m);
    return out;
}

bool ScanReport::any_limit() const {
    for (const auto& e : entries)
        if (e.verdict == Verdict::Limit) return true;
    return false;
}

ScanReport scan_unary(const System& sys, SymbolId symbol, std::uint32_t max_length,
                      const SearchLimits& per_word) {
    ScanReport report;
    report.max_length = max_length;
    report.symbol = symbol;
    report.entries.resize(static_cast<std::size_t>(max_length) + 1);
    Word upper;
    upper.reserve(max_length);
    for (std::uint32_t m = 0; m <= max_length; ++m) {
        upper.assign(m, symbol);
        MembershipResult r = search(sys, upper, per_word);
        ScanEntry& e = report.entries[m];
        e.verdict = r.verdict;
        e.witness = std::move(r.witness_lower);
        e.trace = std::move(r.trace);
        e.configurations = r.configurations_explored;
    }
    return report;
}

CrossCheckResult cross_check(const System& sys, SymbolId symbol, std::uint32_t max_length,
                             const SearchLimits& per_word) {
    CrossCheckResult result;
    const ScanReport report = scan_unary(sys, symbol, max_length, per_word);
    for (std::uint32_t m = 0; m <= max_length; ++m) {
        const ScanEntry& e = report.entries[m];
        const bool expected = is_square_gt1(m);
        const std::string at = "m=" + std::to_string(m) + ": ";
        if (e.verdict == Verdict::Limit) {
            result.discrepancies.push_back(at + "resource limit hit");
            continue;
        }
        const bool accepted = e.verdict == Verdict::Accept;
        if (accepted != expected) {
            result.discrepancies.push_back(at + (accepted ? "accepted but not a square > 1"
                                                          : "rejected but is a square > 1"));
            continue;
        }
        if (!accepted) continue;

        const auto n = witness_form_check(sys.alphabet, *e.witness);
        if (!n || static_cast<std::uint64_t>(*n) * *n != m) {
            result.discrepancies.push_back(
                at + "witness '" + sys.alphabet.format_word(*e.witness) +
                "' is not n blocks of n with n^2 = m");
            continue;
        }
        Word upper(m, symbol);
        const TraceCheck check = validate_trace(sys, upper, *e.trace);
        if (!check.ok)
            result.discrepancies.push_back(at + "trace replay failed: " + check.message);
    }
    result.ok = result.discrepancies.empty();
    return result;
}

}  // namespace wkpc
